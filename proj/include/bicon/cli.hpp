#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bicon/bounds.hpp"
#include "bicon/connectivity.hpp"
#include "bicon/constructions.hpp"
#include "bicon/io.hpp"
#include "bicon/verifier.hpp"

namespace bicon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitTooLarge = 65;
inline constexpr int kExitFile = 66;

enum class OutputFormat { Text, Json, EdgeList };

// Parsed options shared by the subcommands.
struct CommandSpec {
  std::string subcommand;
  std::string input;
  OutputFormat format = OutputFormat::Text;
  unsigned jobs = default_jobs();
};

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline BipartiteGraph load_graph(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw FileError("cannot open '" + path + "'");
  try {
    return read_edge_list(in);
  } catch (const Error& e) {
    throw FileError(path + ": " + e.what());
  }
}

inline std::string join_vertices(const std::vector<Vertex>& vs) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : " ") + to_string(v);
  return out;
}

inline std::string join_edges(const std::vector<Edge>& es) {
  std::string out;
  for (const auto& e : es) {
    out += (out.empty() ? "" : " ") + std::string("x") + std::to_string(e.x) + "y" + std::to_string(e.y);
  }
  return out;
}

inline std::string describe(const ConnectivityResult& c) {
  switch (c.kind) {
    case CertificateKind::AlreadyDisconnected: return "already disconnected";
    case CertificateKind::EdgeSet: return "{" + join_edges(c.edges) + "}";
    case CertificateKind::VertexSet: return "{" + join_vertices(c.vertices) + "}";
    case CertificateKind::CompleteExhaustion: return "{" + join_vertices(c.vertices) + "} (leaves one vertex)";
  }
  return "";
}

inline nlohmann::json certificate_json(const ConnectivityResult& c) {
  nlohmann::json j{{"value", c.value}, {"kind", std::string(to_string(c.kind))}};
  if (c.kind == CertificateKind::EdgeSet) j["edges"] = edges_to_json(c.edges);
  if (c.kind == CertificateKind::VertexSet || c.kind == CertificateKind::CompleteExhaustion) {
    auto arr = nlohmann::json::array();
    for (const auto& v : c.vertices) arr.push_back(to_string(v));
    j["vertices"] = arr;
  }
  return j;
}

inline void emit_graph(std::ostream& out, const BipartiteGraph& g, OutputFormat format) {
  if (format == OutputFormat::Json) {
    out << nlohmann::json(g).dump() << '\n';
  } else {
    write_edge_list(out, g);
  }
}

struct Profile {
  std::size_t delta;
  ConnectivityResult edge;
  ConnectivityResult vertex;
};

inline Profile profile(const BipartiteGraph& g) {
  return {min_degree(g), edge_connectivity(g), vertex_connectivity(g)};
}

inline int cmd_connectivity(const CommandSpec& spec, std::ostream& out) {
  const BipartiteGraph g = load_graph(spec.input);
  const BipartiteGraph h = g.complement();
  const Profile pg = profile(g);
  const Profile ph = profile(h);
  if (spec.format == OutputFormat::Json) {
    auto side = [](const Profile& p) {
      return nlohmann::json{{"delta", p.delta},
                            {"edge_connectivity", certificate_json(p.edge)},
                            {"vertex_connectivity", certificate_json(p.vertex)}};
    };
    out << nlohmann::json{{"r", g.left_size()},
                          {"s", g.right_size()},
                          {"m", g.edge_count()},
                          {"graph", side(pg)},
                          {"complement", side(ph)}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "r=" << g.left_size() << " s=" << g.right_size() << " m=" << g.edge_count() << '\n';
  out << std::left << std::setw(10) << "" << std::setw(8) << "G" << "G^bc" << '\n';
  out << std::setw(10) << "delta" << std::setw(8) << pg.delta << ph.delta << '\n';
  out << std::setw(10) << "kappa'" << std::setw(8) << pg.edge.value << ph.edge.value << '\n';
  out << std::setw(10) << "kappa" << std::setw(8) << pg.vertex.value << ph.vertex.value << '\n';
  out << "edge cut (G):      " << describe(pg.edge) << '\n';
  out << "edge cut (G^bc):   " << describe(ph.edge) << '\n';
  out << "vertex cut (G):    " << describe(pg.vertex) << '\n';
  out << "vertex cut (G^bc): " << describe(ph.vertex) << '\n';
  return kExitOk;
}

inline int cmd_complement(const CommandSpec& spec, std::ostream& out) {
  emit_graph(out, load_graph(spec.input).complement(), spec.format);
  return kExitOk;
}

inline int cmd_bounds(const CommandSpec& spec, std::ostream& out, std::int64_t r, std::int64_t s,
               std::optional<std::int64_t> m) {
  if (r < 1 || s < r) throw Error(ErrorKind::InvalidTriple, "need 1 <= r <= s");
  const BoundSet unconstrained = connectivity_bounds_unconstrained(r);
  std::optional<BoundSet> sized;
  if (m) sized = sized_bounds(ParameterTriple::make(r, s, *m));
  if (spec.format == OutputFormat::Json) {
    auto bj = [](const BoundSet& b) {
      return nlohmann::json{{"sum_lower", b.sum_lower},
                            {"sum_upper", b.sum_upper},
                            {"prod_lower", b.prod_lower},
                            {"prod_upper", b.prod_upper}};
    };
    nlohmann::json j{{"r", r}, {"s", s}, {"unconstrained", bj(unconstrained)}};
    if (sized) {
      j["m"] = *m;
      j["sized"] = bj(*sized);
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "r=" << r << " s=" << s;
  if (m) out << " m=" << *m;
  out << '\n';
  out << std::left << std::setw(40) << "bound" << "value" << '\n';
  out << std::setw(40) << "delta/kappa/kappa' sum" << "[" << unconstrained.sum_lower << ", "
      << unconstrained.sum_upper << "]" << '\n';
  out << std::setw(40) << "delta/kappa/kappa' product" << "[" << unconstrained.prod_lower << ", "
      << unconstrained.prod_upper << "]" << '\n';
  if (sized) {
    out << std::setw(40) << "sized sum lower max(0, r-m)" << sized->sum_lower << '\n';
    out << std::setw(40) << "N (sized sum upper)" << sized->sum_upper << '\n';
    out << std::setw(40) << "M (sized product upper)" << sized->prod_upper << '\n';
  }
  return kExitOk;
}

inline int cmd_witness(const CommandSpec& spec, std::ostream& out, const std::string& family, std::int64_t r,
                std::int64_t s, std::int64_t m) {
  const auto id = parse_family(family);
  if (!id) throw Error(ErrorKind::InvalidArgument, "unknown family '" + family + "'");
  const Witness w = build_witness(*id, r, s, m);
  const auto ge = edge_connectivity(w.graph).value;
  const auto he = edge_connectivity(w.graph.complement()).value;
  if (spec.format == OutputFormat::Json) {
    out << nlohmann::json{{"family", family},
                          {"graph", w.graph},
                          {"edge_connectivity", ge},
                          {"complement_edge_connectivity", he},
                          {"claimed", {w.claimed.graph, w.claimed.complement}},
                          {"notes", w.notes}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  if (spec.format == OutputFormat::EdgeList) {
    write_edge_list(out, w.graph);
    return kExitOk;
  }
  out << "# " << family << " r=" << r << " s=" << s << " m=" << w.graph.edge_count() << '\n';
  out << "# kappa'(G)=" << ge << " kappa'(G^bc)=" << he << " (claimed " << w.claimed.graph << ", "
      << w.claimed.complement << ")\n";
  for (const auto& note : w.notes) out << "# note: " << note << '\n';
  write_edge_list(out, w.graph);
  return kExitOk;
}

inline int cmd_bicayley(const CommandSpec& spec, std::ostream& out, std::size_t r, const std::vector<std::size_t>& set) {
  emit_graph(out, bi_cayley(CayleySubset(r, set)), spec.format);
  return kExitOk;
}

inline void print_report_text(std::ostream& out, const TheoremReport& report) {
  out << "theorem " << to_string(report.theorem) << "  range " << report.range.dump() << '\n';
  out << "graphs checked: " << report.graphs_checked << '\n';
  out << "violations: " << report.violation_count << '\n';
  for (const auto& v : report.violations) {
    out << "  " << v.bound << " r=" << v.r << " s=" << v.s;
    if (v.m) out << " m=" << *v.m;
    out << " observed=" << v.observed << " limit=" << v.limit << " edges={" << join_edges(v.edges) << "}";
    if (!v.detail.empty()) out << " " << v.detail;
    out << '\n';
  }
  if (!report.attainment.empty()) {
    std::size_t attained = 0;
    std::size_t degenerate = 0;
    for (const auto& row : report.attainment) {
      attained += row.attained ? 1 : 0;
      degenerate += row.degenerate ? 1 : 0;
    }
    out << "attainment: " << attained << "/" << report.attainment.size() << " cells attained, " << degenerate
        << " degenerate\n";
    for (const auto& row : report.attainment) {
      if (row.attained) continue;
      out << "  not attained: " << row.bound << " r=" << row.r << " s=" << row.s;
      if (row.m) out << " m=" << *row.m;
      out << " formula=" << row.formula << " enumerated=" << row.enumerated << " witness("
          << row.witness_family.value_or("enumerated") << ")=" << row.witness_value << '\n';
    }
  }
  out << "wall: " << report.wall_ms << " ms\n";
}

inline int cmd_verify(const CommandSpec& spec, std::ostream& out, const std::string& theorem, const RangeSpec& range,
               const std::string& output) {
  const TheoremReport report = check_theorem(parse_theorem(theorem), range);
  if (!output.empty()) {
    std::ofstream file(output);
    if (!file) throw FileError("cannot write '" + output + "'");
    file << to_json(report).dump(2) << '\n';
  }
  if (spec.format == OutputFormat::Json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    print_report_text(out, report);
  }
  return report.passed() ? kExitOk : kExitViolations;
}

inline int cmd_scan(const CommandSpec& spec, std::ostream& out, std::int64_t r, std::int64_t s, std::int64_t m,
             const std::string& metric_name) {
  const auto metric = parse_metric(metric_name);
  if (!metric) throw Error(ErrorKind::InvalidArgument, "unknown metric '" + metric_name + "'");
  const ExtremalResult e = extremal_scan(ParameterTriple::make(r, s, m), *metric, spec.jobs);
  if (spec.format == OutputFormat::Json) {
    out << to_json(e).dump(2) << '\n';
    return kExitOk;
  }
  out << "metric " << metric_name << " over " << e.graphs_checked << " graphs (r=" << r << " s=" << s << " m=" << m
      << ")\n";
  out << "max " << e.max_value << " at {" << join_edges(e.argmax.edges()) << "}\n";
  out << "min " << e.min_value << " at {" << join_edges(e.argmin.edges()) << "}\n";
  return kExitOk;
}

}  // namespace detail

// Runs the command line `args` (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipartite complement connectivity toolkit"};
  app.require_subcommand(1);

  CommandSpec spec;
  std::string format_name;
  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::Text}, {"json", OutputFormat::Json}, {"edge-list", OutputFormat::EdgeList}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "edge-list"}));
  };

  std::int64_t r = 0, s = 0, m = 0;
  std::optional<std::int64_t> m_opt;
  std::string family, theorem, metric, output;
  std::vector<std::size_t> set;
  RangeSpec range;

  auto* connectivity = app.add_subcommand("connectivity", "kappa, kappa' and delta of a graph and its complement");
  connectivity->add_option("file", spec.input, "Edge-list file ('-' for stdin)")->required();
  auto* complement = app.add_subcommand("complement", "Emit the bipartite complement");
  complement->add_option("file", spec.input, "Edge-list file ('-' for stdin)")->required();
  auto* bounds = app.add_subcommand("bounds", "Evaluate the bound formulas");
  bounds->add_option("--r", r)->required();
  bounds->add_option("--s", s)->required();
  bounds->add_option("--m", m_opt);
  auto* witness = app.add_subcommand("witness", "Build an extremal witness graph");
  witness->add_option("--family", family)->required();
  witness->add_option("--r", r)->required();
  witness->add_option("--s", s)->required();
  witness->add_option("--m", m)->required();
  auto* bicayley = app.add_subcommand("bicayley", "Emit BC(Z_r, S)");
  bicayley->add_option("--r", r)->required();
  bicayley->add_option("--set", set)->delimiter(',');
  auto* verify = app.add_subcommand("verify", "Check a lemma or theorem exhaustively");
  verify->add_option("--theorem", theorem)->required();
  verify->add_option("--max-n", range.max_n, "Largest r+s scanned");
  verify->add_option("--max-r", range.max_r, "Largest modulus for Bi-Cayley checks");
  verify->add_option("--trials", range.trials, "Random trials");
  verify->add_option("--seed", range.seed);
  verify->add_option("--output", output, "Also write the JSON report here");
  auto* scan = app.add_subcommand("scan", "Extremal value of a metric over all graphs with m edges");
  scan->add_option("--r", r)->required();
  scan->add_option("--s", s)->required();
  scan->add_option("--m", m)->required();
  scan->add_option("--metric", metric)->required();

  for (auto* sub : {connectivity, complement, bounds, witness, bicayley, verify, scan}) {
    add_format(sub);
  }
  for (auto* sub : {verify, scan}) {
    sub->add_option("--jobs", spec.jobs, "Worker threads")->check(CLI::PositiveNumber);
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  spec.subcommand = chosen->get_name();
  if (format_name.empty()) {
    format_name = chosen == complement || chosen == bicayley ? "edge-list" : "text";
  }
  spec.format = formats.at(format_name);
  range.jobs = spec.jobs;

  try {
    if (chosen == connectivity) return detail::cmd_connectivity(spec, out);
    if (chosen == complement) return detail::cmd_complement(spec, out);
    if (chosen == bounds) return detail::cmd_bounds(spec, out, r, s, m_opt);
    if (chosen == witness) return detail::cmd_witness(spec, out, family, r, s, m);
    if (chosen == bicayley) return detail::cmd_bicayley(spec, out, static_cast<std::size_t>(r), set);
    if (chosen == verify) return detail::cmd_verify(spec, out, theorem, range, output);
    if (chosen == scan) return detail::cmd_scan(spec, out, r, s, m, metric);
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFile;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::TooLarge ? kExitTooLarge : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bicon::cli
