#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bicon/bounds.hpp"
#include "bicon/connectivity.hpp"
#include "bicon/constructions.hpp"
#include "bicon/enumerate.hpp"
#include "bicon/graph.hpp"
#include "bicon/io.hpp"
#include "bicon/oracle.hpp"
#include "bicon/parallel.hpp"

namespace bicon {

// Graphs up to this order are evaluated with the brute-force oracle inside
// scans; larger ones with max-flow.
inline constexpr std::size_t kOracleBackendMaxOrder = 8;

enum class Metric { SumDelta, ProdDelta, SumEdge, ProdEdge, SumVertex, ProdVertex };

inline constexpr std::array<Metric, 6> kAllMetrics{Metric::SumDelta, Metric::ProdDelta, Metric::SumEdge,
                                                   Metric::ProdEdge,  Metric::SumVertex, Metric::ProdVertex};

constexpr std::string_view to_string(Metric metric) noexcept {
  switch (metric) {
    case Metric::SumDelta: return "sum_delta";
    case Metric::ProdDelta: return "prod_delta";
    case Metric::SumEdge: return "sum_edge";
    case Metric::ProdEdge: return "prod_edge";
    case Metric::SumVertex: return "sum_vertex";
    case Metric::ProdVertex: return "prod_vertex";
  }
  return "unknown";
}

inline std::optional<Metric> parse_metric(std::string_view name) {
  for (Metric m : kAllMetrics) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

constexpr bool needs_edge(Metric m) noexcept { return m == Metric::SumEdge || m == Metric::ProdEdge; }
constexpr bool needs_vertex(Metric m) noexcept { return m == Metric::SumVertex || m == Metric::ProdVertex; }

// delta, kappa' and kappa of a graph and of its bipartite complement. Fields
// that were not requested stay at 0.
struct PairValues {
  std::int64_t delta_graph = 0, delta_complement = 0;
  std::int64_t edge_graph = 0, edge_complement = 0;
  std::int64_t vertex_graph = 0, vertex_complement = 0;
};

struct Quantities {
  bool edge = true;
  bool vertex = true;
};

inline std::int64_t metric_value(Metric metric, const PairValues& v) noexcept {
  switch (metric) {
    case Metric::SumDelta: return v.delta_graph + v.delta_complement;
    case Metric::ProdDelta: return v.delta_graph * v.delta_complement;
    case Metric::SumEdge: return v.edge_graph + v.edge_complement;
    case Metric::ProdEdge: return v.edge_graph * v.edge_complement;
    case Metric::SumVertex: return v.vertex_graph + v.vertex_complement;
    case Metric::ProdVertex: return v.vertex_graph * v.vertex_complement;
  }
  return 0;
}

inline PairValues evaluate_mask(std::size_t r, std::size_t s, std::uint64_t mask, Quantities q = {}) {
  PairValues v;
  if (r + s <= kOracleBackendMaxOrder) {
    const std::uint64_t full = r * s == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (r * s)) - 1;
    const SmallGraph g = SmallGraph::from_mask(r, s, mask);
    const SmallGraph h = SmallGraph::from_mask(r, s, full & ~mask);
    v.delta_graph = static_cast<std::int64_t>(g.min_degree());
    v.delta_complement = static_cast<std::int64_t>(h.min_degree());
    if (q.edge) {
      v.edge_graph = static_cast<std::int64_t>(brute_force_edge_connectivity(g));
      v.edge_complement = static_cast<std::int64_t>(brute_force_edge_connectivity(h));
    }
    if (q.vertex) {
      v.vertex_graph = static_cast<std::int64_t>(brute_force_vertex_connectivity(g));
      v.vertex_complement = static_cast<std::int64_t>(brute_force_vertex_connectivity(h));
    }
    return v;
  }
  const BipartiteGraph g = BipartiteGraph::from_mask(r, s, mask);
  const BipartiteGraph h = g.complement();
  v.delta_graph = static_cast<std::int64_t>(min_degree(g));
  v.delta_complement = static_cast<std::int64_t>(min_degree(h));
  if (q.edge) {
    v.edge_graph = static_cast<std::int64_t>(edge_connectivity(g).value);
    v.edge_complement = static_cast<std::int64_t>(edge_connectivity(h).value);
  }
  if (q.vertex) {
    v.vertex_graph = static_cast<std::int64_t>(vertex_connectivity(g).value);
    v.vertex_complement = static_cast<std::int64_t>(vertex_connectivity(h).value);
  }
  return v;
}

// Same backend choice for graphs not representable as a 64-bit mask.
inline PairValues evaluate_pair(const BipartiteGraph& g, Quantities q = {}) {
  if (g.left_size() * g.right_size() <= 64) return evaluate_mask(g.left_size(), g.right_size(), g.to_mask(), q);
  const BipartiteGraph h = g.complement();
  PairValues v;
  v.delta_graph = static_cast<std::int64_t>(min_degree(g));
  v.delta_complement = static_cast<std::int64_t>(min_degree(h));
  if (q.edge) {
    v.edge_graph = static_cast<std::int64_t>(edge_connectivity(g).value);
    v.edge_complement = static_cast<std::int64_t>(edge_connectivity(h).value);
  }
  if (q.vertex) {
    v.vertex_graph = static_cast<std::int64_t>(vertex_connectivity(g).value);
    v.vertex_complement = static_cast<std::int64_t>(vertex_connectivity(h).value);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Cell scans

struct Extreme {
  std::int64_t max_value = std::numeric_limits<std::int64_t>::min();
  std::uint64_t argmax = 0;
  std::int64_t min_value = std::numeric_limits<std::int64_t>::max();
  std::uint64_t argmin = 0;

  void observe(std::int64_t value, std::uint64_t mask) noexcept {
    if (value > max_value) {
      max_value = value;
      argmax = mask;
    }
    if (value < min_value) {
      min_value = value;
      argmin = mask;
    }
  }

  // `later` covers masks after ours; ties keep the earlier mask.
  void absorb(const Extreme& later) noexcept {
    if (later.max_value > max_value) {
      max_value = later.max_value;
      argmax = later.argmax;
    }
    if (later.min_value < min_value) {
      min_value = later.min_value;
      argmin = later.argmin;
    }
  }
};

struct Interval {
  std::int64_t lower;
  std::int64_t upper;
};

// Per-metric inequalities a scan checks on every graph.
using MetricBounds = std::array<std::optional<Interval>, kAllMetrics.size()>;

struct Violation {
  std::string bound;
  std::size_t r = 0;
  std::size_t s = 0;
  std::optional<std::size_t> m;
  std::vector<Edge> edges;
  std::int64_t observed = 0;
  std::int64_t limit = 0;
  std::string detail;
};

inline constexpr std::size_t kMaxRecordedViolations = 1000;

struct CellScan {
  std::uint64_t graphs = 0;
  std::array<Extreme, kAllMetrics.size()> extremes{};
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;
};

inline CellScan merge_scans(CellScan acc, CellScan later) {
  acc.graphs += later.graphs;
  for (std::size_t k = 0; k < acc.extremes.size(); ++k) acc.extremes[k].absorb(later.extremes[k]);
  acc.violation_count += later.violation_count;
  for (auto& v : later.violations) {
    if (acc.violations.size() >= kMaxRecordedViolations) break;
    acc.violations.push_back(std::move(v));
  }
  return acc;
}

// Evaluates every graph of the enumeration, tracking extremal values of all
// six metrics and every breach of `bounds`.
inline CellScan scan_cell(const GraphEnumeration& e, const MetricBounds& bounds, Quantities q, unsigned jobs) {
  const std::size_t r = e.left_size();
  const std::size_t s = e.right_size();
  auto map = [&](std::uint64_t begin, std::uint64_t end) {
    CellScan local;
    e.for_each_mask(begin, end, [&](std::uint64_t mask) {
      const PairValues v = evaluate_mask(r, s, mask, q);
      ++local.graphs;
      for (std::size_t k = 0; k < kAllMetrics.size(); ++k) {
        const Metric metric = kAllMetrics[k];
        if ((needs_edge(metric) && !q.edge) || (needs_vertex(metric) && !q.vertex)) continue;
        const std::int64_t value = metric_value(metric, v);
        local.extremes[k].observe(value, mask);
        if (!bounds[k]) continue;
        const bool below = value < bounds[k]->lower;
        const bool above = value > bounds[k]->upper;
        if (!below && !above) continue;
        ++local.violation_count;
        if (local.violations.size() < kMaxRecordedViolations) {
          local.violations.push_back({std::string(to_string(metric)) + (below ? "_lower" : "_upper"), r, s,
                                      e.edge_count(), BipartiteGraph::from_mask(r, s, mask).edges(), value,
                                      below ? bounds[k]->lower : bounds[k]->upper, ""});
        }
      }
    });
    return local;
  };
  return parallel_reduce(e.count(), jobs, CellScan{}, map, merge_scans, 1024);
}

struct ExtremalResult {
  Metric metric;
  std::int64_t max_value;
  BipartiteGraph argmax;
  std::int64_t min_value;
  BipartiteGraph argmin;
  std::uint64_t graphs_checked;
};

// Extremal values of a metric over all labeled graphs on (r, s) with exactly m
// edges. Argmax/argmin are the first extremal graphs in ascending mask order.
inline ExtremalResult extremal_scan(const ParameterTriple& p, Metric metric, unsigned jobs = default_jobs()) {
  const auto r = static_cast<std::size_t>(p.r());
  const auto s = static_cast<std::size_t>(p.s());
  const GraphEnumeration e(r, s, static_cast<std::size_t>(p.m()));
  const CellScan scan = scan_cell(e, MetricBounds{}, Quantities{needs_edge(metric), needs_vertex(metric)}, jobs);
  const auto k = static_cast<std::size_t>(metric);
  const Extreme& x = scan.extremes[k];
  return {metric, x.max_value, BipartiteGraph::from_mask(r, s, x.argmax), x.min_value,
          BipartiteGraph::from_mask(r, s, x.argmin), scan.graphs};
}

// ---------------------------------------------------------------------------
// Theorem checks

enum class TheoremId { L2_1, L2_4, L2_5, L3_1, T3_2, T3_3, T4_1, T4_2, T4_3 };

inline constexpr std::array<TheoremId, 9> kAllTheorems{TheoremId::L2_1, TheoremId::L2_4, TheoremId::L2_5,
                                                       TheoremId::L3_1, TheoremId::T3_2, TheoremId::T3_3,
                                                       TheoremId::T4_1, TheoremId::T4_2, TheoremId::T4_3};

constexpr std::string_view to_string(TheoremId id) noexcept {
  switch (id) {
    case TheoremId::L2_1: return "L2.1";
    case TheoremId::L2_4: return "L2.4";
    case TheoremId::L2_5: return "L2.5";
    case TheoremId::L3_1: return "L3.1";
    case TheoremId::T3_2: return "T3.2";
    case TheoremId::T3_3: return "T3.3";
    case TheoremId::T4_1: return "T4.1";
    case TheoremId::T4_2: return "T4.2";
    case TheoremId::T4_3: return "T4.3";
  }
  return "unknown";
}

inline TheoremId parse_theorem(std::string_view name) {
  for (TheoremId id : kAllTheorems) {
    if (to_string(id) == name) return id;
  }
  throw Error(ErrorKind::UnknownTheorem, "no theorem named '" + std::string(name) + "'");
}

struct RangeSpec {
  std::size_t max_n = 8;  // r + s <= max_n for graph scans and random trials
  std::size_t max_r = 8;  // modulus bound for the Bi-Cayley checks
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  unsigned jobs = default_jobs();
};

struct AttainmentRow {
  std::string bound;
  std::size_t r = 0;
  std::size_t s = 0;
  std::optional<std::size_t> m;
  std::int64_t enumerated = 0;
  std::int64_t formula = 0;
  std::int64_t witness_value = 0;
  bool attained = false;
  // The formula value is not reached by any graph of the cell.
  bool degenerate = false;
  std::optional<std::string> witness_family;
  std::vector<Edge> witness;
};

struct TheoremReport {
  TheoremId theorem;
  nlohmann::json range;
  std::uint64_t graphs_checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;
  std::vector<AttainmentRow> attainment;
  std::int64_t wall_ms = 0;

  [[nodiscard]] bool passed() const noexcept { return violation_count == 0; }
};

namespace detail {

struct CandidateWitness {
  std::optional<std::string> family;  // "empty"/"complete" count as named
  BipartiteGraph graph;
};

inline std::size_t metric_index(Metric m) { return static_cast<std::size_t>(m); }

inline AttainmentRow make_row(std::string bound, std::size_t r, std::size_t s, std::optional<std::size_t> m,
                              Metric metric, bool upper, std::int64_t formula, const CellScan& scan,
                              std::optional<CandidateWitness> witness) {
  const Extreme& x = scan.extremes[metric_index(metric)];
  AttainmentRow row;
  row.bound = std::move(bound);
  row.r = r;
  row.s = s;
  row.m = m;
  row.formula = formula;
  row.enumerated = upper ? x.max_value : x.min_value;
  row.degenerate = row.enumerated != formula;
  BipartiteGraph graph;
  if (witness) {
    row.witness_family = witness->family;
    graph = std::move(witness->graph);
  } else {
    graph = BipartiteGraph::from_mask(r, s, upper ? x.argmax : x.argmin);
  }
  row.witness_value = metric_value(metric, evaluate_pair(graph));
  row.attained = row.witness_value == formula;
  row.witness = graph.edges();
  return row;
}

inline std::optional<CandidateWitness> family_witness(WitnessFamilyId id, std::int64_t r, std::int64_t s,
                                                      std::int64_t m) {
  try {
    return CandidateWitness{std::string(family_name(id)), build_witness(id, r, s, m).graph};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::PreconditionViolated) return std::nullopt;
    throw;
  }
}

inline std::optional<CandidateWitness> dispatched(WitnessGoal goal, const ParameterTriple& p) {
  try {
    DispatchedWitness w = dispatch_witness(goal, p);
    return CandidateWitness{w.label, std::move(w.graph)};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoWitness) return std::nullopt;
    throw;
  }
}

inline void absorb_violations(TheoremReport& report, CellScan& scan) {
  report.graphs_checked += scan.graphs;
  report.violation_count += scan.violation_count;
  for (auto& v : scan.violations) {
    if (report.violations.size() >= kMaxRecordedViolations) break;
    report.violations.push_back(std::move(v));
  }
}

// L3.1, T3.2, T3.3: all graphs on each shape r <= s, r + s <= max_n.
inline void check_unconstrained(TheoremReport& report, Metric sum, Metric prod, const RangeSpec& range) {
  const Quantities q{needs_edge(sum), needs_vertex(sum)};
  for (std::size_t n = 2; n <= range.max_n; ++n) {
    for (std::size_t r = 1; 2 * r <= n; ++r) {
      const std::size_t s = n - r;
      const auto sr = static_cast<std::int64_t>(r);
      const auto ss = static_cast<std::int64_t>(s);
      const BoundSet b = sum == Metric::SumDelta ? delta_bounds(sr) : connectivity_bounds_unconstrained(sr);
      MetricBounds bounds{};
      bounds[metric_index(sum)] = Interval{b.sum_lower, b.sum_upper};
      bounds[metric_index(prod)] = Interval{b.prod_lower, b.prod_upper};
      CellScan scan = scan_cell(GraphEnumeration(r, s), bounds, q, range.jobs);

      report.attainment.push_back(make_row(std::string(to_string(sum)) + "_upper", r, s, std::nullopt, sum, true,
                                           b.sum_upper, scan, CandidateWitness{"complete", complete_bipartite(r, s)}));
      report.attainment.push_back(make_row(std::string(to_string(sum)) + "_lower", r, s, std::nullopt, sum, false,
                                           b.sum_lower, scan, family_witness(WitnessFamilyId::S3G1, sr, ss, 0)));
      report.attainment.push_back(make_row(std::string(to_string(prod)) + "_upper", r, s, std::nullopt, prod, true,
                                           b.prod_upper, scan, family_witness(WitnessFamilyId::S3G2, sr, ss, 0)));
      absorb_violations(report, scan);
    }
  }
}

// T4.1, T4.2, T4.3: every (r, s, m) with r <= s, r + s <= max_n, m <= floor(rs/2).
inline void check_sized(TheoremReport& report, bool edge, bool sums, bool prods, const RangeSpec& range) {
  const Metric sum = edge ? Metric::SumEdge : Metric::SumVertex;
  const Metric prod = edge ? Metric::ProdEdge : Metric::ProdVertex;
  const Quantities q{edge, !edge};
  for (std::size_t n = 2; n <= range.max_n; ++n) {
    for (std::size_t r = 1; 2 * r <= n; ++r) {
      const std::size_t s = n - r;
      for (std::size_t m = 0; m <= r * s / 2; ++m) {
        const auto p = ParameterTriple::make(static_cast<std::int64_t>(r), static_cast<std::int64_t>(s),
                                             static_cast<std::int64_t>(m));
        const BoundSet b = sized_bounds(p);
        MetricBounds bounds{};
        if (sums) bounds[metric_index(sum)] = Interval{b.sum_lower, b.sum_upper};
        if (prods) bounds[metric_index(prod)] = Interval{b.prod_lower, b.prod_upper};
        CellScan scan = scan_cell(GraphEnumeration(r, s, m), bounds, q, range.jobs);
        if (sums) {
          report.attainment.push_back(make_row(std::string(to_string(sum)) + "_upper", r, s, m, sum, true,
                                               b.sum_upper, scan, dispatched(WitnessGoal::SumUpper, p)));
          report.attainment.push_back(make_row(std::string(to_string(sum)) + "_lower", r, s, m, sum, false,
                                               b.sum_lower, scan, dispatched(WitnessGoal::SumLower, p)));
        }
        if (prods) {
          report.attainment.push_back(make_row(std::string(to_string(prod)) + "_upper", r, s, m, prod, true,
                                               b.prod_upper, scan, dispatched(WitnessGoal::ProdUpper, p)));
          report.attainment.push_back(make_row(std::string(to_string(prod)) + "_lower", r, s, m, prod, false,
                                               b.prod_lower, scan, dispatched(WitnessGoal::SumLower, p)));
        }
        absorb_violations(report, scan);
      }
    }
  }
}

inline std::string subset_text(const CayleySubset& subset) {
  std::string out = "{";
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(subset.members()[k]);
  }
  return out + "}";
}

// Complement of BC(Z_r, S) is BC(Z_r, Z_r \ S), label for label.
inline void check_bi_cayley_complement(TheoremReport& report, const RangeSpec& range) {
  for (std::size_t r = 1; r <= range.max_r; ++r) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << r); ++bits) {
      const CayleySubset subset = CayleySubset::from_bits(r, bits);
      const BipartiteGraph g = bi_cayley(subset);
      ++report.graphs_checked;
      if (graphs_equal(bipartite_complement(g), bi_cayley(subset.complement()))) continue;
      ++report.violation_count;
      report.violations.push_back({"complement_identity", r, r, std::nullopt, g.edges(), 0, 0,
                                   "S=" + subset_text(subset)});
    }
  }
}

// Connected Bi-Cayley pairs are maximally connected: kappa = kappa' = delta.
inline void check_bi_cayley_maximal(TheoremReport& report, const RangeSpec& range) {
  for (std::size_t r = 2; r <= range.max_r; ++r) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << r); ++bits) {
      const CayleySubset subset = CayleySubset::from_bits(r, bits);
      const BipartiteGraph g = bi_cayley(subset);
      const BipartiteGraph h = g.complement();
      ++report.graphs_checked;
      if (!is_connected(g) || !is_connected(h)) continue;
      const PairValues v = evaluate_pair(g);
      const auto k = static_cast<std::int64_t>(subset.size());
      const auto kc = static_cast<std::int64_t>(r) - k;
      const bool ok = v.delta_graph == k && v.edge_graph == k && v.vertex_graph == k && v.delta_complement == kc &&
                      v.edge_complement == kc && v.vertex_complement == kc;
      if (ok) continue;
      ++report.violation_count;
      report.violations.push_back({"maximal_connectivity", r, r, std::nullopt, g.edges(),
                                   std::min(v.vertex_graph, v.edge_graph), k,
                                   "S=" + subset_text(subset) + " kappa=" + std::to_string(v.vertex_graph) +
                                       " kappa'=" + std::to_string(v.edge_graph) +
                                       " kappa(bc)=" + std::to_string(v.vertex_complement) +
                                       " kappa'(bc)=" + std::to_string(v.edge_complement)});
    }
  }
}

inline BipartiteGraph random_connected_graph(std::mt19937_64& rng, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> order(2, max_n);
  std::uniform_real_distribution<double> density(0.25, 0.95);
  for (;;) {
    const std::size_t n = order(rng);
    const std::size_t r = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    const std::size_t s = n - r;
    const double p = density(rng);
    std::bernoulli_distribution coin(p);
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::vector<Edge> edges;
      for (std::size_t i = 1; i <= r; ++i) {
        for (std::size_t j = 1; j <= s; ++j) {
          if (coin(rng)) edges.push_back({i, j});
        }
      }
      BipartiteGraph g = new_graph(r, s, edges);
      if (is_connected(g)) return g;
    }
  }
}

// Attaching a new vertex by at least kappa'(G) edges keeps kappa' >= kappa'(G);
// the same holds for kappa.
inline void check_vertex_addition(TheoremReport& report, const RangeSpec& range) {
  if (range.max_n < 2) throw Error(ErrorKind::InvalidArgument, "vertex-addition trials need max_n >= 2");
  struct Tally {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::vector<Violation> violations;
  };
  constexpr std::uint64_t kChunk = 256;
  auto map = [&](std::uint64_t begin, std::uint64_t end) {
    Tally t;
    std::seed_seq seq{range.seed, begin / kChunk};
    std::mt19937_64 rng(seq);
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      const BipartiteGraph g = random_connected_graph(rng, range.max_n);
      const auto k_edge = edge_connectivity(g).value;
      const auto k_vertex = vertex_connectivity(g).value;
      const Side side = std::bernoulli_distribution(0.5)(rng) ? Side::Left : Side::Right;
      const std::size_t other = side == Side::Left ? g.right_size() : g.left_size();
      std::vector<std::size_t> pool(other);
      for (std::size_t v = 0; v < other; ++v) pool[v] = v;
      std::shuffle(pool.begin(), pool.end(), rng);
      const std::size_t lo = std::max(k_edge, k_vertex);
      const std::size_t take = std::uniform_int_distribution<std::size_t>(lo, other)(rng);
      pool.resize(take);
      std::sort(pool.begin(), pool.end());
      const BipartiteGraph grown = g.with_added_vertex(side, pool);
      const auto e2 = edge_connectivity(grown).value;
      const auto v2 = vertex_connectivity(grown).value;
      ++t.trials;
      if (e2 < k_edge || v2 < k_vertex) {
        ++t.failures;
        if (t.violations.size() < kMaxRecordedViolations) {
          t.violations.push_back({e2 < k_edge ? "edge_connectivity_dropped" : "vertex_connectivity_dropped",
                                  grown.left_size(), grown.right_size(), std::nullopt, grown.edges(),
                                  static_cast<std::int64_t>(e2 < k_edge ? e2 : v2),
                                  static_cast<std::int64_t>(e2 < k_edge ? k_edge : k_vertex),
                                  "base " + to_edge_list(g)});
        }
      }
    }
    return t;
  };
  auto merge = [](Tally a, Tally b) {
    a.trials += b.trials;
    a.failures += b.failures;
    for (auto& v : b.violations) {
      if (a.violations.size() >= kMaxRecordedViolations) break;
      a.violations.push_back(std::move(v));
    }
    return a;
  };
  Tally total = parallel_reduce(range.trials, range.jobs, Tally{}, map, merge, kChunk);
  report.graphs_checked = total.trials;
  report.violation_count = total.failures;
  report.violations = std::move(total.violations);
}

}  // namespace detail

inline TheoremReport check_theorem(TheoremId id, const RangeSpec& range) {
  const auto start = std::chrono::steady_clock::now();
  TheoremReport report{id, {}, 0, 0, {}, {}, 0};
  switch (id) {
    case TheoremId::L2_1:
    case TheoremId::L2_4:
      if (range.max_r > 16) throw Error(ErrorKind::TooLarge, "Bi-Cayley scans limited to r <= 16");
      report.range = {{"max_r", range.max_r}};
      break;
    case TheoremId::L2_5:
      report.range = {{"max_n", range.max_n}, {"trials", range.trials}, {"seed", range.seed}};
      break;
    default:
      report.range = {{"max_n", range.max_n}};
      break;
  }
  switch (id) {
    case TheoremId::L2_1: detail::check_bi_cayley_complement(report, range); break;
    case TheoremId::L2_4: detail::check_bi_cayley_maximal(report, range); break;
    case TheoremId::L2_5: detail::check_vertex_addition(report, range); break;
    case TheoremId::L3_1: detail::check_unconstrained(report, Metric::SumDelta, Metric::ProdDelta, range); break;
    case TheoremId::T3_2: detail::check_unconstrained(report, Metric::SumEdge, Metric::ProdEdge, range); break;
    case TheoremId::T3_3: detail::check_unconstrained(report, Metric::SumVertex, Metric::ProdVertex, range); break;
    case TheoremId::T4_1: detail::check_sized(report, true, true, false, range); break;
    case TheoremId::T4_2: detail::check_sized(report, true, false, true, range); break;
    case TheoremId::T4_3: detail::check_sized(report, false, true, true, range); break;
  }
  report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json(const Violation& v) {
  nlohmann::json j{{"bound", v.bound}, {"r", v.r},        {"s", v.s},          {"edges", edges_to_json(v.edges)},
                   {"observed", v.observed}, {"limit", v.limit}};
  j["m"] = v.m ? nlohmann::json(*v.m) : nlohmann::json(nullptr);
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

inline nlohmann::json to_json(const AttainmentRow& row) {
  nlohmann::json j{{"bound", row.bound},
                   {"r", row.r},
                   {"s", row.s},
                   {"enumerated", row.enumerated},
                   {"formula", row.formula},
                   {"attained", row.attained},
                   {"degenerate", row.degenerate},
                   {"witness_value", row.witness_value},
                   {"witness", edges_to_json(row.witness)}};
  j["m"] = row.m ? nlohmann::json(*row.m) : nlohmann::json(nullptr);
  j["witness_family"] = row.witness_family ? nlohmann::json(*row.witness_family) : nlohmann::json(nullptr);
  return j;
}

// `include_time` is off when reports are compared for determinism.
inline nlohmann::json to_json(const TheoremReport& report, bool include_time = true) {
  nlohmann::json j;
  j["theorem"] = std::string(to_string(report.theorem));
  j["range"] = report.range;
  j["graphs_checked"] = report.graphs_checked;
  j["violation_count"] = report.violation_count;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : report.violations) j["violations"].push_back(to_json(v));
  j["attainment"] = nlohmann::json::array();
  for (const auto& row : report.attainment) j["attainment"].push_back(to_json(row));
  if (include_time) j["wall_ms"] = report.wall_ms;
  return j;
}

inline nlohmann::json to_json(const ExtremalResult& e) {
  return {{"metric", std::string(to_string(e.metric))},
          {"max_value", e.max_value},
          {"argmax", e.argmax},
          {"min_value", e.min_value},
          {"argmin", e.argmin},
          {"graphs_checked", e.graphs_checked}};
}

}  // namespace bicon
