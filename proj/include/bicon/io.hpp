#pragma once

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bicon/graph.hpp"

namespace bicon {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (end > pos) out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

inline std::size_t parse_count(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected a decimal count, got '" +
                                      std::string(tok) + "'");
  }
  return value;
}

}  // namespace detail

// Edge-list text: a header "r s" followed by one "i j" line per edge (1-based).
// Lines starting with '#' and blank lines are skipped.
inline BipartiteGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t r = 0;
  std::size_t s = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected two integers");
    }
    const std::size_t a = detail::parse_count(tokens[0], line_no);
    const std::size_t b = detail::parse_count(tokens[1], line_no);
    if (!have_header) {
      r = a;
      s = b;
      have_header = true;
    } else {
      edges.push_back({a, b});
    }
  }
  if (!have_header) throw Error(ErrorKind::Parse, "missing 'r s' header line");
  return new_graph(r, s, edges);
}

inline BipartiteGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const BipartiteGraph& g) {
  out << g.left_size() << ' ' << g.right_size() << '\n';
  for (const Edge& e : g.edges()) out << e.x << ' ' << e.y << '\n';
}

inline std::string to_edge_list(const BipartiteGraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

inline nlohmann::json edges_to_json(const std::vector<Edge>& edges) {
  auto arr = nlohmann::json::array();
  for (const Edge& e : edges) arr.push_back({e.x, e.y});
  return arr;
}

inline void to_json(nlohmann::json& j, const BipartiteGraph& g) {
  j = nlohmann::json{{"r", g.left_size()}, {"s", g.right_size()}, {"edges", edges_to_json(g.edges())}};
}

inline BipartiteGraph graph_from_json(const nlohmann::json& j) {
  try {
    const auto r = j.at("r").get<std::size_t>();
    const auto s = j.at("s").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& pair : j.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw Error(ErrorKind::Parse, "edge entries must be [i, j] pairs");
      }
      edges.push_back({pair[0].get<std::size_t>(), pair[1].get<std::size_t>()});
    }
    return new_graph(r, s, edges);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace bicon
