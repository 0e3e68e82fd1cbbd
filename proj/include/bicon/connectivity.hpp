#pragma once

#include <algorithm>
#include <cstddef>
#include <string_view>
#include <vector>

#include "bicon/flow.hpp"
#include "bicon/graph.hpp"

namespace bicon {

enum class CertificateKind {
  VertexSet,            // removing `vertices` disconnects the graph
  EdgeSet,              // removing `edges` disconnects the graph
  AlreadyDisconnected,  // value is 0 and nothing needs removing
  CompleteExhaustion,   // no separating set exists; removing `vertices` leaves one vertex
};

constexpr std::string_view to_string(CertificateKind kind) noexcept {
  switch (kind) {
    case CertificateKind::VertexSet: return "vertex-set";
    case CertificateKind::EdgeSet: return "edge-set";
    case CertificateKind::AlreadyDisconnected: return "already-disconnected";
    case CertificateKind::CompleteExhaustion: return "complete-exhaustion";
  }
  return "unknown";
}

struct ConnectivityResult {
  std::size_t value = 0;
  CertificateKind kind = CertificateKind::AlreadyDisconnected;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

namespace detail {

// Flat vertex ids: x_{i+1} -> i, y_{j+1} -> r + j.
inline Vertex label_of(const BipartiteGraph& g, std::size_t v) {
  return v < g.left_size() ? Vertex{Side::Left, v + 1} : Vertex{Side::Right, v - g.left_size() + 1};
}

inline std::vector<std::vector<std::size_t>> adjacency_lists(const BipartiteGraph& g) {
  const std::size_t r = g.left_size();
  std::vector<std::vector<std::size_t>> adj(g.order());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < g.right_size(); ++j) {
      if (g.adjacent(i, j)) {
        adj[i].push_back(r + j);
        adj[r + j].push_back(i);
      }
    }
  }
  return adj;
}

inline void require_two_vertices(const BipartiteGraph& g) {
  if (g.order() < 2) throw Error(ErrorKind::TooSmall, "connectivity needs r+s >= 2");
}

}  // namespace detail

inline bool is_connected(const BipartiteGraph& g) {
  if (g.order() == 0) throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
  const auto adj = detail::adjacency_lists(g);
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == g.order();
}

// Unit-capacity max-flow from vertex 0 to every other vertex; the smallest
// flow is the edge connectivity and its residual cut is the certificate.
inline ConnectivityResult edge_connectivity(const BipartiteGraph& g) {
  detail::require_two_vertices(g);
  ConnectivityResult result;
  if (!is_connected(g)) return result;

  const std::size_t n = g.order();
  const std::size_t r = g.left_size();
  FlowNetwork<int> net(n);
  std::vector<Edge> arc_edges;
  for (const Edge& e : g.edges()) {
    net.add_arc(e.x - 1, r + e.y - 1, 1, 1);
    arc_edges.push_back(e);
  }

  int best = static_cast<int>(n);
  for (std::size_t sink = 1; sink < n; ++sink) {
    net.clear_flow();
    const int flow = net.max_flow(0, sink, best);
    if (flow >= best) continue;
    best = flow;
    const auto side = net.reachable_from_source();
    result.edges.clear();
    for (const Edge& e : arc_edges) {
      if (side[e.x - 1] != side[r + e.y - 1]) result.edges.push_back(e);
    }
  }
  result.value = static_cast<std::size_t>(best);
  result.kind = CertificateKind::EdgeSet;
  return result;
}

// Split-vertex reduction: v_in = 2v, v_out = 2v + 1 with a unit internal arc.
// A minimum separator avoids one of the first kappa + 1 vertices, so sources
// are scanned in index order only while their index is at most the best value
// found so far; sinks range over later non-adjacent vertices.
inline ConnectivityResult vertex_connectivity(const BipartiteGraph& g) {
  detail::require_two_vertices(g);
  ConnectivityResult result;
  if (!is_connected(g)) return result;

  const std::size_t n = g.order();
  const auto adj = detail::adjacency_lists(g);
  const int infinite = static_cast<int>(n);
  FlowNetwork<int> net(2 * n);
  for (std::size_t v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, 1);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v : adj[u]) net.add_arc(2 * u + 1, 2 * v, infinite);
  }

  std::size_t best = n - 1;
  result.kind = CertificateKind::CompleteExhaustion;
  for (std::size_t v = 0; v + 1 < n; ++v) result.vertices.push_back(detail::label_of(g, v));

  std::vector<bool> neighbor(n);
  for (std::size_t source = 0; source < n && source <= best; ++source) {
    std::fill(neighbor.begin(), neighbor.end(), false);
    for (std::size_t v : adj[source]) neighbor[v] = true;
    for (std::size_t sink = source + 1; sink < n; ++sink) {
      if (neighbor[sink]) continue;
      net.clear_flow();
      const int flow = net.max_flow(2 * source + 1, 2 * sink, static_cast<int>(best));
      if (static_cast<std::size_t>(flow) >= best) continue;
      best = static_cast<std::size_t>(flow);
      const auto side = net.reachable_from_source();
      result.kind = CertificateKind::VertexSet;
      result.vertices.clear();
      for (std::size_t v = 0; v < n; ++v) {
        if (side[2 * v] && !side[2 * v + 1]) result.vertices.push_back(detail::label_of(g, v));
      }
    }
  }
  result.value = best;
  return result;
}

// Whether deleting the certificate leaves a disconnected graph or a single
// vertex. Used by tests and the CLI as an independent sanity check.
inline bool certificate_separates(const BipartiteGraph& g, const ConnectivityResult& c) {
  const std::size_t r = g.left_size();
  const std::size_t n = g.order();
  std::vector<bool> removed(n, false);
  auto adj = detail::adjacency_lists(g);
  switch (c.kind) {
    case CertificateKind::AlreadyDisconnected:
      return !is_connected(g);
    case CertificateKind::EdgeSet:
      for (const Edge& e : c.edges) {
        if (!g.adjacent(e.x - 1, e.y - 1)) return false;
        std::erase(adj[e.x - 1], r + e.y - 1);
        std::erase(adj[r + e.y - 1], e.x - 1);
      }
      break;
    case CertificateKind::VertexSet:
    case CertificateKind::CompleteExhaustion:
      for (const Vertex& v : c.vertices) removed[v.side == Side::Left ? v.index - 1 : r + v.index - 1] = true;
      break;
  }
  std::size_t alive = 0;
  std::size_t start = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start == n) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : adj[u]) {
      if (!removed[v] && !seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached < alive;
}

}  // namespace bicon
