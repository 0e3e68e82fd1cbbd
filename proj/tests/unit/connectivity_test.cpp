#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bicon/connectivity.hpp"
#include "bicon/constructions.hpp"
#include "bicon/oracle.hpp"

using namespace bicon;

namespace {

// A second, deliberately naive oracle: try every k-subset of edges (or
// vertices) in increasing k until removal disconnects the graph.
bool bfs_connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                   const std::vector<bool>& gone_vertex) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [u, v] : edges) {
    if (gone_vertex[u] || gone_vertex[v]) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::size_t start = n, alive = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (!gone_vertex[v]) {
      ++alive;
      if (start == n) start = v;
    }
  if (alive <= 1) return true;
  std::vector<bool> seen(n);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == alive;
}

std::vector<std::pair<std::size_t, std::size_t>> flat_edges(const BipartiteGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.x - 1, g.left_size() + e.y - 1);
  return out;
}

std::size_t subset_edge_oracle(const BipartiteGraph& g) {
  const auto edges = flat_edges(g);
  const std::size_t n = g.order();
  const std::vector<bool> none(n, false);
  for (std::size_t k = 0; k <= edges.size(); ++k) {
    std::vector<bool> pick(edges.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      std::vector<std::pair<std::size_t, std::size_t>> kept;
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (!pick[i]) kept.push_back(edges[i]);
      if (!bfs_connected(n, kept, none)) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return edges.size();
}

std::size_t subset_vertex_oracle(const BipartiteGraph& g) {
  const auto edges = flat_edges(g);
  const std::size_t n = g.order();
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      if (n - k <= 1 || !bfs_connected(n, edges, pick)) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return n - 1;
}

BipartiteGraph random_graph(std::mt19937_64& rng, std::size_t r, std::size_t s, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = 1; j <= s; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return new_graph(r, s, edges);
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no bicon::Error thrown";
  return ErrorKind::Parse;
}

const BipartiteGraph kCycle8 = bi_cayley(CayleySubset(4, {0, 1}));

}  // namespace

TEST(IsConnected, Examples) {
  EXPECT_TRUE(is_connected(complete_bipartite(2, 3)));
  EXPECT_FALSE(is_connected(new_graph(2, 2, {{1, 1}})));
  EXPECT_TRUE(is_connected(kCycle8));
  EXPECT_EQ(kind_of([] { is_connected(BipartiteGraph(0, 0)); }), ErrorKind::EmptyGraph);
}

TEST(EdgeConnectivity, Examples) {
  EXPECT_EQ(edge_connectivity(complete_bipartite(2, 3)).value, 2u);
  EXPECT_EQ(edge_connectivity(new_graph(2, 2, {{1, 1}, {2, 2}})).value, 0u);
  EXPECT_EQ(edge_connectivity(kCycle8).value, 2u);
  EXPECT_EQ(edge_connectivity(complete_bipartite(2, 2)).value, 2u);
  EXPECT_EQ(edge_connectivity(BipartiteGraph(1, 2)).value, 0u);
  EXPECT_EQ(edge_connectivity(complete_bipartite(1, 3)).value, 1u);
  EXPECT_EQ(edge_connectivity(complete_bipartite(1, 1)).value, 1u);
}

TEST(VertexConnectivity, Examples) {
  for (auto [r, s] : {std::pair{1, 1}, {2, 2}, {2, 3}, {3, 3}, {3, 5}}) {
    EXPECT_EQ(vertex_connectivity(complete_bipartite(r, s)).value, static_cast<std::size_t>(r));
  }
  EXPECT_EQ(vertex_connectivity(new_graph(2, 2, {{1, 1}, {2, 1}, {2, 2}})).value, 1u);
  EXPECT_EQ(vertex_connectivity(new_graph(2, 2, {{1, 1}})).value, 0u);
}

TEST(Connectivity, TooSmall) {
  EXPECT_EQ(kind_of([] { edge_connectivity(BipartiteGraph(1, 0)); }), ErrorKind::TooSmall);
  EXPECT_EQ(kind_of([] { vertex_connectivity(BipartiteGraph(0, 1)); }), ErrorKind::TooSmall);
  EXPECT_EQ(kind_of([] { brute_force_edge_connectivity(BipartiteGraph(1, 0)); }), ErrorKind::TooSmall);
}

TEST(Oracle, Examples) {
  EXPECT_EQ(brute_force_edge_connectivity(complete_bipartite(2, 2)), 2u);
  EXPECT_EQ(brute_force_edge_connectivity(BipartiteGraph(1, 2)), 0u);
  EXPECT_EQ(brute_force_edge_connectivity(complete_bipartite(1, 3)), 1u);
  EXPECT_EQ(brute_force_vertex_connectivity(complete_bipartite(2, 3)), 2u);
  EXPECT_EQ(brute_force_vertex_connectivity(new_graph(2, 2, {{1, 1}})), 0u);
  EXPECT_EQ(brute_force_vertex_connectivity(complete_bipartite(1, 1)), 1u);
  EXPECT_EQ(kind_of([] { brute_force_vertex_connectivity(BipartiteGraph(9, 8)); }), ErrorKind::TooLarge);
}

// The bundled brute-force oracle agrees with a naive subset-removal search.
TEST(Oracle, MatchesSubsetRemoval) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 150; ++t) {
    const std::size_t r = 1 + rng() % 3, s = 1 + rng() % 4;
    if (r + s < 2) continue;
    const auto g = random_graph(rng, r, s, 0.6);
    EXPECT_EQ(brute_force_edge_connectivity(g), subset_edge_oracle(g));
    EXPECT_EQ(brute_force_vertex_connectivity(g), subset_vertex_oracle(g));
    EXPECT_EQ(edge_connectivity(g).value, subset_edge_oracle(g));
    EXPECT_EQ(vertex_connectivity(g).value, subset_vertex_oracle(g));
  }
}

TEST(Properties, WhitneyChainAndCertificates) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 400; ++t) {
    const std::size_t r = 1 + rng() % 7, s = 1 + rng() % 7;
    if (r + s < 2) continue;
    const auto g = random_graph(rng, r, s, 0.3 + 0.6 * (rng() % 100) / 100.0);
    const auto e = edge_connectivity(g);
    const auto v = vertex_connectivity(g);
    EXPECT_LE(v.value, e.value);
    EXPECT_LE(e.value, min_degree(g));
    EXPECT_TRUE(certificate_separates(g, e));
    EXPECT_TRUE(certificate_separates(g, v));
    if (e.kind == CertificateKind::EdgeSet) {
      EXPECT_EQ(e.edges.size(), e.value);
    }
    if (v.kind == CertificateKind::VertexSet || v.kind == CertificateKind::CompleteExhaustion) {
      EXPECT_EQ(v.vertices.size(), v.value);
    }
    EXPECT_EQ(e.value, brute_force_edge_connectivity(g));
    EXPECT_EQ(v.value, brute_force_vertex_connectivity(g));
  }
}

TEST(Properties, EdgeDeletionDropsByAtMostOne) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 2 + rng() % 5, s = 2 + rng() % 5;
    const auto g = random_graph(rng, r, s, 0.7);
    auto edges = g.edges();
    if (edges.empty()) continue;
    const auto base_e = edge_connectivity(g).value;
    const auto base_v = vertex_connectivity(g).value;
    edges.erase(edges.begin() + static_cast<long>(rng() % edges.size()));
    const auto h = new_graph(r, s, edges);
    const auto e = edge_connectivity(h).value;
    const auto v = vertex_connectivity(h).value;
    EXPECT_LE(e, base_e);
    EXPECT_GE(e + 1, base_e);
    EXPECT_LE(v, base_v);
    EXPECT_GE(v + 1, base_v);
  }
}

TEST(Properties, VertexAdditionKeepsConnectivity) {
  std::mt19937_64 rng(13);
  int checked = 0;
  while (checked < 300) {
    const std::size_t r = 1 + rng() % 5, s = 1 + rng() % 5;
    const auto g = random_graph(rng, r, s, 0.7);
    if (g.order() < 2 || !is_connected(g)) continue;
    const auto k = edge_connectivity(g).value;
    const bool left = rng() % 2;
    std::vector<std::size_t> pool(left ? s : r);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(k + rng() % (pool.size() - k + 1));
    const auto grown = g.with_added_vertex(left ? Side::Left : Side::Right, pool);
    EXPECT_GE(edge_connectivity(grown).value, k);
    ++checked;
  }
}

TEST(Certificate, RejectsBogusCut) {
  const auto g = complete_bipartite(2, 2);
  ConnectivityResult fake;
  fake.value = 1;
  fake.kind = CertificateKind::EdgeSet;
  fake.edges = {{1, 1}};
  EXPECT_FALSE(certificate_separates(g, fake));
}
