#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bicon/bounds.hpp"
#include "bicon/graph.hpp"

namespace bicon {

// A subset S of Z_r, kept sorted.
class CayleySubset {
 public:
  CayleySubset(std::size_t modulus, std::vector<std::size_t> members) : modulus_(modulus), members_(std::move(members)) {
    if (modulus_ < 1) throw Error(ErrorKind::BadSubset, "modulus must be at least 1");
    std::sort(members_.begin(), members_.end());
    for (std::size_t k = 0; k < members_.size(); ++k) {
      if (members_[k] >= modulus_) {
        throw Error(ErrorKind::BadSubset, "member " + std::to_string(members_[k]) + " not in Z_" +
                                              std::to_string(modulus_));
      }
      if (k > 0 && members_[k] == members_[k - 1]) {
        throw Error(ErrorKind::BadSubset, "member " + std::to_string(members_[k]) + " repeated");
      }
    }
  }

  // Members are the set bits of `bits` (bit g <-> g in S).
  static CayleySubset from_bits(std::size_t modulus, std::uint64_t bits) {
    std::vector<std::size_t> members;
    for (std::size_t g = 0; g < modulus; ++g) {
      if ((bits >> g) & 1u) members.push_back(g);
    }
    return {modulus, std::move(members)};
  }

  // {first, first+1, ..., first+count-1}
  static CayleySubset interval(std::size_t modulus, std::size_t first, std::size_t count) {
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < count; ++k) members.push_back(first + k);
    return {modulus, std::move(members)};
  }

  [[nodiscard]] std::size_t modulus() const noexcept { return modulus_; }
  [[nodiscard]] const std::vector<std::size_t>& members() const noexcept { return members_; }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }

  [[nodiscard]] CayleySubset complement() const {
    std::vector<std::size_t> rest;
    for (std::size_t g = 0; g < modulus_; ++g) {
      if (!std::binary_search(members_.begin(), members_.end(), g)) rest.push_back(g);
    }
    return {modulus_, std::move(rest)};
  }

 private:
  std::size_t modulus_;
  std::vector<std::size_t> members_;
};

// BC(Z_r, S) with x_{g+1} = (g,0), y_{g+1} = (g,1) and edges x_{g+1} y_{((s+g) mod r)+1}.
// `extra_right` isolated vertices y_{r+1}, ..., y_{r+extra_right} are appended.
inline BipartiteGraph bi_cayley(const CayleySubset& subset, std::size_t extra_right = 0) {
  const std::size_t r = subset.modulus();
  std::vector<Edge> edges;
  for (std::size_t g = 0; g < r; ++g) {
    for (std::size_t s : subset.members()) edges.push_back({g + 1, (s + g) % r + 1});
  }
  return new_graph(r, r + extra_right, edges);
}

enum class WitnessFamilyId { S3G1, S3G2, S4G1, S4G2, S4G3, S4G4, S4G5, S4G6, S4G7 };

inline constexpr std::array<WitnessFamilyId, 9> kAllFamilies{
    WitnessFamilyId::S3G1, WitnessFamilyId::S3G2, WitnessFamilyId::S4G1, WitnessFamilyId::S4G2, WitnessFamilyId::S4G3,
    WitnessFamilyId::S4G4, WitnessFamilyId::S4G5, WitnessFamilyId::S4G6, WitnessFamilyId::S4G7};

constexpr std::string_view family_name(WitnessFamilyId id) noexcept {
  switch (id) {
    case WitnessFamilyId::S3G1: return "s3-g1";
    case WitnessFamilyId::S3G2: return "s3-g2";
    case WitnessFamilyId::S4G1: return "s4-g1";
    case WitnessFamilyId::S4G2: return "s4-g2";
    case WitnessFamilyId::S4G3: return "s4-g3";
    case WitnessFamilyId::S4G4: return "s4-g4";
    case WitnessFamilyId::S4G5: return "s4-g5";
    case WitnessFamilyId::S4G6: return "s4-g6";
    case WitnessFamilyId::S4G7: return "s4-g7";
  }
  return "unknown";
}

inline std::optional<WitnessFamilyId> parse_family(std::string_view name) {
  for (WitnessFamilyId id : kAllFamilies) {
    if (family_name(id) == name) return id;
  }
  return std::nullopt;
}

// Whether the family's construction consumes m (and so must have m edges).
constexpr bool family_uses_edge_count(WitnessFamilyId id) noexcept {
  return id != WitnessFamilyId::S3G1 && id != WitnessFamilyId::S3G2;
}

// The pair (kappa'(G), kappa'(G^bc)) a family is built to realize.
struct ConnectivityPair {
  std::int64_t graph = 0;
  std::int64_t complement = 0;

  friend bool operator==(const ConnectivityPair&, const ConnectivityPair&) = default;
};

struct Witness {
  WitnessFamilyId family;
  BipartiteGraph graph;
  ConnectivityPair claimed;
  // Points where the construction departs from a literal reading of its
  // defining edge set.
  std::vector<std::string> notes;
};

namespace detail {

inline void require(bool ok, WitnessFamilyId id, const std::string& condition) {
  if (!ok) {
    throw Error(ErrorKind::PreconditionViolated, std::string(family_name(id)) + " requires " + condition);
  }
}

// y_{r+k} (k = 1..s-r) joined to x_{((k-1)d + t mod r)+1}, t = 0..d-1.
inline void attach_round_robin(std::vector<Edge>& edges, std::size_t r, std::size_t s, std::size_t d) {
  for (std::size_t k = 1; k + r <= s; ++k) {
    for (std::size_t t = 0; t < d; ++t) edges.push_back({((k - 1) * d + t) % r + 1, r + k});
  }
}

inline std::vector<Edge> bi_cayley_edges_with_tail(std::size_t r, std::size_t s, std::size_t d) {
  std::vector<Edge> edges = bi_cayley(CayleySubset::interval(r, 0, d)).edges();
  attach_round_robin(edges, r, s, d);
  return edges;
}

}  // namespace detail

// Claimed connectivity pair per family, as stated alongside each construction.
inline ConnectivityPair claimed_pair(WitnessFamilyId id, std::int64_t r, std::int64_t s, std::int64_t m) {
  const std::int64_t d = s > 0 ? m / s : 0;
  switch (id) {
    case WitnessFamilyId::S3G1: return {0, 0};
    case WitnessFamilyId::S3G2: return {r / 2, (r + 1) / 2};
    case WitnessFamilyId::S4G1: return {0, r - m};
    case WitnessFamilyId::S4G2: return {0, 0};
    case WitnessFamilyId::S4G3: return {0, r - 1};
    case WitnessFamilyId::S4G4: return {0, r - 2};
    case WitnessFamilyId::S4G5: return {1, r - 2};
    case WitnessFamilyId::S4G6: return {d, r - d};
    case WitnessFamilyId::S4G7: return {d, r - d - 1};
  }
  return {};
}

inline Witness build_witness(WitnessFamilyId id, std::int64_t r, std::int64_t s, std::int64_t m) {
  detail::require(r >= 1 && r <= s, id, "1 <= r <= s");
  const std::int64_t n = r + s;
  if (family_uses_edge_count(id)) {
    detail::require(m >= 0 && m <= r * s / 2, id, "0 <= m <= floor(rs/2)");
  }
  const auto ur = static_cast<std::size_t>(r);
  const auto us = static_cast<std::size_t>(s);
  const auto um = static_cast<std::size_t>(std::max<std::int64_t>(m, 0));
  std::vector<Edge> edges;
  std::vector<std::string> notes;

  switch (id) {
    case WitnessFamilyId::S3G1:
      // y_1 joined to all of X, y_2 isolated.
      detail::require(n >= 3, id, "n >= 3");
      for (std::size_t i = 1; i <= ur; ++i) edges.push_back({i, 1});
      break;
    case WitnessFamilyId::S3G2:
      detail::require(r >= 4, id, "r >= 4");
      edges = detail::bi_cayley_edges_with_tail(ur, us, ur / 2);
      break;
    case WitnessFamilyId::S4G1:
      detail::require(m < r, id, "m < r");
      for (std::size_t i = 1; i <= um; ++i) edges.push_back({i, 1});
      break;
    case WitnessFamilyId::S4G2: {
      detail::require(m >= r, id, "m >= r");
      detail::require(s >= 2, id, "s >= 2");
      for (std::size_t i = 1; i <= ur; ++i) edges.push_back({i, 1});
      std::size_t remaining = um - ur;
      for (std::size_t j = 3; j <= us && remaining > 0; ++j) {
        for (std::size_t i = 1; i <= ur && remaining > 0; ++i, --remaining) edges.push_back({i, j});
      }
      break;
    }
    case WitnessFamilyId::S4G3:
      detail::require(1 <= m && m <= s, id, "1 <= m <= s");
      if (m < r) {
        for (std::size_t i = 1; i <= um; ++i) edges.push_back({i, i});
        notes.push_back("m < r: partial matching x_i y_i, i <= m, replaces the r-edge matching");
      } else {
        for (std::size_t i = 1; i <= ur; ++i) edges.push_back({i, i});
        for (std::size_t j = ur + 1; j <= um; ++j) edges.push_back({1, j});
      }
      break;
    case WitnessFamilyId::S4G4:
      detail::require(s + 1 <= m && m <= n - 2, id, "s+1 <= m <= n-2");
      for (std::size_t i = 1; i <= ur; ++i) edges.push_back({i, i});
      for (std::size_t i = 1; i <= um - us; ++i) edges.push_back({i, i + 1});
      for (std::size_t j = ur + 1; j <= us; ++j) edges.push_back({1, j});
      break;
    case WitnessFamilyId::S4G5:
      detail::require(m == n - 1 && r >= 2, id, "m = n-1 and r >= 2");
      for (std::size_t i = 1; i <= ur; ++i) edges.push_back({i, i});
      for (std::size_t i = 1; i < ur; ++i) edges.push_back({i, i + 1});
      for (std::size_t j = ur + 1; j <= us; ++j) edges.push_back({ur, j});
      break;
    case WitnessFamilyId::S4G6:
      detail::require(m % s == 0 && m >= n, id, "m = 0 mod s and m >= n");
      edges = detail::bi_cayley_edges_with_tail(ur, us, um / us);
      break;
    case WitnessFamilyId::S4G7: {
      detail::require(m % s != 0 && m >= n, id, "m != 0 mod s and m >= n");
      const std::size_t d = um / us;
      const std::size_t l = um % us;
      edges = detail::bi_cayley_edges_with_tail(ur, us, d);
      // The l extra edges go to distinct y: y_{g+1} gains x_{((g-d) mod r)+1}
      // for g < min(l, r), then y_{r+k} gains the next x after its window.
      for (std::size_t g = 0; g < std::min(l, ur); ++g) edges.push_back({(g + ur - d % ur) % ur + 1, g + 1});
      for (std::size_t k = 1; k + ur <= l; ++k) edges.push_back({((k - 1) * d + d) % ur + 1, ur + k});
      notes.push_back("extra l edges spread over distinct right vertices instead of all at x_1");
      break;
    }
  }

  BipartiteGraph graph = new_graph(ur, us, edges);
  if (family_uses_edge_count(id) && graph.edge_count() != um) {
    throw Error(ErrorKind::PreconditionViolated, std::string(family_name(id)) + " produced " +
                                                     std::to_string(graph.edge_count()) + " edges, expected m=" +
                                                     std::to_string(m));
  }
  return {id, std::move(graph), claimed_pair(id, r, s, m), std::move(notes)};
}

enum class WitnessGoal { SumLower, SumUpper, ProdUpper };

constexpr std::string_view to_string(WitnessGoal goal) noexcept {
  switch (goal) {
    case WitnessGoal::SumLower: return "sum_lower";
    case WitnessGoal::SumUpper: return "sum_upper";
    case WitnessGoal::ProdUpper: return "prod_upper";
  }
  return "unknown";
}

struct DispatchedWitness {
  // Empty for the degenerate cases that need no named family (the edgeless graph).
  std::optional<WitnessFamilyId> family;
  std::string label;
  BipartiteGraph graph;
};

// Picks the construction that demonstrates sharpness for the given goal and
// parameters, following the case split of the sized bounds.
inline DispatchedWitness dispatch_witness(WitnessGoal goal, const ParameterTriple& p) {
  const auto r = p.r(), s = p.s(), m = p.m(), n = p.n();
  auto named = [&](WitnessFamilyId id) {
    return DispatchedWitness{id, std::string(family_name(id)), build_witness(id, r, s, m).graph};
  };

  if (goal == WitnessGoal::SumLower) return named(m < r ? WitnessFamilyId::S4G1 : WitnessFamilyId::S4G2);

  if (m == 0) {
    return {std::nullopt, "empty", BipartiteGraph(static_cast<std::size_t>(r), static_cast<std::size_t>(s))};
  }
  if (m <= s) return named(WitnessFamilyId::S4G3);
  if (m <= n - 2) return named(WitnessFamilyId::S4G4);
  if (m == n - 1) {
    // r = 1 would make G a star K_{1,n-1}, outside m <= floor(rs/2).
    if (r == 1) throw Error(ErrorKind::NoWitness, "m = n-1 with r = 1 lies outside m <= floor(rs/2)");
    return named(WitnessFamilyId::S4G5);
  }
  return named(m % s == 0 ? WitnessFamilyId::S4G6 : WitnessFamilyId::S4G7);
}

}  // namespace bicon
