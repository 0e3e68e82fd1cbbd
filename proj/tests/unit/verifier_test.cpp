#include <gtest/gtest.h>

#include "bicon/oracle.hpp"
#include "bicon/verifier.hpp"

using namespace bicon;

namespace {

RangeSpec small_range(unsigned jobs) {
  RangeSpec range;
  range.max_n = 6;
  range.max_r = 6;
  range.trials = 500;
  range.jobs = jobs;
  return range;
}

}  // namespace

TEST(Metric, Names) {
  for (auto m : kAllMetrics) EXPECT_EQ(parse_metric(to_string(m)), m);
  EXPECT_EQ(parse_metric("sum_edge"), Metric::SumEdge);
  EXPECT_FALSE(parse_metric("sum").has_value());
  for (auto t : kAllTheorems) EXPECT_EQ(parse_theorem(to_string(t)), t);
  EXPECT_THROW(parse_theorem("T9.9"), Error);
}

TEST(ExtremalScan, TwoByTwo) {
  const auto full = extremal_scan(ParameterTriple::make(2, 2, 2), Metric::SumEdge, 1);
  EXPECT_EQ(full.graphs_checked, 6u);
  EXPECT_EQ(full.max_value, 0);
  const auto empty = extremal_scan(ParameterTriple::make(2, 2, 0), Metric::SumEdge, 1);
  EXPECT_EQ(empty.max_value, 2);
  EXPECT_EQ(empty.argmax.edge_count(), 0u);
}

TEST(ExtremalScan, FourByFiveTen) {
  const auto e = extremal_scan(ParameterTriple::make(4, 5, 10), Metric::ProdEdge);
  EXPECT_EQ(e.graphs_checked, 184756u);
  EXPECT_EQ(e.max_value, 4);
  const auto v = evaluate_pair(e.argmax, {true, false});
  EXPECT_EQ(v.edge_graph * v.edge_complement, 4);
}

TEST(ExtremalScan, ArgmaxIsFirstInMaskOrder) {
  const auto e = extremal_scan(ParameterTriple::make(2, 3, 3), Metric::SumDelta, 1);
  const GraphEnumeration all(2, 3, 3);
  std::optional<std::uint64_t> first;
  all.for_each_mask([&](std::uint64_t mask) {
    if (!first && metric_value(Metric::SumDelta, evaluate_mask(2, 3, mask)) == e.max_value) first = mask;
  });
  EXPECT_EQ(e.argmax.to_mask(), first);
}

// Both evaluation backends (oracle and max-flow) agree across the switchover.
TEST(Evaluate, BackendsAgree) {
  for (std::uint64_t mask = 0; mask < (1u << 12); mask += 7) {
    const auto g = BipartiteGraph::from_mask(3, 4, mask);
    const auto fast = evaluate_pair(g);
    EXPECT_EQ(fast.edge_graph, static_cast<std::int64_t>(brute_force_edge_connectivity(g)));
    EXPECT_EQ(fast.vertex_complement, static_cast<std::int64_t>(brute_force_vertex_connectivity(g.complement())));
    const auto slow = evaluate_mask(3, 4, mask);
    EXPECT_EQ(fast.edge_complement, slow.edge_complement);
    EXPECT_EQ(fast.vertex_graph, slow.vertex_graph);
    EXPECT_EQ(fast.delta_graph, slow.delta_graph);
  }
}

TEST(CheckTheorem, SmallRangesPass) {
  for (auto id : kAllTheorems) {
    const auto report = check_theorem(id, small_range(2));
    EXPECT_TRUE(report.passed()) << to_string(id) << " " << to_json(report).dump();
    EXPECT_GT(report.graphs_checked, 0u);
  }
}

TEST(CheckTheorem, DeterministicAcrossJobs) {
  for (auto id : {TheoremId::T3_2, TheoremId::T4_1, TheoremId::L2_5}) {
    const auto a = to_json(check_theorem(id, small_range(1)), false);
    const auto b = to_json(check_theorem(id, small_range(4)), false);
    EXPECT_EQ(a, b) << to_string(id);
  }
}

TEST(CheckTheorem, FlagsDegenerateTwoByTwo) {
  RangeSpec range = small_range(1);
  range.max_n = 4;
  const auto report = check_theorem(TheoremId::T4_1, range);
  EXPECT_TRUE(report.passed());
  bool found = false;
  for (const auto& row : report.attainment) {
    if (row.bound == "sum_edge_upper" && row.r == 2 && row.s == 2 && row.m == 2u) {
      found = true;
      EXPECT_FALSE(row.attained);
      EXPECT_TRUE(row.degenerate);
      EXPECT_EQ(row.enumerated, 0);
      EXPECT_EQ(row.formula, 1);
    }
  }
  EXPECT_TRUE(found);
}

// The enumerated extremum never crosses the formula and, per (r, s), the
// enumerated maximum sum over m stays within the unconstrained bound.
TEST(CheckTheorem, AttainmentSelfConsistent) {
  RangeSpec range = small_range(1);
  for (auto id : {TheoremId::T4_1, TheoremId::T4_3, TheoremId::T3_2}) {
    const auto report = check_theorem(id, range);
    for (const auto& row : report.attainment) {
      const bool lower = row.bound.find("lower") != std::string::npos;
      if (lower) {
        EXPECT_GE(row.enumerated, row.formula);
        EXPECT_GE(row.witness_value, row.enumerated);
      } else {
        EXPECT_LE(row.enumerated, row.formula);
        EXPECT_LE(row.witness_value, row.enumerated);
        if (row.m) {
          EXPECT_LE(row.enumerated, static_cast<std::int64_t>(row.r));
        }
      }
      EXPECT_EQ(row.attained, row.witness_value == row.formula);
      EXPECT_EQ(row.degenerate, row.enumerated != row.formula);
    }
  }
}

TEST(Json, ReportShape) {
  RangeSpec range = small_range(1);
  range.max_n = 4;
  const auto j = to_json(check_theorem(TheoremId::T4_2, range));
  EXPECT_EQ(j["theorem"], "T4.2");
  EXPECT_TRUE(j["violations"].is_array());
  EXPECT_TRUE(j.contains("wall_ms"));
  ASSERT_FALSE(j["attainment"].empty());
  const auto& row = j["attainment"][0];
  for (const char* key : {"r", "s", "m", "enumerated", "formula", "attained", "witness"}) EXPECT_TRUE(row.contains(key));
  EXPECT_FALSE(to_json(check_theorem(TheoremId::T4_2, range), false).contains("wall_ms"));
}
