// Enumeration counts, deterministic sampling, the self-check registry with
// its shrinking violation reports, and the JSON report layer.

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "skewrank/report_json.hpp"
#include "skewrank/sgr.hpp"
#include "skewrank/verify.hpp"

namespace skewrank {
namespace {

std::uint64_t count_oriented(int n) {
  std::uint64_t c = 0;
  for_each_oriented(n, [&](const OrientedGraph&) { ++c; });
  return c;
}

TEST(Enumerate, ClosedFormCounts) {
  // 3 states per vertex pair: absent, one direction, the other.
  EXPECT_EQ(count_oriented(0), 1u);
  EXPECT_EQ(count_oriented(1), 1u);
  EXPECT_EQ(count_oriented(2), 3u);
  EXPECT_EQ(count_oriented(3), 27u);
  EXPECT_EQ(count_oriented(4), 729u);

  std::uint64_t connected3 = 0;
  for_each_oriented(3, [&](const OrientedGraph& g) {
    if (is_connected(g)) ++connected3;
  });
  EXPECT_EQ(connected3, 20u);  // 27 minus the empty and six one-edge graphs

  std::uint64_t graphs4 = 0, connected4 = 0;
  for_each_graph(4, false, [&](const EdgeList&) { ++graphs4; });
  for_each_graph(4, true, [&](const EdgeList&) { ++connected4; });
  EXPECT_EQ(graphs4, 64u);      // 2^C(4,2)
  EXPECT_EQ(connected4, 38u);

  const std::uint64_t tree_counts[] = {1, 1, 1, 3, 16, 125, 1296, 16807};
  for (int n = 0; n <= 7; ++n) {
    std::uint64_t trees = 0;
    for_each_tree(n, [&](const EdgeList& edges) {
      ++trees;
      EXPECT_EQ(edges.size(), n == 0 ? 0u : static_cast<std::size_t>(n - 1));
      EXPECT_TRUE(edges_connected(n, edges));
    });
    EXPECT_EQ(trees, tree_counts[n]) << "n=" << n;
  }

  std::uint64_t uni4 = 0, uni5 = 0, bi4 = 0;
  for_each_unicyclic(4, [&](const EdgeList&) { ++uni4; });
  for_each_unicyclic(5, [&](const EdgeList&) { ++uni5; });
  for_each_bicyclic(4, [&](const EdgeList&) { ++bi4; });
  EXPECT_EQ(uni4, 15u);
  EXPECT_EQ(uni5, 222u);
  EXPECT_EQ(bi4, 6u);  // K4 minus one edge, six ways
}

TEST(Enumerate, SweepBoundsAreEnforced) {
  EXPECT_THROW(for_each_oriented(8, [](const OrientedGraph&) {}), Error);
  EXPECT_THROW(for_each_graph(9, false, [](const EdgeList&) {}), Error);
  EXPECT_THROW(for_each_tree(9, [](const EdgeList&) {}), Error);
  try {
    for_each_oriented(8, [](const OrientedGraph&) {});
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
}

TEST(Enumerate, OrientMapsBitsToArcDirections) {
  const EdgeList edges = {{0, 1}, {1, 2}};
  const OrientedGraph g0 = orient(3, edges, 0);
  EXPECT_EQ(g0.sign(0, 1), 1);
  EXPECT_EQ(g0.sign(1, 2), 1);
  const OrientedGraph g1 = orient(3, edges, 1);
  EXPECT_EQ(g1.sign(1, 0), 1);
  EXPECT_EQ(g1.sign(1, 2), 1);
  std::vector<std::string> seen;
  for_each_orientation(3, edges, [&](const OrientedGraph& g, std::uint64_t m) {
    EXPECT_TRUE(g == orient(3, edges, m));
    seen.push_back(write_sgr(g));
  });
  EXPECT_EQ(seen.size(), 4u);
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(std::unique(seen.begin(), seen.end()), seen.end());
}

TEST(Sampler, DeterministicAndBounded) {
  Sampler a(12345), b(12345), c(54321);
  std::vector<std::uint64_t> xs, ys, zs;
  for (int i = 0; i < 64; ++i) {
    xs.push_back(a.next(1000));
    ys.push_back(b.next(1000));
    zs.push_back(c.next(1000));
  }
  EXPECT_EQ(xs, ys);
  EXPECT_NE(xs, zs);
  for (std::uint64_t x : xs) EXPECT_LT(x, 1000u);

  Sampler s1(9), s2(9);
  for (int i = 0; i < 10; ++i)
    EXPECT_TRUE(random_oriented(5, s1) == random_oriented(5, s2));
  Sampler t1(9), t2(9);
  EXPECT_TRUE(random_tree(6, t1) == random_tree(6, t2));
  Sampler u1(11);
  const OrientedGraph g = random_connected_oriented(4, u1);
  EXPECT_TRUE(is_connected(g));
}

// ---------------------------------------------------------------------------
// Shrinking.
// ---------------------------------------------------------------------------

TEST(Shrink, StripsIrrelevantVerticesFromLiteralDisagreements) {
  // Cyclically oriented four-cycle plus an isolated vertex: the two rank
  // prediction routes disagree on it, and shrinking peels the isolated
  // vertex off, leaving the bare cycle.
  const auto padded =
      build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  ASSERT_TRUE(literal_route_disagrees(padded));
  const OrientedGraph small = shrink(padded, literal_route_disagrees);
  EXPECT_EQ(small.n(), 4);
  EXPECT_TRUE(small == build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
}

TEST(Shrink, MinimalFailuresComeBackUnchanged) {
  const auto p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto fails = [](const OrientedGraph& g) { return skew_rank(g) >= 4; };
  ASSERT_TRUE(fails(p4));
  EXPECT_TRUE(shrink(p4, fails) == p4);

  const auto edge = build_graph(2, {{0, 1}});
  const auto fails2 = [](const OrientedGraph& g) { return skew_rank(g) >= 2; };
  EXPECT_TRUE(shrink(edge, fails2) == edge);
}

TEST(Shrink, PredicateExceptionsCountAsNotFailing) {
  // A predicate that only accepts connected unicyclic inputs and throws on
  // everything else: shrinking a cycle with a tail still reaches the core.
  const auto g = build_graph(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}});
  const auto fails = [](const OrientedGraph& h) {
    return unique_cycle(h).sign == CycleSign::Positive;
  };
  const OrientedGraph small = shrink(g, fails);
  EXPECT_EQ(small.n(), 4);
  EXPECT_EQ(unique_cycle(small).sign, CycleSign::Positive);
}

// ---------------------------------------------------------------------------
// The registry.
// ---------------------------------------------------------------------------

TEST(Verify, RegistryListsTheExpectedIds) {
  const std::vector<std::string> want = {
      "lemma2.1",    "lemma2.2",
      "lemma2.3",    "lemma2.4",
      "lemma2.5",    "lemma2.7",
      "lemma2.8",    "lemma2.9",
      "theorem3.1",  "lemma3.2",
      "theorem3.3",  "theorem3.4",
      "theorem3.5",  "theorem3.6",
      "lemma4.1",    "lemma4.1-coefficients",
      "theorem4.2",  "theorem4.2-coefficient",
      "theorem4.2-literal",          "theorem4.3",
      "lemma4.4",    "theorem4.5",
      "theorem4.6",  "theorem5.1",
      "theorem5.1-confluence",       "theorem5.2",
  };
  EXPECT_EQ(verify_ids(), want);
  for (const TheoremCheck& check : verify_registry())
    EXPECT_FALSE(check.summary.empty());
}

TEST(Verify, UnknownIdIsRejected) {
  try {
    verify("theorem9.9", {});
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownTheorem);
  }
}

TEST(Verify, PathRuleCountsItsInstances) {
  const VerifyReport report = verify("lemma2.3", {});
  EXPECT_TRUE(report.pass());
  EXPECT_FALSE(report.documented_discrepancy);
  // Paths on 1..10 vertices with every orientation: 2^0 + ... + 2^9.
  EXPECT_EQ(report.instances_checked, 1023u);
  EXPECT_EQ(report.theorem_id, "lemma2.3");
  EXPECT_GE(report.elapsed_seconds, 0.0);
}

TEST(Verify, SameSeedReproducesTheSameReport) {
  EnumFilter filter;
  filter.max_n = 5;
  filter.sample = 40;
  filter.seed = 777;
  const VerifyReport a = verify("lemma2.2", filter);
  const VerifyReport b = verify("lemma2.2", filter);
  nlohmann::json ja = a, jb = b;
  ja.erase("elapsed_seconds");
  jb.erase("elapsed_seconds");
  EXPECT_EQ(ja, jb);
  EXPECT_TRUE(a.pass());
  EXPECT_EQ(a.instances_checked, b.instances_checked);
}

TEST(Verify, LiteralRuleReportsItsDocumentedViolations) {
  EnumFilter filter;
  filter.max_n = 4;
  const VerifyReport report = verify("theorem4.2-literal", filter);
  EXPECT_FALSE(report.pass());
  EXPECT_TRUE(report.documented_discrepancy);
  // Three labeled four-cycles, each with its eight cyclic orientations.
  EXPECT_EQ(report.violations.size(), 24u);
  for (const Violation& v : report.violations) {
    const OrientedGraph g = read_sgr(v.graph_sgr);
    EXPECT_EQ(g.n(), 4);
    EXPECT_EQ(unique_cycle(g).sign, CycleSign::Positive);
    EXPECT_EQ(skew_rank(g), 2);
    const OrientedGraph s = read_sgr(v.shrunk_sgr);
    EXPECT_EQ(s.n(), 4);  // already minimal
  }
}

TEST(Verify, FilterNarrowsTheSweep) {
  EnumFilter narrow;
  narrow.min_n = 3;
  narrow.max_n = 3;
  const VerifyReport three = verify("lemma2.3", narrow);
  EXPECT_EQ(three.instances_checked, 4u);  // the four oriented 3-paths
  EXPECT_TRUE(three.pass());
}

// ---------------------------------------------------------------------------
// JSON reports.
// ---------------------------------------------------------------------------

TEST(ReportJson, RankReportFields) {
  const auto p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const nlohmann::json j = rank_report_json(p4);
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["m"], 3);
  EXPECT_EQ(j["rank"], 4);
  EXPECT_EQ(j["beta"], 2);
  EXPECT_EQ(j["girth"], "acyclic");
  const auto c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(rank_report_json(c4)["girth"], 4);
  EXPECT_EQ(rank_report_json(c4)["rank"], 2);
}

TEST(ReportJson, CharPolyReportMatches) {
  const auto c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const nlohmann::json j = charpoly_report_json(c4);
  EXPECT_TRUE(j["match"].get<bool>());
  EXPECT_EQ(j["exact"], j["combinatorial"]);
  EXPECT_EQ(j["exact"],
            (std::vector<std::string>{"1", "0", "4", "0", "0"}));
  EXPECT_EQ(j["rank_from_coefficients"], 2);
}

TEST(ReportJson, ClassificationEnvelopeIsUniform) {
  const auto c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  for (const nlohmann::json& j :
       {rank2_json(c4), unicyclic_rank_json(c4), decomposition_json(c4),
        class_bound_json(c4), nonsingular_json(c4)}) {
    EXPECT_TRUE(j.contains("predicate"));
    EXPECT_TRUE(j.contains("value"));
    EXPECT_TRUE(j.contains("witness"));
    EXPECT_TRUE(j.contains("actual_rank"));
    EXPECT_EQ(j["actual_rank"], 2);
  }
  EXPECT_TRUE(rank2_json(c4)["value"].get<bool>());
  EXPECT_FALSE(nonsingular_json(c4)["value"].get<bool>());
}

TEST(ReportJson, ReductionTraceRoundTrips) {
  const auto g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const ReductionTrace trace = delta_reduce(g);
  const nlohmann::json j = trace;
  EXPECT_EQ(j["accumulated"], 4);
  ASSERT_EQ(j["steps"].size(), 2u);
  EXPECT_EQ(j["steps"][0]["kind"], "delta");
  const OrientedGraph terminal =
      read_sgr(j["terminal_sgr"].get<std::string>());
  EXPECT_EQ(terminal.n(), 0);
}

TEST(ReportJson, VerifyReportSerializesCompletely) {
  EnumFilter filter;
  filter.min_n = 3;
  filter.max_n = 3;
  const nlohmann::json j = verify("lemma2.3", filter);
  EXPECT_EQ(j["theorem_id"], "lemma2.3");
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["documented_discrepancy"], false);
  EXPECT_EQ(j["instances_checked"], 4);
  EXPECT_EQ(j["filter"]["min_n"], 3);
  EXPECT_EQ(j["filter"]["connectivity"], "connected");
  EXPECT_EQ(j["filter"]["class"], "any");
  EXPECT_TRUE(j["violations"].is_array());
  EXPECT_TRUE(j["violations"].empty());
}

}  // namespace
}  // namespace skewrank
