// Basic subgraph enumeration (disjoint unions of single edges and even
// cycles) and the combinatorial assembly of characteristic-polynomial
// coefficients from them, cross-checked against subset enumeration and the
// exact polynomial.

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "skewrank/basic_subgraphs.hpp"
#include "skewrank/enumerate.hpp"
#include "skewrank/exact_linalg.hpp"

namespace skewrank {
namespace {

TEST(BasicSubgraphs, CountAndSignedSumMatchSubsetOracle) {
  for (int n = 0; n <= 4; ++n) {
    for_each_oriented(n, [&](const OrientedGraph& g) {
      for (int span = 0; span <= n; ++span) {
        const oracles::BasicOracle want = oracles::basic_oracle(g, span);
        EXPECT_EQ(basic_subgraphs(g, span).size(), want.count);
        if (span % 2 == 0)
          EXPECT_EQ(coefficient_comb(g, span), want.signed_sum);
        else
          EXPECT_EQ(coefficient_comb(g, span), 0);
      }
    });
  }
}

TEST(BasicSubgraphs, CoefficientsMatchCharPolyExhaustively) {
  for (int n = 0; n <= 4; ++n) {
    for_each_oriented(n, [&](const OrientedGraph& g) {
      const CharPoly p = char_poly_exact(skew_adjacency(g));
      for (int i = 0; i <= n; ++i)
        EXPECT_EQ(coefficient_comb(g, i), p.a[i]) << "i=" << i;
    });
  }
}

TEST(BasicSubgraphs, CoefficientsMatchCharPolyOnSampledGraphs) {
  Sampler sampler(5150);
  for (int n = 5; n <= 6; ++n) {
    for (int t = 0; t < 100; ++t) {
      const OrientedGraph g = random_oriented(n, sampler);
      const CharPoly p = char_poly_exact(skew_adjacency(g));
      for (int i = 0; i <= n; ++i)
        ASSERT_EQ(coefficient_comb(g, i), p.a[i])
            << "n=" << n << " trial=" << t << " i=" << i;
    }
  }
}

TEST(BasicSubgraphs, FourCycleDecomposition) {
  // Spanning structures of a four-cycle: two perfect matchings plus the
  // cycle itself. With the cycle oriented 0->1->2->3->0 (positive) the
  // cycle contributes -2 and a_4 = 1 + 1 - 2 = 0; with the closing edge
  // reversed (negative) it contributes +2 and a_4 = 4.
  const auto even = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto structures = basic_subgraphs(even, 4);
  ASSERT_EQ(structures.size(), 3u);
  int with_cycle = 0, edges_only = 0;
  for (const BasicSubgraph& b : structures) {
    if (b.cycle_count() == 1) {
      ++with_cycle;
      EXPECT_TRUE(b.edges.empty());
      EXPECT_EQ(b.cycles[0].length, 4);
      EXPECT_EQ(b.cycles[0].sign, CycleSign::Positive);
      EXPECT_EQ(b.positive_cycles(), 1);
    } else {
      ++edges_only;
      EXPECT_EQ(b.edges.size(), 2u);
    }
  }
  EXPECT_EQ(with_cycle, 1);
  EXPECT_EQ(edges_only, 2);
  EXPECT_EQ(coefficient_comb(even, 4), 0);

  const auto odd = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_EQ(coefficient_comb(odd, 4), 4);
  const auto odd_structures = basic_subgraphs(odd, 4);
  ASSERT_EQ(odd_structures.size(), 3u);
  for (const BasicSubgraph& b : odd_structures)
    if (b.cycle_count() == 1) EXPECT_EQ(b.cycles[0].sign, CycleSign::Negative);

  // Empty span: exactly the empty structure, a_0 = 1.
  EXPECT_EQ(basic_subgraphs(even, 0).size(), 1u);
  EXPECT_EQ(coefficient_comb(even, 0), 1);
}

// For connected unicyclic graphs the two highest nonzero-eligible
// coefficients split into a matchings part and a cycle part.
TEST(UnicyclicCoefficients, SplitMatchesDirectAssemblyExhaustively) {
  for (int n = 3; n <= 5; ++n) {
    for_each_unicyclic(n, [&](const EdgeList& edges) {
      for_each_orientation(n, edges,
                           [&](const OrientedGraph& g, std::uint64_t) {
        const UnicyclicTopCoefficients tc = unicyclic_max_coeff(g);
        EXPECT_EQ(tc.beta, matching_number(g));
        EXPECT_EQ(tc.top, coefficient_comb(g, 2 * tc.beta));
        EXPECT_EQ(tc.next, coefficient_comb(g, 2 * tc.beta - 2));
        EXPECT_EQ(tc.top_matchings, BigInt(count_matchings(g, tc.beta)));
        EXPECT_EQ(tc.next_matchings,
                  BigInt(count_matchings(g, tc.beta - 1)));
        EXPECT_EQ(tc.top, tc.top_matchings + tc.top_cycle);
        EXPECT_EQ(tc.next, tc.next_matchings + tc.next_cycle);
        EXPECT_EQ(tc.cycle_sign, unique_cycle(g).sign);
        if (unique_cycle(g).length % 2 == 1) {
          EXPECT_EQ(tc.top_cycle, 0);
          EXPECT_EQ(tc.next_cycle, 0);
        }
      });
    });
  }
}

TEST(UnicyclicCoefficients, FourCycleFrozenValues) {
  const auto even = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  UnicyclicTopCoefficients tc = unicyclic_max_coeff(even);
  EXPECT_EQ(tc.beta, 2);
  EXPECT_EQ(tc.cycle_sign, CycleSign::Positive);
  EXPECT_EQ(tc.top_matchings, 2);
  EXPECT_EQ(tc.top_cycle, -2);
  EXPECT_EQ(tc.top, 0);
  EXPECT_EQ(tc.next_matchings, 4);
  EXPECT_EQ(tc.next_cycle, 0);
  EXPECT_EQ(tc.next, 4);

  const auto odd = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  tc = unicyclic_max_coeff(odd);
  EXPECT_EQ(tc.cycle_sign, CycleSign::Negative);
  EXPECT_EQ(tc.top, 4);
  EXPECT_EQ(tc.next, 4);
}

TEST(BasicSubgraphs, SpanValidation) {
  const auto g = build_graph(2, {{0, 1}});
  EXPECT_THROW(basic_subgraphs(g, -1), Error);
  EXPECT_THROW(basic_subgraphs(g, 3), Error);
  EXPECT_THROW(coefficient_comb(g, -1), Error);
  EXPECT_THROW(coefficient_comb(g, 3), Error);
  try {
    coefficient_comb(g, 5);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidParameter);
  }
}

}  // namespace
}  // namespace skewrank
