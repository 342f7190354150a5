// Exact linear algebra over the skew-adjacency matrix, cross-checked
// against the naive oracles (cofactor determinants, polynomial cofactor
// expansion, rational Gaussian elimination).

#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "oracles.hpp"
#include "skewrank/enumerate.hpp"
#include "skewrank/exact_linalg.hpp"

namespace skewrank {
namespace {

OrientedGraph path_graph(int n) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
  return build_graph(n, arcs);
}

TEST(SkewMatrix, ValidationRejectsBadInput) {
  EXPECT_THROW(SkewMatrix(2, {0, 1, 1}), Error);            // wrong count
  EXPECT_THROW(SkewMatrix(2, {0, 2, -2, 0}), Error);        // entry range
  EXPECT_THROW(SkewMatrix(2, {0, 1, 1, 0}), Error);         // not skew
  EXPECT_THROW(SkewMatrix(1, {1}), Error);                  // diagonal
  try {
    SkewMatrix(2, {0, 1, 1, 0});
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidParameter);
  }
}

TEST(SkewMatrix, AdjacencyEntriesFollowArcs) {
  const auto g = build_graph(3, {{0, 1}, {2, 1}});
  const SkewMatrix s = skew_adjacency(g);
  EXPECT_EQ(s.n(), 3);
  EXPECT_EQ(s.entry(0, 1), 1);
  EXPECT_EQ(s.entry(1, 0), -1);
  EXPECT_EQ(s.entry(2, 1), 1);
  EXPECT_EQ(s.entry(1, 2), -1);
  EXPECT_EQ(s.entry(0, 2), 0);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(s.entry(i, i), 0);
}

// Rank and determinant against independent oracles, plus the structural
// invariants of skew-symmetric integer matrices: even rank, determinant
// zero for odd order and a perfect square (the Pfaffian squared) for even
// order.
TEST(ExactLinalg, RankAndDeterminantMatchOraclesExhaustively) {
  for (int n = 0; n <= 4; ++n) {
    for_each_oriented(n, [&](const OrientedGraph& g) {
      const SkewMatrix s = skew_adjacency(g);
      const int r = rank_exact(s);
      EXPECT_EQ(r, oracles::rank_gauss(g));
      EXPECT_EQ(r, skew_rank(g));
      EXPECT_EQ(r % 2, 0);
      const BigInt det = determinant_exact(s);
      EXPECT_EQ(det, oracles::det_cofactor(oracles::matrix_of(g)));
      if (n % 2 == 1) {
        EXPECT_EQ(det, 0);
      } else {
        EXPECT_GE(det, 0);
        const BigInt root = boost::multiprecision::sqrt(det);
        EXPECT_EQ(root * root, det);
      }
    });
  }
}

TEST(ExactLinalg, CharPolyMatchesCofactorExpansionExhaustively) {
  for (int n = 0; n <= 4; ++n) {
    for_each_oriented(n, [&](const OrientedGraph& g) {
      const SkewMatrix s = skew_adjacency(g);
      const CharPoly p = char_poly_exact(s);
      ASSERT_EQ(static_cast<int>(p.a.size()), n + 1);
      EXPECT_EQ(p.a[0], 1);
      // Oracle returns det(xI - S) by ascending powers of x; the library
      // stores a[i] with phi(x) = sum (-1)^i a[i] x^(n-i).
      const oracles::Poly c = oracles::charpoly_cofactor(g);
      for (int i = 0; i <= n; ++i) {
        const BigInt want = (i % 2 == 0) ? c[n - i] : BigInt(0) - c[n - i];
        EXPECT_EQ(p.a[i], want) << "coefficient " << i;
        if (i % 2 == 1) EXPECT_EQ(p.a[i], 0);
      }
      EXPECT_EQ(p.rank_from_coefficients(), rank_exact(s));
      // phi(1) = det(I - S), checked through the cofactor oracle.
      auto m = oracles::matrix_of(g);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          m[i][j] = (i == j ? BigInt(1) : BigInt(0)) - m[i][j];
      EXPECT_EQ(p.eval(1), oracles::det_cofactor(m));
    });
  }
}

TEST(ExactLinalg, CharPolyMatchesCofactorOnSampledLargerGraphs) {
  Sampler sampler(20240817);
  for (int n = 5; n <= 6; ++n) {
    for (int t = 0; t < 150; ++t) {
      const OrientedGraph g = random_oriented(n, sampler);
      const CharPoly p = char_poly_exact(skew_adjacency(g));
      const oracles::Poly c = oracles::charpoly_cofactor(g);
      for (int i = 0; i <= n; ++i) {
        const BigInt want = (i % 2 == 0) ? c[n - i] : BigInt(0) - c[n - i];
        ASSERT_EQ(p.a[i], want) << "n=" << n << " trial=" << t;
      }
      ASSERT_EQ(p.rank_from_coefficients(), oracles::rank_gauss(g));
    }
  }
}

TEST(ExactLinalg, FrozenSmallValues) {
  // Single edge: phi(x) = x^2 + 1.
  {
    const CharPoly p = char_poly_exact(skew_adjacency(path_graph(2)));
    EXPECT_EQ(p.a, (std::vector<BigInt>{1, 0, 1}));
    EXPECT_EQ(p.rank_from_coefficients(), 2);
  }
  // Path on three vertices: phi(x) = x^3 + 2x.
  {
    const CharPoly p = char_poly_exact(skew_adjacency(path_graph(3)));
    EXPECT_EQ(p.a, (std::vector<BigInt>{1, 0, 2, 0}));
    EXPECT_EQ(p.rank_from_coefficients(), 2);
  }
  // Four-cycle, cyclically oriented (0->1->2->3->0): singular, rank 2.
  {
    const auto g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const SkewMatrix s = skew_adjacency(g);
    EXPECT_EQ(determinant_exact(s), 0);
    EXPECT_EQ(rank_exact(s), 2);
    const CharPoly p = char_poly_exact(s);
    EXPECT_EQ(p.a, (std::vector<BigInt>{1, 0, 4, 0, 0}));
  }
  // Four-cycle with the closing edge reversed (0->1->2->3, 0->3):
  // nonsingular, determinant 4, phi(x) = x^4 + 4x^2 + 4.
  {
    const auto g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const SkewMatrix s = skew_adjacency(g);
    EXPECT_EQ(determinant_exact(s), 4);
    EXPECT_EQ(rank_exact(s), 4);
    const CharPoly p = char_poly_exact(s);
    EXPECT_EQ(p.a, (std::vector<BigInt>{1, 0, 4, 0, 4}));
  }
  // Empty and one-vertex matrices.
  EXPECT_EQ(char_poly_exact(SkewMatrix(0, {})).a, (std::vector<BigInt>{1}));
  EXPECT_EQ(rank_exact(SkewMatrix(0, {})), 0);
  EXPECT_EQ(char_poly_exact(skew_adjacency(build_graph(1, {}))).a,
            (std::vector<BigInt>{1, 0}));
}

// Orders beyond the int64 fast-path window must fall back to arbitrary
// precision and still agree with rational elimination.
TEST(ExactLinalg, LargeOrdersUseArbitraryPrecision) {
  ASSERT_EQ(detail::kInt64SafeOrder, 24);
  EXPECT_EQ(skew_rank(path_graph(24)), 24);
  EXPECT_EQ(skew_rank(path_graph(25)), 24);
  EXPECT_EQ(skew_rank(path_graph(26)), 26);

  Sampler sampler(7);
  for (int t = 0; t < 3; ++t) {
    const OrientedGraph g = random_oriented(26, sampler);
    const SkewMatrix s = skew_adjacency(g);
    const int r = rank_exact(s);
    EXPECT_EQ(r, oracles::rank_gauss(g));
    EXPECT_EQ(r % 2, 0);
    const BigInt det = determinant_exact(s);
    const BigInt root = boost::multiprecision::sqrt(det);
    EXPECT_EQ(root * root, det);  // dense case: determinant stays a square
  }
}

}  // namespace
}  // namespace skewrank
