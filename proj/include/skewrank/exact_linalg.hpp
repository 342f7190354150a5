#ifndef SKEWRANK_EXACT_LINALG_HPP
#define SKEWRANK_EXACT_LINALG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skewrank/errors.hpp"
#include "skewrank/oriented_graph.hpp"

namespace skewrank {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Skew-adjacency matrix: entries in {-1,0,+1}, zero diagonal, S^T = -S.
// Entry (i,j) is +1 exactly when the graph has arc i -> j.
class SkewMatrix {
 public:
  SkewMatrix() = default;

  SkewMatrix(int n, std::vector<std::int8_t> entries) : n_(n), e_(std::move(entries)) {
    if (n < 0 || e_.size() != static_cast<std::size_t>(n) * n)
      fail(ErrorKind::InvalidParameter, "SkewMatrix: bad entry count");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int v = e_[idx(i, j)];
        if (v < -1 || v > 1)
          fail(ErrorKind::InvalidParameter,
               "SkewMatrix: entries must lie in {-1,0,+1}");
        if (v != -e_[idx(j, i)])
          fail(ErrorKind::InvalidParameter, "SkewMatrix: not skew-symmetric");
      }
  }

  int n() const { return n_; }
  int entry(int i, int j) const { return e_[idx(i, j)]; }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_ = 0;
  std::vector<std::int8_t> e_;
};

inline SkewMatrix skew_adjacency(const OrientedGraph& g) {
  const int n = g.n();
  std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n, 0);
  for (const Arc& a : g.arcs()) {
    e[static_cast<std::size_t>(a.tail) * n + a.head] = 1;
    e[static_cast<std::size_t>(a.head) * n + a.tail] = -1;
  }
  return SkewMatrix(n, std::move(e));
}

namespace detail {

template <class I>
struct Elimination {
  int rank = 0;
  I det = 0;
};

// Fraction-free (one-step division) elimination with full pivoting on a
// dense row-major copy. After step k every remaining entry is an exact
// (k+1)x(k+1) minor of the permuted input and the division by the previous
// pivot is exact, so the whole computation stays in the integers.
template <class I>
Elimination<I> fraction_free_eliminate(std::vector<I>& a, int n) {
  I prev = 1;
  int sign = 1;
  int rank = 0;
  for (int k = 0; k < n; ++k) {
    int pi = -1, pj = -1;
    for (int i = k; i < n && pi < 0; ++i)
      for (int j = k; j < n; ++j)
        if (a[static_cast<std::size_t>(i) * n + j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != k) {
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<std::size_t>(pi) * n + j],
                  a[static_cast<std::size_t>(k) * n + j]);
      sign = -sign;
    }
    if (pj != k) {
      for (int i = 0; i < n; ++i)
        std::swap(a[static_cast<std::size_t>(i) * n + pj],
                  a[static_cast<std::size_t>(i) * n + k]);
      sign = -sign;
    }
    const I pivot = a[static_cast<std::size_t>(k) * n + k];
    for (int i = k + 1; i < n; ++i) {
      const I aik = a[static_cast<std::size_t>(i) * n + k];
      for (int j = k + 1; j < n; ++j) {
        I& aij = a[static_cast<std::size_t>(i) * n + j];
        aij = (pivot * aij - aik * a[static_cast<std::size_t>(k) * n + j]) / prev;
      }
    }
    prev = pivot;
    ++rank;
  }
  Elimination<I> out;
  out.rank = rank;
  if (rank == n) out.det = sign > 0 ? prev : I(0) - prev;
  return out;
}

// Entries in {-1,0,+1}: Hadamard bounds every k x k minor by k^(k/2), which
// fits int64 through n = 24; larger matrices take the big-integer path.
inline constexpr int kInt64SafeOrder = 24;

template <class I>
std::vector<I> to_entries(const SkewMatrix& m) {
  const int n = m.n();
  std::vector<I> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i) * n + j] = m.entry(i, j);
  return a;
}

// Exact determinant of a general big-integer matrix (consumes its argument).
inline BigInt integer_determinant(std::vector<BigInt> a, int n) {
  return fraction_free_eliminate(a, n).det;
}

}  // namespace detail

// Rank over the rationals. Computed on the matrix as given; no
// graph-level shortcuts, so it can serve as the oracle for everything else.
inline int rank_exact(const SkewMatrix& m) {
  const int n = m.n();
  if (n <= detail::kInt64SafeOrder) {
    auto a = detail::to_entries<std::int64_t>(m);
    return detail::fraction_free_eliminate(a, n).rank;
  }
  auto a = detail::to_entries<BigInt>(m);
  return detail::fraction_free_eliminate(a, n).rank;
}

inline BigInt determinant_exact(const SkewMatrix& m) {
  const int n = m.n();
  if (n <= detail::kInt64SafeOrder) {
    auto a = detail::to_entries<std::int64_t>(m);
    return detail::fraction_free_eliminate(a, n).det;
  }
  auto a = detail::to_entries<BigInt>(m);
  return detail::fraction_free_eliminate(a, n).det;
}

// Characteristic polynomial phi(lambda) = det(lambda I - S) in the shape
//   phi(lambda) = sum_{i=0..n} (-1)^i a[i] lambda^(n-i).
// Invariants: a[0] = 1 and a[i] = 0 for every odd i (skew symmetry).
// The largest i with a[i] != 0 equals the rank: S is a normal matrix, so
// the multiplicity of the eigenvalue 0 is n - rank.
struct CharPoly {
  std::vector<BigInt> a;

  int n() const { return static_cast<int>(a.size()) - 1; }

  int rank_from_coefficients() const {
    for (int i = n(); i >= 0; --i)
      if (a[i] != 0) return i;
    return 0;
  }

  // phi(lambda), exact.
  BigInt eval(const BigInt& lambda) const {
    BigInt acc = 0;
    for (int i = 0; i <= n(); ++i) {
      acc *= lambda;
      acc += (i % 2 == 0) ? a[i] : BigInt(0) - a[i];
    }
    return acc;
  }

  friend bool operator==(const CharPoly& x, const CharPoly& y) {
    return x.a == y.a;
  }
};

// Faddeev-LeVerrier over exact rationals (denominators divide n!), followed
// by a three-point self-check against independently computed determinants.
inline CharPoly char_poly_exact(const SkewMatrix& m) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const int n = m.n();
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  std::vector<BigRat> mat(nn), acc(nn, BigRat(0)), prod(nn);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mat[static_cast<std::size_t>(i) * n + j] = m.entry(i, j);
  for (int i = 0; i < n; ++i) acc[static_cast<std::size_t>(i) * n + i] = 1;

  std::vector<BigRat> c(n + 1);
  c[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        BigRat sum = 0;
        for (int t = 0; t < n; ++t)
          sum += mat[static_cast<std::size_t>(i) * n + t] *
                 acc[static_cast<std::size_t>(t) * n + j];
        prod[static_cast<std::size_t>(i) * n + j] = sum;
      }
    BigRat trace = 0;
    for (int i = 0; i < n; ++i)
      trace += prod[static_cast<std::size_t>(i) * n + i];
    c[k] = -trace / k;
    acc = prod;
    for (int i = 0; i < n; ++i)
      acc[static_cast<std::size_t>(i) * n + i] += c[k];
  }

  CharPoly out;
  out.a.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    // det(lambda I - S) = sum c[i] lambda^(n-i), so a[i] = (-1)^i c[i].
    const BigRat ai = (i % 2 == 0) ? c[i] : -c[i];
    if (denominator(ai) != 1)
      fail(ErrorKind::Internal, "char_poly_exact: non-integer coefficient");
    out.a[i] = numerator(ai);
  }
  if (out.a[0] != 1)
    fail(ErrorKind::Internal, "char_poly_exact: leading coefficient != 1");
  for (int i = 1; i <= n; i += 2)
    if (out.a[i] != 0)
      fail(ErrorKind::Internal, "char_poly_exact: odd coefficient != 0");

  for (int t = 0; t <= 2; ++t) {
    std::vector<BigInt> a(nn);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        a[static_cast<std::size_t>(i) * n + j] =
            (i == j ? BigInt(t) : BigInt(0)) - m.entry(i, j);
    if (detail::integer_determinant(std::move(a), n) != out.eval(t))
      fail(ErrorKind::Internal,
           "char_poly_exact: self-check failed at lambda=" + std::to_string(t));
  }
  return out;
}

// Skew-rank of an oriented graph.
inline int skew_rank(const OrientedGraph& g) {
  return rank_exact(skew_adjacency(g));
}

}  // namespace skewrank

#endif  // SKEWRANK_EXACT_LINALG_HPP
