#ifndef SKEWRANK_MATCHING_HPP
#define SKEWRANK_MATCHING_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "skewrank/errors.hpp"
#include "skewrank/oriented_graph.hpp"

namespace skewrank {

// Matching sizes and counts on the underlying graph, by exhaustive
// recursion over the lowest matchable vertex with memoization on the set of
// remaining vertices. Exact for n <= 64 (vertex-set bitmasks).

namespace detail {

struct MatchingContext {
  int n = 0;
  std::vector<std::uint64_t> nbr;

  explicit MatchingContext(const OrientedGraph& g) : n(g.n()), nbr(g.n(), 0) {
    if (g.n() > 64)
      fail(ErrorKind::BoundExceeded, "matching: supported up to n = 64");
    for (const Arc& a : g.arcs()) {
      nbr[a.tail] |= std::uint64_t{1} << a.head;
      nbr[a.head] |= std::uint64_t{1} << a.tail;
    }
  }

  // Lowest vertex in mask that still has a neighbor in mask, or -1.
  int first_matchable(std::uint64_t mask) const {
    std::uint64_t rest = mask;
    while (rest) {
      const int v = __builtin_ctzll(rest);
      if (nbr[v] & mask) return v;
      rest &= rest - 1;
    }
    return -1;
  }
};

inline int beta_rec(const MatchingContext& ctx, std::uint64_t mask,
                    std::unordered_map<std::uint64_t, int>& memo) {
  const int v = ctx.first_matchable(mask);
  if (v < 0) return 0;
  const auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  const std::uint64_t without_v = mask & ~(std::uint64_t{1} << v);
  int best = beta_rec(ctx, without_v, memo);  // leave v unmatched
  std::uint64_t cand = ctx.nbr[v] & mask;
  while (cand) {
    const int u = __builtin_ctzll(cand);
    cand &= cand - 1;
    const int with_uv =
        1 + beta_rec(ctx, without_v & ~(std::uint64_t{1} << u), memo);
    if (with_uv > best) best = with_uv;
  }
  memo.emplace(mask, best);
  return best;
}

// counts[i] = number of i-edge matchings inside mask.
inline const std::vector<std::uint64_t>& counts_rec(
    const MatchingContext& ctx, std::uint64_t mask,
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>>& memo) {
  const auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  const int v = ctx.first_matchable(mask);
  if (v < 0)
    return memo.emplace(mask, std::vector<std::uint64_t>{1}).first->second;
  const std::uint64_t without_v = mask & ~(std::uint64_t{1} << v);
  std::vector<std::uint64_t> acc = counts_rec(ctx, without_v, memo);
  std::uint64_t cand = ctx.nbr[v] & mask;
  while (cand) {
    const int u = __builtin_ctzll(cand);
    cand &= cand - 1;
    const std::vector<std::uint64_t>& sub =
        counts_rec(ctx, without_v & ~(std::uint64_t{1} << u), memo);
    if (acc.size() < sub.size() + 1) acc.resize(sub.size() + 1, 0);
    for (std::size_t i = 0; i < sub.size(); ++i) acc[i + 1] += sub[i];
  }
  return memo.emplace(mask, std::move(acc)).first->second;
}

inline std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace detail

struct MatchingInfo {
  int beta = 0;                        // matching number
  std::vector<std::uint64_t> counts;   // counts[i] = number of i-matchings
};

inline int matching_number(const OrientedGraph& g) {
  detail::MatchingContext ctx(g);
  std::unordered_map<std::uint64_t, int> memo;
  return detail::beta_rec(ctx, detail::full_mask(g.n()), memo);
}

inline MatchingInfo matching_info(const OrientedGraph& g) {
  detail::MatchingContext ctx(g);
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> memo;
  MatchingInfo out;
  out.counts = detail::counts_rec(ctx, detail::full_mask(g.n()), memo);
  out.beta = static_cast<int>(out.counts.size()) - 1;
  return out;
}

// Number of matchings with exactly `edges` edges (0 when edges > beta).
inline std::uint64_t count_matchings(const OrientedGraph& g, int edges) {
  if (edges < 0)
    fail(ErrorKind::InvalidParameter, "count_matchings: negative size");
  const MatchingInfo info = matching_info(g);
  if (edges >= static_cast<int>(info.counts.size())) return 0;
  return info.counts[edges];
}

// v is saturated when every maximum matching covers it, i.e. deleting v
// drops the matching number.
inline bool is_saturated(const OrientedGraph& g, Vertex v) {
  if (v < 0 || v >= g.n())
    fail(ErrorKind::VertexOutOfRange, "is_saturated: no such vertex");
  detail::MatchingContext ctx(g);
  std::unordered_map<std::uint64_t, int> memo;
  const std::uint64_t all = detail::full_mask(g.n());
  const int full = detail::beta_rec(ctx, all, memo);
  const int without =
      detail::beta_rec(ctx, all & ~(std::uint64_t{1} << v), memo);
  return without == full - 1;
}

inline bool has_perfect_matching(const OrientedGraph& g) {
  return g.n() % 2 == 0 && matching_number(g) == g.n() / 2;
}

}  // namespace skewrank

#endif  // SKEWRANK_MATCHING_HPP
