#ifndef SKEWRANK_BASIC_SUBGRAPHS_HPP
#define SKEWRANK_BASIC_SUBGRAPHS_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "skewrank/errors.hpp"
#include "skewrank/exact_linalg.hpp"
#include "skewrank/matching.hpp"
#include "skewrank/oriented_graph.hpp"

namespace skewrank {

// A basic subgraph spans a vertex subset with components that are single
// edges or even cycles of the host graph. Its weight in the coefficient
// expansion is (-1)^(positive cycles) * 2^(cycles).
struct BasicSubgraph {
  std::vector<std::pair<Vertex, Vertex>> edges;  // K_2 components, u < v
  std::vector<CycleData> cycles;

  int cycle_count() const { return static_cast<int>(cycles.size()); }
  int positive_cycles() const {
    int c = 0;
    for (const CycleData& cd : cycles)
      if (cd.sign == CycleSign::Positive) ++c;
    return c;
  }
};

namespace detail {

struct BasicEnum {
  const OrientedGraph& g;
  int span;  // required number of covered vertices
  std::vector<bool> covered;
  int covered_count = 0;
  BasicSubgraph current;
  const std::function<void(const BasicSubgraph&)>& visit;

  BasicEnum(const OrientedGraph& graph, int span_,
            const std::function<void(const BasicSubgraph&)>& visit_)
      : g(graph), span(span_), covered(graph.n(), false), visit(visit_) {}

  // Even cycles through v whose other vertices are all > v and uncovered;
  // the canonical direction (second vertex < last) kills the reflection.
  void cycles_at(Vertex v, std::vector<Vertex>& path) {
    const Vertex cur = path.back();
    for (Vertex u = v + 1; u < g.n(); ++u) {
      if (covered[u] || g.sign(cur, u) == 0) continue;
      bool used = false;
      for (Vertex w : path)
        if (w == u) {
          used = true;
          break;
        }
      if (used) continue;
      path.push_back(u);
      if (path.size() >= 4 && path.size() % 2 == 0 &&
          g.has_edge(u, v) && path[1] < u) {
        CycleData cd;
        cd.vertices = path;
        cd.length = static_cast<int>(path.size());
        cd.sign = traversal_sign(g, path);
        for (Vertex w : path) {
          covered[w] = true;
          ++covered_count;
        }
        current.cycles.push_back(std::move(cd));
        descend(v + 1);
        current.cycles.pop_back();
        for (Vertex w : path) {
          covered[w] = false;
          --covered_count;
        }
      }
      cycles_at(v, path);
      path.pop_back();
    }
  }

  void descend(Vertex v) {
    if (covered_count > span) return;
    while (v < g.n() && covered[v]) ++v;
    if (covered_count + (g.n() - v) < span) return;
    if (v == g.n()) {
      if (covered_count == span) visit(current);
      return;
    }
    // v stays out of the subgraph.
    descend(v + 1);
    // v covered by an edge {v, u}.
    covered[v] = true;
    ++covered_count;
    for (Vertex u = v + 1; u < g.n(); ++u) {
      if (covered[u] || g.sign(v, u) == 0) continue;
      covered[u] = true;
      covered_count += 1;
      current.edges.push_back({v, u});
      descend(v + 1);
      current.edges.pop_back();
      covered[u] = false;
      covered_count -= 1;
    }
    covered[v] = false;
    --covered_count;
    // v covered by a cycle with all remaining vertices above v.
    std::vector<Vertex> path = {v};
    cycles_at(v, path);
  }
};

}  // namespace detail

inline void for_each_basic_subgraph(
    const OrientedGraph& g, int span,
    const std::function<void(const BasicSubgraph&)>& visit) {
  if (span < 0 || span > g.n())
    fail(ErrorKind::InvalidParameter, "basic subgraph span out of range");
  detail::BasicEnum e(g, span, visit);
  e.descend(0);
}

inline std::vector<BasicSubgraph> basic_subgraphs(const OrientedGraph& g,
                                                  int span) {
  std::vector<BasicSubgraph> out;
  for_each_basic_subgraph(g, span,
                          [&out](const BasicSubgraph& b) { out.push_back(b); });
  return out;
}

// Coefficient a_i assembled combinatorially:
//   a_i = sum over basic subgraphs H on i vertices of (-1)^p(H) * 2^c(H)
// with c(H) the number of cycles and p(H) the number of positive ones.
// Matches char_poly_exact(skew_adjacency(g)).a[i].
inline BigInt coefficient_comb(const OrientedGraph& g, int i) {
  if (i < 0 || i > g.n())
    fail(ErrorKind::InvalidParameter, "coefficient index out of range");
  if (i % 2 != 0) return 0;  // no basic subgraph spans an odd vertex count
  BigInt acc = 0;
  for_each_basic_subgraph(g, i, [&acc](const BasicSubgraph& b) {
    BigInt term = BigInt(1) << b.cycle_count();
    if (b.positive_cycles() % 2 != 0) term = -term;
    acc += term;
  });
  return acc;
}

// For a connected unicyclic graph, the two top coefficients split into the
// matchings-only part and the part whose subgraphs contain the cycle:
//   a_{2beta}   = m(beta)   + s * 2 * m'(beta - k/2)
//   a_{2beta-2} = m(beta-1) + s * 2 * m'(beta - k/2 - 1)
// where m counts matchings of g, m' matchings of g minus the cycle, k is
// the (even) cycle length and s is -1 for a positive cycle, +1 for a
// negative one; odd cycles contribute nothing.
struct UnicyclicTopCoefficients {
  int beta = 0;
  CycleSign cycle_sign = CycleSign::Undefined;
  BigInt top_matchings = 0, top_cycle = 0, top = 0;     // a_{2beta}
  BigInt next_matchings = 0, next_cycle = 0, next = 0;  // a_{2beta-2}
};

inline UnicyclicTopCoefficients unicyclic_max_coeff(const OrientedGraph& g) {
  const CycleData cycle = unique_cycle(g);  // validates the shape
  UnicyclicTopCoefficients out;
  out.cycle_sign = cycle.sign;
  const MatchingInfo whole = matching_info(g);
  out.beta = whole.beta;
  std::vector<Vertex> rest;
  {
    std::vector<bool> on_cycle(g.n(), false);
    for (Vertex v : cycle.vertices) on_cycle[v] = true;
    for (Vertex v = 0; v < g.n(); ++v)
      if (!on_cycle[v]) rest.push_back(v);
  }
  const MatchingInfo outside = matching_info(induced_subgraph(g, rest));
  auto matchings = [](const MatchingInfo& info, int i) -> BigInt {
    if (i < 0 || i >= static_cast<int>(info.counts.size())) return 0;
    return BigInt(info.counts[i]);
  };
  const int k = cycle.length;
  const BigInt s = cycle.sign == CycleSign::Positive ? -1
                   : cycle.sign == CycleSign::Negative ? 1
                                                       : 0;
  out.top_matchings = matchings(whole, out.beta);
  out.next_matchings = matchings(whole, out.beta - 1);
  if (k % 2 == 0) {
    out.top_cycle = s * 2 * matchings(outside, out.beta - k / 2);
    out.next_cycle = s * 2 * matchings(outside, out.beta - k / 2 - 1);
  }
  out.top = out.top_matchings + out.top_cycle;
  out.next = out.next_matchings + out.next_cycle;
  return out;
}

}  // namespace skewrank

#endif  // SKEWRANK_BASIC_SUBGRAPHS_HPP
