#ifndef SKEWRANK_REDUCTIONS_HPP
#define SKEWRANK_REDUCTIONS_HPP

#include <cstdint>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "skewrank/errors.hpp"
#include "skewrank/matching.hpp"
#include "skewrank/oriented_graph.hpp"

namespace skewrank {

// Rank-preserving reductions. A delta step deletes a pendant vertex
// together with its neighbor and accounts rank 2; deleting one member of a
// twin pair keeps the rank unchanged. Traces record original labels so a
// caller can replay every step against rank_exact.

enum class StepKind { Delta, Twin };

struct ReductionStep {
  StepKind kind = StepKind::Delta;
  std::vector<Vertex> removed;  // original labels: {pendant, neighbor} or {twin}
  int increment = 0;            // rank accounted by this step: 2 or 0

  friend bool operator==(const ReductionStep& a, const ReductionStep& b) {
    return a.kind == b.kind && a.removed == b.removed &&
           a.increment == b.increment;
  }
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  OrientedGraph terminal;
  std::vector<Vertex> terminal_to_original;  // terminal label -> original
  int accumulated = 0;                       // sum of step increments
};

struct DeltaStepResult {
  OrientedGraph graph;
  std::vector<Vertex> to_original;
  int increment = 2;
};

// Delete `pendant` (must have degree 1) and its unique neighbor.
inline DeltaStepResult delta_step(const OrientedGraph& g, Vertex pendant) {
  if (pendant < 0 || pendant >= g.n())
    fail(ErrorKind::VertexOutOfRange, "delta_step: no such vertex");
  if (g.degree(pendant) != 1)
    fail(ErrorKind::NotAPendant, "delta_step: vertex " +
             std::to_string(pendant) + " has degree " +
             std::to_string(g.degree(pendant)));
  const Vertex nb = g.neighbors(pendant)[0];
  DeltaStepResult out;
  for (Vertex v = 0; v < g.n(); ++v)
    if (v != pendant && v != nb) out.to_original.push_back(v);
  out.graph = induced_subgraph(g, out.to_original);
  return out;
}

// Apply delta steps until no pendant remains, always choosing the pendant
// with the smallest original label.
inline ReductionTrace delta_reduce(const OrientedGraph& g) {
  ReductionTrace trace;
  OrientedGraph cur = g;
  std::vector<Vertex> to_original(g.n());
  for (Vertex v = 0; v < g.n(); ++v) to_original[v] = v;
  for (;;) {
    const auto pendants = pendant_vertices(cur);
    if (pendants.empty()) break;
    const auto [p, nb] = pendants.front();
    trace.steps.push_back(
        {StepKind::Delta, {to_original[p], to_original[nb]}, 2});
    trace.accumulated += 2;
    DeltaStepResult step = delta_step(cur, p);
    std::vector<Vertex> next_map;
    next_map.reserve(step.to_original.size());
    for (Vertex v : step.to_original) next_map.push_back(to_original[v]);
    cur = std::move(step.graph);
    to_original = std::move(next_map);
  }
  trace.terminal = std::move(cur);
  trace.terminal_to_original = std::move(to_original);
  return trace;
}

enum class TwinKind { Uniform, Opposite };

struct TwinPair {
  Vertex u = 0;
  Vertex v = 0;  // u < v
  TwinKind kind = TwinKind::Uniform;

  friend bool operator==(const TwinPair& a, const TwinPair& b) {
    return a.u == b.u && a.v == b.v && a.kind == b.kind;
  }
};

// Non-adjacent pairs whose skew-adjacency columns are identical (uniform)
// or exact negations (opposite). Pairs matching neither are not twins.
// Two isolated vertices have equal all-zero columns and count as uniform.
inline std::vector<TwinPair> find_twins(const OrientedGraph& g) {
  std::vector<TwinPair> out;
  const int n = g.n();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      bool same = true, negated = true;
      for (Vertex w = 0; w < n; ++w) {
        if (g.sign(w, u) != g.sign(w, v)) same = false;
        if (g.sign(w, u) != -g.sign(w, v)) negated = false;
        if (!same && !negated) break;
      }
      if (same)
        out.push_back({u, v, TwinKind::Uniform});
      else if (negated)
        out.push_back({u, v, TwinKind::Opposite});
    }
  return out;
}

// Repeatedly delete the smaller member of the lexicographically first twin
// pair until no twins remain. Twin deletion keeps the rank, increment 0.
inline ReductionTrace twin_reduce(const OrientedGraph& g) {
  ReductionTrace trace;
  OrientedGraph cur = g;
  std::vector<Vertex> to_original(g.n());
  for (Vertex v = 0; v < g.n(); ++v) to_original[v] = v;
  for (;;) {
    const auto twins = find_twins(cur);
    if (twins.empty()) break;
    const Vertex doomed = twins.front().u;
    trace.steps.push_back({StepKind::Twin, {to_original[doomed]}, 0});
    cur = delete_vertex(cur, doomed);
    to_original.erase(to_original.begin() + doomed);
  }
  trace.terminal = std::move(cur);
  trace.terminal_to_original = std::move(to_original);
  return trace;
}

// Delta classes of connected unicyclic graphs: U1 when pendant deletion
// ends edgeless, U2 when it strands the cycle (plus isolated vertices).
enum class DeltaClass { U1, U2 };

struct DeltaClassification {
  DeltaClass klass = DeltaClass::U1;
  ReductionTrace trace;     // deterministic lowest-pendant-first trace
  bool confluent = true;    // same class under every pendant-choice order
};

namespace detail {

// Exhaustive search over pendant-choice orders on vertex-set states.
// Records which terminal classes (edgeless / cycle left) are reachable.
inline void delta_orders(const OrientedGraph& g, std::uint64_t mask,
                         std::unordered_set<std::uint64_t>& seen,
                         std::set<int>& outcomes) {
  if (!seen.insert(mask).second) return;
  const int n = g.n();
  bool any_pendant = false;
  for (Vertex v = 0; v < n; ++v) {
    if (!(mask >> v & 1)) continue;
    int deg = 0;
    Vertex nb = -1;
    for (Vertex u = 0; u < n; ++u)
      if ((mask >> u & 1) && g.sign(v, u) != 0) {
        ++deg;
        nb = u;
      }
    if (deg == 1) {
      any_pendant = true;
      delta_orders(g,
                   mask & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << nb),
                   seen, outcomes);
    }
  }
  if (any_pendant) return;
  bool any_edge = false;
  for (const Arc& a : g.arcs())
    if ((mask >> a.tail & 1) && (mask >> a.head & 1)) {
      any_edge = true;
      break;
    }
  outcomes.insert(any_edge ? 1 : 0);
}

}  // namespace detail

inline DeltaClassification delta_class(const OrientedGraph& g) {
  if (!is_connected(g))
    fail(ErrorKind::Disconnected, "delta_class: graph is not connected");
  if (g.arc_count() != g.n() || g.n() < 3)
    fail(ErrorKind::NotUnicyclic,
         "delta_class: need a connected graph with m == n >= 3");
  if (g.n() > 64)
    fail(ErrorKind::BoundExceeded, "delta_class: supported up to n = 64");
  DeltaClassification out;
  out.trace = delta_reduce(g);
  out.klass =
      out.trace.terminal.arc_count() == 0 ? DeltaClass::U1 : DeltaClass::U2;
  if (out.klass == DeltaClass::U2) {
    // The surviving edges must be exactly the original cycle.
    const CycleData cycle = unique_cycle(g);
    std::vector<Vertex> live;
    for (Vertex v = 0; v < out.trace.terminal.n(); ++v)
      if (out.trace.terminal.degree(v) > 0)
        live.push_back(out.trace.terminal_to_original[v]);
    std::vector<Vertex> cyc = cycle.vertices;
    std::sort(cyc.begin(), cyc.end());
    std::sort(live.begin(), live.end());
    if (live != cyc ||
        out.trace.terminal.arc_count() != static_cast<int>(cyc.size()))
      fail(ErrorKind::Internal, "delta_class: U2 terminal is not the cycle");
  }
  std::unordered_set<std::uint64_t> seen;
  std::set<int> outcomes;
  detail::delta_orders(g, detail::full_mask(g.n()), seen, outcomes);
  out.confluent = outcomes.size() == 1;
  return out;
}

}  // namespace skewrank

#endif  // SKEWRANK_REDUCTIONS_HPP
