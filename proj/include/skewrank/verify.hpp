#ifndef SKEWRANK_VERIFY_HPP
#define SKEWRANK_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "skewrank/basic_subgraphs.hpp"
#include "skewrank/classify.hpp"
#include "skewrank/enumerate.hpp"
#include "skewrank/errors.hpp"
#include "skewrank/exact_linalg.hpp"
#include "skewrank/families.hpp"
#include "skewrank/matching.hpp"
#include "skewrank/multipartite.hpp"
#include "skewrank/oriented_graph.hpp"
#include "skewrank/reductions.hpp"
#include "skewrank/sgr.hpp"

namespace skewrank {

// ---------------------------------------------------------------------------
// Instance filters and reports.
// ---------------------------------------------------------------------------

struct EnumFilter {
  enum class Connectivity { Any, Connected };
  enum class Klass { Any, Tree, Unicyclic, Bicyclic, HasPendant };
  Connectivity connectivity = Connectivity::Connected;
  Klass klass = Klass::Any;
  int min_n = 0;             // 0 = checker default
  int max_n = 0;             // 0 = checker default
  std::uint64_t sample = 0;  // 0 = every orientation; else draws per graph
  std::uint64_t seed = 0;    // recorded in the report when sampling
};

struct Violation {
  std::string graph_sgr;   // replayable serialized instance
  std::string expected;
  std::string actual;
  std::string shrunk_sgr;  // smallest induced subgraph still failing
};

struct VerifyReport {
  std::string theorem_id;
  EnumFilter filter;
  std::uint64_t instances_checked = 0;
  std::vector<Violation> violations;
  double elapsed_seconds = 0.0;
  std::vector<std::string> notes;
  // Set only by the literal-branch rule check: its violation set is the
  // documented statement/proof gap, reported but expected.
  bool documented_discrepancy = false;
  bool pass() const { return violations.empty(); }
};

// Greedy single-vertex shrinking: returns an induced subgraph on which
// `fails` still holds and from which no single deletion keeps it failing.
// Errors thrown by the predicate count as "does not fail".
inline OrientedGraph shrink(
    const OrientedGraph& g,
    const std::function<bool(const OrientedGraph&)>& fails) {
  auto still_fails = [&fails](const OrientedGraph& candidate) {
    try {
      return fails(candidate);
    } catch (const Error&) {
      return false;
    }
  };
  OrientedGraph current = g;
  bool progress = true;
  while (progress && current.n() > 0) {
    progress = false;
    for (Vertex v = 0; v < current.n(); ++v) {
      OrientedGraph candidate = delete_vertex(current, v);
      if (still_fails(candidate)) {
        current = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  return current;
}

namespace detail {

inline void add_violation(
    VerifyReport& report, const OrientedGraph& g, std::string expected,
    std::string actual,
    const std::function<bool(const OrientedGraph&)>& fails) {
  Violation v;
  v.graph_sgr = write_sgr(g);
  v.expected = std::move(expected);
  v.actual = std::move(actual);
  v.shrunk_sgr = write_sgr(shrink(g, fails));
  report.violations.push_back(std::move(v));
}

// Invariants asserted wherever a rank was computed: the rank is even and
// bounded by twice the matching number (and by the order).
inline void rank_invariants(VerifyReport& report, const OrientedGraph& g,
                            int rank) {
  if (rank % 2 != 0)
    add_violation(report, g, "even rank", "rank " + std::to_string(rank),
                  [](const OrientedGraph& h) { return skew_rank(h) % 2 != 0; });
  const int cap = std::min(g.n(), 2 * matching_number(g));
  if (rank < 0 || rank > cap)
    add_violation(report, g,
                  "0 <= rank <= min(n, 2*beta) = " + std::to_string(cap),
                  "rank " + std::to_string(rank),
                  [](const OrientedGraph& h) {
                    const int r = skew_rank(h);
                    return r < 0 || r > std::min(h.n(), 2 * matching_number(h));
                  });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Enumeration with a filter: every labeled instance in the class, each
// exactly once, deterministic order; or seeded orientation sampling.
// ---------------------------------------------------------------------------

namespace detail {

inline void orientation_policy(int n, const EdgeList& edges,
                               std::uint64_t sample, Sampler& sampler,
                               const std::function<void(const OrientedGraph&,
                                                        std::uint64_t)>& visit) {
  const std::uint64_t total = edges.size() >= 63
                                  ? std::uint64_t(0)  // guarded by callers
                                  : std::uint64_t(1) << edges.size();
  if (sample == 0 || (total != 0 && total <= sample)) {
    for_each_orientation(n, edges, visit);
    return;
  }
  for (std::uint64_t i = 0; i < sample; ++i) {
    const std::uint64_t mask = sampler.next(total);
    visit(orient(n, edges, mask), mask);
  }
}

inline bool has_pendant(int n, const EdgeList& edges) {
  std::vector<int> deg(n, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return std::count(deg.begin(), deg.end(), 1) > 0;
}

}  // namespace detail

inline void enumerate_oriented(
    int n, const EnumFilter& filter,
    const std::function<void(const OrientedGraph&)>& visit) {
  Sampler sampler(filter.seed);
  const bool connected_only =
      filter.connectivity == EnumFilter::Connectivity::Connected;
  auto orient_and_visit = [&](const EdgeList& edges) {
    detail::orientation_policy(
        n, edges, filter.sample, sampler,
        [&visit](const OrientedGraph& g, std::uint64_t) { visit(g); });
  };
  switch (filter.klass) {
    case EnumFilter::Klass::Any:
      if (filter.sample == 0) {
        for_each_oriented(n, [&](const OrientedGraph& g) {
          if (connected_only && !is_connected(g)) return;
          visit(g);
        });
      } else {
        for (std::uint64_t i = 0; i < filter.sample; ++i) {
          OrientedGraph g = connected_only ? random_connected_oriented(n, sampler)
                                           : random_oriented(n, sampler);
          visit(g);
        }
      }
      break;
    case EnumFilter::Klass::Tree:
      for_each_tree(n, orient_and_visit);
      break;
    case EnumFilter::Klass::Unicyclic:
      for_each_unicyclic(n, orient_and_visit);
      break;
    case EnumFilter::Klass::Bicyclic:
      for_each_bicyclic(n, orient_and_visit);
      break;
    case EnumFilter::Klass::HasPendant:
      for_each_graph(n, connected_only, [&](const EdgeList& edges) {
        if (!detail::has_pendant(n, edges)) return;
        orient_and_visit(edges);
      });
      break;
  }
}

// All orientations of the underlying (undirected) graph of g.
inline void orientations_of(
    const OrientedGraph& g,
    const std::function<void(const OrientedGraph&)>& visit) {
  EdgeList edges;
  for (const Arc& a : g.arcs())
    edges.push_back({std::min(a.tail, a.head), std::max(a.tail, a.head)});
  std::sort(edges.begin(), edges.end());
  for_each_orientation(g.n(), edges,
                       [&visit](const OrientedGraph& h, std::uint64_t) { visit(h); });
}

// ---------------------------------------------------------------------------
// The theorem checkers.
// ---------------------------------------------------------------------------

namespace detail {

struct Ranges {
  int lo, hi;
};

inline Ranges resolve(const EnumFilter& f, int default_min, int default_max) {
  return {f.min_n > 0 ? f.min_n : default_min,
          f.max_n > 0 ? f.max_n : default_max};
}

// ---- rank fundamentals: evenness, bounds, additivity, monotonicity, empty.
inline void check_rank_fundamentals(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 1, 5);
  Sampler sampler(f.seed);
  EnumFilter scan = f;
  scan.connectivity = EnumFilter::Connectivity::Any;
  for (int n = lo; n <= hi; ++n) {
    enumerate_oriented(n, scan, [&](const OrientedGraph& g) {
      ++rep.instances_checked;
      const int r = skew_rank(g);
      rank_invariants(rep, g, r);
      if ((r == 0) != (g.arc_count() == 0))
        add_violation(rep, g, "rank 0 exactly for edgeless graphs",
                      "rank " + std::to_string(r) + " with " +
                          std::to_string(g.arc_count()) + " arcs",
                      [](const OrientedGraph& h) {
                        return (skew_rank(h) == 0) != (h.arc_count() == 0);
                      });
      // Component additivity.
      int sum = 0;
      for (const Component& c : components(g)) sum += skew_rank(c.graph);
      if (sum != r)
        add_violation(rep, g, "rank = sum over components",
                      std::to_string(r) + " vs sum " + std::to_string(sum),
                      [](const OrientedGraph& h) {
                        int s = 0;
                        for (const Component& c : components(h))
                          s += skew_rank(c.graph);
                        return s != skew_rank(h);
                      });
      // Induced-subgraph monotonicity: every single-vertex deletion plus
      // one sampled vertex subset.
      auto monotone_fails = [](const OrientedGraph& h) {
        const int rh = skew_rank(h);
        for (Vertex v = 0; v < h.n(); ++v)
          if (skew_rank(delete_vertex(h, v)) > rh) return true;
        return false;
      };
      for (Vertex v = 0; v < g.n(); ++v)
        if (skew_rank(delete_vertex(g, v)) > r) {
          add_violation(rep, g, "rank(g - v) <= rank(g)",
                        "increases at vertex " + std::to_string(v),
                        monotone_fails);
          break;
        }
      if (g.n() > 1) {
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < g.n(); ++v)
          if (sampler.next(2) == 1) keep.push_back(v);
        if (!keep.empty() && static_cast<int>(keep.size()) < g.n()) {
          if (skew_rank(induced_subgraph(g, keep)) > r)
            add_violation(rep, g, "rank(induced subset) <= rank(g)",
                          "sampled subset exceeds", monotone_fails);
        }
      }
    });
  }
}

// ---- trees: rank equals twice the matching number.
inline void check_tree_rank(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 1, 8);
  Sampler sampler(f.seed);
  for (int n = lo; n <= hi; ++n) {
    for_each_tree(n, [&](const EdgeList& edges) {
      const int beta = matching_number(orient(n, edges, 0));
      orientation_policy(n, edges, f.sample, sampler,
                         [&](const OrientedGraph& g, std::uint64_t) {
                           ++rep.instances_checked;
                           const int r = skew_rank(g);
                           if (r != 2 * beta)
                             add_violation(
                                 rep, g, "rank = 2*beta = " + std::to_string(2 * beta),
                                 "rank " + std::to_string(r),
                                 [](const OrientedGraph& h) {
                                   return is_connected(h) &&
                                          h.arc_count() == h.n() - 1 &&
                                          skew_rank(h) != 2 * matching_number(h);
                                 });
                         });
    });
  }
}

// ---- paths: n-1 when odd order, n when even order.
inline void check_path_rank(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 1, 10);
  for (int n = lo; n <= hi; ++n) {
    EdgeList edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    const int want = n % 2 == 0 ? n : n - 1;
    for_each_orientation(n, edges, [&](const OrientedGraph& g, std::uint64_t) {
      ++rep.instances_checked;
      const int r = skew_rank(g);
      if (r != want)
        add_violation(rep, g, "path rank " + std::to_string(want),
                      "rank " + std::to_string(r),
                      [want](const OrientedGraph& h) {
                        return skew_rank(h) != want;
                      });
    });
  }
}

// ---- cycles: n if negative sign, n-2 if positive, n-1 for odd length.
inline void check_cycle_rank(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 3, 10);
  for (int n = std::max(3, lo); n <= hi; ++n) {
    EdgeList edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    std::sort(edges.begin(), edges.end());
    for_each_orientation(n, edges, [&](const OrientedGraph& g, std::uint64_t) {
      ++rep.instances_checked;
      const CycleData c = unique_cycle(g);
      const int want = c.sign == CycleSign::Negative   ? n
                       : c.sign == CycleSign::Positive ? n - 2
                                                       : n - 1;
      const int r = skew_rank(g);
      if (r != want)
        add_violation(rep, g, "cycle rank " + std::to_string(want),
                      "rank " + std::to_string(r),
                      [want](const OrientedGraph& h) {
                        return skew_rank(h) != want;
                      });
    });
  }
}

// ---- pendant deletion: removing a pendant and its neighbor drops the
// rank by exactly 2, at every pendant and along a full reduction.
inline void check_delta_step(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 2, 5);
  EnumFilter scan = f;
  scan.connectivity = EnumFilter::Connectivity::Any;
  for (int n = lo; n <= hi; ++n) {
    enumerate_oriented(n, scan, [&](const OrientedGraph& g) {
      const auto pendants = pendant_vertices(g);
      if (pendants.empty()) return;
      ++rep.instances_checked;
      const int r = skew_rank(g);
      for (const auto& [p, nb] : pendants) {
        const DeltaStepResult step = delta_step(g, p);
        if (skew_rank(step.graph) + 2 != r) {
          add_violation(rep, g, "rank drops by exactly 2 at a pendant",
                        "pendant " + std::to_string(p),
                        [](const OrientedGraph& h) {
                          const auto ps = pendant_vertices(h);
                          if (ps.empty()) return false;
                          const int rh = skew_rank(h);
                          for (const auto& [q, _] : ps)
                            if (skew_rank(delta_step(h, q).graph) + 2 != rh)
                              return true;
                          return false;
                        });
          break;
        }
      }
      const ReductionTrace trace = delta_reduce(g);
      if (skew_rank(trace.terminal) + trace.accumulated != r)
        add_violation(rep, g, "rank = terminal rank + 2 * steps",
                      "trace mismatch", [](const OrientedGraph& h) {
                        const ReductionTrace t = delta_reduce(h);
                        return skew_rank(t.terminal) + t.accumulated !=
                               skew_rank(h);
                      });
    });
  }
}

// ---- twins: deleting one vertex of a uniform or opposite twin pair
// keeps the rank unchanged.
inline void check_twin_deletion(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 2, 5);
  EnumFilter scan = f;
  scan.connectivity = EnumFilter::Connectivity::Any;
  for (int n = lo; n <= hi; ++n) {
    enumerate_oriented(n, scan, [&](const OrientedGraph& g) {
      const auto twins = find_twins(g);
      if (twins.empty()) return;
      ++rep.instances_checked;
      const int r = skew_rank(g);
      for (const TwinPair& t : twins) {
        if (skew_rank(delete_vertex(g, t.u)) != r ||
            skew_rank(delete_vertex(g, t.v)) != r) {
          add_violation(rep, g, "twin deletion preserves rank",
                        "pair (" + std::to_string(t.u) + "," +
                            std::to_string(t.v) + ")",
                        [](const OrientedGraph& h) {
                          const int rh = skew_rank(h);
                          for (const TwinPair& p : find_twins(h))
                            if (skew_rank(delete_vertex(h, p.u)) != rh ||
                                skew_rank(delete_vertex(h, p.v)) != rh)
                              return true;
                          return false;
                        });
          break;
        }
      }
    });
  }
}

// ---- pendant twins: two pendants at one neighbor always form a twin
// pair, and deleting either preserves the rank.
inline void check_pendant_twins(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 3, 5);
  EnumFilter scan = f;
  scan.connectivity = EnumFilter::Connectivity::Any;
  for (int n = lo; n <= hi; ++n) {
    enumerate_oriented(n, scan, [&](const OrientedGraph& g) {
      const auto pendants = pendant_vertices(g);
      std::map<Vertex, std::vector<Vertex>> at;
      for (const auto& [p, nb] : pendants) at[nb].push_back(p);
      bool relevant = false;
      for (const auto& [nb, ps] : at)
        if (ps.size() >= 2) relevant = true;
      if (!relevant) return;
      ++rep.instances_checked;
      const int r = skew_rank(g);
      const auto twins = find_twins(g);
      auto is_twin_pair = [&twins](Vertex a, Vertex b) {
        for (const TwinPair& t : twins)
          if ((t.u == a && t.v == b) || (t.u == b && t.v == a)) return true;
        return false;
      };
      for (const auto& [nb, ps] : at) {
        for (std::size_t i = 0; i < ps.size(); ++i)
          for (std::size_t j = i + 1; j < ps.size(); ++j) {
            const Vertex a = ps[i], b = ps[j];
            if (!is_twin_pair(a, b) || skew_rank(delete_vertex(g, a)) != r ||
                skew_rank(delete_vertex(g, b)) != r) {
              add_violation(
                  rep, g, "pendant twins are rank-preserving twins",
                  "pair (" + std::to_string(a) + "," + std::to_string(b) + ")",
                  [](const OrientedGraph& h) {
                    const auto hp = pendant_vertices(h);
                    std::map<Vertex, std::vector<Vertex>> hat;
                    for (const auto& [p, nb2] : hp) hat[nb2].push_back(p);
                    const int rh = skew_rank(h);
                    for (const auto& [nb2, qs] : hat)
                      for (std::size_t x = 0; x < qs.size(); ++x)
                        for (std::size_t y = x + 1; y < qs.size(); ++y)
                          if (skew_rank(delete_vertex(h, qs[x])) != rh) return true;
                    return false;
                  });
              return;
            }
          }
      }
    });
  }
}

// ---- complete multipartite with all-positive 4-cycles: vertices sharing
// a part are pairwise twins.
inline void check_partite_twins(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 2, 5);
  for (int n = lo; n <= hi; ++n) {
    EnumFilter scan = f;
    scan.connectivity = EnumFilter::Connectivity::Connected;
    enumerate_oriented(n, scan, [&](const OrientedGraph& g) {
      const auto parts = complete_multipartite_partition(g);
      if (!parts) return;
      for (const CycleData& c : four_cycles(g))
        if (c.sign != CycleSign::Positive) return;
      ++rep.instances_checked;
      const auto twins = find_twins(g);
      auto is_twin_pair = [&twins](Vertex a, Vertex b) {
        for (const TwinPair& t : twins)
          if ((t.u == a && t.v == b) || (t.u == b && t.v == a)) return true;
        return false;
      };
      for (const auto& part : *parts)
        for (std::size_t i = 0; i < part.size(); ++i)
          for (std::size_t j = i + 1; j < part.size(); ++j)
            if (!is_twin_pair(part[i], part[j])) {
              add_violation(
                  rep, g, "same-part vertices are twins",
                  "pair (" + std::to_string(part[i]) + "," +
                      std::to_string(part[j]) + ")",
                  [](const OrientedGraph& h) {
                    const auto hp = complete_multipartite_partition(h);
                    if (!hp) return false;
                    for (const CycleData& c : four_cycles(h))
                      if (c.sign != CycleSign::Positive) return false;
                    const auto ht = find_twins(h);
                    auto twin = [&ht](Vertex a, Vertex b) {
                      for (const TwinPair& t : ht)
                        if ((t.u == a && t.v == b) || (t.u == b && t.v == a))
                          return true;
                      return false;
                    };
                    for (const auto& part2 : *hp)
                      for (std::size_t x = 0; x < part2.size(); ++x)
                        for (std::size_t y = x + 1; y < part2.size(); ++y)
                          if (!twin(part2[x], part2[y])) return true;
                    return false;
                  });
              return;
            }
    });
  }
}

// ---- the rank-2 catalog at orders 2..4 agrees with the exact rank.
inline void check_rank2_small(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 2, 4);
  for (int n = std::max(2, lo); n <= std::min(4, hi); ++n) {
    EnumFilter scan = f;
    scan.connectivity = EnumFilter::Connectivity::Connected;
    enumerate_oriented(n, scan, [&](const OrientedGraph& g) {
      ++rep.instances_checked;
      const bool is2 = skew_rank(g) == 2;
      const bool says2 = rank2_classify(g).value;
      if (is2 != says2)
        add_violation(rep, g, std::string("catalog says ") + (is2 ? "true" : "false"),
                      says2 ? "true" : "false", [](const OrientedGraph& h) {
                        return h.n() >= 2 && is_connected(h) &&
                               (skew_rank(h) == 2) != rank2_classify(h).value;
                      });
    });
  }
}

// ---- forbidden-pattern scan agrees with complete-multipartite recognition.
inline void check_forbidden_patterns(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 2, 6);
  for (int n = lo; n <= hi; ++n) {
    for_each_graph(n, true, [&](const EdgeList& edges) {
      ++rep.instances_checked;
      const OrientedGraph g = orient(n, edges, 0);
      const bool multipartite = complete_multipartite_partition(g).has_value();
      const auto witness = forbidden_subgraph_scan(g);
      if (multipartite == witness.has_value()) {
        add_violation(rep, g,
                      multipartite ? "complete multipartite, no forbidden pattern"
                                   : "forbidden pattern present",
                      witness ? "found " + std::string(to_string(witness->pattern))
                              : "no pattern found",
                      [](const OrientedGraph& h) {
                        if (!is_connected(h)) return false;
                        return complete_multipartite_partition(h).has_value() ==
                               forbidden_subgraph_scan(h).has_value();
                      });
        return;
      }
      if (witness) {
        // The witness must induce what it claims.
        const std::vector<Vertex> verts(witness->vertices.begin(),
                                        witness->vertices.end());
        std::vector<Vertex> sorted = verts;
        std::sort(sorted.begin(), sorted.end());
        const OrientedGraph sub = induced_subgraph(g, sorted);
        std::vector<int> deg(4, 0);
        for (const Arc& a : sub.arcs()) {
          ++deg[a.tail];
          ++deg[a.head];
        }
        std::sort(deg.begin(), deg.end());
        const bool ok =
            (witness->pattern == ForbiddenPattern::TwoK2 &&
             deg == std::vector<int>{1, 1, 1, 1}) ||
            (witness->pattern == ForbiddenPattern::P4 &&
             deg == std::vector<int>{1, 1, 2, 2}) ||
            (witness->pattern == ForbiddenPattern::TriPlus &&
             deg == std::vector<int>{1, 2, 2, 3});
        if (!ok)
          add_violation(rep, g, "witness induces claimed pattern",
                        to_string(witness->pattern),
                        [](const OrientedGraph&) { return false; });
      }
    });
  }
}

// ---- rank-2 characterization at order >= 5.
inline void check_rank2_large(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 5, 5);
  for (int n = std::max(5, lo); n <= hi; ++n) {
    EnumFilter scan = f;
    scan.connectivity = EnumFilter::Connectivity::Connected;
    enumerate_oriented(n, scan, [&](const OrientedGraph& g) {
      ++rep.instances_checked;
      const bool is2 = skew_rank(g) == 2;
      const bool says2 = rank2_classify(g).value;
      if (is2 != says2)
        add_violation(rep, g,
                      std::string("partition rule says ") + (is2 ? "true" : "false"),
                      says2 ? "true" : "false", [](const OrientedGraph& h) {
                        return h.n() >= 2 && is_connected(h) &&
                               (skew_rank(h) == 2) != rank2_classify(h).value;
                      });
    });
  }
}

// ---- rank-4 characterization for graphs with a pendant vertex.
inline void check_rank4_pendant(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 2, 6);
  Sampler sampler(f.seed);
  for (int n = lo; n <= hi; ++n) {
    for_each_graph(n, true, [&](const EdgeList& edges) {
      if (!has_pendant(n, edges)) return;
      orientation_policy(n, edges, f.sample, sampler,
                         [&](const OrientedGraph& g, std::uint64_t) {
                           ++rep.instances_checked;
                           const bool is4 = skew_rank(g) == 4;
                           const bool says4 = rank4_pendant_classify(g).value;
                           if (is4 != says4)
                             add_violation(
                                 rep, g,
                                 std::string("classifier says ") +
                                     (is4 ? "true" : "false"),
                                 says4 ? "true" : "false",
                                 [](const OrientedGraph& h) {
                                   if (!is_connected(h)) return false;
                                   if (pendant_vertices(h).empty()) return false;
                                   return (skew_rank(h) == 4) !=
                                          rank4_pendant_classify(h).value;
                                 });
                         });
    });
  }
}

// ---- derived rank-4 catalogs stay consistent with exact ranks and with
// the pendant classifier; bare-cycle entries match the known branches.
inline void check_catalog(const EnumFilter& f, VerifyReport& rep,
                          CatalogClass klass) {
  const auto [lo, hi] =
      resolve(f, klass == CatalogClass::Unicyclic ? 3 : 4, 6);
  for (int n = lo; n <= hi; ++n) {
    const auto catalog = catalog_rank4(n, klass);
    std::map<EdgeList, const CatalogEntry*> by_edges;
    for (const CatalogEntry& e : catalog) by_edges[e.edges] = &e;
    std::uint64_t entries_all = 0, entries_conditional = 0;
    for (const CatalogEntry& e : catalog) {
      if (e.condition == "all")
        ++entries_all;
      else
        ++entries_conditional;
      // A non-degenerate labeled condition must reproduce the achieving set.
      if (e.condition != "other") {
        const std::uint64_t total = std::uint64_t(1) << e.orientation_bits;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
          const OrientedGraph g = orient(n, e.edges, mask);
          if (catalog_condition_matches(e.condition, g) != e.achieving[mask]) {
            add_violation(rep, g, "condition label reproduces achieving set",
                          e.condition,
                          [](const OrientedGraph&) { return false; });
            break;
          }
        }
      }
    }
    auto sweep = [&](const EdgeList& edges) {
      if (klass == CatalogClass::Bicyclic && !has_pendant(n, edges)) return;
      const auto it = by_edges.find(edges);
      const std::uint64_t total = std::uint64_t(1) << edges.size();
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        const OrientedGraph g = orient(n, edges, mask);
        ++rep.instances_checked;
        const bool is4 = skew_rank(g) == 4;
        const bool in_catalog =
            it != by_edges.end() && it->second->achieving[mask];
        if (is4 != in_catalog) {
          add_violation(rep, g, "catalog membership tracks rank 4",
                        is4 ? "rank 4, not in catalog" : "in catalog, not rank 4",
                        [](const OrientedGraph&) { return false; });
          return;
        }
        if (!pendant_vertices(g).empty() && is_connected(g)) {
          const bool says4 = rank4_pendant_classify(g).value;
          if (says4 != is4)
            add_violation(rep, g, "pendant classifier agrees on catalog domain",
                          says4 ? "true" : "false",
                          [](const OrientedGraph& h) {
                            if (!is_connected(h)) return false;
                            if (pendant_vertices(h).empty()) return false;
                            return (skew_rank(h) == 4) !=
                                   rank4_pendant_classify(h).value;
                          });
        }
      }
    };
    if (klass == CatalogClass::Unicyclic)
      for_each_unicyclic(n, sweep);
    else
      for_each_bicyclic(n, sweep);
    // Bare even/odd cycle branches of the catalog.
    if (klass == CatalogClass::Unicyclic && n >= 4 && n <= 6) {
      for (const CatalogEntry& e : catalog) {
        std::vector<int> deg(n, 0);
        for (const auto& [u, v] : e.edges) {
          ++deg[u];
          ++deg[v];
        }
        if (std::count(deg.begin(), deg.end(), 2) != n) continue;
        const std::string want = n == 4   ? "cycle-oddly-oriented"
                                 : n == 5 ? "all"
                                          : "cycle-evenly-oriented";
        if (e.condition != want) {
          const OrientedGraph g = orient(n, e.edges, 0);
          add_violation(rep, g, "bare cycle entry condition = " + want,
                        e.condition, [](const OrientedGraph&) { return false; });
        }
      }
    }
    std::ostringstream note;
    note << "n=" << n << " entries=" << catalog.size()
         << " unconditional=" << entries_all
         << " conditional=" << entries_conditional;
    rep.notes.push_back(note.str());
  }
}

// ---- coefficients by basic-subgraph combinatorics match the exact
// characteristic polynomial.
inline void check_coefficients(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 1, 5);
  for (int n = lo; n <= hi; ++n) {
    EnumFilter scan = f;
    enumerate_oriented(n, scan, [&](const OrientedGraph& g) {
      ++rep.instances_checked;
      const CharPoly cp = char_poly_exact(skew_adjacency(g));
      const int r = cp.rank_from_coefficients();
      if (r != rank_exact(skew_adjacency(g)))
        add_violation(rep, g, "rank from coefficients = elimination rank",
                      "mismatch", [](const OrientedGraph& h) {
                        const CharPoly c = char_poly_exact(skew_adjacency(h));
                        return c.rank_from_coefficients() !=
                               rank_exact(skew_adjacency(h));
                      });
      for (int i = 0; i <= n; ++i) {
        const BigInt comb = coefficient_comb(g, i);
        if (comb != cp.a[i]) {
          std::ostringstream exp, act;
          exp << "a_" << i << " = " << cp.a[i];
          act << comb;
          add_violation(rep, g, exp.str(), act.str(),
                        [i](const OrientedGraph& h) {
                          if (i > h.n()) return false;
                          const CharPoly c = char_poly_exact(skew_adjacency(h));
                          return coefficient_comb(h, i) != c.a[i];
                        });
          break;
        }
      }
    });
  }
}

// ---- unicyclic rank: coefficient route always matches the exact rank;
// the rank is 2*beta or 2*beta-2, the drop only with a positive cycle.
inline void check_unicyclic_rank(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 3, 6);
  Sampler sampler(f.seed);
  for (int n = std::max(3, lo); n <= hi; ++n) {
    for_each_unicyclic(n, [&](const EdgeList& edges) {
      orientation_policy(n, edges, f.sample, sampler, [&](const OrientedGraph& g,
                                                          std::uint64_t) {
        ++rep.instances_checked;
        const UnicyclicRankReport r = unicyclic_rank_predicted(g);
        auto bad = [](const OrientedGraph& h) {
          if (!is_connected(h) || h.arc_count() != h.n()) return false;
          const UnicyclicRankReport q = unicyclic_rank_predicted(h);
          if (q.coefficient != q.actual) return true;
          if (q.actual != 2 * q.beta && q.actual != 2 * q.beta - 2) return true;
          if (q.actual == 2 * q.beta - 2 && q.beta > 0 &&
              q.cycle_sign != CycleSign::Positive)
            return true;
          return false;
        };
        if (r.coefficient != r.actual)
          add_violation(rep, g,
                        "coefficient prediction " + std::to_string(r.coefficient),
                        "rank " + std::to_string(r.actual), bad);
        else if (r.actual != 2 * r.beta && r.actual != 2 * r.beta - 2)
          add_violation(rep, g, "rank in {2*beta, 2*beta-2}",
                        "rank " + std::to_string(r.actual), bad);
        else if (r.actual == 2 * r.beta - 2 &&
                 r.cycle_sign != CycleSign::Positive)
          add_violation(rep, g, "rank drop only with a positive cycle",
                        "sign not positive", bad);
        // The split coefficients agree with direct enumeration.
        if (coefficient_comb(g, 2 * r.beta) != r.a_top ||
            (2 * r.beta - 2 >= 0 &&
             coefficient_comb(g, 2 * r.beta - 2) != r.a_next))
          add_violation(rep, g, "coefficient split matches direct count",
                        "mismatch", [](const OrientedGraph& h) {
                          if (!is_connected(h) || h.arc_count() != h.n())
                            return false;
                          const UnicyclicTopCoefficients c =
                              unicyclic_max_coeff(h);
                          if (coefficient_comb(h, 2 * c.beta) != c.top)
                            return true;
                          return 2 * c.beta - 2 >= 0 &&
                                 coefficient_comb(h, 2 * c.beta - 2) != c.next;
                        });
      });
    });
  }
}

}  // namespace detail

// True when the stated branch rule disagrees with the exact rank on the
// connected unicyclic core of g (isolated vertices are ignored; they change
// neither the rank nor the matching number). False off that domain.
inline bool literal_route_disagrees(const OrientedGraph& g) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) > 0) keep.push_back(v);
  if (keep.size() < 3) return false;
  const OrientedGraph core = induced_subgraph(g, keep);
  if (!is_connected(core) || core.arc_count() != core.n()) return false;
  const UnicyclicRankReport q = unicyclic_rank_predicted(core);
  return q.literal != q.actual;
}

namespace detail {

// ---- the stated branch rule, taken literally; its violation set is the
// documented discrepancy and every member must be shaped as predicted.
inline void check_unicyclic_literal(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 3, 6);
  Sampler sampler(f.seed);
  std::uint64_t well_shaped = 0;
  for (int n = std::max(3, lo); n <= hi; ++n) {
    for_each_unicyclic(n, [&](const EdgeList& edges) {
      orientation_policy(
          n, edges, f.sample, sampler,
          [&](const OrientedGraph& g, std::uint64_t) {
            ++rep.instances_checked;
            const UnicyclicRankReport r = unicyclic_rank_predicted(g);
            if (r.literal == r.actual) return;
            const bool shaped = r.cycle_sign == CycleSign::Positive &&
                                r.actual == 2 * r.beta - 2 &&
                                r.actual == r.coefficient;
            if (shaped) ++well_shaped;
            add_violation(rep, g,
                          "literal rule " + std::to_string(r.literal),
                          "rank " + std::to_string(r.actual) +
                              (shaped ? " (shaped: positive cycle, 2*beta-2)"
                                      : " (UNEXPECTED SHAPE)"),
                          literal_route_disagrees);
          });
    });
  }
  rep.documented_discrepancy =
      !rep.violations.empty() && well_shaped == rep.violations.size();
  std::ostringstream note;
  note << "discrepancies=" << rep.violations.size()
       << " well_shaped=" << well_shaped
       << (rep.documented_discrepancy
               ? " (expected statement/proof gap, not an implementation fault)"
               : "");
  rep.notes.push_back(note.str());
}

// ---- girth lower bound, with attainment by the one-vertex pendant family.
inline void check_girth_bound(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 4, 7);
  Sampler sampler(f.seed);
  for (int n = std::max(4, lo); n <= hi; ++n) {
    for_each_unicyclic(n, [&](const EdgeList& edges) {
      orientation_policy(
          n, edges, f.sample, sampler, [&](const OrientedGraph& g, std::uint64_t) {
            const CycleData c = unique_cycle(g);
            if (c.length >= g.n()) return;  // needs a tree part
            ++rep.instances_checked;
            const int bound = min_girth_bound(g.n(), c.length);
            const int r = skew_rank(g);
            if (r < bound)
              add_violation(rep, g, "rank >= " + std::to_string(bound),
                            "rank " + std::to_string(r),
                            [](const OrientedGraph& h) {
                              if (!is_connected(h) || h.arc_count() != h.n())
                                return false;
                              const CycleData ch = unique_cycle(h);
                              if (ch.length >= h.n()) return false;
                              return skew_rank(h) <
                                     min_girth_bound(h.n(), ch.length);
                            });
          });
    });
    // Attainment: every orientation of the cycle-with-pendants family.
    for (int k = 3; k < n; ++k) {
      FamilySpec spec;
      spec.family = Family::HFamily;
      spec.n = n;
      spec.k = k;
      const OrientedGraph base = generate_family(spec);
      const int bound = min_girth_bound(n, k);
      orientations_of(base, [&](const OrientedGraph& g) {
        ++rep.instances_checked;
        if (skew_rank(g) != bound)
          add_violation(rep, g, "attains bound " + std::to_string(bound),
                        "rank " + std::to_string(skew_rank(g)),
                        [bound](const OrientedGraph& h) {
                          return skew_rank(h) != bound;
                        });
      });
    }
  }
}

// ---- tree joined at one vertex to a disjoint graph: the rank splits by
// whether the joint vertex is saturated in the tree.
inline void check_tree_attachment(const EnumFilter& f, VerifyReport& rep) {
  // Exhaustive slice: oriented trees on 2..3 vertices joined to every
  // connected oriented graph on 2..3 vertices, every joint and subset.
  std::vector<OrientedGraph> trees, bases;
  for (int nt = 2; nt <= 3; ++nt)
    for_each_tree(nt, [&](const EdgeList& edges) {
      for_each_orientation(nt, edges, [&trees](const OrientedGraph& t,
                                               std::uint64_t) {
        trees.push_back(t);
      });
    });
  for (int nb = 2; nb <= 3; ++nb)
    for_each_oriented(nb, [&bases](const OrientedGraph& b) {
      if (is_connected(b) && b.arc_count() > 0) bases.push_back(b);
    });
  auto run_case = [&rep](const OrientedGraph& tree, const OrientedGraph& base,
                         Vertex joint, std::uint64_t subset_mask,
                         std::uint64_t arc_mask) {
    const int nt = tree.n(), nb = base.n();
    // Base keeps labels 0..nb-1, tree shifts by nb; joint becomes nb+joint.
    std::vector<Arc> arcs;
    for (const Arc& a : base.arcs()) arcs.push_back(a);
    for (const Arc& a : tree.arcs())
      arcs.push_back({a.tail + nb, a.head + nb});
    int bit = 0;
    for (Vertex s = 0; s < nb; ++s) {
      if (subset_mask >> s & 1) {
        if (arc_mask >> bit & 1)
          arcs.push_back({s, joint + nb});
        else
          arcs.push_back({joint + nb, s});
        ++bit;
      }
    }
    const OrientedGraph g = build_graph(nb + nt, arcs);
    ++rep.instances_checked;
    const bool saturated = is_saturated(tree, joint);
    int want;
    if (saturated) {
      want = skew_rank(base) + skew_rank(tree);
    } else {
      std::vector<Vertex> keep;  // base plus the joint vertex
      for (Vertex s = 0; s < nb; ++s) keep.push_back(s);
      keep.push_back(joint + nb);
      want = skew_rank(delete_vertex(tree, joint)) +
             skew_rank(induced_subgraph(g, keep));
    }
    const int r = skew_rank(g);
    if (r != want)
      add_violation(rep, g,
                    std::string(saturated ? "saturated" : "unsaturated") +
                        " split rank " + std::to_string(want),
                    "rank " + std::to_string(r),
                    [](const OrientedGraph&) { return false; });
  };
  for (const OrientedGraph& tree : trees)
    for (const OrientedGraph& base : bases)
      for (Vertex joint = 0; joint < tree.n(); ++joint)
        for (std::uint64_t subset = 1;
             subset < (std::uint64_t(1) << base.n()); ++subset) {
          const int bits = __builtin_popcountll(subset);
          for (std::uint64_t arc_mask = 0;
               arc_mask < (std::uint64_t(1) << bits); ++arc_mask)
            run_case(tree, base, joint, subset, arc_mask);
        }
  // Seeded random composites at slightly larger sizes.
  const std::uint64_t draws = f.sample > 0 ? f.sample : 2000;
  Sampler sampler(f.seed);
  for (std::uint64_t i = 0; i < draws; ++i) {
    const int nt = 2 + static_cast<int>(sampler.next(4));  // 2..5
    const int nb = 2 + static_cast<int>(sampler.next(3));  // 2..4
    const EdgeList tree_edges = random_tree(nt, sampler);
    const OrientedGraph tree = random_orientation(nt, tree_edges, sampler);
    OrientedGraph base = random_connected_oriented(nb, sampler);
    if (base.arc_count() == 0) continue;
    const Vertex joint = static_cast<Vertex>(sampler.next(nt));
    const std::uint64_t subset =
        1 + sampler.next((std::uint64_t(1) << nb) - 1);
    const std::uint64_t arc_mask =
        sampler.next(std::uint64_t(1) << __builtin_popcountll(subset));
    run_case(tree, base, joint, subset, arc_mask);
  }
}

// ---- unicyclic decomposition at a saturated cycle vertex (or the cycle
// itself): the rank identity holds in both cases.
inline void check_unicyclic_decomposition(const EnumFilter& f,
                                          VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 3, 6);
  Sampler sampler(f.seed);
  std::uint64_t case1 = 0, case2 = 0;
  for (int n = std::max(3, lo); n <= hi; ++n) {
    for_each_unicyclic(n, [&](const EdgeList& edges) {
      orientation_policy(n, edges, f.sample, sampler,
                         [&](const OrientedGraph& g, std::uint64_t) {
                           ++rep.instances_checked;
                           const PendantTreeDecomposition d =
                               pendant_tree_decompose(g);
                           (d.case_id == 1 ? case1 : case2) += 1;
                           if (!d.identity_holds)
                             add_violation(
                                 rep, g,
                                 "case " + std::to_string(d.case_id) +
                                     " rank identity",
                                 std::to_string(d.lhs) + " != " +
                                     std::to_string(d.part1) + " + " +
                                     std::to_string(d.part2),
                                 [](const OrientedGraph& h) {
                                   if (!is_connected(h) ||
                                       h.arc_count() != h.n())
                                     return false;
                                   return !pendant_tree_decompose(h)
                                               .identity_holds;
                                 });
                         });
    });
  }
  std::ostringstream note;
  note << "saturated-split=" << case1 << " cycle-split=" << case2;
  rep.notes.push_back(note.str());
}

// ---- extremal characterization: attaining the girth bound is equivalent
// to the star-split or cycle-bridge-star shape.
inline void check_extremal(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 4, 7);
  Sampler sampler(f.seed);
  std::uint64_t case1 = 0, case2 = 0;
  for (int n = std::max(4, lo); n <= hi; ++n) {
    for_each_unicyclic(n, [&](const EdgeList& edges) {
      orientation_policy(
          n, edges, f.sample, sampler, [&](const OrientedGraph& g, std::uint64_t) {
            const CycleData c = unique_cycle(g);
            if (c.length >= g.n()) return;
            ++rep.instances_checked;
            const bool attains =
                skew_rank(g) == min_girth_bound(g.n(), c.length);
            const ExtremalClassification shape = extremal_shape(g);
            if (attains && shape.value)
              (shape.case_id == 1 ? case1 : case2) += 1;
            if (attains != shape.value)
              add_violation(
                  rep, g,
                  attains ? "bound attained: shape must match"
                          : "shape matched: bound must be attained",
                  std::string("shape=") + (shape.value ? "true" : "false") +
                      " note=" + shape.note,
                  [](const OrientedGraph& h) {
                    if (!is_connected(h) || h.arc_count() != h.n())
                      return false;
                    const CycleData ch = unique_cycle(h);
                    if (ch.length >= h.n()) return false;
                    const bool a = skew_rank(h) ==
                                   min_girth_bound(h.n(), ch.length);
                    return a != extremal_shape(h).value;
                  });
          });
    });
  }
  std::ostringstream note;
  note << "attaining case1=" << case1 << " case2=" << case2;
  rep.notes.push_back(note.str());
}

// ---- rank upper bounds by reduction class, order parity and cycle sign.
inline void check_reduction_bounds(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 4, 7);
  Sampler sampler(f.seed);
  std::uint64_t u1 = 0, u2 = 0, confluent_count = 0;
  for (int n = std::max(4, lo); n <= hi; ++n) {
    for_each_unicyclic(n, [&](const EdgeList& edges) {
      orientation_policy(
          n, edges, f.sample, sampler, [&](const OrientedGraph& g, std::uint64_t) {
            const CycleData c = unique_cycle(g);
            if (c.length >= g.n()) return;  // bounds stated for k < n
            ++rep.instances_checked;
            const DeltaClassification dc = delta_class(g);
            (dc.klass == DeltaClass::U1 ? u1 : u2) += 1;
            if (dc.confluent) ++confluent_count;
            const int bound =
                u_class_rank_bound(g.n(), c.length, dc.klass, c.sign);
            const int r = skew_rank(g);
            if (r > bound)
              add_violation(rep, g,
                            "rank <= class bound " + std::to_string(bound),
                            "rank " + std::to_string(r),
                            [](const OrientedGraph& h) {
                              if (!is_connected(h) || h.arc_count() != h.n())
                                return false;
                              const CycleData ch = unique_cycle(h);
                              if (ch.length >= h.n()) return false;
                              const DeltaClassification dh = delta_class(h);
                              return skew_rank(h) >
                                     u_class_rank_bound(h.n(), ch.length,
                                                        dh.klass, ch.sign);
                            });
          });
    });
  }
  std::ostringstream note;
  note << "U1=" << u1 << " U2=" << u2 << " confluent=" << confluent_count
       << "/" << (u1 + u2);
  rep.notes.push_back(note.str());
}

// ---- the reduction class is independent of pendant removal order.
inline void check_confluence(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 3, 6);
  Sampler sampler(f.seed);
  for (int n = std::max(3, lo); n <= hi; ++n) {
    for_each_unicyclic(n, [&](const EdgeList& edges) {
      orientation_policy(n, edges, f.sample, sampler,
                         [&](const OrientedGraph& g, std::uint64_t) {
                           ++rep.instances_checked;
                           const DeltaClassification dc = delta_class(g);
                           if (!dc.confluent)
                             add_violation(
                                 rep, g, "single outcome over all orders",
                                 "order-dependent reduction class",
                                 [](const OrientedGraph& h) {
                                   if (!is_connected(h) ||
                                       h.arc_count() != h.n())
                                     return false;
                                   return !delta_class(h).confluent;
                                 });
                         });
    });
  }
}

// ---- even-order unicyclic nonsingularity versus the determinant.
inline void check_nonsingular(const EnumFilter& f, VerifyReport& rep) {
  const auto [lo, hi] = resolve(f, 4, 6);
  Sampler sampler(f.seed);
  for (int n = std::max(4, lo); n <= hi; ++n) {
    if (n % 2 != 0) continue;
    for_each_unicyclic(n, [&](const EdgeList& edges) {
      orientation_policy(
          n, edges, f.sample, sampler, [&](const OrientedGraph& g, std::uint64_t) {
            ++rep.instances_checked;
            const NonsingularReport r = nonsingular_unicyclic(g);
            const BigInt det = determinant_exact(skew_adjacency(g));
            if (det < 0)
              add_violation(rep, g, "determinant nonnegative at even order",
                            "negative determinant",
                            [](const OrientedGraph& h) {
                              return h.n() % 2 == 0 &&
                                     determinant_exact(skew_adjacency(h)) < 0;
                            });
            if (r.value != (det != 0))
              add_violation(
                  rep, g,
                  std::string("criterion says ") + (det != 0 ? "true" : "false"),
                  r.value ? "true" : "false",
                  [](const OrientedGraph& h) {
                    if (!is_connected(h) || h.arc_count() != h.n() ||
                        h.n() % 2 != 0)
                      return false;
                    return nonsingular_unicyclic(h).value !=
                           (determinant_exact(skew_adjacency(h)) != 0);
                  });
          });
    });
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Registry and entry point.
// ---------------------------------------------------------------------------

struct TheoremCheck {
  std::string id;
  std::string summary;  // what the check verifies, functionally
  std::function<void(const EnumFilter&, VerifyReport&)> run;
};

inline const std::vector<TheoremCheck>& verify_registry() {
  static const std::vector<TheoremCheck> registry = {
      {"lemma2.1",
       "rank fundamentals: evenness, 0 <= rank <= min(n, 2*beta), component "
       "additivity, induced-subgraph monotonicity, rank 0 iff edgeless",
       detail::check_rank_fundamentals},
      {"lemma2.2", "trees: rank = 2 * matching number, any orientation",
       detail::check_tree_rank},
      {"lemma2.3", "paths: rank n when n even, n-1 when n odd",
       detail::check_path_rank},
      {"lemma2.4",
       "cycles: rank n / n-2 / n-1 for negative / positive / odd-length",
       detail::check_cycle_rank},
      {"lemma2.5",
       "pendant deletion with its neighbor drops the rank by exactly 2",
       detail::check_delta_step},
      {"lemma2.7", "uniform/opposite twin deletion preserves the rank",
       detail::check_twin_deletion},
      {"lemma2.8", "pendant twins are twins and their deletion preserves rank",
       detail::check_pendant_twins},
      {"lemma2.9",
       "complete multipartite with positive 4-cycles: same-part vertices are "
       "twins",
       detail::check_partite_twins},
      {"theorem3.1", "rank-2 catalog at orders 2..4 matches the exact rank",
       detail::check_rank2_small},
      {"lemma3.2",
       "connected graph is not complete multipartite iff it has one of the "
       "three forbidden 4-vertex patterns",
       detail::check_forbidden_patterns},
      {"theorem3.3",
       "order >= 5: rank 2 iff complete bi/tripartite with positive 4-cycles",
       detail::check_rank2_large},
      {"theorem3.4",
       "graphs with a pendant: rank 4 iff star-plus-core decomposition",
       detail::check_rank4_pendant},
      {"theorem3.5",
       "derived unicyclic rank-4 catalog: membership tracks exact rank, "
       "bare-cycle branches, pendant classifier agreement",
       [](const EnumFilter& f, VerifyReport& r) {
         detail::check_catalog(f, r, CatalogClass::Unicyclic);
       }},
      {"theorem3.6",
       "derived bicyclic-with-pendant rank-4 catalog: membership tracks "
       "exact rank and the pendant classifier",
       [](const EnumFilter& f, VerifyReport& r) {
         detail::check_catalog(f, r, CatalogClass::Bicyclic);
       }},
      {"lemma4.1",
       "characteristic polynomial coefficients equal signed basic-subgraph "
       "counts",
       detail::check_coefficients},
      {"lemma4.1-coefficients",
       "characteristic polynomial coefficients equal signed basic-subgraph "
       "counts",
       detail::check_coefficients},
      {"theorem4.2",
       "unicyclic rank via top coefficients: prediction equals exact rank",
       detail::check_unicyclic_rank},
      {"theorem4.2-coefficient",
       "unicyclic rank via top coefficients: prediction equals exact rank",
       detail::check_unicyclic_rank},
      {"theorem4.2-literal",
       "unicyclic rank by the stated branch rule taken literally; the "
       "violation set is the documented discrepancy",
       detail::check_unicyclic_literal},
      {"theorem4.3",
       "unicyclic with a tree part: rank >= girth bound; the one-vertex "
       "pendant family attains it",
       detail::check_girth_bound},
      {"lemma4.4",
       "tree joined at one vertex: rank splits by saturation of the joint",
       detail::check_tree_attachment},
      {"theorem4.5",
       "unicyclic split at a saturated cycle vertex or at the cycle: rank "
       "identity",
       detail::check_unicyclic_decomposition},
      {"theorem4.6",
       "girth bound attained iff star-split or cycle-bridge-star shape",
       detail::check_extremal},
      {"theorem5.1",
       "unicyclic rank upper bounds by reduction class, parity and sign",
       detail::check_reduction_bounds},
      {"theorem5.1-confluence",
       "pendant reduction outcome independent of removal order",
       detail::check_confluence},
      {"theorem5.2",
       "even-order unicyclic: nonsingular iff the class criterion holds",
       detail::check_nonsingular},
  };
  return registry;
}

inline std::vector<std::string> verify_ids() {
  std::vector<std::string> ids;
  for (const TheoremCheck& c : verify_registry()) ids.push_back(c.id);
  return ids;
}

inline VerifyReport verify(const std::string& theorem_id,
                           const EnumFilter& filter) {
  for (const TheoremCheck& check : verify_registry()) {
    if (check.id != theorem_id) continue;
    VerifyReport report;
    report.theorem_id = theorem_id;
    report.filter = filter;
    const auto t0 = std::chrono::steady_clock::now();
    check.run(filter, report);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
  }
  fail(ErrorKind::UnknownTheorem, "no checker registered for " + theorem_id);
}

}  // namespace skewrank

#endif  // SKEWRANK_VERIFY_HPP
