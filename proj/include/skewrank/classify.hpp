#ifndef SKEWRANK_CLASSIFY_HPP
#define SKEWRANK_CLASSIFY_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "skewrank/basic_subgraphs.hpp"
#include "skewrank/enumerate.hpp"
#include "skewrank/errors.hpp"
#include "skewrank/exact_linalg.hpp"
#include "skewrank/matching.hpp"
#include "skewrank/multipartite.hpp"
#include "skewrank/oriented_graph.hpp"
#include "skewrank/reductions.hpp"

namespace skewrank {

// ---------------------------------------------------------------------------
// Skew-rank 2.
// ---------------------------------------------------------------------------

struct Rank2Classification {
  bool value = false;
  std::string rule;  // matched case, or the reason the test failed
  std::vector<std::vector<Vertex>> parts;
  int four_cycles_checked = 0;
};

namespace detail {

// Shared core rule: connected underlying graph is complete bipartite or
// tripartite and every 4-vertex cycle has positive sign. For orders 2..4
// this coincides exactly with the small-order rank-2 catalog.
inline bool rank2_core_rule(const OrientedGraph& g,
                            std::vector<std::vector<Vertex>>& parts,
                            int& cycles_checked, std::string& why) {
  auto partition = complete_multipartite_partition(g);
  if (!partition) {
    why = "not-complete-multipartite";
    return false;
  }
  if (partition->size() != 2 && partition->size() != 3) {
    why = "part-count-not-2-or-3";
    return false;
  }
  parts = *partition;
  const auto cycles = four_cycles(g);
  cycles_checked = static_cast<int>(cycles.size());
  for (const CycleData& c : cycles)
    if (c.sign != CycleSign::Positive) {
      why = "negative-four-cycle";
      return false;
    }
  return true;
}

}  // namespace detail

inline Rank2Classification rank2_classify(const OrientedGraph& g) {
  if (!is_connected(g))
    fail(ErrorKind::Disconnected, "rank-2 classification needs a connected graph");
  if (g.n() < 2)
    fail(ErrorKind::InvalidParameter, "rank-2 classification needs order >= 2");
  Rank2Classification out;
  const int n = g.n();
  if (n <= 4) {
    // Small-order catalog, keyed by edge count and sorted degree sequence.
    std::vector<int> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::sort(deg.begin(), deg.end());
    const int m = g.arc_count();
    auto cycle0_positive = [&g]() {
      const auto cycles = four_cycles(g);
      return !cycles.empty() && cycles[0].sign == CycleSign::Positive;
    };
    if (n == 2) {
      out.value = true;
      out.rule = "single-edge";
    } else if (n == 3) {
      out.value = true;
      out.rule = m == 3 ? "triangle" : "path-3";
    } else if (m == 3 && deg == std::vector<int>{1, 1, 1, 3}) {
      out.value = true;
      out.rule = "star-4";
    } else if (m == 4 && deg == std::vector<int>{2, 2, 2, 2}) {
      out.value = cycle0_positive();
      out.rule = out.value ? "four-cycle-positive" : "four-cycle-negative";
      out.four_cycles_checked = 1;
    } else if (m == 5) {
      out.value = cycle0_positive();
      out.rule = out.value ? "diamond-positive" : "diamond-negative";
      out.four_cycles_checked = 1;
    } else if (m == 3 && deg == std::vector<int>{1, 1, 2, 2}) {
      out.rule = "path-4";
    } else if (m == 4) {
      out.rule = "triangle-plus-pendant";
    } else {
      out.rule = "complete-4";
    }
    if (out.value) {
      auto partition = complete_multipartite_partition(g);
      if (partition) out.parts = *partition;
    }
    return out;
  }
  std::string why;
  out.value = detail::rank2_core_rule(g, out.parts, out.four_cycles_checked, why);
  out.rule = out.value
                 ? (out.parts.size() == 2 ? "complete-bipartite-positive"
                                          : "complete-tripartite-positive")
                 : why;
  return out;
}

// ---------------------------------------------------------------------------
// Skew-rank 4 for graphs with a pendant vertex.
// ---------------------------------------------------------------------------

struct Rank4Classification {
  bool value = false;
  Vertex center = -1;                         // carries every pendant leaf
  std::vector<Vertex> leaves;                 // the pendants at the center
  std::vector<std::vector<Vertex>> core_parts;
  int four_cycles_checked = 0;
  std::string note;
};

inline Rank4Classification rank4_pendant_classify(const OrientedGraph& g) {
  if (!is_connected(g))
    fail(ErrorKind::Disconnected, "rank-4 classification needs a connected graph");
  const auto pendants = pendant_vertices(g);
  if (pendants.empty())
    fail(ErrorKind::NotAPendant, "rank-4 classification needs a pendant vertex");
  Rank4Classification out;
  // Candidate star centers: every neighbor of a pendant vertex. If the
  // graph has rank 4, each candidate yields a valid decomposition (the
  // star takes exactly the pendants at that center and the rest is the
  // core); if none matches, no decomposition exists.
  std::vector<Vertex> centers;
  for (const auto& [pendant, neighbor] : pendants) centers.push_back(neighbor);
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  std::string first_reason;
  for (Vertex c : centers) {
    std::vector<Vertex> leaves, core;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (v == c) continue;
      if (g.degree(v) == 1 && g.has_edge(v, c))
        leaves.push_back(v);
      else
        core.push_back(v);
    }
    std::string why;
    if (core.size() < 2) {
      why = "core-too-small";
    } else {
      const OrientedGraph core_graph = induced_subgraph(g, core);
      if (!is_connected(core_graph)) {
        why = "core-disconnected";
      } else {
        std::vector<std::vector<Vertex>> parts;
        int checked = 0;
        if (detail::rank2_core_rule(core_graph, parts, checked, why)) {
          out.value = true;
          out.center = c;
          out.leaves = leaves;
          out.four_cycles_checked = checked;
          for (const auto& part : parts) {
            std::vector<Vertex> original;
            for (Vertex v : part) original.push_back(core[v]);
            out.core_parts.push_back(original);
          }
          out.note = parts.size() == 2 ? "star-plus-bipartite-core"
                                       : "star-plus-tripartite-core";
          return out;
        }
        why = "core-" + why;
      }
    }
    if (first_reason.empty()) first_reason = why;
  }
  out.note = first_reason;
  return out;
}

// ---------------------------------------------------------------------------
// Unicyclic rank formula: stated branch rule versus coefficient route.
// ---------------------------------------------------------------------------

struct UnicyclicRankReport {
  int beta = 0;
  int girth = 0;
  CycleSign cycle_sign = CycleSign::Undefined;
  int beta_minus_cycle = 0;  // matching number of g with the cycle removed
  bool stated_condition = false;  // cycle positive and beta == 2*beta_minus_cycle
  int literal = 0;      // prediction following the stated branch rule
  int coefficient = 0;  // prediction from the top coefficients
  int actual = 0;
  BigInt a_top = 0;   // coefficient at lambda^(n - 2*beta)
  BigInt a_next = 0;  // coefficient at lambda^(n - 2*beta + 2)
};

inline UnicyclicRankReport unicyclic_rank_predicted(const OrientedGraph& g) {
  const UnicyclicTopCoefficients coeff = unicyclic_max_coeff(g);
  const CycleData cycle = unique_cycle(g);
  UnicyclicRankReport out;
  out.beta = coeff.beta;
  out.girth = cycle.length;
  out.cycle_sign = cycle.sign;
  {
    std::vector<Vertex> rest;
    std::vector<bool> on_cycle(g.n(), false);
    for (Vertex v : cycle.vertices) on_cycle[v] = true;
    for (Vertex v = 0; v < g.n(); ++v)
      if (!on_cycle[v]) rest.push_back(v);
    out.beta_minus_cycle = matching_number(induced_subgraph(g, rest));
  }
  out.stated_condition = cycle.sign == CycleSign::Positive &&
                         out.beta == 2 * out.beta_minus_cycle;
  out.literal = out.stated_condition ? 2 * out.beta - 2 : 2 * out.beta;
  out.a_top = coeff.top;
  out.a_next = coeff.next;
  out.coefficient = coeff.top != 0 ? 2 * out.beta : 2 * out.beta - 2;
  out.actual = skew_rank(g);
  return out;
}

// ---------------------------------------------------------------------------
// Girth lower bound.
// ---------------------------------------------------------------------------

inline int min_girth_bound(int n, int k) {
  if (k < 3 || k >= n)
    fail(ErrorKind::InvalidParameter, "girth bound needs 3 <= k < n");
  return k % 2 == 0 ? k : k + 1;
}

// ---------------------------------------------------------------------------
// Pendant-tree decomposition of a unicyclic graph.
// ---------------------------------------------------------------------------

struct RootedTree {
  Vertex root = -1;                  // cycle vertex, original label
  OrientedGraph tree;                // component of root after cycle edges go
  std::vector<Vertex> to_original;   // tree label -> original label
  int root_index = -1;               // root's label inside `tree`
  bool saturated = false;            // root covered by every maximum matching
};

struct PendantTreeDecomposition {
  CycleData cycle;
  std::vector<RootedTree> trees;  // one per cycle vertex, ascending root
  int case_id = 0;                // 1: split at a saturated root; 2: cycle split
  Vertex split_vertex = -1;       // case 1 root
  int lhs = 0;                    // skew-rank of the whole graph
  int part1 = 0;                  // case 1: rank of the split tree; case 2: cycle
  int part2 = 0;                  // rank of the complement of part1
  bool identity_holds = false;
};

namespace detail {

inline std::vector<RootedTree> rooted_trees(const OrientedGraph& g,
                                            const CycleData& cycle) {
  const int n = g.n();
  std::vector<bool> on_cycle(n, false);
  for (Vertex v : cycle.vertices) on_cycle[v] = true;
  // Forest adjacency: every edge except the cycle's own edges.
  std::vector<std::vector<Vertex>> adj(n);
  for (const Arc& a : g.arcs()) {
    const bool cycle_edge =
        on_cycle[a.tail] && on_cycle[a.head] &&
        [&] {
          const int k = cycle.length;
          for (int i = 0; i < k; ++i) {
            const Vertex x = cycle.vertices[i];
            const Vertex y = cycle.vertices[(i + 1) % k];
            if ((a.tail == x && a.head == y) || (a.tail == y && a.head == x))
              return true;
          }
          return false;
        }();
    if (cycle_edge) continue;
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  std::vector<int> owner(n, -1);
  std::vector<RootedTree> trees;
  std::vector<Vertex> roots(cycle.vertices);
  std::sort(roots.begin(), roots.end());
  for (Vertex r : roots) {
    std::vector<Vertex> members = {r};
    owner[r] = r;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Vertex w : adj[members[i]]) {
        if (owner[w] == r) continue;
        if (owner[w] != -1)
          fail(ErrorKind::Internal, "tree components overlap");
        owner[w] = r;
        members.push_back(w);
      }
    std::sort(members.begin(), members.end());
    RootedTree t;
    t.root = r;
    t.tree = induced_subgraph(g, members);
    t.to_original = members;
    t.root_index = static_cast<int>(
        std::lower_bound(members.begin(), members.end(), r) - members.begin());
    t.saturated = t.tree.arc_count() > 0 && is_saturated(t.tree, t.root_index);
    trees.push_back(std::move(t));
  }
  for (Vertex v = 0; v < n; ++v)
    if (owner[v] == -1) fail(ErrorKind::Internal, "vertex missed by tree split");
  return trees;
}

inline std::vector<Vertex> complement_of(int n, const std::vector<Vertex>& set) {
  std::vector<bool> in(n, false);
  for (Vertex v : set) in[v] = true;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

}  // namespace detail

inline PendantTreeDecomposition pendant_tree_decompose(const OrientedGraph& g) {
  PendantTreeDecomposition out;
  out.cycle = unique_cycle(g);  // validates connected unicyclic
  out.trees = detail::rooted_trees(g, out.cycle);
  out.lhs = skew_rank(g);
  const RootedTree* split = nullptr;
  for (const RootedTree& t : out.trees)
    if (t.saturated) {
      split = &t;
      break;
    }
  if (split != nullptr) {
    out.case_id = 1;
    out.split_vertex = split->root;
    out.part1 = skew_rank(split->tree);
    out.part2 = skew_rank(
        induced_subgraph(g, detail::complement_of(g.n(), split->to_original)));
  } else {
    out.case_id = 2;
    std::vector<Vertex> cyc(out.cycle.vertices);
    std::sort(cyc.begin(), cyc.end());
    out.part1 = skew_rank(induced_subgraph(g, cyc));
    out.part2 =
        skew_rank(induced_subgraph(g, detail::complement_of(g.n(), cyc)));
  }
  out.identity_holds = out.lhs == out.part1 + out.part2;
  return out;
}

// ---------------------------------------------------------------------------
// Extremal unicyclic graphs attaining the girth bound.
// ---------------------------------------------------------------------------

struct ExtremalClassification {
  bool value = false;
  int case_id = 0;  // 1: saturated star split; 2: cycle-bridge-star shape
  Vertex star_root = -1;             // case 1: the saturated cycle vertex
  std::vector<Vertex> star_members;  // case 1: its whole tree
  int remainder_beta = -1;           // case 1: matching number of the rest
  Vertex bridge_vertex = -1;         // case 2: cycle vertex joined to the star
  Vertex star_center = -1;           // case 2: the star's center
  std::string note;
};

// Structural match alone (no rank precondition); used to test both
// directions of the characterization.
inline ExtremalClassification extremal_shape(const OrientedGraph& g) {
  const CycleData cycle = unique_cycle(g);
  const int n = g.n();
  const int k = cycle.length;
  ExtremalClassification out;
  if (k >= n) {
    out.note = "no-tree-part";
    return out;
  }
  const auto trees = detail::rooted_trees(g, cycle);
  const bool any_saturated =
      std::any_of(trees.begin(), trees.end(),
                  [](const RootedTree& t) { return t.saturated; });
  const int target_beta = k % 2 == 0 ? (k - 2) / 2 : (k - 1) / 2;
  if (any_saturated) {
    for (const RootedTree& t : trees) {
      if (!t.saturated) continue;
      bool star_at_root = t.tree.arc_count() > 0;
      for (const Arc& a : t.tree.arcs())
        if (a.tail != t.root_index && a.head != t.root_index)
          star_at_root = false;
      if (!star_at_root) continue;
      const int rest_beta = matching_number(
          induced_subgraph(g, detail::complement_of(n, t.to_original)));
      if (rest_beta != target_beta) continue;
      out.value = true;
      out.case_id = 1;
      out.star_root = t.root;
      out.star_members = t.to_original;
      out.remainder_beta = rest_beta;
      out.note = "saturated-star-split";
      return out;
    }
    out.note = "saturated-root-but-no-star-split";
    return out;
  }
  // No saturated cycle vertex: the shape must be cycle + bridge + star.
  std::vector<bool> on_cycle(n, false);
  for (Vertex v : cycle.vertices) on_cycle[v] = true;
  Vertex s = -1, w = -1;
  int cross_edges = 0;
  for (const Arc& a : g.arcs()) {
    const bool tc = on_cycle[a.tail], hc = on_cycle[a.head];
    if (tc == hc) continue;
    ++cross_edges;
    s = tc ? a.head : a.tail;
    w = tc ? a.tail : a.head;
  }
  if (cross_edges != 1) {
    out.note = "not-a-single-bridge";
    return out;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (on_cycle[v] || v == s) continue;
    if (g.degree(v) != 1 || !g.has_edge(v, s)) {
      out.note = "outside-vertices-not-a-star";
      return out;
    }
  }
  if (k % 2 == 0 && cycle.sign != CycleSign::Positive) {
    out.note = "even-cycle-not-positively-signed";
    return out;
  }
  out.value = true;
  out.case_id = 2;
  out.bridge_vertex = w;
  out.star_center = s;
  out.note = "cycle-bridge-star";
  return out;
}

inline ExtremalClassification extremal_min_classify(const OrientedGraph& g) {
  const CycleData cycle = unique_cycle(g);
  if (cycle.length >= g.n())
    fail(ErrorKind::PreconditionViolation,
         "extremal classification needs a tree part (girth < order)");
  const int bound = min_girth_bound(g.n(), cycle.length);
  const int rank = skew_rank(g);
  if (rank != bound)
    fail(ErrorKind::PreconditionViolation,
         "rank " + std::to_string(rank) + " does not attain the girth bound " +
             std::to_string(bound));
  return extremal_shape(g);
}

// ---------------------------------------------------------------------------
// Nonsingularity of even-order unicyclic graphs.
// ---------------------------------------------------------------------------

struct NonsingularReport {
  bool value = false;
  DeltaClass klass = DeltaClass::U1;
  bool confluent = true;  // outcome independent of pendant removal order
  CycleSign cycle_sign = CycleSign::Undefined;
  bool pm_whole = false;  // perfect matching of the whole graph
  bool pm_rest = false;   // perfect matching of the graph minus the cycle
};

inline NonsingularReport nonsingular_unicyclic(const OrientedGraph& g) {
  if (g.n() % 2 != 0)
    fail(ErrorKind::OddOrder, "nonsingularity test needs even order");
  const CycleData cycle = unique_cycle(g);
  const DeltaClassification dc = delta_class(g);
  NonsingularReport out;
  out.klass = dc.klass;
  out.confluent = dc.confluent;
  out.cycle_sign = cycle.sign;
  out.pm_whole = has_perfect_matching(g);
  {
    std::vector<Vertex> cyc(cycle.vertices);
    std::sort(cyc.begin(), cyc.end());
    out.pm_rest = has_perfect_matching(
        induced_subgraph(g, detail::complement_of(g.n(), cyc)));
  }
  out.value = dc.klass == DeltaClass::U1
                  ? out.pm_whole
                  : cycle.sign == CycleSign::Negative && out.pm_rest;
  return out;
}

// Rank upper bound for a unicyclic graph by reduction class, order parity,
// and (for an even cycle) the cycle sign.
inline int u_class_rank_bound(int n, int k, DeltaClass klass, CycleSign sign) {
  if (klass == DeltaClass::U1) return n % 2 == 0 ? n : n - 1;
  if (k % 2 != 0) return n % 2 == 0 ? n - 2 : n - 1;
  if (sign == CycleSign::Negative) return n % 2 == 0 ? n : n - 1;
  if (sign == CycleSign::Positive) return n % 2 == 0 ? n - 2 : n - 3;
  fail(ErrorKind::InvalidParameter, "even cycle needs a defined sign");
}

// ---------------------------------------------------------------------------
// Derived rank-4 catalogs.
// ---------------------------------------------------------------------------

enum class CatalogClass { Unicyclic, Bicyclic };

struct CatalogEntry {
  EdgeList edges;                    // underlying graph, sorted edge list
  int orientation_bits = 0;          // number of edges
  std::vector<bool> achieving;       // by orientation mask: rank == 4
  std::uint64_t achieving_count = 0;
  std::string condition;  // all | cycle-oddly-oriented | cycle-evenly-oriented
                          // | four-cycles-evenly-oriented | other
};

// Whether one oriented instance satisfies a catalog entry's condition label.
inline bool catalog_condition_matches(const std::string& condition,
                                      const OrientedGraph& g) {
  if (condition == "all") return true;
  if (condition == "cycle-oddly-oriented")
    return unique_cycle(g).sign == CycleSign::Negative;
  if (condition == "cycle-evenly-oriented")
    return unique_cycle(g).sign == CycleSign::Positive;
  if (condition == "four-cycles-evenly-oriented") {
    for (const CycleData& c : four_cycles(g))
      if (c.sign != CycleSign::Positive) return false;
    return true;
  }
  fail(ErrorKind::InvalidParameter, "unrecognized condition label: " + condition);
}

inline std::vector<CatalogEntry> catalog_rank4(int n, CatalogClass klass) {
  if (n < 3 || n > 8)
    fail(ErrorKind::BoundExceeded, "rank-4 catalog limited to 3 <= n <= 8");
  std::vector<CatalogEntry> out;
  auto handle = [&out, n, klass](const EdgeList& edges) {
    if (klass == CatalogClass::Bicyclic) {
      std::vector<int> deg(n, 0);
      for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
      }
      if (std::count(deg.begin(), deg.end(), 1) == 0) return;  // needs pendants
    }
    CatalogEntry entry;
    entry.edges = edges;
    entry.orientation_bits = static_cast<int>(edges.size());
    const std::uint64_t total = std::uint64_t(1) << edges.size();
    entry.achieving.assign(total, false);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const OrientedGraph g = orient(n, edges, mask);
      if (skew_rank(g) == 4) {
        entry.achieving[mask] = true;
        ++entry.achieving_count;
      }
    }
    if (entry.achieving_count == 0) return;
    // Label the achieving set when it matches a recognizable condition.
    std::vector<std::string> candidates = {"all"};
    if (klass == CatalogClass::Unicyclic) {
      candidates.push_back("cycle-oddly-oriented");
      candidates.push_back("cycle-evenly-oriented");
    }
    candidates.push_back("four-cycles-evenly-oriented");
    entry.condition = "other";
    for (const std::string& cand : candidates) {
      bool exact = true;
      for (std::uint64_t mask = 0; mask < total && exact; ++mask) {
        const OrientedGraph g = orient(n, edges, mask);
        if (entry.achieving[mask] != catalog_condition_matches(cand, g))
          exact = false;
      }
      if (exact) {
        entry.condition = cand;
        break;
      }
    }
    out.push_back(std::move(entry));
  };
  if (klass == CatalogClass::Unicyclic)
    for_each_unicyclic(n, handle);
  else
    for_each_bicyclic(n, handle);
  return out;
}

}  // namespace skewrank

#endif  // SKEWRANK_CLASSIFY_HPP
