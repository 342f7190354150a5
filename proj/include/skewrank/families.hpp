#ifndef SKEWRANK_FAMILIES_HPP
#define SKEWRANK_FAMILIES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "skewrank/errors.hpp"
#include "skewrank/oriented_graph.hpp"

namespace skewrank {

// Named graph families with fixed vertex layouts:
//   Path                0-1-...-(n-1)
//   Cycle               0-1-...-(n-1)-0
//   Star                center 0, leaves 1..n-1
//   CompleteMultipartite parts occupy consecutive labels in the given order
//   HFamily             cycle 0..k-1 plus n-k pendant edges at vertex 0
//   UStar               cycle 0..k-1, bridge 0-k, star center k,
//                       leaves k+1..n-1
//   TrianglePendant     triangle 0,1,2 plus pendant 3 at vertex 0 (order 4)
//   K112                parts {0},{1},{2,3} (order 4)
enum class Family {
  Path,
  Cycle,
  Star,
  CompleteMultipartite,
  HFamily,
  UStar,
  TrianglePendant,
  K112,
};

// How the underlying edges get their directions:
//   UniformCyclic    the family's distinguished cycle (when there is one)
//                    follows its traversal 0 -> 1 -> ... -> 0; every other
//                    edge points from the smaller to the larger label
//   AllFromFirstPart arcs run from the earlier part to the later part
//                    (CompleteMultipartite, K112, Star only)
//   ExplicitArcs     FamilySpec::arcs gives the arc list; it must cover the
//                    family's edge set exactly
//   SeedRandom       each edge flips a coin from mt19937_64(seed)
enum class OrientationRule {
  UniformCyclic,
  AllFromFirstPart,
  ExplicitArcs,
  SeedRandom,
};

struct FamilySpec {
  Family family = Family::Path;
  int n = 0;
  int k = 0;                    // cycle length for HFamily / UStar
  std::vector<int> parts;      // CompleteMultipartite part sizes
  OrientationRule rule = OrientationRule::UniformCyclic;
  std::vector<Arc> arcs;       // ExplicitArcs only
  std::uint64_t seed = 0;      // SeedRandom only
};

namespace detail {

struct FamilyShape {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // u < v, sorted
  int cycle_len = 0;  // distinguished cycle on labels 0..cycle_len-1, or 0
  std::vector<int> part_of;  // part index per vertex, empty if not partite
};

inline FamilyShape family_shape(const FamilySpec& spec) {
  FamilyShape s;
  auto edge = [&s](Vertex u, Vertex v) {
    s.edges.push_back({std::min(u, v), std::max(u, v)});
  };
  switch (spec.family) {
    case Family::Path:
      if (spec.n < 1) fail(ErrorKind::InvalidParameter, "path needs n >= 1");
      s.n = spec.n;
      for (int i = 0; i + 1 < spec.n; ++i) edge(i, i + 1);
      break;
    case Family::Cycle:
      if (spec.n < 3) fail(ErrorKind::InvalidParameter, "cycle needs n >= 3");
      s.n = spec.n;
      s.cycle_len = spec.n;
      for (int i = 0; i + 1 < spec.n; ++i) edge(i, i + 1);
      edge(spec.n - 1, 0);
      break;
    case Family::Star:
      if (spec.n < 1) fail(ErrorKind::InvalidParameter, "star needs n >= 1");
      s.n = spec.n;
      s.part_of.assign(spec.n, 1);
      s.part_of[0] = 0;
      for (int i = 1; i < spec.n; ++i) edge(0, i);
      break;
    case Family::CompleteMultipartite: {
      if (spec.parts.empty())
        fail(ErrorKind::InvalidParameter, "need at least one part");
      int n = 0;
      for (int p : spec.parts) {
        if (p < 1) fail(ErrorKind::InvalidParameter, "part sizes must be >= 1");
        n += p;
      }
      s.n = n;
      s.part_of.resize(n);
      int at = 0, part = 0;
      for (int p : spec.parts) {
        for (int i = 0; i < p; ++i) s.part_of[at + i] = part;
        at += p;
        ++part;
      }
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (s.part_of[u] != s.part_of[v]) edge(u, v);
      break;
    }
    case Family::HFamily:
      if (spec.k < 3 || spec.n <= spec.k)
        fail(ErrorKind::InvalidParameter, "H family needs n > k >= 3");
      s.n = spec.n;
      s.cycle_len = spec.k;
      for (int i = 0; i + 1 < spec.k; ++i) edge(i, i + 1);
      edge(spec.k - 1, 0);
      for (int i = spec.k; i < spec.n; ++i) edge(0, i);
      break;
    case Family::UStar:
      if (spec.k < 3 || spec.n <= spec.k)
        fail(ErrorKind::InvalidParameter, "U* needs n > k >= 3");
      s.n = spec.n;
      s.cycle_len = spec.k;
      for (int i = 0; i + 1 < spec.k; ++i) edge(i, i + 1);
      edge(spec.k - 1, 0);
      edge(0, spec.k);
      for (int i = spec.k + 1; i < spec.n; ++i) edge(spec.k, i);
      break;
    case Family::TrianglePendant:
      s.n = 4;
      s.cycle_len = 3;
      edge(0, 1);
      edge(1, 2);
      edge(2, 0);
      edge(0, 3);
      break;
    case Family::K112:
      s.n = 4;
      s.part_of = {0, 1, 2, 2};
      edge(0, 1);
      edge(0, 2);
      edge(0, 3);
      edge(1, 2);
      edge(1, 3);
      break;
  }
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

}  // namespace detail

inline OrientedGraph generate_family(const FamilySpec& spec) {
  const detail::FamilyShape shape = detail::family_shape(spec);
  std::vector<Arc> arcs;
  arcs.reserve(shape.edges.size());
  switch (spec.rule) {
    case OrientationRule::UniformCyclic:
      for (auto [u, v] : shape.edges) {
        // Closing edge {0, cycle_len-1} runs against the label order.
        if (shape.cycle_len > 0 && u == 0 && v == shape.cycle_len - 1)
          arcs.push_back({v, u});
        else
          arcs.push_back({u, v});
      }
      break;
    case OrientationRule::AllFromFirstPart:
      if (shape.part_of.empty())
        fail(ErrorKind::InvalidParameter,
             "all-from-first-part applies only to partite families");
      for (auto [u, v] : shape.edges) {
        if (shape.part_of[u] <= shape.part_of[v])
          arcs.push_back({u, v});
        else
          arcs.push_back({v, u});
      }
      break;
    case OrientationRule::ExplicitArcs: {
      std::vector<std::pair<Vertex, Vertex>> given;
      for (const Arc& a : spec.arcs)
        given.push_back({std::min(a.tail, a.head), std::max(a.tail, a.head)});
      std::sort(given.begin(), given.end());
      if (given != shape.edges)
        fail(ErrorKind::InvalidParameter,
             "explicit arc list does not match the family's edge set");
      arcs = spec.arcs;
      break;
    }
    case OrientationRule::SeedRandom: {
      std::mt19937_64 rng(spec.seed);
      for (auto [u, v] : shape.edges) {
        if (rng() & 1)
          arcs.push_back({u, v});
        else
          arcs.push_back({v, u});
      }
      break;
    }
  }
  return OrientedGraph(shape.n, std::move(arcs));
}

inline const char* to_string(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Star: return "star";
    case Family::CompleteMultipartite: return "complete-multipartite";
    case Family::HFamily: return "H_nk";
    case Family::UStar: return "U_star";
    case Family::TrianglePendant: return "G_1";
    case Family::K112: return "K_112";
  }
  return "?";
}

inline Family family_from_string(const std::string& s) {
  if (s == "path") return Family::Path;
  if (s == "cycle") return Family::Cycle;
  if (s == "star") return Family::Star;
  if (s == "complete-multipartite") return Family::CompleteMultipartite;
  if (s == "H_nk") return Family::HFamily;
  if (s == "U_star") return Family::UStar;
  if (s == "G_1") return Family::TrianglePendant;
  if (s == "K_112") return Family::K112;
  fail(ErrorKind::InvalidParameter, "unknown family \"" + s + "\"");
}

inline OrientationRule rule_from_string(const std::string& s) {
  if (s == "uniform-cyclic") return OrientationRule::UniformCyclic;
  if (s == "all-from-first-part") return OrientationRule::AllFromFirstPart;
  if (s == "seed-random") return OrientationRule::SeedRandom;
  fail(ErrorKind::InvalidParameter, "unknown orientation rule \"" + s + "\"");
}

}  // namespace skewrank

#endif  // SKEWRANK_FAMILIES_HPP
