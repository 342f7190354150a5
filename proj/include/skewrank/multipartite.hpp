#ifndef SKEWRANK_MULTIPARTITE_HPP
#define SKEWRANK_MULTIPARTITE_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "skewrank/errors.hpp"
#include "skewrank/oriented_graph.hpp"

namespace skewrank {

// Complete multipartite recognition on the underlying graph. A connected
// graph is complete multipartite iff its complement is a disjoint union of
// cliques; the parts are then exactly the complement components. Returns the
// parts sorted by smallest member, or nullopt. Requires a connected input.
inline std::optional<std::vector<std::vector<Vertex>>>
complete_multipartite_partition(const OrientedGraph& g) {
  if (!is_connected(g))
    fail(ErrorKind::Disconnected,
         "complete_multipartite_partition: graph is not connected");
  const int n = g.n();
  // Complement components.
  std::vector<int> part(n, -1);
  std::vector<Vertex> stack;
  int count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (part[s] != -1) continue;
    part[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u = 0; u < n; ++u)
        if (u != v && g.sign(v, u) == 0 && part[u] == -1) {
          part[u] = count;
          stack.push_back(u);
        }
    }
    ++count;
  }
  // Cross-part pairs are adjacent automatically (a complement non-edge);
  // same-part pairs must all be non-adjacent.
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part[u] == part[v] && g.has_edge(u, v)) return std::nullopt;
  std::vector<std::vector<Vertex>> parts(count);
  for (Vertex v = 0; v < n; ++v) parts[part[v]].push_back(v);
  return parts;
}

// Induced 4-vertex patterns that certify a connected graph is not complete
// multipartite. On 4 vertices the (edge count, degree multiset) pair pins
// each pattern down uniquely.
enum class ForbiddenPattern {
  P4,     // induced path on 4 vertices
  TriPlus,  // triangle with a pendant edge
  TwoK2,  // two independent edges with no edge between them
};

struct ForbiddenWitness {
  ForbiddenPattern pattern;
  std::array<Vertex, 4> vertices;  // ascending
};

inline const char* to_string(ForbiddenPattern p) {
  switch (p) {
    case ForbiddenPattern::P4:
      return "P4";
    case ForbiddenPattern::TriPlus:
      return "triangle-plus-pendant";
    case ForbiddenPattern::TwoK2:
      return "2xK2";
  }
  return "?";
}

// Scans vertex quadruples in lexicographic order; returns the first induced
// P4 / triangle-plus-pendant / 2xK2 found, or nullopt when the graph is
// clean. For connected inputs clean coincides with
// complete_multipartite_partition succeeding.
inline std::optional<ForbiddenWitness> forbidden_subgraph_scan(
    const OrientedGraph& g) {
  if (!is_connected(g))
    fail(ErrorKind::Disconnected,
         "forbidden_subgraph_scan: graph is not connected");
  const int n = g.n();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          const std::array<Vertex, 4> q = {a, b, c, d};
          int edges = 0;
          std::array<int, 4> deg = {0, 0, 0, 0};
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.has_edge(q[i], q[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
          std::array<int, 4> sd = deg;
          std::sort(sd.begin(), sd.end());
          if (edges == 2 && sd == std::array<int, 4>{1, 1, 1, 1})
            return ForbiddenWitness{ForbiddenPattern::TwoK2, q};
          if (edges == 3 && sd == std::array<int, 4>{1, 1, 2, 2})
            return ForbiddenWitness{ForbiddenPattern::P4, q};
          if (edges == 4 && sd == std::array<int, 4>{1, 2, 2, 3})
            return ForbiddenWitness{ForbiddenPattern::TriPlus, q};
        }
  return std::nullopt;
}

}  // namespace skewrank

#endif  // SKEWRANK_MULTIPARTITE_HPP
