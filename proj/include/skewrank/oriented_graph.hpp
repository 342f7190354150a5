#ifndef SKEWRANK_ORIENTED_GRAPH_HPP
#define SKEWRANK_ORIENTED_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewrank/errors.hpp"

namespace skewrank {

using Vertex = int;

// Arc tail -> head. Vertices are 0-indexed labels; there is no isomorphism
// canonicalization anywhere in the library, two graphs are equal only if
// their labeled arc sets are equal.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend bool operator==(const Arc& a, const Arc& b) {
    return a.tail == b.tail && a.head == b.head;
  }
  friend bool operator<(const Arc& a, const Arc& b) {
    return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
  }
};

// Simple oriented graph: at most one arc per unordered vertex pair, no loops.
// Arcs are kept sorted by (tail, head); the orientation sign of pair (i,j)
// is +1 if arc i->j exists, -1 if j->i exists, 0 if the pair is not an edge.
class OrientedGraph {
 public:
  OrientedGraph() = default;

  OrientedGraph(int n, std::vector<Arc> arcs) : n_(n) {
    if (n < 0) fail(ErrorKind::InvalidParameter, "vertex count must be >= 0");
    sign_.assign(static_cast<std::size_t>(n) * n, 0);
    degree_.assign(n, 0);
    std::sort(arcs.begin(), arcs.end());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const Arc a = arcs[i];
      if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
        fail(ErrorKind::VertexOutOfRange,
             "arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
                 " out of range for n=" + std::to_string(n));
      if (a.tail == a.head)
        fail(ErrorKind::LoopArc, "loop at vertex " + std::to_string(a.tail));
      if (i > 0 && arcs[i - 1] == a)
        fail(ErrorKind::DuplicateArc, "duplicate arc " +
                 std::to_string(a.tail) + "->" + std::to_string(a.head));
      if (sign(a.head, a.tail) != 0)
        fail(ErrorKind::OppositeArc, "both orientations of edge {" +
                 std::to_string(a.tail) + "," + std::to_string(a.head) +
                 "} listed");
      sign_[idx(a.tail, a.head)] = 1;
      sign_[idx(a.head, a.tail)] = -1;
      ++degree_[a.tail];
      ++degree_[a.head];
    }
    arcs_ = std::move(arcs);
  }

  int n() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  // +1: arc u->v, -1: arc v->u, 0: not an edge.
  int sign(Vertex u, Vertex v) const { return sign_[idx(u, v)]; }
  bool has_edge(Vertex u, Vertex v) const { return sign(u, v) != 0; }
  int degree(Vertex v) const { return degree_[v]; }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(degree_[v]);
    for (Vertex u = 0; u < n_; ++u)
      if (sign(v, u) != 0) out.push_back(u);
    return out;
  }

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }
  friend bool operator!=(const OrientedGraph& a, const OrientedGraph& b) {
    return !(a == b);
  }

 private:
  std::size_t idx(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::int8_t> sign_;
  std::vector<int> degree_;
};

inline OrientedGraph build_graph(int n, std::vector<Arc> arcs) {
  return OrientedGraph(n, std::move(arcs));
}

// Induced subgraph on `vertices` (must be strictly increasing labels of g).
// Vertex i of the result is vertices[i] in g.
inline OrientedGraph induced_subgraph(const OrientedGraph& g,
                                      const std::vector<Vertex>& vertices) {
  const int k = static_cast<int>(vertices.size());
  for (int i = 0; i < k; ++i) {
    if (vertices[i] < 0 || vertices[i] >= g.n())
      fail(ErrorKind::VertexOutOfRange, "induced_subgraph: vertex " +
               std::to_string(vertices[i]) + " out of range");
    if (i > 0 && vertices[i - 1] >= vertices[i])
      fail(ErrorKind::InvalidParameter,
           "induced_subgraph: vertex list must be strictly increasing");
  }
  std::vector<Arc> arcs;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (g.sign(vertices[i], vertices[j]) > 0) arcs.push_back({i, j});
  return OrientedGraph(k, std::move(arcs));
}

inline OrientedGraph delete_vertex(const OrientedGraph& g, Vertex v) {
  std::vector<Vertex> keep;
  keep.reserve(g.n() - 1);
  for (Vertex u = 0; u < g.n(); ++u)
    if (u != v) keep.push_back(u);
  if (static_cast<int>(keep.size()) == g.n())
    fail(ErrorKind::VertexOutOfRange, "delete_vertex: no such vertex");
  return induced_subgraph(g, keep);
}

struct Component {
  OrientedGraph graph;
  std::vector<Vertex> to_original;  // result label i -> original label
};

namespace detail {

// Underlying-graph component labels, -1 while unvisited.
inline std::vector<int> component_ids(const OrientedGraph& g) {
  std::vector<int> id(g.n(), -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (id[s] != -1) continue;
    id[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u = 0; u < g.n(); ++u)
        if (g.sign(v, u) != 0 && id[u] == -1) {
          id[u] = next;
          stack.push_back(u);
        }
    }
    ++next;
  }
  return id;
}

}  // namespace detail

inline bool is_connected(const OrientedGraph& g) {
  if (g.n() <= 1) return true;
  const std::vector<int> id = detail::component_ids(g);
  return *std::max_element(id.begin(), id.end()) == 0;
}

// Connected components of the underlying graph, each relabeled 0..k-1 in
// original label order, listed by smallest original vertex.
inline std::vector<Component> components(const OrientedGraph& g) {
  const std::vector<int> id = detail::component_ids(g);
  const int count = g.n() == 0 ? 0 : *std::max_element(id.begin(), id.end()) + 1;
  std::vector<std::vector<Vertex>> members(count);
  for (Vertex v = 0; v < g.n(); ++v) members[id[v]].push_back(v);
  std::vector<Component> out;
  out.reserve(count);
  for (auto& m : members)
    out.push_back({induced_subgraph(g, m), std::move(m)});
  return out;
}

// (pendant, its unique neighbor) pairs, ascending by pendant label.
inline std::vector<std::pair<Vertex, Vertex>> pendant_vertices(
    const OrientedGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) == 1) {
      for (Vertex u = 0; u < g.n(); ++u)
        if (g.sign(v, u) != 0) {
          out.push_back({v, u});
          break;
        }
    }
  return out;
}

// Shortest cycle length of the underlying graph; nullopt when acyclic.
inline std::optional<int> girth(const OrientedGraph& g) {
  const int n = g.n();
  int best = 0;
  std::vector<int> dist(n), parent(n);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    dist[s] = 0;
    parent[s] = -1;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex u = 0; u < n; ++u) {
        if (g.sign(v, u) == 0) continue;
        if (dist[u] == -1) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          queue.push_back(u);
        } else if (u != parent[v]) {
          int len = dist[v] + dist[u] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  if (best == 0) return std::nullopt;
  return best;
}

// Sign of an even cycle: the product over consecutive traversal arcs of +1
// (arc agrees with the traversal direction) or -1 (arc opposes it). For even
// length the product does not depend on traversal direction or start vertex;
// odd cycles get Undefined.
enum class CycleSign { Positive, Negative, Undefined };

struct CycleData {
  std::vector<Vertex> vertices;  // traversal order, canonical start/direction
  int length = 0;
  CycleSign sign = CycleSign::Undefined;

  friend bool operator==(const CycleData& a, const CycleData& b) {
    return a.vertices == b.vertices && a.length == b.length && a.sign == b.sign;
  }
};

namespace detail {

inline CycleSign traversal_sign(const OrientedGraph& g,
                                const std::vector<Vertex>& cyc) {
  if (cyc.size() % 2 != 0) return CycleSign::Undefined;
  int prod = 1;
  for (std::size_t i = 0; i < cyc.size(); ++i)
    prod *= g.sign(cyc[i], cyc[(i + 1) % cyc.size()]);
  return prod > 0 ? CycleSign::Positive : CycleSign::Negative;
}

}  // namespace detail

// The unique cycle of a connected graph with m == n. Canonical traversal:
// starts at the smallest cycle vertex and moves toward its smaller neighbor.
inline CycleData unique_cycle(const OrientedGraph& g) {
  if (!is_connected(g))
    fail(ErrorKind::Disconnected, "unique_cycle: graph is not connected");
  if (g.arc_count() != g.n() || g.n() < 3)
    fail(ErrorKind::NotUnicyclic,
         "unique_cycle: need a connected graph with m == n >= 3");
  // Strip pendant vertices repeatedly; what remains is the cycle.
  std::vector<int> deg(g.n());
  std::vector<Vertex> strip;
  for (Vertex v = 0; v < g.n(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) strip.push_back(v);
  }
  std::vector<bool> removed(g.n(), false);
  while (!strip.empty()) {
    Vertex v = strip.back();
    strip.pop_back();
    removed[v] = true;
    for (Vertex u = 0; u < g.n(); ++u)
      if (g.sign(v, u) != 0 && !removed[u] && --deg[u] == 1)
        strip.push_back(u);
  }
  Vertex start = -1;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!removed[v]) {
      start = v;
      break;
    }
  CycleData out;
  Vertex prev = -1, cur = start;
  do {
    out.vertices.push_back(cur);
    Vertex lo = -1, hi = -1;
    for (Vertex u = 0; u < g.n(); ++u)
      if (g.sign(cur, u) != 0 && !removed[u]) {
        if (lo == -1)
          lo = u;
        else
          hi = u;
      }
    Vertex next = (lo != prev) ? lo : hi;
    prev = cur;
    cur = next;
  } while (cur != start);
  out.length = static_cast<int>(out.vertices.size());
  out.sign = detail::traversal_sign(g, out.vertices);
  return out;
}

// All 4-vertex cycles, by brute force over vertex quadruples. Each cycle is
// reported once, starting at its smallest vertex, second vertex the smaller
// of the start's two cycle neighbors.
inline std::vector<CycleData> four_cycles(const OrientedGraph& g) {
  std::vector<CycleData> out;
  const int n = g.n();
  auto emit = [&](Vertex a, Vertex n1, Vertex mid, Vertex n2) {
    // Cycle a - n1 - mid - n2 - a with n1, n2 the neighbors of a.
    CycleData c;
    c.vertices = {a, std::min(n1, n2), mid, std::max(n1, n2)};
    c.length = 4;
    c.sign = detail::traversal_sign(g, c.vertices);
    out.push_back(std::move(c));
  };
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          const bool ab = g.has_edge(a, b), ac = g.has_edge(a, c),
                     ad = g.has_edge(a, d), bc = g.has_edge(b, c),
                     bd = g.has_edge(b, d), cd = g.has_edge(c, d);
          if (ab && bc && cd && ad) emit(a, b, c, d);   // a-b-c-d-a
          if (ab && bd && cd && ac) emit(a, b, d, c);   // a-b-d-c-a
          if (ac && bc && bd && ad) emit(a, c, b, d);   // a-c-b-d-a
        }
  return out;
}

}  // namespace skewrank

#endif  // SKEWRANK_ORIENTED_GRAPH_HPP
