#ifndef SKEWRANK_ENUMERATE_HPP
#define SKEWRANK_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "skewrank/errors.hpp"
#include "skewrank/oriented_graph.hpp"

namespace skewrank {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

namespace detail {

inline std::vector<std::pair<Vertex, Vertex>> vertex_pairs(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  return pairs;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace detail

inline bool edges_connected(int n, const EdgeList& edges) {
  if (n <= 1) return true;
  detail::Dsu dsu(n);
  int merges = 0;
  for (const auto& [u, v] : edges)
    if (dsu.unite(u, v)) ++merges;
  return merges == n - 1;
}

// The orientation of a fixed underlying edge list, selected by bit mask:
// bit i clear orients edge i low->high, bit i set high->low.
inline OrientedGraph orient(int n, const EdgeList& edges, std::uint64_t mask) {
  if (edges.size() > 63)
    fail(ErrorKind::BoundExceeded, "orientation mask limited to 63 edges");
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& [u, v] = edges[i];
    if (mask >> i & 1)
      arcs.push_back({v, u});
    else
      arcs.push_back({u, v});
  }
  return build_graph(n, arcs);
}

inline void for_each_orientation(
    int n, const EdgeList& edges,
    const std::function<void(const OrientedGraph&, std::uint64_t)>& visit) {
  if (edges.size() > 30)
    fail(ErrorKind::BoundExceeded, "orientation sweep limited to 30 edges");
  const std::uint64_t total = std::uint64_t(1) << edges.size();
  for (std::uint64_t mask = 0; mask < total; ++mask)
    visit(orient(n, edges, mask), mask);
}

// Every oriented graph on n labeled vertices: each vertex pair is absent,
// oriented low->high, or oriented high->low (3^C(n,2) instances).
inline void for_each_oriented(
    int n, const std::function<void(const OrientedGraph&)>& visit) {
  if (n < 0 || n > 7)
    fail(ErrorKind::BoundExceeded, "full oriented sweep limited to n <= 7");
  const auto pairs = detail::vertex_pairs(n);
  std::vector<std::int8_t> digit(pairs.size(), 0);
  std::vector<Arc> arcs;
  while (true) {
    arcs.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (digit[i] == 1) arcs.push_back({pairs[i].first, pairs[i].second});
      if (digit[i] == 2) arcs.push_back({pairs[i].second, pairs[i].first});
    }
    visit(build_graph(n, arcs));
    std::size_t i = 0;
    while (i < pairs.size() && digit[i] == 2) digit[i++] = 0;
    if (i == pairs.size()) break;
    ++digit[i];
  }
}

// Every underlying simple graph on n labeled vertices (2^C(n,2) subsets),
// optionally restricted to connected ones.
inline void for_each_graph(int n, bool connected_only,
                           const std::function<void(const EdgeList&)>& visit) {
  if (n < 0 || n > 8)
    fail(ErrorKind::BoundExceeded, "underlying sweep limited to n <= 8");
  const auto pairs = detail::vertex_pairs(n);
  const std::uint64_t total = std::uint64_t(1) << pairs.size();
  EdgeList edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    if (connected_only && !edges_connected(n, edges)) continue;
    visit(edges);
  }
}

// Every labeled graph with exactly m edges, optionally connected only.
// Connected with m = n is exactly the unicyclic family, m = n + 1 bicyclic.
inline void for_each_graph_with_edges(
    int n, int m, bool connected_only,
    const std::function<void(const EdgeList&)>& visit) {
  if (n < 0 || n > 8)
    fail(ErrorKind::BoundExceeded, "edge-count sweep limited to n <= 8");
  const auto pairs = detail::vertex_pairs(n);
  const int total = static_cast<int>(pairs.size());
  if (m < 0 || m > total) return;
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  EdgeList edges(m);
  while (true) {
    for (int i = 0; i < m; ++i) edges[i] = pairs[idx[i]];
    if (!connected_only || edges_connected(n, edges)) visit(edges);
    int i = m - 1;
    while (i >= 0 && idx[i] == total - m + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline void for_each_unicyclic(
    int n, const std::function<void(const EdgeList&)>& visit) {
  if (n < 3) return;
  for_each_graph_with_edges(n, n, true, visit);
}

inline void for_each_bicyclic(
    int n, const std::function<void(const EdgeList&)>& visit) {
  if (n < 4) return;
  for_each_graph_with_edges(n, n + 1, true, visit);
}

namespace detail {

inline EdgeList prufer_decode(int n, const std::vector<int>& seq) {
  EdgeList edges;
  std::vector<int> degree(n, 1);
  for (int s : seq) ++degree[s];
  for (int s : seq) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({std::min(leaf, s), std::max(leaf, s)});
    degree[leaf] = 0;
    --degree[s];
  }
  int a = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) {
      if (a < 0)
        a = v;
      else
        edges.push_back({a, v});
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace detail

// Every labeled tree on n vertices (n^(n-2) of them) via sequence decoding.
inline void for_each_tree(int n,
                          const std::function<void(const EdgeList&)>& visit) {
  if (n < 0 || n > 8)
    fail(ErrorKind::BoundExceeded, "tree sweep limited to n <= 8");
  if (n <= 1) {
    visit({});
    return;
  }
  if (n == 2) {
    visit({{0, 1}});
    return;
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    visit(detail::prufer_decode(n, seq));
    int i = 0;
    while (i < n - 2 && seq[i] == n - 1) seq[i++] = 0;
    if (i == n - 2) break;
    ++seq[i];
  }
}

// Deterministic sampling: a fixed 64-bit generator with unbiased bounded
// draws, so a seed reproduces the same instances on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next(std::uint64_t bound) {
    if (bound == 0) fail(ErrorKind::InvalidParameter, "empty sample range");
    const std::uint64_t rem =
        (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    std::uint64_t x = rng_();
    while (rem != 0 &&
           x >= std::numeric_limits<std::uint64_t>::max() - rem + 1)
      x = rng_();
    return x % bound;
  }

 private:
  std::mt19937_64 rng_;
};

inline OrientedGraph random_oriented(int n, Sampler& s) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const std::uint64_t d = s.next(3);
      if (d == 1) arcs.push_back({u, v});
      if (d == 2) arcs.push_back({v, u});
    }
  return build_graph(n, arcs);
}

inline OrientedGraph random_orientation(int n, const EdgeList& edges,
                                        Sampler& s) {
  if (edges.size() > 63)
    fail(ErrorKind::BoundExceeded, "orientation mask limited to 63 edges");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (s.next(2) == 1) mask |= std::uint64_t(1) << i;
  return orient(n, edges, mask);
}

inline EdgeList random_tree(int n, Sampler& s) {
  if (n <= 1) return {};
  if (n == 2) return {{0, 1}};
  std::vector<int> seq(n - 2);
  for (int& d : seq) d = static_cast<int>(s.next(static_cast<std::uint64_t>(n)));
  return detail::prufer_decode(n, seq);
}

inline OrientedGraph random_connected_oriented(int n, Sampler& s) {
  while (true) {
    OrientedGraph g = random_oriented(n, s);
    if (is_connected(g)) return g;
  }
}

}  // namespace skewrank

#endif  // SKEWRANK_ENUMERATE_HPP
