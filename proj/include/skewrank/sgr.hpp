#ifndef SKEWRANK_SGR_HPP
#define SKEWRANK_SGR_HPP

#include <sstream>
#include <string>
#include <vector>

#include "skewrank/errors.hpp"
#include "skewrank/oriented_graph.hpp"

namespace skewrank {

// .sgr text format:
//   line 1: vertex count n
//   each following non-comment line: "u v" for an arc u -> v (0-indexed)
//   '#' starts a comment that runs to end of line; blank lines are ignored
//
// write_sgr emits the canonical form: the header line, then one line per
// arc in sorted order, no comments. read_sgr(write_sgr(g)) == g, and
// re-serializing a parsed canonical text reproduces it byte for byte.

inline std::string write_sgr(const OrientedGraph& g) {
  std::string out = std::to_string(g.n());
  out += '\n';
  for (const Arc& a : g.arcs()) {
    out += std::to_string(a.tail);
    out += ' ';
    out += std::to_string(a.head);
    out += '\n';
  }
  return out;
}

inline OrientedGraph read_sgr(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  bool have_n = false;
  int n = 0;
  std::vector<Arc> arcs;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;  // blank or comment-only line
    std::istringstream fields(line);
    if (!have_n) {
      if (!(fields >> n))
        fail(ErrorKind::ParseError,
             "line " + std::to_string(line_no) + ": expected vertex count");
      have_n = true;
    } else {
      Vertex u, v;
      if (!(fields >> u >> v))
        fail(ErrorKind::ParseError,
             "line " + std::to_string(line_no) + ": expected \"u v\"");
      arcs.push_back({u, v});
    }
    std::string rest;
    if (fields >> rest)
      fail(ErrorKind::ParseError,
           "line " + std::to_string(line_no) + ": trailing token \"" + rest +
               "\"");
  }
  if (!have_n) fail(ErrorKind::ParseError, "missing vertex-count header line");
  return OrientedGraph(n, std::move(arcs));
}

}  // namespace skewrank

#endif  // SKEWRANK_SGR_HPP
