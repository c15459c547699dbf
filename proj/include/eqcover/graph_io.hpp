#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "eqcover/graph.hpp"
#include "eqcover/text_io.hpp"

namespace eqcover {

// Graph file:
//   # optional comments
//   p <n> <m>
//   <u> <v>      (exactly m lines, 0 <= u < v < n, no duplicates)
inline Graph parse_graph(std::istream& in) {
  detail::LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.next(tok)) throw ParseError(reader.line(), "missing header 'p <n> <m>'");
  if (tok.size() != 3 || tok[0] != "p") reader.fail("expected header 'p <n> <m>'");
  const int n = reader.nonnegative(tok[1], "vertex count");
  const int m = reader.nonnegative(tok[2], "edge count");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (int i = 0; i < m; ++i) {
    if (!reader.next(tok))
      throw ParseError(reader.line(), "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    if (tok.size() != 2) reader.fail("expected an edge line '<u> <v>'");
    const long long u = reader.integer(tok[0]);
    const long long v = reader.integer(tok[1]);
    if (u < 0 || v >= n) reader.fail("endpoint outside 0.." + std::to_string(n - 1));
    if (u == v) reader.fail("self-loop at vertex " + std::to_string(u));
    if (u > v) reader.fail("edge endpoints must be written as u < v");
    if (!seen.emplace(static_cast<int>(u), static_cast<int>(v)).second)
      reader.fail("duplicate edge " + tok[0] + " " + tok[1] + " (multigraphs are not supported)");
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (reader.next(tok)) reader.fail("unexpected content after the last edge");
  return Graph(n, std::move(pairs));
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string to_string(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace eqcover
