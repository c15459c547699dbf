#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "eqcover/graph.hpp"
#include "eqcover/text_io.hpp"
#include "eqcover/verify.hpp"

namespace eqcover {

// Cover files:
//   cover <kind> <k> <n> <m>
// orientation / elbow:  k blocks "block <i>" (1-based), each followed by
//                       exactly m lines "<u> <v>" meaning u -> v
// eyebrow:              k lines "perm <r_0> ... <r_{n-1}>" (rank of each vertex)
// equivalence:          k blocks "block <i>", each followed by any number of
//                       lines "clique <v_1> <v_2> ..."
// `#` comment lines and blank lines are ignored everywhere.
struct CoverHeader {
  CoverKind kind;
  int k, n, m;
};

namespace detail {

inline CoverHeader read_cover_header(LineReader& reader, const Graph& g) {
  std::vector<std::string> tok;
  if (!reader.next(tok)) throw ParseError(reader.line(), "missing header 'cover <kind> <k> <n> <m>'");
  if (tok.size() != 5 || tok[0] != "cover") reader.fail("expected header 'cover <kind> <k> <n> <m>'");
  auto kind = parse_kind(tok[1]);
  if (!kind) reader.fail("unknown cover kind '" + tok[1] + "'");
  CoverHeader h{*kind, reader.nonnegative(tok[2], "cover size"), reader.nonnegative(tok[3], "vertex count"),
                reader.nonnegative(tok[4], "edge count")};
  if (h.n != g.order() || h.m != g.size())
    reader.fail("cover is for a graph with n=" + std::to_string(h.n) + " m=" + std::to_string(h.m) +
                ", graph has n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()));
  return h;
}

inline void expect_block(LineReader& reader, std::vector<std::string>& tok, int index) {
  if (!reader.next(tok))
    throw ParseError(reader.line(), "expected 'block " + std::to_string(index) + "', found end of input");
  if (tok.size() != 2 || tok[0] != "block" || reader.integer(tok[1]) != index)
    reader.fail("expected 'block " + std::to_string(index) + "'");
}

inline void expect_end(LineReader& reader) {
  std::vector<std::string> tok;
  if (reader.next(tok)) reader.fail("unexpected content after the last block");
}

}  // namespace detail

inline CoverKind peek_cover_kind(std::istream& in) {
  detail::LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.next(tok) || tok.size() != 5 || tok[0] != "cover") throw ParseError(reader.line(), "bad cover header");
  auto kind = parse_kind(tok[1]);
  if (!kind) reader.fail("unknown cover kind '" + tok[1] + "'");
  return *kind;
}

// Reads orientation or elbow blocks. The file's kind must belong to that
// family; the returned cover keeps the file's kind.
inline OrientationCover parse_orientation_cover(std::istream& in, const Graph& g) {
  detail::LineReader reader(in);
  CoverHeader h = detail::read_cover_header(reader, g);
  if (h.kind != CoverKind::orientation && h.kind != CoverKind::elbow)
    reader.fail("expected an orientation or elbow cover, found '" + std::string(kind_name(h.kind)) + "'");
  OrientationCover c{h.kind, {}};
  std::vector<std::string> tok;
  for (int i = 1; i <= h.k; ++i) {
    detail::expect_block(reader, tok, i);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.size()), 0);
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    for (int j = 0; j < h.m; ++j) {
      if (!reader.next(tok)) throw ParseError(reader.line(), "block " + std::to_string(i) + " is truncated");
      if (tok.size() != 2) reader.fail("expected an arc line '<u> <v>'");
      long long a = reader.integer(tok[0]), b = reader.integer(tok[1]);
      if (a < 0 || b < 0 || a >= g.order() || b >= g.order()) reader.fail("arc endpoint out of range");
      auto e = g.edge_id(static_cast<int>(a), static_cast<int>(b));
      if (!e) reader.fail("arc " + tok[0] + " " + tok[1] + " is not an edge of the graph");
      if (seen[*e]) reader.fail("edge " + tok[0] + " " + tok[1] + " appears twice in block " + std::to_string(i));
      seen[*e] = 1;
      bits[*e] = a > b;
    }
    c.orientations.emplace_back(g.order(), std::move(bits));
  }
  detail::expect_end(reader);
  return c;
}

inline EyebrowCover parse_eyebrow_cover(std::istream& in, const Graph& g) {
  detail::LineReader reader(in);
  CoverHeader h = detail::read_cover_header(reader, g);
  if (h.kind != CoverKind::eyebrow) reader.fail("expected an eyebrow cover");
  EyebrowCover c;
  std::vector<std::string> tok;
  for (int i = 0; i < h.k; ++i) {
    if (!reader.next(tok)) throw ParseError(reader.line(), "expected " + std::to_string(h.k) + " perm lines");
    if (tok.empty() || tok[0] != "perm" || static_cast<int>(tok.size()) != h.n + 1)
      reader.fail("expected 'perm' followed by " + std::to_string(h.n) + " ranks");
    std::vector<int> ranks;
    for (std::size_t j = 1; j < tok.size(); ++j) ranks.push_back(reader.nonnegative(tok[j], "rank"));
    try {
      c.permutations.emplace_back(std::move(ranks));
    } catch (const Error& e) {
      reader.fail(e.what());
    }
  }
  detail::expect_end(reader);
  return c;
}

inline EquivalenceCover parse_equivalence_cover(std::istream& in, const Graph& h) {
  detail::LineReader reader(in);
  CoverHeader hd = detail::read_cover_header(reader, h);
  if (hd.kind != CoverKind::equivalence) reader.fail("expected an equivalence cover");
  EquivalenceCover c;
  std::vector<std::string> tok;
  bool pending = reader.next(tok);
  for (int i = 1; i <= hd.k; ++i) {
    if (!pending) throw ParseError(reader.line(), "expected 'block " + std::to_string(i) + "'");
    if (tok.size() != 2 || tok[0] != "block" || reader.integer(tok[1]) != i)
      reader.fail("expected 'block " + std::to_string(i) + "'");
    EquivalenceSubgraph sub;
    while ((pending = reader.next(tok)) && tok[0] == "clique") {
      if (tok.size() < 2) reader.fail("empty clique line");
      VertexClass cls;
      for (std::size_t j = 1; j < tok.size(); ++j) {
        int v = reader.nonnegative(tok[j], "vertex");
        if (v >= h.order()) reader.fail("vertex " + tok[j] + " out of range");
        cls.push_back(v);
      }
      sub.classes.push_back(std::move(cls));
    }
    c.subgraphs.push_back(std::move(sub));
  }
  if (pending) reader.fail("unexpected content after the last block");
  return c;
}

inline void write_cover(std::ostream& out, const Graph& g, const OrientationCover& c) {
  c.check_shape(g);
  out << "cover " << kind_name(c.kind) << ' ' << c.size() << ' ' << g.order() << ' ' << g.size() << '\n';
  for (int i = 0; i < c.size(); ++i) {
    out << "block " << i + 1 << '\n';
    const Orientation& o = c.orientations[static_cast<std::size_t>(i)];
    for (EdgeId e = 0; e < g.size(); ++e) out << o.tail(g, e) << ' ' << o.head(g, e) << '\n';
  }
}

inline void write_cover(std::ostream& out, const Graph& g, const EyebrowCover& c) {
  c.check_shape(g);
  out << "cover eyebrow " << c.size() << ' ' << g.order() << ' ' << g.size() << '\n';
  for (const Permutation& p : c.permutations) {
    out << "perm";
    for (int r : p.ranks()) out << ' ' << r;
    out << '\n';
  }
}

inline void write_cover(std::ostream& out, const Graph& h, const EquivalenceCover& c) {
  out << "cover equivalence " << c.size() << ' ' << h.order() << ' ' << h.size() << '\n';
  for (int i = 0; i < c.size(); ++i) {
    out << "block " << i + 1 << '\n';
    for (const VertexClass& cls : c.subgraphs[static_cast<std::size_t>(i)].classes) {
      out << "clique";
      for (Vertex v : cls) out << ' ' << v;
      out << '\n';
    }
  }
}

// Coloring file: n lines "<v> <color>", each vertex exactly once.
inline void write_coloring(std::ostream& out, const Coloring& c) {
  for (Vertex v = 0; v < c.size(); ++v) out << v << ' ' << c.color(v) << '\n';
}

inline Coloring parse_coloring(std::istream& in, const Graph& g) {
  detail::LineReader reader(in);
  std::vector<int> colors(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::string> tok;
  for (int i = 0; i < g.order(); ++i) {
    if (!reader.next(tok)) throw ParseError(reader.line(), "expected " + std::to_string(g.order()) + " color lines");
    if (tok.size() != 2) reader.fail("expected '<v> <color>'");
    int v = reader.nonnegative(tok[0], "vertex");
    if (v >= g.order()) reader.fail("vertex out of range");
    if (colors[v] >= 0) reader.fail("vertex " + tok[0] + " colored twice");
    colors[v] = reader.nonnegative(tok[1], "color");
  }
  detail::expect_end(reader);
  return Coloring(std::move(colors));
}

template <class Cover>
std::string to_string(const Graph& g, const Cover& c) {
  std::ostringstream out;
  write_cover(out, g, c);
  return out.str();
}

}  // namespace eqcover
