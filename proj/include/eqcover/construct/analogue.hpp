#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "eqcover/error.hpp"
#include "eqcover/line_graph.hpp"
#include "eqcover/orientation.hpp"
#include "eqcover/verify.hpp"

namespace eqcover {

// Edge-disjoint triangles of a host graph, each as (a, b, c) with a < b < c.
struct TriangleSet {
  std::vector<std::array<Vertex, 3>> triangles;

  bool edge_disjoint() const {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& t : triangles) edges.insert(edges.end(), {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}});
    std::sort(edges.begin(), edges.end());
    return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
  }
};

// The analogue of an orientation: one class per vertex with out-degree >= 1,
// holding the line-graph vertices of its out-edges. Classes are listed by
// vertex, members ascending.
inline EquivalenceSubgraph analogue(const LineGraphMap& lm, const Orientation& o) {
  o.check_shape(lm.host);
  EquivalenceSubgraph sub;
  for (Vertex v = 0; v < lm.host.order(); ++v) {
    VertexClass cls;
    for (EdgeId e : lm.host.incident_edges(v))
      if (o.out_of(lm.host, e, v)) cls.push_back(lm.vertex_of_edge(e));
    if (!cls.empty()) sub.classes.push_back(std::move(cls));
  }
  return sub;
}

inline EquivalenceCover eq_cover_from_orientation_cover(const LineGraphMap& lm, const OrientationCover& c) {
  Verdict v = verify_orientation_cover(lm.host, c);
  if (!v) throw InvalidCoverError(v.violation());
  EquivalenceCover out;
  for (const Orientation& o : c.orientations) out.subgraphs.push_back(analogue(lm, o));
  return out;
}

namespace detail {

inline void require_valid_eq_cover(const LineGraphMap& lm, const EquivalenceCover& c) {
  Verdict v = verify_equivalence_cover(lm.line, c);
  if (!v) throw InvalidCoverError(v.violation());
}

struct ClassifiedSubgraph {
  std::vector<Vertex> star_center;  // per host edge; -1 if not in a star class of size >= 2
  std::vector<int> triangle;        // per host edge; index into triangles.triangles or -1
  TriangleSet triangles;
};

// A clique of L(G) is either a set of edges through one vertex or the three
// edges of a triangle.
inline ClassifiedSubgraph classify(const LineGraphMap& lm, const EquivalenceSubgraph& sub) {
  const Graph& g = lm.host;
  ClassifiedSubgraph out{std::vector<Vertex>(static_cast<std::size_t>(g.size()), -1),
                         std::vector<int>(static_cast<std::size_t>(g.size()), -1), {}};
  for (const VertexClass& cls : sub.classes) {
    if (cls.size() < 2) continue;
    const Edge& first = g.edge(lm.edge_of_vertex(cls[0]));
    Vertex center = -1;
    for (Vertex candidate : {first.u, first.v}) {
      bool all = std::all_of(cls.begin(), cls.end(), [&](Vertex w) {
        const Edge& e = g.edge(lm.edge_of_vertex(w));
        return e.u == candidate || e.v == candidate;
      });
      if (all) {
        center = candidate;
        break;
      }
    }
    if (center >= 0) {
      for (Vertex w : cls) out.star_center[lm.edge_of_vertex(w)] = center;
      continue;
    }
    std::vector<Vertex> ends;
    for (Vertex w : cls) {
      const Edge& e = g.edge(lm.edge_of_vertex(w));
      ends.push_back(e.u);
      ends.push_back(e.v);
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    if (cls.size() != 3 || ends.size() != 3)
      throw StructuralError("class is neither a star nor a triangle of the host graph");
    int index = static_cast<int>(out.triangles.triangles.size());
    out.triangles.triangles.push_back({ends[0], ends[1], ends[2]});
    for (Vertex w : cls) out.triangle[lm.edge_of_vertex(w)] = index;
  }
  if (!out.triangles.edge_disjoint()) throw std::logic_error("triangle classes of one subgraph share an edge");
  return out;
}

// Star classes run out of their center; triangle edges at `source` of their
// triangle (chosen by `pick`) run out of it; everything else low -> high.
template <class Pick>
Orientation orient_subgraph(const Graph& g, const ClassifiedSubgraph& cs, Pick pick) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.size()), 0);
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    Vertex tail = ed.u;
    if (cs.star_center[e] >= 0) {
      tail = cs.star_center[e];
    } else if (cs.triangle[e] >= 0) {
      Vertex source = pick(cs.triangles.triangles[static_cast<std::size_t>(cs.triangle[e])]);
      if (source == ed.v) tail = ed.v;
    }
    bits[e] = tail != ed.u;
  }
  return Orientation(g.order(), std::move(bits));
}

}  // namespace detail

// One orientation per equivalence subgraph of L(G), for triangle-free G.
inline OrientationCover orientation_cover_from_eq_cover_trifree(const LineGraphMap& lm, const EquivalenceCover& c) {
  if (auto t = find_triangle(lm.host)) throw TriangleError((*t)[0], (*t)[1], (*t)[2]);
  detail::require_valid_eq_cover(lm, c);
  OrientationCover out{CoverKind::orientation, {}};
  for (const auto& sub : c.subgraphs) {
    auto cs = detail::classify(lm, sub);
    out.orientations.push_back(detail::orient_subgraph(lm.host, cs, [](const auto&) { return Vertex{-1}; }));
  }
  return out;
}

// Three orientations per equivalence subgraph: orientation j makes the j-th
// (sorted) vertex of every triangle class the source of its triangle edges.
inline OrientationCover orientation_cover_from_eq_cover(const LineGraphMap& lm, const EquivalenceCover& c) {
  detail::require_valid_eq_cover(lm, c);
  OrientationCover out{CoverKind::orientation, {}};
  for (const auto& sub : c.subgraphs) {
    auto cs = detail::classify(lm, sub);
    for (std::size_t j = 0; j < 3; ++j)
      out.orientations.push_back(detail::orient_subgraph(lm.host, cs, [j](const auto& t) { return t[j]; }));
  }
  return out;
}

}  // namespace eqcover
