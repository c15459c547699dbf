#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "eqcover/error.hpp"
#include "eqcover/graph.hpp"
#include "eqcover/orientation.hpp"
#include "eqcover/verify.hpp"

namespace eqcover {

// Size-2 elbow covering of K4 from the vertex orders (0,1,2,3) and (2,0,3,1).
inline OrientationCover k4_elbow_base() {
  Graph k4 = complete_graph(4);
  OrientationCover c{CoverKind::elbow, {}};
  for (std::array<Vertex, 4> order : {std::array<Vertex, 4>{0, 1, 2, 3}, std::array<Vertex, 4>{2, 0, 3, 1}})
    c.orientations.push_back(permutation_to_orientation(k4, Permutation::from_order(order)));
  return c;
}

struct CoverOnGraph {
  Graph graph;
  OrientationCover cover;
};

// Lexicographic composition on K_{n^2}. Vertex (a, b) is a*n + b. Orientation
// i < k uses base i on both coordinates; the extra orientation uses base 0 on
// the first coordinate and its reversal on the second.
inline CoverOnGraph elbow_double(const Graph& base_graph, const OrientationCover& base) {
  if (!is_complete(base_graph)) throw StructuralError("elbow doubling needs a complete base graph");
  if (base.size() == 0) throw UnsupportedError("elbow doubling needs a base covering of size at least 1");
  base.check_shape(base_graph);
  if (Verdict v = verify_elbow_cover(base_graph, base); !v) throw InvalidCoverError(v.violation());

  const int n = base_graph.order();
  const int k = base.size();
  const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  // forward[i][a*n+c]: a -> c in base i.
  std::vector<std::vector<char>> forward(static_cast<std::size_t>(k), std::vector<char>(nn, 0));
  for (int i = 0; i < k; ++i)
    for (EdgeId e = 0; e < base_graph.size(); ++e) {
      const Orientation& o = base.orientations[static_cast<std::size_t>(i)];
      forward[i][static_cast<std::size_t>(o.tail(base_graph, e) * n + o.head(base_graph, e))] = 1;
    }
  auto fwd = [&](int i, int a, int c) { return forward[i][static_cast<std::size_t>(a * n + c)] != 0; };

  Graph big = complete_graph(n * n);
  OrientationCover out{CoverKind::elbow, {}};
  for (int i = 0; i <= k; ++i) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(big.size()));
    for (EdgeId e = 0; e < big.size(); ++e) {
      const Edge& ed = big.edge(e);
      int a = ed.u / n, b = ed.u % n, c = ed.v / n, d = ed.v % n;
      bool f;
      if (i < k)
        f = a != c ? fwd(i, a, c) : fwd(i, b, d);
      else
        f = a != c ? fwd(0, a, c) : fwd(0, d, b);
      bits[e] = !f;
    }
    out.orientations.emplace_back(big.order(), std::move(bits));
  }
  return {std::move(big), std::move(out)};
}

namespace detail {

// The tower K4, K16, K256, ... of doubled covers, evaluated pointwise: the
// direction of xy in orientation i at a given level, without materializing
// the intermediate complete graphs.
class ElbowTower {
 public:
  ElbowTower() {
    const std::array<std::array<int, 4>, 2> orders{{{0, 1, 2, 3}, {2, 0, 3, 1}}};
    for (std::size_t i = 0; i < 2; ++i)
      for (int r = 0; r < 4; ++r) rank_[i][static_cast<std::size_t>(orders[i][static_cast<std::size_t>(r)])] = r;
  }

  // Vertex count of level l: 4^(2^l).
  static std::uint64_t order(int level) {
    std::uint64_t n = 4;
    for (int l = 0; l < level; ++l) n *= n;
    return n;
  }

  static int width(int level) { return 2 + level; }

  bool forward(int level, int i, std::uint64_t x, std::uint64_t y) const {
    bool flip = false;
    while (level > 0) {
      const std::uint64_t n = order(level - 1);
      std::uint64_t a = x / n, b = x % n, c = y / n, d = y % n;
      const bool extra = i >= width(level - 1);
      if (extra) i = 0;
      if (a != c) {
        x = a;
        y = c;
      } else {
        x = b;
        y = d;
        if (extra) flip = !flip;
      }
      --level;
    }
    bool f = rank_[static_cast<std::size_t>(i)][x] < rank_[static_cast<std::size_t>(i)][y];
    return f != flip;
  }

 private:
  std::array<std::array<int, 4>, 2> rank_{};
};

}  // namespace detail

// Elbow covering of K_n of size ceil(log2 log2 n) + 1 for n >= 3 (empty for
// n <= 2): the smallest tower level with at least n vertices, restricted to
// its first n vertices.
inline OrientationCover elbow_cover_complete(int n) {
  if (n < 1) throw UnsupportedError("elbow_cover_complete needs n >= 1");
  Graph kn = complete_graph(n);
  OrientationCover c{CoverKind::elbow, {}};
  if (n <= 2) return c;
  int level = 0;
  while (detail::ElbowTower::order(level) < static_cast<std::uint64_t>(n)) ++level;
  detail::ElbowTower tower;
  for (int i = 0; i < detail::ElbowTower::width(level); ++i) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(kn.size()));
    for (EdgeId e = 0; e < kn.size(); ++e)
      bits[e] = !tower.forward(level, i, static_cast<std::uint64_t>(kn.edge(e).u), static_cast<std::uint64_t>(kn.edge(e).v));
    c.orientations.emplace_back(n, std::move(bits));
  }
  return c;
}

// Every orientation of elbow_cover_complete is acyclic; on K_n an acyclic
// elbow covering is the same thing as an eyebrow covering by the
// corresponding vertex orders.
inline EyebrowCover eyebrow_cover_complete(int n) {
  Graph kn = complete_graph(n);
  EyebrowCover out;
  for (const Orientation& o : elbow_cover_complete(n).orientations)
    out.permutations.push_back(Permutation::from_order(topological_order(kn, o)));
  return out;
}

// Originals followed by their reversals.
inline OrientationCover orientation_cover_from_elbow(const Graph& g, const OrientationCover& c) {
  if (Verdict v = verify_elbow_cover(g, c); !v) throw InvalidCoverError(v.violation());
  OrientationCover out{CoverKind::orientation, c.orientations};
  for (const Orientation& o : c.orientations) out.orientations.push_back(o.reversal());
  return out;
}

// Side 0 -> side 1, then side 1 -> side 0.
inline OrientationCover bipartite_orientation_cover(const Graph& g) {
  std::vector<int> side = two_coloring(g);
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.size()));
  for (EdgeId e = 0; e < g.size(); ++e) bits[e] = side[g.edge(e).u] != 0;
  Orientation forward(g.order(), std::move(bits));
  return OrientationCover{CoverKind::orientation, {forward, forward.reversal()}};
}

}  // namespace eqcover
