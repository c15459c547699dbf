#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "eqcover/error.hpp"
#include "eqcover/graph.hpp"

namespace eqcover {

// A direction for every edge of a reference graph. Bit 0 means the edge runs
// from its low endpoint to its high endpoint, bit 1 the reverse.
class Orientation {
 public:
  Orientation() = default;
  Orientation(int n, std::vector<std::uint8_t> reversed) : n_(n), reversed_(std::move(reversed)) {
    for (auto& b : reversed_) b = b ? 1 : 0;
  }

  static Orientation low_to_high(const Graph& g) {
    return Orientation(g.order(), std::vector<std::uint8_t>(static_cast<std::size_t>(g.size()), 0));
  }

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(reversed_.size()); }
  bool reversed(EdgeId e) const { return reversed_[static_cast<std::size_t>(e)] != 0; }
  std::span<const std::uint8_t> bits() const noexcept { return reversed_; }

  Vertex tail(const Graph& g, EdgeId e) const { return reversed(e) ? g.edge(e).v : g.edge(e).u; }
  Vertex head(const Graph& g, EdgeId e) const { return reversed(e) ? g.edge(e).u : g.edge(e).v; }
  // True when e is directed out of its endpoint v.
  bool out_of(const Graph& g, EdgeId e, Vertex v) const { return tail(g, e) == v; }

  bool fits(const Graph& g) const noexcept { return n_ == g.order() && size() == g.size(); }
  void check_shape(const Graph& g) const {
    if (!fits(g))
      throw ShapeError("orientation shape (" + std::to_string(n_) + "," + std::to_string(size()) +
                       ") does not match graph (" + std::to_string(g.order()) + "," + std::to_string(g.size()) + ")");
  }

  Orientation reversal() const {
    std::vector<std::uint8_t> r(reversed_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = reversed_[i] ^ 1U;
    return Orientation(n_, std::move(r));
  }

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> reversed_;
};

// A bijection on 0..n-1; rank(v) is the position of vertex v.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> ranks) : ranks_(std::move(ranks)) {
    std::vector<char> seen(ranks_.size(), 0);
    for (int r : ranks_) {
      if (r < 0 || static_cast<std::size_t>(r) >= ranks_.size() || seen[static_cast<std::size_t>(r)])
        throw Error("not a permutation of 0.." + std::to_string(static_cast<long>(ranks_.size()) - 1));
      seen[static_cast<std::size_t>(r)] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) r[i] = i;
    return Permutation(std::move(r));
  }

  // order[r] is the vertex placed at rank r.
  static Permutation from_order(std::span<const Vertex> order) {
    std::vector<int> r(order.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (order[i] < 0 || static_cast<std::size_t>(order[i]) >= order.size() || r[order[i]] >= 0)
        throw Error("vertex order is not a permutation");
      r[order[i]] = static_cast<int>(i);
    }
    return Permutation(std::move(r));
  }

  int size() const noexcept { return static_cast<int>(ranks_.size()); }
  int rank(Vertex v) const { return ranks_[static_cast<std::size_t>(v)]; }
  std::span<const int> ranks() const noexcept { return ranks_; }

  std::vector<Vertex> order() const {
    std::vector<Vertex> o(ranks_.size());
    for (std::size_t v = 0; v < ranks_.size(); ++v) o[ranks_[v]] = static_cast<Vertex>(v);
    return o;
  }

  Permutation reversed() const {
    std::vector<int> r(ranks_.size());
    for (std::size_t v = 0; v < r.size(); ++v) r[v] = size() - 1 - ranks_[v];
    return Permutation(std::move(r));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> ranks_;
};

// Vertex coloring; palette_size() counts distinct colors actually used.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
    for (int c : colors_)
      if (c < 0) throw Error("negative color");
    std::vector<int> sorted = colors_;
    std::sort(sorted.begin(), sorted.end());
    palette_ = static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

  int size() const noexcept { return static_cast<int>(colors_.size()); }
  int color(Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }
  std::span<const int> colors() const noexcept { return colors_; }
  int palette_size() const noexcept { return palette_; }

  // Relabels colors densely as 0,1,2,... in order of first appearance.
  Coloring compacted() const {
    std::map<int, int> map;
    std::vector<int> out(colors_.size());
    for (std::size_t v = 0; v < colors_.size(); ++v)
      out[v] = map.try_emplace(colors_[v], static_cast<int>(map.size())).first->second;
    return Coloring(std::move(out));
  }

  void check_proper(const Graph& g) const {
    if (size() != g.order())
      throw ShapeError("coloring has " + std::to_string(size()) + " entries, graph has " +
                       std::to_string(g.order()) + " vertices");
    for (const Edge& e : g.edges())
      if (color(e.u) == color(e.v)) throw ImproperColoringError(e.u, e.v);
  }
  bool is_proper(const Graph& g) const {
    if (size() != g.order()) return false;
    return std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return color(e.u) == color(e.v); });
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_;
  int palette_ = 0;
};

// Acyclic orientation: uv runs u -> v exactly when p ranks u before v.
inline Orientation permutation_to_orientation(const Graph& g, const Permutation& p) {
  if (p.size() != g.order())
    throw ShapeError("permutation of length " + std::to_string(p.size()) + " for a graph on " +
                     std::to_string(g.order()) + " vertices");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.size()));
  for (EdgeId e = 0; e < g.size(); ++e) bits[e] = p.rank(g.edge(e).u) > p.rank(g.edge(e).v);
  return Orientation(g.order(), std::move(bits));
}

// Orientation of g induced by a homomorphism f: g -> h and an orientation of h.
inline Orientation pullback_orientation(const Graph& g, const Graph& h, std::span<const Vertex> f,
                                        const Orientation& o) {
  o.check_shape(h);
  if (static_cast<int>(f.size()) != g.order())
    throw ShapeError("vertex map has " + std::to_string(f.size()) + " entries, graph has " +
                     std::to_string(g.order()) + " vertices");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.size()));
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    Vertex a = f[ed.u], b = f[ed.v];
    if (a < 0 || a >= h.order() || b < 0 || b >= h.order())
      throw HomomorphismError(ed.u, ed.v, "image outside the target graph");
    if (a == b) throw HomomorphismError(ed.u, ed.v, "both endpoints map to vertex " + std::to_string(a));
    auto he = h.edge_id(a, b);
    if (!he)
      throw HomomorphismError(ed.u, ed.v,
                              "image pair (" + std::to_string(a) + "," + std::to_string(b) + ") is not an edge");
    bits[e] = o.tail(h, *he) != a;
  }
  return Orientation(g.order(), std::move(bits));
}

// Restriction of o to the subgraph induced on `keep` (ascending), numbered as
// induced_subgraph(g, keep) numbers it.
inline Orientation restrict_orientation(const Graph& g, const Orientation& o, std::span<const Vertex> keep) {
  o.check_shape(g);
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
  // Induced edges keep their relative lexicographic order under the monotone relabeling.
  std::vector<std::uint8_t> bits;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (pos[g.edge(e).u] >= 0 && pos[g.edge(e).v] >= 0) bits.push_back(o.reversed(e));
  return Orientation(static_cast<int>(keep.size()), std::move(bits));
}

// Topological order by Kahn's algorithm, smallest available vertex first.
// Empty when the orientation has a directed cycle (and g has vertices).
inline std::vector<Vertex> topological_order(const Graph& g, const Orientation& o) {
  o.check_shape(g);
  std::vector<int> indeg(static_cast<std::size_t>(g.order()), 0);
  for (EdgeId e = 0; e < g.size(); ++e) ++indeg[o.head(g, e)];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < g.order(); ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<Vertex> order;
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    auto nb = g.neighbors(v);
    auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      if (o.tail(g, inc[i]) == v && --indeg[nb[i]] == 0) ready.push(nb[i]);
  }
  if (static_cast<int>(order.size()) != g.order()) order.clear();
  return order;
}

inline bool is_acyclic(const Graph& g, const Orientation& o) {
  return g.order() == 0 || !topological_order(g, o).empty();
}

}  // namespace eqcover
