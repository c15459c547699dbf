#pragma once

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

#include "eqcover/error.hpp"
#include "eqcover/graph.hpp"
#include "eqcover/orientation.hpp"
#include "eqcover/verify.hpp"

namespace eqcover {

enum class Side : std::uint8_t { unused, x_side, complement_side };

// Side assignment of the vertices of G_X, the subgraph on edges uv with
// o(u,uv) in {X, [k]\X}. `representative` is the member of the pair holding
// orientation index 0.
struct BipartiteClassMap {
  SignatureMask representative = 0;
  std::vector<Side> side;
};

namespace detail {

inline SignatureMask representative_of(SignatureMask x, SignatureMask full) { return (x & 1U) ? x : full ^ x; }

// One map per representative occurring on an edge accepted by `use`, ordered
// by representative. Representatives on no edge would give every vertex the
// default side and cannot change the product coloring, so they are skipped.
template <class Use>
std::vector<BipartiteClassMap> class_maps(const Graph& g, const IncidenceSignature& sig, Use use) {
  std::map<SignatureMask, std::vector<Side>> maps;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!use(e)) continue;
    const Edge& ed = g.edge(e);
    SignatureMask ou = sig.out_mask(g, ed.u, e);
    SignatureMask rep = representative_of(ou, sig.full());
    auto [it, fresh] = maps.try_emplace(rep, std::vector<Side>(static_cast<std::size_t>(g.order()), Side::unused));
    Side su = ou == rep ? Side::x_side : Side::complement_side;
    Side sv = su == Side::x_side ? Side::complement_side : Side::x_side;
    for (auto [v, s] : {std::pair{ed.u, su}, std::pair{ed.v, sv}}) {
      Side& cur = it->second[v];
      if (cur != Side::unused && cur != s) throw std::logic_error("side conflict in a subgraph G_X of a valid cover");
      cur = s;
    }
  }
  std::vector<BipartiteClassMap> out;
  for (auto& [rep, side] : maps) out.push_back({rep, std::move(side)});
  return out;
}

// Product of the side colorings over `maps` for the vertices in `verts`;
// unforced vertices take the representative side. Returns dense color ids
// in order of first appearance along `verts`.
inline std::vector<int> product_colors(const std::vector<BipartiteClassMap>& maps, const std::vector<Vertex>& verts) {
  std::map<std::vector<bool>, int> ids;
  std::vector<int> out;
  for (Vertex v : verts) {
    std::vector<bool> tuple;
    for (const auto& m : maps) tuple.push_back(m.side[v] == Side::complement_side);
    out.push_back(ids.try_emplace(std::move(tuple), static_cast<int>(ids.size())).first->second);
  }
  return out;
}

// 2^(2^e) for e <= 4, otherwise -1 (no bound checked).
inline long long double_power(int e) {
  if (e < 0) return 1;
  if (e > 4) return -1;
  return 1LL << (1 << e);
}

}  // namespace detail

// Proper coloring with at most 2^(2^(k-1)) colors from an elbow covering of
// size k.
inline Coloring coloring_from_elbow_cover(const Graph& g, const OrientationCover& c) {
  if (Verdict v = verify_elbow_cover(g, c); !v) throw InvalidCoverError(v.violation());
  if (c.size() == 0) {
    if (g.size() > 0) throw UnsupportedError("an empty elbow covering gives no coloring of a graph with edges");
    return Coloring(std::vector<int>(static_cast<std::size_t>(g.order()), 0));
  }
  IncidenceSignature sig = incidence_signatures(g, c);
  auto maps = detail::class_maps(g, sig, [](EdgeId) { return true; });
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  Coloring out(detail::product_colors(maps, all));
  if (!out.is_proper(g)) throw std::logic_error("product coloring from an elbow covering is not proper");
  long long bound = detail::double_power(c.size() - 1);
  if (bound >= 0 && out.palette_size() > bound) throw std::logic_error("product coloring exceeds its palette bound");
  return out;
}

// Proper coloring with at most k + 2^(2^(k-1)-k-1) colors from an orientation
// covering of size k >= 3.
inline Coloring coloring_from_orientation_cover(const Graph& g, const OrientationCover& c) {
  const int k = c.size();
  if (k < 3) throw UnsupportedError("coloring from an orientation covering needs k >= 3, got k=" + std::to_string(k));
  if (Verdict v = verify_orientation_cover(g, c); !v) throw InvalidCoverError(v.violation());
  const int n = g.order();

  // Peel vertices of degree <= 1 until none remain.
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> peeled(static_cast<std::size_t>(n), 0), queued(static_cast<std::size_t>(n), 0);
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) {
      queue.push_back(v);
      queued[v] = 1;
    }
  }
  std::vector<Vertex> stack;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    peeled[v] = 1;
    stack.push_back(v);
    for (Vertex u : g.neighbors(v)) {
      if (peeled[u]) continue;
      if (--deg[u] <= 1 && !queued[u]) {
        queue.push_back(u);
        queued[u] = 1;
      }
    }
  }
  std::vector<Vertex> core;
  for (Vertex v = 0; v < n; ++v)
    if (!peeled[v]) core.push_back(v);

  std::vector<int> color(static_cast<std::size_t>(n), -1);
  if (!core.empty()) {
    Graph h = induced_subgraph(g, core);
    OrientationCover hc{CoverKind::orientation, {}};
    for (const Orientation& o : c.orientations) hc.orientations.push_back(restrict_orientation(g, o, core));
    IncidenceSignature sig = incidence_signatures(h, hc);

    // S_i: vertices with an incident edge whose out-set is exactly {i}.
    std::vector<int> reserved(static_cast<std::size_t>(h.order()), -1);
    std::vector<std::vector<char>> in_s(static_cast<std::size_t>(k), std::vector<char>(static_cast<std::size_t>(h.order()), 0));
    for (Vertex v = 0; v < h.order(); ++v)
      for (EdgeId e : h.incident_edges(v)) {
        SignatureMask m = sig.out_mask(h, v, e);
        if (std::popcount(m) != 1) continue;
        int i = std::countr_zero(m);
        in_s[i][v] = 1;
        if (reserved[v] < 0 || i < reserved[v]) reserved[v] = i;
      }
    for (int i = 0; i < k; ++i)
      for (const Edge& e : h.edges())
        if (in_s[i][e.u] && in_s[i][e.v]) throw std::logic_error("S_" + std::to_string(i + 1) + " is not stable");

    std::vector<Vertex> rest;
    for (Vertex v = 0; v < h.order(); ++v)
      if (reserved[v] < 0) rest.push_back(v);
    auto in_rest = [&](Vertex v) { return reserved[v] < 0; };
    auto maps = detail::class_maps(h, sig, [&](EdgeId e) {
      if (!in_rest(h.edge(e).u) || !in_rest(h.edge(e).v)) return false;
      int size = std::popcount(sig.out_mask(h, h.edge(e).u, e));
      if (size < 2 || size > k - 2) throw std::logic_error("edge inside U with an out-set of size " + std::to_string(size));
      return true;
    });
    std::vector<int> product = detail::product_colors(maps, rest);
    for (Vertex v = 0; v < h.order(); ++v)
      if (reserved[v] >= 0) color[core[v]] = reserved[v];
    for (std::size_t j = 0; j < rest.size(); ++j) color[core[rest[j]]] = k + product[j];
  }

  // Re-add peeled vertices last-removed first; each sees at most one colored neighbor.
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    std::vector<int> taken;
    for (Vertex u : g.neighbors(*it))
      if (color[u] >= 0) taken.push_back(color[u]);
    int pick = 0;
    while (std::find(taken.begin(), taken.end(), pick) != taken.end()) ++pick;
    color[*it] = pick;
  }

  Coloring out = Coloring(std::move(color)).compacted();
  if (!out.is_proper(g)) throw std::logic_error("peeling coloring is not proper");
  if (k <= 6) {
    long long bound = k + (1LL << ((1 << (k - 1)) - k - 1));
    if (out.palette_size() > bound) throw std::logic_error("peeling coloring exceeds its palette bound");
  }
  return out;
}

}  // namespace eqcover
