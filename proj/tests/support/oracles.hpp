#pragma once

// Brute-force reference implementations. They work from the raw edge list
// and share no code with the library's verifiers or solvers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "eqcover/graph.hpp"

namespace oracle {

using eqcover::Graph;

struct Raw {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted
  std::vector<std::vector<char>> adj;
};

inline Raw raw(const Graph& g) {
  Raw r;
  r.n = g.order();
  for (const auto& e : g.edges()) r.edges.emplace_back(e.u, e.v);
  r.adj.assign(static_cast<std::size_t>(r.n), std::vector<char>(static_cast<std::size_t>(r.n), 0));
  for (auto [u, v] : r.edges) r.adj[u][v] = r.adj[v][u] = 1;
  return r;
}

// dir[i][e]: true when edge e runs low -> high in orientation i.
using Directions = std::vector<std::vector<char>>;

inline bool out_of(const Raw& r, const std::vector<char>& dir, int e, int v) {
  return dir[e] ? r.edges[e].first == v : r.edges[e].second == v;
}

inline bool is_orientation_cover(const Raw& r, const Directions& d) {
  for (int v = 0; v < r.n; ++v)
    for (int e = 0; e < static_cast<int>(r.edges.size()); ++e)
      for (int f = e + 1; f < static_cast<int>(r.edges.size()); ++f) {
        auto touches = [&](int x) { return r.edges[x].first == v || r.edges[x].second == v; };
        if (!touches(e) || !touches(f)) continue;
        bool ok = std::any_of(d.begin(), d.end(), [&](const auto& o) { return out_of(r, o, e, v) && out_of(r, o, f, v); });
        if (!ok) return false;
      }
  return true;
}

// Every path a - v - b must have both edges out of v or both into v somewhere.
inline bool is_elbow_cover(const Raw& r, const Directions& d) {
  for (int v = 0; v < r.n; ++v)
    for (int e = 0; e < static_cast<int>(r.edges.size()); ++e)
      for (int f = e + 1; f < static_cast<int>(r.edges.size()); ++f) {
        auto touches = [&](int x) { return r.edges[x].first == v || r.edges[x].second == v; };
        if (!touches(e) || !touches(f)) continue;
        bool ok = std::any_of(d.begin(), d.end(), [&](const auto& o) { return out_of(r, o, e, v) == out_of(r, o, f, v); });
        if (!ok) return false;
      }
  return true;
}

// Exhaustive search over all (2^m)^k direction assignments.
template <class Check>
bool exists_cover(const Raw& r, int k, Check check) {
  const int m = static_cast<int>(r.edges.size());
  const std::uint64_t total = std::uint64_t{1} << (m * k);
  Directions d(static_cast<std::size_t>(k), std::vector<char>(static_cast<std::size_t>(m), 0));
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (int i = 0; i < k; ++i)
      for (int e = 0; e < m; ++e) d[i][e] = (bits >> (i * m + e)) & 1U;
    if (check(r, d)) return true;
  }
  return false;
}

inline bool sigma_at_most(const Graph& g, int k) { return exists_cover(raw(g), k, is_orientation_cover); }
inline bool elb_at_most(const Graph& g, int k) { return exists_cover(raw(g), k, is_elbow_cover); }

// label[i][e]: edge e belongs to equivalence subgraph i. Each subgraph must
// be transitively closed (a disjoint union of cliques); all edges covered.
inline bool eq_at_most(const Graph& h, int k) {
  Raw r = raw(h);
  const int m = static_cast<int>(r.edges.size());
  if (m == 0) return true;
  const std::uint64_t total = std::uint64_t{1} << (m * k);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    bool ok = true;
    for (int e = 0; e < m && ok; ++e) {
      bool any = false;
      for (int i = 0; i < k; ++i) any |= (bits >> (i * m + e)) & 1U;
      ok = any;
    }
    for (int i = 0; i < k && ok; ++i) {
      std::vector<std::vector<char>> in(static_cast<std::size_t>(r.n), std::vector<char>(static_cast<std::size_t>(r.n), 0));
      for (int e = 0; e < m; ++e)
        if ((bits >> (i * m + e)) & 1U) in[r.edges[e].first][r.edges[e].second] = in[r.edges[e].second][r.edges[e].first] = 1;
      for (int a = 0; a < r.n && ok; ++a)
        for (int b = 0; b < r.n && ok; ++b)
          for (int c = 0; c < r.n && ok; ++c)
            if (a != c && in[a][b] && in[b][c] && !in[a][c]) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

inline int smallest(auto at_most) {
  for (int k = 0;; ++k)
    if (at_most(k)) return k;
}

// Every edge uv and third vertex w: some order puts w outside [u, v].
inline bool eye_at_most(const Graph& g, int k) {
  Raw r = raw(g);
  if (r.edges.empty() || r.n < 3) return true;
  if (k == 0) return false;
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(r.n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
  while (true) {
    bool ok = true;
    for (auto [u, v] : r.edges) {
      for (int w = 0; w < r.n && ok; ++w) {
        if (w == u || w == v) continue;
        bool some = false;
        for (std::size_t i : pick) {
          int a = perms[i][u], b = perms[i][v], x = perms[i][w];
          if (!(std::min(a, b) < x && x < std::max(a, b))) some = true;
        }
        ok = some;
      }
      if (!ok) break;
    }
    if (ok) return true;
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == perms.size()) pick[j++] = 0;
    if (j == pick.size()) return false;
  }
}

// Chromatic number by trying every c-coloring with plain backtracking.
inline int chromatic_number(const Graph& g) {
  Raw r = raw(g);
  if (r.n == 0) return 0;
  std::vector<int> color(static_cast<std::size_t>(r.n), -1);
  for (int c = 1;; ++c) {
    auto place = [&](auto&& self, int v) -> bool {
      if (v == r.n) return true;
      for (int x = 0; x < c; ++x) {
        bool free = true;
        for (int u = 0; u < v; ++u)
          if (r.adj[u][v] && color[u] == x) free = false;
        if (!free) continue;
        color[v] = x;
        if (self(self, v + 1)) return true;
      }
      color[v] = -1;
      return false;
    };
    if (place(place, 0)) return c;
  }
}

inline bool has_triangle(const Graph& g) {
  Raw r = raw(g);
  for (int a = 0; a < r.n; ++a)
    for (int b = a + 1; b < r.n; ++b)
      for (int c = b + 1; c < r.n; ++c)
        if (r.adj[a][b] && r.adj[b][c] && r.adj[a][c]) return true;
  return false;
}

// L(G) edge list: pairs of edge indices sharing an endpoint.
inline std::vector<std::pair<int, int>> line_graph_edges(const Graph& g) {
  Raw r = raw(g);
  std::vector<std::pair<int, int>> out;
  for (int e = 0; e < static_cast<int>(r.edges.size()); ++e)
    for (int f = e + 1; f < static_cast<int>(r.edges.size()); ++f) {
      auto [a, b] = r.edges[e];
      auto [c, d] = r.edges[f];
      if (a == c || a == d || b == c || b == d) out.emplace_back(e, f);
    }
  return out;
}

// ceil(log2(log2(n))) by floating point, for cross-checking the integer form.
inline int loglog_ceiling(int n) { return static_cast<int>(std::ceil(std::log2(std::log2(static_cast<double>(n))) - 1e-12)); }

}  // namespace oracle
