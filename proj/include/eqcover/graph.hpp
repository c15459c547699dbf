#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eqcover/error.hpp"

namespace eqcover {

using Vertex = int;
using EdgeId = int;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1.
//
// Edges are normalized (u < v) and sorted lexicographically; the position of
// an edge in that order is its EdgeId. Adjacency is kept in CSR form, each
// vertex's neighbors sorted ascending. Because of the lexicographic edge order
// the incident edge ids of a vertex are sorted ascending as well.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<std::pair<Vertex, Vertex>> pairs) : n_(n) {
    if (n < 0) throw Error("negative vertex count");
    edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw Error("edge (" + std::to_string(a) + "," + std::to_string(b) + ") has an endpoint outside 0.." +
                    std::to_string(n - 1));
      if (a == b) throw Error("self-loop at vertex " + std::to_string(a));
      edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
      throw Error("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
    build_adjacency();
  }

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {nbr_.data() + offset_[v], nbr_.data() + offset_[v + 1]};
  }
  // Parallel to neighbors(v): incident_edges(v)[i] joins v and neighbors(v)[i].
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return {inc_.data() + offset_[v], inc_.data() + offset_[v + 1]};
  }
  int degree(Vertex v) const { return offset_[v + 1] - offset_[v]; }

  int min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }
  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return std::nullopt;
    auto nb = neighbors(a);
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return std::nullopt;
    return incident_edges(a)[static_cast<std::size_t>(it - nb.begin())];
  }
  bool adjacent(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }

  Vertex other(EdgeId e, Vertex v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }

  // Has two distinct edges sharing an endpoint, i.e. at least one 2-edge path.
  bool has_incident_pair() const { return max_degree() >= 2; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  void build_adjacency() {
    offset_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const Edge& e : edges_) {
      ++offset_[e.u + 1];
      ++offset_[e.v + 1];
    }
    for (int v = 0; v < n_; ++v) offset_[v + 1] += offset_[v];
    nbr_.resize(edges_.size() * 2);
    inc_.resize(edges_.size() * 2);
    std::vector<int> fill(offset_.begin(), offset_.end() - 1);
    for (EdgeId id = 0; id < size(); ++id) {
      const Edge& e = edges_[id];
      nbr_[fill[e.u]] = e.v;
      inc_[fill[e.u]++] = id;
      nbr_[fill[e.v]] = e.u;
      inc_[fill[e.v]++] = id;
    }
    std::vector<std::pair<Vertex, EdgeId>> row;
    for (int v = 0; v < n_; ++v) {
      auto b = static_cast<std::size_t>(offset_[v]);
      auto e = static_cast<std::size_t>(offset_[v + 1]);
      row.clear();
      for (auto i = b; i < e; ++i) row.emplace_back(nbr_[i], inc_[i]);
      std::sort(row.begin(), row.end());
      for (auto i = b; i < e; ++i) std::tie(nbr_[i], inc_[i]) = row[i - b];
    }
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offset_{0};
  std::vector<Vertex> nbr_;
  std::vector<EdgeId> inc_;
};

inline Graph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  return Graph(n, std::move(pairs));
}

inline bool is_complete(const Graph& g) {
  const auto n = static_cast<long long>(g.order());
  return g.size() == n * (n - 1) / 2;
}

// Induced subgraph on `keep` (ascending). Vertex keep[i] becomes i.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : g.edges())
    if (pos[e.u] >= 0 && pos[e.v] >= 0) pairs.emplace_back(pos[e.u], pos[e.v]);
  return Graph(static_cast<int>(keep.size()), std::move(pairs));
}

// Lexicographically first triangle (a < b < c), if any.
inline std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
  for (const Edge& e : g.edges()) {
    auto na = g.neighbors(e.u);
    auto nb = g.neighbors(e.v);
    auto it = std::upper_bound(na.begin(), na.end(), e.v);
    for (; it != na.end(); ++it)
      if (std::binary_search(nb.begin(), nb.end(), *it)) return std::array<Vertex, 3>{e.u, e.v, *it};
  }
  return std::nullopt;
}

inline bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

// Breadth-first 2-coloring. Returns side (0/1) per vertex, or throws
// NotBipartiteError carrying an odd cycle.
inline std::vector<int> two_coloring(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1),
      depth(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          parent[y] = x;
          depth[y] = depth[x] + 1;
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          // Walk both tree paths up to the common ancestor.
          std::vector<Vertex> left{x}, right{y};
          Vertex a = x, b = y;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          std::vector<Vertex> cycle(left.rbegin(), left.rend());
          cycle.insert(cycle.end(), right.begin(), right.end());
          throw NotBipartiteError(std::move(cycle));
        }
      }
    }
  }
  return side;
}

inline bool is_bipartite(const Graph& g) {
  try {
    two_coloring(g);
    return true;
  } catch (const NotBipartiteError&) {
    return false;
  }
}

}  // namespace eqcover
