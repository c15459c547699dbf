#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "eqcover/exact/budget.hpp"
#include "eqcover/graph.hpp"
#include "eqcover/orientation.hpp"

namespace eqcover {

struct ChromaticResult {
  int lo = 0;
  int hi = 0;
  SolveStatus status = SolveStatus::exact;
  Coloring witness;  // proper, palette == hi
  std::uint64_t nodes = 0;

  bool exact() const noexcept { return status == SolveStatus::exact; }
  int value() const noexcept { return hi; }
};

// Smallest-last (degeneracy) order; returns vertices from last removed to first.
inline std::vector<Vertex> degeneracy_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> removed;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!gone[v] && (best < 0 || deg[v] < deg[best])) best = v;
    gone[best] = 1;
    removed.push_back(best);
    for (Vertex u : g.neighbors(best))
      if (!gone[u]) --deg[u];
  }
  std::reverse(removed.begin(), removed.end());
  return removed;
}

// Greedy clique grown from each vertex over the degeneracy order.
inline std::vector<Vertex> greedy_clique(const Graph& g) {
  std::vector<Vertex> best;
  auto order = degeneracy_order(g);
  for (Vertex seed : order) {
    std::vector<Vertex> clique{seed};
    for (Vertex v : order) {
      if (v == seed) continue;
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return g.adjacent(c, v); })) clique.push_back(v);
    }
    if (clique.size() > best.size()) best = clique;
  }
  return best;
}

// First-fit coloring along `order`.
inline Coloring greedy_coloring(const Graph& g, std::span<const Vertex> order) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  std::vector<char> used;
  for (Vertex v : order) {
    used.assign(static_cast<std::size_t>(g.degree(v)) + 1, 0);
    for (Vertex u : g.neighbors(v))
      if (color[u] >= 0 && color[u] <= g.degree(v)) used[color[u]] = 1;
    int c = 0;
    while (used[c]) ++c;
    color[v] = c;
  }
  return Coloring(std::move(color));
}

inline Coloring greedy_coloring(const Graph& g) {
  auto order = degeneracy_order(g);
  return greedy_coloring(g, order);
}

namespace detail {

// DSATUR branch and bound: looks for colorings with fewer than `best_` colors.
class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, int lower, Coloring initial, NodeCounter& counter)
      : g_(g), n_(g.order()), lower_(lower), counter_(counter), best_colors_(initial.palette_size()),
        best_(std::vector<int>(initial.colors().begin(), initial.colors().end())) {
    rank_.resize(static_cast<std::size_t>(n_));
    auto order = degeneracy_order(g);
    for (int i = 0; i < n_; ++i) rank_[order[i]] = i;
    color_.assign(static_cast<std::size_t>(n_), -1);
    stride_ = static_cast<std::size_t>(best_colors_ + 1);
    adj_count_.assign(static_cast<std::size_t>(n_) * stride_, 0);
    sat_.assign(static_cast<std::size_t>(n_), 0);
  }

  // True when the search finished (best is optimal), false on budget exhaustion.
  bool run() {
    if (best_colors_ <= lower_) return true;
    dfs(0, 0);
    return !counter_.exhausted();
  }

  int best_colors() const noexcept { return best_colors_; }
  const std::vector<int>& best() const noexcept { return best_; }

 private:
  int& count(Vertex v, int c) { return adj_count_[static_cast<std::size_t>(v) * stride_ + static_cast<std::size_t>(c)]; }

  Vertex pick() const {
    Vertex best = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      if (best < 0 || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && rank_[v] < rank_[best])) best = v;
    }
    return best;
  }

  void assign(Vertex v, int c, int delta) {
    for (Vertex u : g_.neighbors(v)) {
      int& cnt = count(u, c);
      if (delta > 0) {
        if (cnt++ == 0) ++sat_[u];
      } else if (--cnt == 0) {
        --sat_[u];
      }
    }
  }

  void dfs(int colored, int used) {
    if (colored == n_) {
      best_colors_ = used;
      best_ = color_;
      return;
    }
    Vertex v = pick();
    const int limit = std::min(used, best_colors_ - 2);
    for (int c = 0; c <= limit; ++c) {
      if (count(v, c) > 0) continue;
      if (!counter_.tick()) return;
      color_[v] = c;
      assign(v, c, +1);
      dfs(colored + 1, std::max(used, c + 1));
      assign(v, c, -1);
      color_[v] = -1;
      if (counter_.exhausted() || best_colors_ <= lower_) return;
    }
  }

  const Graph& g_;
  int n_;
  int lower_;
  NodeCounter& counter_;
  int best_colors_;
  std::vector<int> best_;
  std::vector<int> rank_, color_, adj_count_, sat_;
  std::size_t stride_ = 0;
};

}  // namespace detail

// Chromatic number by DSATUR branch and bound with a greedy clique lower
// bound and a greedy (degeneracy order) upper bound.
inline ChromaticResult exact_chromatic(const Graph& g, const Budget& budget = {}) {
  ChromaticResult r;
  if (g.order() == 0) return r;
  if (g.size() == 0) {
    r.lo = r.hi = 1;
    r.witness = Coloring(std::vector<int>(static_cast<std::size_t>(g.order()), 0));
    return r;
  }
  if (is_bipartite(g)) {
    r.lo = r.hi = 2;
    r.witness = Coloring(two_coloring(g));
    return r;
  }
  const int lower = std::max(3, static_cast<int>(greedy_clique(g).size()));
  Coloring initial = greedy_coloring(g).compacted();
  NodeCounter counter(budget);
  detail::DsaturSearch search(g, lower, initial, counter);
  bool done = search.run();
  r.witness = Coloring(search.best()).compacted();
  r.hi = search.best_colors();
  r.lo = done ? r.hi : lower;
  r.status = done ? SolveStatus::exact : SolveStatus::timeout;
  r.nodes = counter.nodes();
  return r;
}

}  // namespace eqcover
