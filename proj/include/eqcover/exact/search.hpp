#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "eqcover/exact/budget.hpp"
#include "eqcover/graph.hpp"
#include "eqcover/orientation.hpp"
#include "eqcover/verify.hpp"

namespace eqcover {

// Widest k the decision procedures accept: a variable's domain is a bitset
// over its 2^k values, held in one 64-bit word.
inline constexpr int kMaxDecisionWidth = 6;

template <class Witness>
struct DecideResult {
  Decision decision = Decision::unsat;
  std::optional<Witness> witness;
  std::uint64_t nodes = 0;

  bool sat() const noexcept { return decision == Decision::sat; }
  bool unsat() const noexcept { return decision == Decision::unsat; }
};

namespace detail {

using Domain = std::uint64_t;  // bit F set <=> value F still allowed

inline Domain all_values(int k) { return k >= 6 ? ~Domain{0} : (Domain{1} << (1U << k)) - 1; }

// Bit positions 0..k-1 are interchangeable (orientations, labels). Positions
// whose columns agree on every assigned variable stay in one class; a value is
// tried only if, inside each class, its set bits are the lowest positions of
// the class. That keeps one representative per orbit of the symmetric group
// acting on the remaining free positions.
class PositionClasses {
 public:
  explicit PositionClasses(int k) : k_(k) { cls_.fill(0); }

  bool canonical(unsigned value) const {
    std::array<char, kMaxDecisionWidth> seen_zero{};
    for (int i = 0; i < k_; ++i) {
      bool bit = value >> i & 1U;
      if (bit && seen_zero[cls_[i]]) return false;
      if (!bit) seen_zero[cls_[i]] = 1;
    }
    return true;
  }

  PositionClasses refined(unsigned value) const {
    PositionClasses next(k_);
    std::array<int, 2 * kMaxDecisionWidth> id;
    id.fill(-1);
    int fresh = 0;
    for (int i = 0; i < k_; ++i) {
      int key = cls_[i] * 2 + static_cast<int>(value >> i & 1U);
      if (id[key] < 0) id[key] = fresh++;
      next.cls_[i] = static_cast<char>(id[key]);
    }
    return next;
  }

 private:
  int k_;
  std::array<char, kMaxDecisionWidth> cls_;
};

// Shared depth-first engine over edge variables with bitset domains and
// forward checking. `Model` supplies the constraint propagation:
//   bool propagate(EdgeId e, unsigned value, std::vector<Domain>& dom,
//                  const std::vector<int>& assigned, Trail& trail)
class Trail {
 public:
  void save(std::vector<Domain>& dom, EdgeId e) { entries_.emplace_back(e, dom[e]); }
  std::size_t mark() const noexcept { return entries_.size(); }
  void undo(std::vector<Domain>& dom, std::size_t mark) {
    while (entries_.size() > mark) {
      dom[entries_.back().first] = entries_.back().second;
      entries_.pop_back();
    }
  }
  // Narrows dom[e]; false on wipeout.
  bool narrow(std::vector<Domain>& dom, EdgeId e, Domain keep) {
    Domain next = dom[e] & keep;
    if (next != dom[e]) {
      save(dom, e);
      dom[e] = next;
    }
    return next != 0;
  }

 private:
  std::vector<std::pair<EdgeId, Domain>> entries_;
};

template <class Model>
class EdgeSearch {
 public:
  EdgeSearch(int variables, int k, std::vector<Domain> initial, Model& model, NodeCounter& counter)
      : n_vars_(variables), k_(k), dom_(std::move(initial)), value_(static_cast<std::size_t>(variables), -1),
        model_(model), counter_(counter) {}

  // True when a full assignment was found; value(e) then holds it.
  bool run() {
    for (Domain d : dom_)
      if (d == 0) return false;
    return dfs(PositionClasses(k_), 0);
  }
  int value(EdgeId e) const { return value_[static_cast<std::size_t>(e)]; }

 private:
  bool dfs(const PositionClasses& classes, int depth) {
    if (depth == n_vars_) return true;
    // Smallest remaining domain first, lowest id on ties.
    EdgeId pick = -1;
    int best = 65;
    for (EdgeId e = 0; e < n_vars_; ++e) {
      if (value_[e] >= 0) continue;
      int size = std::popcount(dom_[e]);
      if (size < best) {
        best = size;
        pick = e;
      }
    }
    Domain d = dom_[pick];
    while (d) {
      auto v = static_cast<unsigned>(std::countr_zero(d));
      d &= d - 1;
      if (!classes.canonical(v)) continue;
      if (!counter_.tick()) return false;
      std::size_t mark = trail_.mark();
      value_[pick] = static_cast<int>(v);
      Domain saved = dom_[pick];
      dom_[pick] = Domain{1} << v;
      if (model_.propagate(pick, v, dom_, value_, trail_) && dfs(classes.refined(v), depth + 1)) return true;
      dom_[pick] = saved;
      value_[pick] = -1;
      trail_.undo(dom_, mark);
      if (counter_.exhausted()) return false;
    }
    return false;
  }

  int n_vars_;
  int k_;
  std::vector<Domain> dom_;
  std::vector<int> value_;
  Model& model_;
  NodeCounter& counter_;
  Trail trail_;
};

// Orientation (sigma) and elbow covers. Variable: the mask of orientations
// directing the edge out of its low endpoint. At a vertex x the out-masks of
// two incident edges must intersect (sigma) or must not be complementary (elbow).
class PairMaskModel {
 public:
  PairMaskModel(const Graph& g, int k, bool elbow) : g_(g), k_(k), full_(full_mask(k)) {
    const unsigned values = 1U << k;
    allow_low_.assign(values, 0);
    allow_high_.assign(values, 0);
    for (unsigned a = 0; a < values; ++a)
      for (unsigned b = 0; b < values; ++b) {
        if (ok(a, b, elbow)) allow_low_[a] |= Domain{1} << b;
        if (ok(a, static_cast<unsigned>(full_) ^ b, elbow)) allow_high_[a] |= Domain{1} << b;
      }
  }

  // Values that leave every endpoint of degree >= 2 some compatible partner.
  std::vector<Domain> initial_domains() const {
    std::vector<Domain> dom(static_cast<std::size_t>(g_.size()), 0);
    for (EdgeId e = 0; e < g_.size(); ++e) {
      const Edge& ed = g_.edge(e);
      for (unsigned v = 0; v < (1U << k_); ++v) {
        bool low_ok = g_.degree(ed.u) < 2 || allow_low_[v] != 0;
        bool high_ok = g_.degree(ed.v) < 2 || allow_low_[static_cast<unsigned>(full_) ^ v] != 0;
        if (low_ok && high_ok) dom[e] |= Domain{1} << v;
      }
    }
    return dom;
  }

  bool propagate(EdgeId e, unsigned value, std::vector<Domain>& dom, const std::vector<int>& assigned, Trail& trail) {
    const Edge& ed = g_.edge(e);
    for (Vertex x : {ed.u, ed.v}) {
      unsigned out = x == ed.u ? value : static_cast<unsigned>(full_) ^ value;
      for (EdgeId f : g_.incident_edges(x)) {
        if (f == e) continue;
        Domain keep = g_.edge(f).u == x ? allow_low_[out] : allow_high_[out];
        if (assigned[f] >= 0) {
          if (!(keep >> assigned[f] & 1U)) return false;
        } else if (!trail.narrow(dom, f, keep)) {
          return false;
        }
      }
    }
    return true;
  }

 private:
  bool ok(unsigned a, unsigned b, bool elbow) const {
    return elbow ? (a ^ b) != static_cast<unsigned>(full_) : (a & b) != 0;
  }

  const Graph& g_;
  int k_;
  SignatureMask full_;
  std::vector<Domain> allow_low_, allow_high_;
};

// Equivalence covers. Variable: the nonempty label set of a host edge. For
// each label, edges carrying it must form a disjoint union of cliques: for
// edges sa, sb both labeled i, ab must exist and be labeled i.
class LabelModel {
 public:
  LabelModel(const Graph& h, int k) : h_(h), k_(k) {
    const unsigned values = 1U << k;
    disjoint_.assign(values, 0);
    third_.assign(static_cast<std::size_t>(values) * values, 0);
    for (unsigned a = 0; a < values; ++a)
      for (unsigned b = 0; b < values; ++b) {
        if ((a & b) == 0) disjoint_[a] |= Domain{1} << b;
        for (unsigned c = 0; c < values; ++c)
          if ((c & (a | b)) == (a & b)) third_[a * values + b] |= Domain{1} << c;
      }
    partners_.resize(static_cast<std::size_t>(h.size()));
    for (Vertex s = 0; s < h.order(); ++s) {
      auto inc = h.incident_edges(s);
      for (std::size_t i = 0; i < inc.size(); ++i)
        for (std::size_t j = 0; j < inc.size(); ++j) {
          if (i == j) continue;
          auto third = h.edge_id(h.other(inc[i], s), h.other(inc[j], s));
          partners_[inc[i]].push_back({inc[j], third ? *third : -1});
        }
    }
  }

  std::vector<Domain> initial_domains() const {
    return std::vector<Domain>(static_cast<std::size_t>(h_.size()), all_values(k_) & ~Domain{1});
  }

  bool propagate(EdgeId e, unsigned value, std::vector<Domain>& dom, const std::vector<int>& assigned, Trail& trail) {
    const unsigned values = 1U << k_;
    for (const auto& [f, third] : partners_[e]) {
      int fv = assigned[f];
      if (third < 0) {
        if (fv >= 0) {
          if (value & static_cast<unsigned>(fv)) return false;
        } else if (!trail.narrow(dom, f, disjoint_[value])) {
          return false;
        }
        continue;
      }
      if (fv < 0) continue;  // handled from the (third, f) entry
      Domain keep = third_[value * values + static_cast<unsigned>(fv)];
      int tv = assigned[third];
      if (tv >= 0) {
        if (!(keep >> tv & 1U)) return false;
      } else if (!trail.narrow(dom, third, keep)) {
        return false;
      }
    }
    return true;
  }

 private:
  struct Partner {
    EdgeId other;
    EdgeId third;  // -1 when the two edges span an induced path
  };
  const Graph& h_;
  int k_;
  std::vector<Domain> disjoint_, third_;
  std::vector<std::vector<Partner>> partners_;
};

template <class Result, class Build>
Result run_mask_search(int vars, int k, std::vector<Domain> initial, auto& model, const Budget& budget, Build build) {
  Result r;
  NodeCounter counter(budget);
  EdgeSearch search(vars, k, std::move(initial), model, counter);
  bool found = search.run();
  r.nodes = counter.nodes();
  if (found) {
    r.decision = Decision::sat;
    r.witness = build(search);
  } else {
    r.decision = counter.exhausted() ? Decision::timeout : Decision::unsat;
  }
  return r;
}

inline OrientationCover cover_from_masks(const Graph& g, int k, CoverKind kind, auto&& mask_of) {
  OrientationCover c{kind, {}};
  for (int i = 0; i < k; ++i) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.size()));
    for (EdgeId e = 0; e < g.size(); ++e) bits[e] = !(static_cast<unsigned>(mask_of(e)) >> i & 1U);
    c.orientations.emplace_back(g.order(), std::move(bits));
  }
  return c;
}

inline void check_width(int k) {
  if (k < 0 || k > kMaxDecisionWidth)
    throw UnsupportedError("decision procedures support 0 <= k <= " + std::to_string(kMaxDecisionWidth));
}

inline DecideResult<OrientationCover> decide_pair_cover(const Graph& g, int k, const Budget& budget, bool elbow) {
  check_width(k);
  const CoverKind kind = elbow ? CoverKind::elbow : CoverKind::orientation;
  if (k == 0) {
    DecideResult<OrientationCover> r;
    r.decision = g.has_incident_pair() ? Decision::unsat : Decision::sat;
    if (r.sat()) r.witness = OrientationCover{kind, {}};
    return r;
  }
  PairMaskModel model(g, k, elbow);
  auto r = run_mask_search<DecideResult<OrientationCover>>(
      g.size(), k, model.initial_domains(), model, budget,
      [&](const auto& search) { return cover_from_masks(g, k, kind, [&](EdgeId e) { return search.value(e); }); });
  return r;
}

}  // namespace detail

// Is there an orientation covering of g with k orientations?
inline DecideResult<OrientationCover> decide_sigma(const Graph& g, int k, const Budget& budget = {}) {
  return detail::decide_pair_cover(g, k, budget, false);
}

// Is there an elbow covering of g with k orientations?
inline DecideResult<OrientationCover> decide_elb(const Graph& g, int k, const Budget& budget = {}) {
  return detail::decide_pair_cover(g, k, budget, true);
}

// Is there an equivalence covering of h with k equivalence subgraphs?
inline DecideResult<EquivalenceCover> decide_eq(const Graph& h, int k, const Budget& budget = {}) {
  detail::check_width(k);
  if (h.size() == 0) return {Decision::sat, EquivalenceCover{std::vector<EquivalenceSubgraph>(static_cast<std::size_t>(k))}, 0};
  if (k == 0) return {Decision::unsat, std::nullopt, 0};
  detail::LabelModel model(h, k);
  return detail::run_mask_search<DecideResult<EquivalenceCover>>(
      h.size(), k, model.initial_domains(), model, budget, [&](const auto& search) {
        EquivalenceCover c;
        for (int i = 0; i < k; ++i) {
          // Components of the label-i edges; each is a clique by construction.
          std::vector<int> parent(static_cast<std::size_t>(h.order()));
          std::iota(parent.begin(), parent.end(), 0);
          auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
          };
          std::vector<char> touched(static_cast<std::size_t>(h.order()), 0);
          for (EdgeId e = 0; e < h.size(); ++e)
            if (static_cast<unsigned>(search.value(e)) >> i & 1U) {
              touched[h.edge(e).u] = touched[h.edge(e).v] = 1;
              int a = find(h.edge(e).u), b = find(h.edge(e).v);
              if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
          EquivalenceSubgraph sub;
          std::vector<int> slot(static_cast<std::size_t>(h.order()), -1);
          for (Vertex v = 0; v < h.order(); ++v) {
            if (!touched[v]) continue;
            int root = find(v);
            if (slot[root] < 0) {
              slot[root] = static_cast<int>(sub.classes.size());
              sub.classes.emplace_back();
            }
            sub.classes[slot[root]].push_back(v);
          }
          c.subgraphs.push_back(std::move(sub));
        }
        return c;
      });
}

namespace detail {

// Builds k permutations as vertex orders, position by position. Each order
// is taken in its reversal class representative (vertex 0 before vertex 1,
// reversal preserves betweenness) and the k orders are non-decreasing
// lexicographically. Only the last order is pruned: a triple (edge, w) still
// open after the first k-1 orders must not have w placed strictly between
// the edge's endpoints.
class EyebrowSearch {
 public:
  EyebrowSearch(const Graph& g, int k, NodeCounter& counter)
      : g_(g), n_(g.order()), k_(k), counter_(counter), orders_(static_cast<std::size_t>(k)),
        pos_(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(g.order()), -1)) {}

  bool run() { return build(0, 0, true); }
  const std::vector<std::vector<Vertex>>& orders() const noexcept { return orders_; }

 private:
  bool inside(int p, Vertex u, Vertex v, Vertex w) const {
    int a = pos_[p][u], b = pos_[p][v], c = pos_[p][w];
    return std::min(a, b) < c && c < std::max(a, b);
  }

  // open_[e * n + w]: no earlier order places w outside edge e.
  void compute_open(int upto) {
    open_.assign(static_cast<std::size_t>(g_.size()) * static_cast<std::size_t>(n_), 0);
    for (EdgeId e = 0; e < g_.size(); ++e)
      for (Vertex w = 0; w < n_; ++w) {
        const Edge& ed = g_.edge(e);
        if (w == ed.u || w == ed.v) continue;
        bool open = true;
        for (int p = 0; p < upto && open; ++p) open = inside(p, ed.u, ed.v, w);
        open_[static_cast<std::size_t>(e) * n_ + w] = open;
      }
  }

  // Placing x at the current end of order p: any open triple whose edge is
  // x-y with y already placed and w placed after y is now violated.
  bool consistent_last(int p, Vertex x) const {
    auto nb = g_.neighbors(x);
    auto inc = g_.incident_edges(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      int py = pos_[p][nb[i]];
      if (py < 0) continue;
      for (std::size_t at = static_cast<std::size_t>(py) + 1; at < orders_[p].size(); ++at) {
        Vertex w = orders_[p][at];
        if (open_[static_cast<std::size_t>(inc[i]) * n_ + w]) return false;
      }
    }
    return true;
  }

  bool build(int p, int at, bool tight) {
    if (at == n_) return p + 1 == k_ || build(p + 1, 0, true);
    if (at == 0 && p + 1 == k_) compute_open(p);
    const bool last = p + 1 == k_;
    for (Vertex x = 0; x < n_; ++x) {
      if (pos_[p][x] >= 0) continue;
      if (n_ >= 2 && x == 1 && pos_[p][0] < 0) continue;
      if (tight && p > 0 && x < orders_[p - 1][at]) continue;
      if (!counter_.tick()) return false;
      if (last && !consistent_last(p, x)) continue;
      pos_[p][x] = at;
      orders_[p].push_back(x);
      bool still_tight = tight && p > 0 && x == orders_[p - 1][at];
      if (build(p, at + 1, still_tight)) return true;
      orders_[p].pop_back();
      pos_[p][x] = -1;
      if (counter_.exhausted()) return false;
    }
    return false;
  }

  const Graph& g_;
  int n_, k_;
  NodeCounter& counter_;
  std::vector<std::vector<Vertex>> orders_;
  std::vector<std::vector<int>> pos_;
  std::vector<char> open_;
};

}  // namespace detail

// Is there an eyebrow covering of g with k permutations? Intended for small n.
inline DecideResult<EyebrowCover> decide_eyebrow(const Graph& g, int k, const Budget& budget = {}) {
  if (k < 0) throw UnsupportedError("k must be >= 0");
  DecideResult<EyebrowCover> r;
  const bool has_triple = g.size() > 0 && g.order() >= 3;
  if (k == 0 || !has_triple) {
    r.decision = has_triple ? Decision::unsat : Decision::sat;
    if (r.sat()) r.witness = EyebrowCover{std::vector<Permutation>(static_cast<std::size_t>(k), Permutation::identity(g.order()))};
    return r;
  }
  NodeCounter counter(budget);
  detail::EyebrowSearch search(g, k, counter);
  bool found = search.run();
  r.nodes = counter.nodes();
  if (found) {
    r.decision = Decision::sat;
    EyebrowCover c;
    for (const auto& order : search.orders()) c.permutations.push_back(Permutation::from_order(order));
    r.witness = std::move(c);
  } else {
    r.decision = counter.exhausted() ? Decision::timeout : Decision::unsat;
  }
  return r;
}

}  // namespace eqcover
