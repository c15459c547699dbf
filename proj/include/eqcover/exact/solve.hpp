#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>

#include "eqcover/construct/analogue.hpp"
#include "eqcover/construct/elbow.hpp"
#include "eqcover/construct/known_covers.hpp"
#include "eqcover/exact/chromatic.hpp"
#include "eqcover/exact/search.hpp"
#include "eqcover/line_graph.hpp"

namespace eqcover {

enum class Invariant { sigma, elb, eq, eqL, eye, chi };

inline constexpr std::string_view invariant_name(Invariant i) {
  switch (i) {
    case Invariant::sigma: return "sigma";
    case Invariant::elb: return "elb";
    case Invariant::eq: return "eq";
    case Invariant::eqL: return "eqL";
    case Invariant::eye: return "eye";
    case Invariant::chi: return "chi";
  }
  return "?";
}

inline std::optional<Invariant> parse_invariant(std::string_view s) {
  for (Invariant i : {Invariant::sigma, Invariant::elb, Invariant::eq, Invariant::eqL, Invariant::eye, Invariant::chi})
    if (invariant_name(i) == s) return i;
  return std::nullopt;
}

using Witness = std::variant<std::monostate, OrientationCover, EyebrowCover, EquivalenceCover, Coloring>;

// Value of an invariant or the best interval found. The witness certifies hi.
// For eqL the witness is an equivalence covering of L(G).
struct SolveResult {
  Invariant invariant = Invariant::sigma;
  int lo = 0;
  int hi = 0;
  SolveStatus status = SolveStatus::exact;
  Witness witness;
  std::uint64_t nodes = 0;

  bool exact() const noexcept { return status == SolveStatus::exact; }
};

namespace detail {

inline bool witness_verifies(const Graph& g, const Witness& w) {
  if (const auto* c = std::get_if<OrientationCover>(&w))
    return (c->kind == CoverKind::elbow ? verify_elbow_cover(g, *c) : verify_orientation_cover(g, *c)).valid();
  if (const auto* c = std::get_if<EyebrowCover>(&w)) return verify_eyebrow_cover(g, *c).valid();
  if (const auto* c = std::get_if<EquivalenceCover>(&w)) return verify_equivalence_cover(g, *c).valid();
  if (const auto* c = std::get_if<Coloring>(&w)) return c->is_proper(g);
  return true;
}

// Each edge of h alone in a matching: a greedy proper edge coloring, each
// color class one equivalence subgraph of 2-vertex cliques.
inline EquivalenceCover matching_cover(const Graph& h) {
  std::vector<int> color(static_cast<std::size_t>(h.size()), -1);
  int used = 0;
  for (EdgeId e = 0; e < h.size(); ++e) {
    std::vector<char> taken(static_cast<std::size_t>(used) + 1, 0);
    for (Vertex end : {h.edge(e).u, h.edge(e).v})
      for (EdgeId f : h.incident_edges(end))
        if (color[f] >= 0) taken[color[f]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    color[e] = c;
    used = std::max(used, c + 1);
  }
  EquivalenceCover out{std::vector<EquivalenceSubgraph>(static_cast<std::size_t>(used))};
  for (EdgeId e = 0; e < h.size(); ++e) out.subgraphs[color[e]].classes.push_back({h.edge(e).u, h.edge(e).v});
  return out;
}

// Elbow covering of g pulled back from K_c along a proper c-coloring. With two
// colors one orientation (side 0 -> side 1) suffices: every 2-edge path then
// has both edges at its middle vertex pointing the same way.
inline OrientationCover elbow_via_coloring(const Graph& g, const Coloring& coloring) {
  OrientationCover out{CoverKind::elbow, {}};
  if (!g.has_incident_pair()) return out;
  const int c = coloring.palette_size();
  if (c <= 2) {
    out.orientations.push_back(bipartite_orientation_cover(g).orientations.front());
    return out;
  }
  Graph kc = complete_graph(c);
  std::vector<Vertex> f(coloring.colors().begin(), coloring.colors().end());
  for (const Orientation& o : elbow_cover_complete(c).orientations) out.orientations.push_back(pullback_orientation(g, kc, f, o));
  return out;
}

// Runs decide(k) for k = lo, lo+1, ... while k < hi (hi is already witnessed).
template <class Decide>
void close_gap(SolveResult& r, const Budget& budget, Decide decide) {
  while (r.lo < r.hi) {
    if (r.lo > kMaxDecisionWidth) {
      r.status = SolveStatus::bounded;
      return;
    }
    auto d = decide(r.lo, budget);
    r.nodes += d.nodes;
    if (d.sat()) {
      r.hi = r.lo;
      r.witness = std::move(*d.witness);
    } else if (d.unsat()) {
      ++r.lo;
    } else {
      r.status = SolveStatus::timeout;
      return;
    }
  }
  r.status = SolveStatus::exact;
}

}  // namespace detail

// Exact value by decide(k) for increasing k, starting from a constructive
// upper bound so the loop always terminates with a witness.
inline SolveResult solve(const Graph& g, Invariant inv, const Budget& budget = {}) {
  SolveResult r;
  r.invariant = inv;
  switch (inv) {
    case Invariant::chi: {
      auto c = exact_chromatic(g, budget);
      r.lo = c.lo;
      r.hi = c.hi;
      r.status = c.status;
      r.witness = c.witness;
      r.nodes = c.nodes;
      break;
    }
    case Invariant::sigma: {
      OrientationCover up = cover_via_coloring(g, std::nullopt, ColoringSource::greedy).cover;
      if (!g.has_incident_pair()) up.orientations.clear();
      r.hi = up.size();
      r.witness = std::move(up);
      detail::close_gap(r, budget, [&](int k, const Budget& b) { return decide_sigma(g, k, b); });
      break;
    }
    case Invariant::elb: {
      OrientationCover up = detail::elbow_via_coloring(g, greedy_coloring(g).compacted());
      r.hi = up.size();
      r.witness = std::move(up);
      detail::close_gap(r, budget, [&](int k, const Budget& b) { return decide_elb(g, k, b); });
      break;
    }
    case Invariant::eq: {
      EquivalenceCover up = detail::matching_cover(g);
      r.hi = up.size();
      r.witness = std::move(up);
      detail::close_gap(r, budget, [&](int k, const Budget& b) { return decide_eq(g, k, b); });
      break;
    }
    case Invariant::eqL: {
      LineGraphMap lm = line_graph(g);
      EquivalenceCover up = detail::matching_cover(lm.line);
      OrientationCover sigma_up = cover_via_coloring(g, std::nullopt, ColoringSource::greedy).cover;
      if (g.has_incident_pair() && sigma_up.size() < up.size()) up = eq_cover_from_orientation_cover(lm, sigma_up);
      r.hi = up.size();
      r.witness = std::move(up);
      detail::close_gap(r, budget, [&](int k, const Budget& b) { return decide_eq(lm.line, k, b); });
      if (!detail::witness_verifies(lm.line, r.witness)) throw std::logic_error("eqL witness does not verify");
      return r;
    }
    case Invariant::eye: {
      const bool has_triple = g.size() > 0 && g.order() >= 3;
      EyebrowCover up = has_triple ? eyebrow_cover_complete(g.order()) : EyebrowCover{};
      r.hi = up.size();
      r.witness = std::move(up);
      detail::close_gap(r, budget, [&](int k, const Budget& b) { return decide_eyebrow(g, k, b); });
      break;
    }
  }
  if (!detail::witness_verifies(g, r.witness)) throw std::logic_error("solver witness does not verify");
  return r;
}

}  // namespace eqcover
