#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "eqcover/construct/analogue.hpp"
#include "eqcover/construct/known_covers.hpp"
#include "eqcover/exact/chromatic.hpp"
#include "eqcover/exact/search.hpp"
#include "eqcover/exact/solve.hpp"
#include "eqcover/line_graph.hpp"

namespace eqcover {

// Density bounds on eq(G) in terms of n and the minimum degree delta:
// log2 n - log2(n - delta - 1) <= eq(G) <= 2 e^2 (n - delta)^2 ln n.
// `lower` is empty when n - delta - 1 = 0 and the logarithm is undefined.
struct AlonBounds {
  std::optional<double> lower;
  double upper = 0;
};

inline AlonBounds alon_bounds(int n, int delta) {
  if (n < 1 || delta < 0 || delta > n - 1)
    throw UnsupportedError("alon_bounds needs 0 <= delta <= n-1, got n=" + std::to_string(n) +
                           " delta=" + std::to_string(delta));
  AlonBounds b;
  if (n - delta - 1 > 0) b.lower = std::log2(static_cast<double>(n)) - std::log2(static_cast<double>(n - delta - 1));
  const double spread = n - delta;
  b.upper = 2.0 * std::numbers::e * std::numbers::e * spread * spread * std::log(static_cast<double>(n));
  return b;
}

// ceil(log2 log2 c) for c >= 2: the least t with c <= 2^(2^t).
inline int ceil_log2_log2(long long c) {
  int t = 0;
  while (t < 6 && c > (1LL << (1 << t))) ++t;
  return t;
}

// Least k >= 3 with c <= k + 2^(2^(k-1)-k-1).
inline int peeling_lower_bound(long long c) {
  for (int k = 3; k <= 6; ++k)
    if (c <= k + (1LL << ((1 << (k - 1)) - k - 1))) return k;
  return 7;
}

struct Bound {
  int value = 0;
  std::string source;
};

struct Interval {
  Bound lo, hi;
  bool exact() const noexcept { return lo.value == hi.value; }
};

struct BoundsReport {
  int n = 0, m = 0, min_degree = 0;
  bool bipartite = false;
  bool triangle_free = false;
  Interval chi, sigma, elb, eqL;
  std::optional<AlonBounds> alon;  // for eq(G); present when G has an edge
  // Certificates for the constructive upper endpoints, when there is one.
  std::optional<Coloring> chi_witness;
  std::optional<OrientationCover> sigma_witness, elb_witness;
  std::optional<EquivalenceCover> eqL_witness;
  std::uint64_t nodes = 0;

  SolveStatus status() const {
    return chi.exact() && sigma.exact() && elb.exact() && eqL.exact() ? SolveStatus::exact : SolveStatus::bounded;
  }
};

namespace detail {

// sigma as a function of chi: <= 2 exactly for bipartite graphs, 3 exactly for
// chi in {3,4}, 4 exactly for chi in 5..12, at least 5 beyond. For larger
// chi the loglog lower bound and the peeling-coloring lower bound apply.
inline Bound sigma_lower_from_chi(int chi) {
  if (chi <= 2) return {1, "has-incident-pair"};
  if (chi <= 4) return {3, "chromatic-band"};
  if (chi <= 12) return {4, "chromatic-band"};
  int loglog = ceil_log2_log2(chi) + 1, peel = peeling_lower_bound(chi);
  if (loglog >= peel && loglog > 5) return {loglog, "loglog-chromatic"};
  if (peel > 5) return {peel, "peeling-coloring"};
  return {5, "chromatic-band"};
}

}  // namespace detail

// Intervals for chi, sigma, elb and eq(L(G)) composed from the known
// relations, tightened by budgeted exact search.
inline BoundsReport bounds_report(const Graph& g, const Budget& budget = {}) {
  BoundsReport r;
  r.n = g.order();
  r.m = g.size();
  r.min_degree = g.min_degree();
  r.bipartite = is_bipartite(g);
  r.triangle_free = is_triangle_free(g);
  if (g.size() > 0) r.alon = alon_bounds(g.order(), g.min_degree());

  auto chi = exact_chromatic(g, budget);
  r.nodes += chi.nodes;
  r.chi = {{chi.lo, chi.exact() ? "exact-search" : "clique-bound"}, {chi.hi, chi.exact() ? "exact-search" : "greedy-coloring"}};
  r.chi_witness = chi.witness;

  if (!g.has_incident_pair()) {
    r.sigma = r.elb = r.eqL = {{0, "no-incident-pair"}, {0, "no-incident-pair"}};
    r.sigma_witness = OrientationCover{CoverKind::orientation, {}};
    r.elb_witness = OrientationCover{CoverKind::elbow, {}};
    r.eqL_witness = EquivalenceCover{};
    return r;
  }

  // sigma
  ColoringPullback pulled = cover_via_coloring(g, chi.witness);
  r.sigma.lo = detail::sigma_lower_from_chi(chi.lo);
  r.sigma.hi = {pulled.cover.size(), "construction:" + pulled.base};
  r.sigma_witness = pulled.cover;
  if (chi.hi > 4 && chi.hi <= 12) {
    r.sigma.hi = {4, "theorem, non-constructive"};
    r.sigma_witness.reset();
    auto d = decide_sigma(g, 4, budget);
    r.nodes += d.nodes;
    if (d.sat()) {
      r.sigma.hi = {4, "exhaustive-search"};
      r.sigma_witness = std::move(d.witness);
    }
  }
  while (r.sigma.lo.value < r.sigma.hi.value && r.sigma.lo.value <= kMaxDecisionWidth) {
    auto d = decide_sigma(g, r.sigma.lo.value, budget);
    r.nodes += d.nodes;
    if (d.sat()) {
      r.sigma.hi = {r.sigma.lo.value, "exhaustive-search"};
      r.sigma_witness = std::move(d.witness);
    } else if (d.unsat()) {
      r.sigma.lo = {r.sigma.lo.value + 1, "exhaustive-search"};
    } else {
      break;
    }
  }

  // elb = ceil(log2 log2 chi) + 1, witnessed by pulling back the tower cover.
  r.elb.lo = {ceil_log2_log2(chi.lo) + 1, "elbow-formula"};
  r.elb_witness = detail::elbow_via_coloring(g, chi.witness);
  r.elb.hi = {r.elb_witness->size(), "construction:elbow-pullback"};

  // eq(L(G))
  LineGraphMap lm = line_graph(g);
  if (r.triangle_free) {
    r.eqL = r.sigma;
    r.eqL.lo.source = "triangle-free-equality";
    r.eqL.hi.source = "triangle-free-equality";
    if (r.sigma_witness) r.eqL_witness = eq_cover_from_orientation_cover(lm, *r.sigma_witness);
  } else {
    r.eqL.lo = {(r.sigma.lo.value + 2) / 3, "triangle-split"};
    r.eqL.hi = {r.sigma.hi.value, "analogue"};
    if (r.sigma_witness) r.eqL_witness = eq_cover_from_orientation_cover(lm, *r.sigma_witness);
  }
  return r;
}

}  // namespace eqcover
