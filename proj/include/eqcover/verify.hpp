#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include "eqcover/error.hpp"
#include "eqcover/graph.hpp"
#include "eqcover/orientation.hpp"

namespace eqcover {

enum class CoverKind { orientation, elbow, eyebrow, equivalence };

inline constexpr std::string_view kind_name(CoverKind k) {
  switch (k) {
    case CoverKind::orientation: return "orientation";
    case CoverKind::elbow: return "elbow";
    case CoverKind::eyebrow: return "eyebrow";
    case CoverKind::equivalence: return "equivalence";
  }
  return "?";
}

inline std::optional<CoverKind> parse_kind(std::string_view s) {
  for (CoverKind k : {CoverKind::orientation, CoverKind::elbow, CoverKind::eyebrow, CoverKind::equivalence})
    if (kind_name(k) == s) return k;
  return std::nullopt;
}

// k orientations of one reference graph, claimed to be an orientation or an
// elbow covering according to `kind`.
struct OrientationCover {
  CoverKind kind = CoverKind::orientation;
  std::vector<Orientation> orientations;

  int size() const noexcept { return static_cast<int>(orientations.size()); }
  void check_shape(const Graph& g) const {
    for (const Orientation& o : orientations) o.check_shape(g);
  }
  friend bool operator==(const OrientationCover&, const OrientationCover&) = default;
};

struct EyebrowCover {
  std::vector<Permutation> permutations;

  int size() const noexcept { return static_cast<int>(permutations.size()); }
  void check_shape(const Graph& g) const {
    for (const Permutation& p : permutations)
      if (p.size() != g.order())
        throw ShapeError("permutation of length " + std::to_string(p.size()) + " for a graph on " +
                         std::to_string(g.order()) + " vertices");
  }
  friend bool operator==(const EyebrowCover&, const EyebrowCover&) = default;
};

using VertexClass = std::vector<Vertex>;

// Disjoint vertex classes, each meant to induce a clique of the host.
struct EquivalenceSubgraph {
  std::vector<VertexClass> classes;
  friend bool operator==(const EquivalenceSubgraph&, const EquivalenceSubgraph&) = default;
};

struct EquivalenceCover {
  std::vector<EquivalenceSubgraph> subgraphs;
  int size() const noexcept { return static_cast<int>(subgraphs.size()); }
  friend bool operator==(const EquivalenceCover&, const EquivalenceCover&) = default;
};

using SignatureMask = std::uint64_t;
inline constexpr int kMaxSignatureWidth = 64;

inline SignatureMask full_mask(int k) {
  return k >= 64 ? ~SignatureMask{0} : (SignatureMask{1} << k) - 1;
}

// o(v, e): the set of orientation indices directing e out of v, as a k-bit
// mask (bit i is orientation i, shown 1-based as i+1). Only the low endpoint's
// mask is stored; the high endpoint's is its complement.
class IncidenceSignature {
 public:
  IncidenceSignature(int k, std::vector<SignatureMask> low_masks) : k_(k), low_(std::move(low_masks)) {}

  int width() const noexcept { return k_; }
  SignatureMask full() const noexcept { return full_mask(k_); }

  SignatureMask out_mask(const Graph& g, Vertex v, EdgeId e) const {
    SignatureMask m = low_[static_cast<std::size_t>(e)];
    return g.edge(e).u == v ? m : full() ^ m;
  }

  // 1-based orientation indices in o(v, e), ascending.
  std::vector<int> out_set(const Graph& g, Vertex v, EdgeId e) const {
    std::vector<int> s;
    SignatureMask m = out_mask(g, v, e);
    for (int i = 0; i < k_; ++i)
      if (m >> i & 1U) s.push_back(i + 1);
    return s;
  }

 private:
  int k_;
  std::vector<SignatureMask> low_;
};

inline IncidenceSignature incidence_signatures(const Graph& g, const OrientationCover& c) {
  c.check_shape(g);
  if (c.size() > kMaxSignatureWidth)
    throw UnsupportedError("covers with more than " + std::to_string(kMaxSignatureWidth) +
                           " orientations are not supported");
  std::vector<SignatureMask> low(static_cast<std::size_t>(g.size()), 0);
  for (int i = 0; i < c.size(); ++i) {
    const Orientation& o = c.orientations[static_cast<std::size_t>(i)];
    for (EdgeId e = 0; e < g.size(); ++e)
      if (!o.reversed(e)) low[e] |= SignatureMask{1} << i;
  }
  return IncidenceSignature(c.size(), std::move(low));
}

// ---- violations ------------------------------------------------------------

// Edges e < f at v that no orientation directs both out of v.
struct IncidencePairViolation {
  Vertex v;
  Edge e, f;
  friend bool operator==(const IncidencePairViolation&, const IncidencePairViolation&) = default;
};
// Path u - v - w (center v) that is a directed path in every orientation.
struct DirectedPathViolation {
  Vertex u, v, w;
  friend bool operator==(const DirectedPathViolation&, const DirectedPathViolation&) = default;
};
// Edge e with a third vertex w that every permutation ranks strictly between e's ends.
struct BetweennessViolation {
  Edge e;
  Vertex w;
  friend bool operator==(const BetweennessViolation&, const BetweennessViolation&) = default;
};
struct UncoveredEdgeViolation {
  Edge e;
  friend bool operator==(const UncoveredEdgeViolation&, const UncoveredEdgeViolation&) = default;
};
// Class `cls` of subgraph `subgraph` contains a, b but the host lacks edge ab.
struct NonCliqueViolation {
  int subgraph, cls;
  Vertex a, b;
  friend bool operator==(const NonCliqueViolation&, const NonCliqueViolation&) = default;
};
// Vertex v lies in classes `first` and `second` (first <= second; equal for a
// repeated vertex) of the same subgraph.
struct OverlapViolation {
  int subgraph;
  Vertex v;
  int first, second;
  friend bool operator==(const OverlapViolation&, const OverlapViolation&) = default;
};

using Violation = std::variant<IncidencePairViolation, DirectedPathViolation, BetweennessViolation,
                               UncoveredEdgeViolation, NonCliqueViolation, OverlapViolation>;

// Single-line witness. Subgraph and class indices are 1-based so they match
// the block numbering of cover files.
inline std::string format_violation(const Violation& violation) {
  std::ostringstream s;
  s << "VIOLATION ";
  auto edge = [&](const Edge& e) { s << '(' << e.u << ',' << e.v << ')'; };
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, IncidencePairViolation>) {
          s << "v=" << x.v << " e=";
          edge(x.e);
          s << " f=";
          edge(x.f);
        } else if constexpr (std::is_same_v<T, DirectedPathViolation>) {
          s << "path=(" << x.u << ',' << x.v << ',' << x.w << ')';
        } else if constexpr (std::is_same_v<T, BetweennessViolation>) {
          s << "e=";
          edge(x.e);
          s << " w=" << x.w;
        } else if constexpr (std::is_same_v<T, UncoveredEdgeViolation>) {
          s << "uncovered=";
          edge(x.e);
        } else if constexpr (std::is_same_v<T, NonCliqueViolation>) {
          s << "block=" << x.subgraph + 1 << " class=" << x.cls + 1 << " missing=(" << x.a << ',' << x.b << ')';
        } else {
          s << "block=" << x.subgraph + 1 << " vertex=" << x.v << " classes=(" << x.first + 1 << ','
            << x.second + 1 << ')';
        }
      },
      violation);
  return s.str();
}

// Outcome of a verifier: valid, or the lexicographically first violation.
class Verdict {
 public:
  Verdict() = default;
  Verdict(Violation v) : violation_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  bool valid() const noexcept { return !violation_.has_value(); }
  explicit operator bool() const noexcept { return valid(); }
  const Violation& violation() const { return violation_.value(); }
  std::string line(int k) const { return valid() ? "VALID k=" + std::to_string(k) : format_violation(*violation_); }

 private:
  std::optional<Violation> violation_;
};

// Thrown by constructions that require a certified input cover.
class InvalidCoverError : public Error {
 public:
  explicit InvalidCoverError(Violation v) : Error("input cover is invalid: " + format_violation(v)), v_(std::move(v)) {}
  const Violation& violation() const noexcept { return v_; }

 private:
  Violation v_;
};

namespace detail {

// Scans vertices [begin, end) for the first incident pair failing `covered`.
template <class Covered>
std::optional<std::pair<Vertex, std::pair<EdgeId, EdgeId>>> scan_pairs(const Graph& g, const IncidenceSignature& sig,
                                                                       Vertex begin, Vertex end, Covered covered) {
  std::vector<SignatureMask> masks;
  for (Vertex v = begin; v < end; ++v) {
    auto inc = g.incident_edges(v);
    masks.resize(inc.size());
    for (std::size_t i = 0; i < inc.size(); ++i) masks[i] = sig.out_mask(g, v, inc[i]);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        if (!covered(masks[i], masks[j])) return std::pair{v, std::pair{inc[i], inc[j]}};
  }
  return std::nullopt;
}

// Splits the vertex range over `workers` threads; the reported pair is the
// first in vertex order regardless of the split.
template <class Covered>
std::optional<std::pair<Vertex, std::pair<EdgeId, EdgeId>>> first_uncovered_pair(const Graph& g,
                                                                                 const IncidenceSignature& sig,
                                                                                 int workers, Covered covered) {
  const int n = g.order();
  workers = std::clamp(workers, 1, std::max(1, n));
  if (workers == 1) return scan_pairs(g, sig, 0, n, covered);
  std::vector<std::optional<std::pair<Vertex, std::pair<EdgeId, EdgeId>>>> found(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      Vertex b = static_cast<Vertex>(static_cast<long long>(n) * w / workers);
      Vertex e = static_cast<Vertex>(static_cast<long long>(n) * (w + 1) / workers);
      pool.emplace_back([&, w, b, e] { found[w] = scan_pairs(g, sig, b, e, covered); });
    }
  }
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

}  // namespace detail

// Every pair of distinct edges sharing an endpoint v must be directed out of v
// together in some orientation.
inline Verdict verify_orientation_cover(const Graph& g, const OrientationCover& c, int workers = 1) {
  IncidenceSignature sig = incidence_signatures(g, c);
  auto hit = detail::first_uncovered_pair(g, sig, workers,
                                          [](SignatureMask a, SignatureMask b) { return (a & b) != 0; });
  if (!hit) return {};
  auto [v, ef] = *hit;
  return Violation{IncidencePairViolation{v, g.edge(ef.first), g.edge(ef.second)}};
}

// Every 2-edge path u - v - w must be undirected (both edges out of v or both
// into v) in some orientation.
inline Verdict verify_elbow_cover(const Graph& g, const OrientationCover& c, int workers = 1) {
  IncidenceSignature sig = incidence_signatures(g, c);
  const SignatureMask full = sig.full();
  auto hit = detail::first_uncovered_pair(g, sig, workers,
                                          [full](SignatureMask a, SignatureMask b) { return (a ^ b) != full; });
  if (!hit) return {};
  auto [v, ef] = *hit;
  return Violation{DirectedPathViolation{g.other(ef.first, v), v, g.other(ef.second, v)}};
}

// For every edge uv and third vertex w some permutation ranks w outside the
// open interval between u and v.
inline Verdict verify_eyebrow_cover(const Graph& g, const EyebrowCover& c) {
  c.check_shape(g);
  for (const Edge& e : g.edges()) {
    for (Vertex w = 0; w < g.order(); ++w) {
      if (w == e.u || w == e.v) continue;
      bool outside = std::any_of(c.permutations.begin(), c.permutations.end(), [&](const Permutation& p) {
        int lo = std::min(p.rank(e.u), p.rank(e.v)), hi = std::max(p.rank(e.u), p.rank(e.v));
        return p.rank(w) < lo || p.rank(w) > hi;
      });
      if (!outside) return Violation{BetweennessViolation{e, w}};
    }
  }
  return {};
}

// Classes disjoint within each subgraph, each class a clique of h, and every
// edge of h inside some class.
inline Verdict verify_equivalence_cover(const Graph& h, const EquivalenceCover& c) {
  for (const auto& sub : c.subgraphs)
    for (const auto& cls : sub.classes)
      for (Vertex v : cls)
        if (v < 0 || v >= h.order())
          throw ShapeError("class vertex " + std::to_string(v) + " outside 0.." + std::to_string(h.order() - 1));

  std::vector<char> covered(static_cast<std::size_t>(h.size()), 0);
  std::vector<int> owner(static_cast<std::size_t>(h.order()), -1);
  for (int s = 0; s < c.size(); ++s) {
    const auto& sub = c.subgraphs[static_cast<std::size_t>(s)];
    std::fill(owner.begin(), owner.end(), -1);
    for (int ci = 0; ci < static_cast<int>(sub.classes.size()); ++ci) {
      const VertexClass& cls = sub.classes[static_cast<std::size_t>(ci)];
      for (Vertex v : cls) {
        if (owner[v] >= 0) return Violation{OverlapViolation{s, v, owner[v], ci}};
        owner[v] = ci;
      }
      VertexClass sorted = cls;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
          auto e = h.edge_id(sorted[i], sorted[j]);
          if (!e) return Violation{NonCliqueViolation{s, ci, sorted[i], sorted[j]}};
          covered[*e] = 1;
        }
    }
  }
  for (EdgeId e = 0; e < h.size(); ++e)
    if (!covered[e]) return Violation{UncoveredEdgeViolation{h.edge(e)}};
  return {};
}

inline Verdict verify_cover(const Graph& g, const OrientationCover& c, int workers = 1) {
  return c.kind == CoverKind::elbow ? verify_elbow_cover(g, c, workers) : verify_orientation_cover(g, c, workers);
}

// Re-checks a reported violation in isolation against the definitions.
inline bool confirms_violation(const Graph& g, const OrientationCover& c, const Violation& violation) {
  c.check_shape(g);
  if (const auto* p = std::get_if<IncidencePairViolation>(&violation)) {
    auto e = g.edge_id(p->e.u, p->e.v), f = g.edge_id(p->f.u, p->f.v);
    if (!e || !f || *e == *f) return false;
    if (!(p->v == p->e.u || p->v == p->e.v) || !(p->v == p->f.u || p->v == p->f.v)) return false;
    return std::none_of(c.orientations.begin(), c.orientations.end(), [&](const Orientation& o) {
      return o.out_of(g, *e, p->v) && o.out_of(g, *f, p->v);
    });
  }
  if (const auto* p = std::get_if<DirectedPathViolation>(&violation)) {
    auto e = g.edge_id(p->u, p->v), f = g.edge_id(p->v, p->w);
    if (!e || !f || p->u == p->w) return false;
    return std::all_of(c.orientations.begin(), c.orientations.end(), [&](const Orientation& o) {
      bool forward = o.out_of(g, *e, p->u) && o.out_of(g, *f, p->v);
      bool backward = o.out_of(g, *f, p->w) && o.out_of(g, *e, p->v);
      return forward || backward;
    });
  }
  return false;
}

inline bool confirms_violation(const Graph& g, const EyebrowCover& c, const Violation& violation) {
  const auto* p = std::get_if<BetweennessViolation>(&violation);
  if (!p || !g.adjacent(p->e.u, p->e.v) || p->w == p->e.u || p->w == p->e.v) return false;
  return std::all_of(c.permutations.begin(), c.permutations.end(), [&](const Permutation& q) {
    int lo = std::min(q.rank(p->e.u), q.rank(p->e.v)), hi = std::max(q.rank(p->e.u), q.rank(p->e.v));
    return lo < q.rank(p->w) && q.rank(p->w) < hi;
  });
}

inline bool confirms_violation(const Graph& h, const EquivalenceCover& c, const Violation& violation) {
  if (const auto* p = std::get_if<UncoveredEdgeViolation>(&violation)) {
    if (!h.adjacent(p->e.u, p->e.v)) return false;
    for (const auto& sub : c.subgraphs)
      for (const auto& cls : sub.classes)
        if (std::find(cls.begin(), cls.end(), p->e.u) != cls.end() &&
            std::find(cls.begin(), cls.end(), p->e.v) != cls.end())
          return false;
    return true;
  }
  if (const auto* p = std::get_if<NonCliqueViolation>(&violation)) {
    if (p->subgraph >= c.size()) return false;
    const auto& classes = c.subgraphs[static_cast<std::size_t>(p->subgraph)].classes;
    if (p->cls >= static_cast<int>(classes.size())) return false;
    const auto& cls = classes[static_cast<std::size_t>(p->cls)];
    return p->a != p->b && std::count(cls.begin(), cls.end(), p->a) && std::count(cls.begin(), cls.end(), p->b) &&
           !h.adjacent(p->a, p->b);
  }
  if (const auto* p = std::get_if<OverlapViolation>(&violation)) {
    if (p->subgraph >= c.size()) return false;
    const auto& classes = c.subgraphs[static_cast<std::size_t>(p->subgraph)].classes;
    if (p->second >= static_cast<int>(classes.size())) return false;
    const auto& a = classes[static_cast<std::size_t>(p->first)];
    const auto& b = classes[static_cast<std::size_t>(p->second)];
    if (p->first == p->second) return std::count(a.begin(), a.end(), p->v) >= 2;
    return std::count(a.begin(), a.end(), p->v) && std::count(b.begin(), b.end(), p->v);
  }
  return false;
}

}  // namespace eqcover
