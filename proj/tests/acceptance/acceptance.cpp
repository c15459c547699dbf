// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "eqcover/construct/analogue.hpp"
#include "eqcover/construct/coloring.hpp"
#include "eqcover/construct/elbow.hpp"
#include "eqcover/construct/known_covers.hpp"
#include "eqcover/exact/bounds.hpp"
#include "eqcover/exact/solve.hpp"
#include "eqcover/families.hpp"
#include "oracles.hpp"

using namespace eqcover;

namespace {

const Budget kBudget = Budget::nodes(20'000'000);

// Collects the first few failure notes of one criterion.
struct Check {
  bool ok = true;
  std::ostringstream notes;
  int reported = 0;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (reported++ < 5) notes << "\n    " << what;
  }
};

int elbow_formula(int n) { return oracle::loglog_ceiling(n) + 1; }

int exact_or_minus(const Graph& g, Invariant inv) {
  SolveResult r = solve(g, inv, kBudget);
  return r.exact() ? r.hi : -1;
}

void k16_table(Check& c) {
  Verdict v = verify_orientation_cover(complete_graph(16), k16_table_cover().orientations);
  c.expect(v.valid() && v.line(5) == "VALID k=5", "table rows do not cover K16: " + v.line(5));
}

void sigma_k4(Check& c) {
  Graph k4 = complete_graph(4);
  c.expect(decide_sigma(k4, 2).unsat(), "sigma(K4) <= 2 not refuted");
  auto three = decide_sigma(k4, 3);
  c.expect(three.sat() && verify_orientation_cover(k4, *three.witness).valid(), "no verifying 3-orientation cover of K4");
}

void elb_complete(Check& c) {
  for (int n : {4, 5}) {
    Graph kn = complete_graph(n);
    int f = elbow_formula(n);
    c.expect(decide_elb(kn, f - 1).unsat(), "elb(K" + std::to_string(n) + ") below formula");
    auto at = decide_elb(kn, f);
    c.expect(at.sat() && verify_elbow_cover(kn, *at.witness).valid(),
             "elb(K" + std::to_string(n) + ") not attained at " + std::to_string(f));
  }
  c.expect(elbow_formula(4) == 2 && elbow_formula(5) == 3, "formula values");
}

void triangle_examples(Check& c) {
  Graph k3 = complete_graph(3);
  Graph tp = generate_family("triangle-plus-pendant");
  c.expect(exact_or_minus(line_graph(k3).line, Invariant::eq) == 1, "eq(L(K3)) != 1");
  c.expect(exact_or_minus(k3, Invariant::sigma) == 3, "sigma(K3) != 3");
  c.expect(exact_or_minus(tp, Invariant::sigma) == 3, "sigma(triangle+pendant) != 3");
  c.expect(exact_or_minus(tp, Invariant::eqL) == 2, "eq(L(triangle+pendant)) != 2");
}

void doubling(Check& c) {
  Graph k4 = complete_graph(4);
  OrientationCover base = k4_elbow_base();
  c.expect(base.size() == 2 && verify_elbow_cover(k4, base).valid(), "K4 base");
  CoverOnGraph d16 = elbow_double(k4, base);
  c.expect(d16.graph.order() == 16 && d16.cover.size() == 3 && d16.cover.size() == elbow_formula(16), "K16 size");
  c.expect(verify_elbow_cover(d16.graph, d16.cover).valid(), "K16 cover does not verify");
  CoverOnGraph d256 = elbow_double(d16.graph, d16.cover);
  c.expect(d256.graph.order() == 256 && d256.cover.size() == 4 && d256.cover.size() == elbow_formula(256), "K256 size");
  c.expect(verify_elbow_cover(d256.graph, d256.cover, 4).valid(), "K256 cover does not verify");
}

void three_orientations_iff_chi_3_or_4(Check& c, std::string& detail) {
  int graphs = 0, sat = 0;
  for (const auto& [name, g] : corpus::connected_graphs()) {
    if (g.order() > 8 || is_bipartite(g)) continue;
    ++graphs;
    ChromaticResult chi = exact_chromatic(g, kBudget);
    c.expect(chi.exact() && chi.value() == oracle::chromatic_number(g), name + ": chromatic number disagrees");
    auto d = decide_sigma(g, 3, kBudget);
    c.expect(d.decision != Decision::timeout, name + ": decide_sigma timed out");
    if (d.sat()) {
      ++sat;
      c.expect(verify_orientation_cover(g, *d.witness).valid(), name + ": witness does not verify");
    }
    c.expect(d.sat() == (chi.value() == 3 || chi.value() == 4),
             name + ": chi=" + std::to_string(chi.value()) + " but decide_sigma(3)=" + std::string(decision_name(d.decision)));
  }
  c.expect(graphs >= 200, "only " + std::to_string(graphs) + " graphs");
  detail = std::to_string(graphs) + " graphs, " + std::to_string(sat) + " SAT";
}

void triangle_free_equality(Check& c, std::string& detail) {
  std::vector<corpus::Entry> graphs;
  for (int n = 2; n <= 11; ++n) graphs.push_back({"path" + std::to_string(n), generate_family("path", n)});
  for (int n = 4; n <= 7; ++n) graphs.push_back({"cycle" + std::to_string(n), generate_family("cycle", n)});
  for (int n = 2; n <= 10; ++n) graphs.push_back({"star" + std::to_string(n), generate_family("star", n)});
  for (const auto& e : corpus::connected_graphs())
    if (is_triangle_free(e.graph) && e.graph.size() <= 10) graphs.push_back(e);
  int checked = 0;
  for (const auto& [name, g] : graphs) {
    if (!is_triangle_free(g) || g.size() > 10) continue;
    int sigma = exact_or_minus(g, Invariant::sigma);
    int eql = exact_or_minus(g, Invariant::eqL);
    c.expect(sigma >= 0 && eql >= 0, name + ": not exact");
    c.expect(sigma == eql, name + ": sigma=" + std::to_string(sigma) + " eq(L)=" + std::to_string(eql));
    ++checked;
  }
  detail = std::to_string(checked) + " graphs";
}

void sandwiches(Check& c, std::string& detail) {
  int checked = 0, skipped = 0;
  for (const auto& [name, g] : corpus::all_graphs()) {
    int sigma = exact_or_minus(g, Invariant::sigma);
    int elb = exact_or_minus(g, Invariant::elb);
    SolveResult eql = solve(g, Invariant::eqL, kBudget);
    if (sigma < 0 || elb < 0 || !eql.exact()) {
      ++skipped;
      continue;
    }
    ++checked;
    const std::string vals = " sigma=" + std::to_string(sigma) + " elb=" + std::to_string(elb) +
                             " eqL=" + std::to_string(eql.hi);
    c.expect(elb <= sigma && sigma <= 2 * elb, name + ": elbow sandwich" + vals);
    c.expect(eql.hi <= sigma && sigma <= 3 * eql.hi, name + ": line-graph sandwich" + vals);
    if (const auto* w = std::get_if<EquivalenceCover>(&eql.witness)) {
      LineGraphMap lm = line_graph(g);
      OrientationCover back = orientation_cover_from_eq_cover(lm, *w);
      c.expect(back.size() <= 3 * w->size() && verify_orientation_cover(g, back).valid(), name + ": round trip");
    } else {
      c.expect(false, name + ": eqL witness missing");
    }
  }
  detail = std::to_string(checked) + " graphs exact, " + std::to_string(skipped) + " skipped";
}

void extraction(Check& c) {
  Graph k4 = complete_graph(4);
  Coloring a = coloring_from_elbow_cover(k4, k4_elbow_base());
  c.expect(a.is_proper(k4) && a.palette_size() == 4, "K4 elbow coloring");
  CoverOnGraph d16 = elbow_double(k4, k4_elbow_base());
  Coloring b = coloring_from_elbow_cover(d16.graph, d16.cover);
  c.expect(b.is_proper(d16.graph) && b.palette_size() == 16, "K16 elbow coloring");
  auto w = decide_sigma(k4, 3);
  c.expect(w.sat(), "no K4 cover");
  if (w.sat()) {
    Coloring o = coloring_from_orientation_cover(k4, *w.witness);
    c.expect(o.is_proper(k4) && o.palette_size() <= 4, "K4 orientation coloring");
  }
}

void five_chromatic_triangle_free(Check& c, std::string& detail) {
  Graph m5 = generate_family("mycielski-iterate", 5);
  c.expect(m5.order() == 23 && is_triangle_free(m5), "graph shape");
  BoundsReport r = bounds_report(m5, kBudget);
  c.expect(r.chi.exact() && r.chi.lo.value == 5, "chi not exactly 5");
  c.expect(r.sigma.exact() && r.sigma.lo.value == 4, "sigma not exactly 4");
  c.expect(r.eqL.exact() && r.eqL.lo.value == 4, "eq(L) not exactly 4");
  c.expect(r.sigma_witness && verify_orientation_cover(m5, *r.sigma_witness).valid(), "sigma witness");
  c.expect(r.eqL_witness && verify_equivalence_cover(line_graph(m5).line, *r.eqL_witness).valid() &&
               r.eqL_witness->size() == 4,
           "eq(L) witness");
  detail = "chi=" + std::to_string(r.chi.lo.value) + " sigma=" + std::to_string(r.sigma.lo.value) + " [" +
           r.sigma.lo.source + "] eq(L)=" + std::to_string(r.eqL.lo.value) + " [" + r.eqL.lo.source + "]";
}

void small_unsat_against_enumeration(Check& c, std::string& detail) {
  int unsat = 0;
  for (const auto& [name, g] : corpus::small_graphs()) {
    for (int k = 1; k <= kMaxDecisionWidth && k * g.size() <= 18; ++k) {
      auto s = decide_sigma(g, k);
      auto e = decide_elb(g, k);
      c.expect(s.sat() == oracle::sigma_at_most(g, k), name + ": sigma k=" + std::to_string(k));
      c.expect(e.sat() == oracle::elb_at_most(g, k), name + ": elb k=" + std::to_string(k));
      unsat += s.unsat() + e.unsat();
    }
    Graph lg = line_graph(g).line;
    for (int k = 1; k <= kMaxDecisionWidth && k * lg.size() <= 18; ++k) {
      auto q = decide_eq(lg, k);
      c.expect(q.sat() == oracle::eq_at_most(lg, k), name + ": eq(L) k=" + std::to_string(k));
      unsat += q.unsat();
    }
    auto p = cover_via_coloring(g, std::nullopt);
    c.expect(verify_orientation_cover(g, p.cover).valid(), name + ": construction round trip");
  }
  detail = std::to_string(unsat) + " UNSAT answers confirmed";
}

}  // namespace

int main() {
  struct Criterion {
    std::string description;
    std::function<void(Check&, std::string&)> body;
  };
  auto plain = [](void (*f)(Check&)) { return [f](Check& c, std::string&) { f(c); }; };
  std::vector<Criterion> criteria{
      {"K16 table permutations form an orientation covering of size 5", plain(k16_table)},
      {"sigma(K4) = 3 with a verifying witness", plain(sigma_k4)},
      {"elb(K4) = 2 and elb(K5) = 3 match the loglog formula", plain(elb_complete)},
      {"triangle examples: eq(L(K3)) = 1, sigma(K3) = 3, triangle+pendant sigma = 3 and eq(L) = 2",
       plain(triangle_examples)},
      {"elbow doubling K4 (2) -> K16 (3) -> K256 (4), all verified", plain(doubling)},
      {"three orientations suffice exactly when chi is 3 or 4", three_orientations_iff_chi_3_or_4},
      {"triangle-free graphs with <= 10 edges: eq(L(G)) = sigma(G)", triangle_free_equality},
      {"sandwiches elb <= sigma <= 2 elb, eq(L) <= sigma <= 3 eq(L), and round trip", sandwiches},
      {"coloring extraction: 4 and 16 colors from elbow covers, <= 4 from a 3-orientation cover", plain(extraction)},
      {"mycielski-iterate(5): chi = 5, sigma = 4, eq(L) = 4", five_chromatic_triangle_free},
      {"small UNSAT answers agree with full enumeration; constructions round-trip",
       small_unsat_against_enumeration},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].body(c, detail);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !c.ok;
    std::cout << "criterion " << i + 1 << ": " << (c.ok ? "PASS" : "FAIL") << ' ' << criteria[i].description;
    if (!detail.empty()) std::cout << " (" << detail << ')';
    std::printf(" [%.1fs]", secs);
    std::cout << c.notes.str() << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failed ? 1 : 0;
}
