#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eqcover/construct/analogue.hpp"
#include "eqcover/construct/coloring.hpp"
#include "eqcover/construct/elbow.hpp"
#include "eqcover/construct/known_covers.hpp"
#include "eqcover/cover_io.hpp"
#include "eqcover/exact/bounds.hpp"
#include "eqcover/exact/solve.hpp"
#include "eqcover/families.hpp"
#include "eqcover/graph_io.hpp"
#include "eqcover/line_graph.hpp"

namespace eqcover::cli {

enum Exit : int { ok = 0, violation = 1, bad_input = 2, timeout = 3 };

namespace detail {

using nlohmann::json;

// Raised for flag combinations CLI11 cannot express.
struct UsageError : Error {
  using Error::Error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// All outputs of a command are staged here and written only once the command
// has succeeded, so a failing command leaves no files behind.
struct Outputs {
  std::vector<std::pair<std::string, std::string>> files;

  void add(std::string path, std::string content) { files.emplace_back(std::move(path), std::move(content)); }

  void flush() const {
    for (const auto& [path, content] : files) {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw Error("cannot write '" + path + "'");
      out << content;
      if (!out.flush()) throw Error("cannot write '" + path + "'");
    }
  }
};

inline std::string fixed7(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7f", x);
  return buf;
}

inline std::string interval_text(const Interval& iv) {
  if (iv.exact()) {
    std::string src = iv.lo.source == iv.hi.source ? iv.lo.source : iv.lo.source + "; " + iv.hi.source;
    return std::to_string(iv.lo.value) + " [" + src + "]";
  }
  return "[" + std::to_string(iv.lo.value) + ", " + std::to_string(iv.hi.value) + "] [" + iv.lo.source + "; " +
         iv.hi.source + "]";
}

inline json interval_json(const Interval& iv) {
  return json{{"lo", iv.lo.value}, {"lo_source", iv.lo.source}, {"hi", iv.hi.value}, {"hi_source", iv.hi.source},
              {"exact", iv.exact()}};
}

inline std::string witness_text(const Graph& g, const Witness& w) {
  std::ostringstream out;
  if (const auto* c = std::get_if<OrientationCover>(&w)) write_cover(out, g, *c);
  if (const auto* c = std::get_if<EyebrowCover>(&w)) write_cover(out, g, *c);
  if (const auto* c = std::get_if<EquivalenceCover>(&w)) write_cover(out, g, *c);
  if (const auto* c = std::get_if<Coloring>(&w)) write_coloring(out, *c);
  return out.str();
}

struct Options {
  std::string graph, cover, kind, invariant, out, op, coloring, family, graph_out, witness_dir;
  int workers = 1, param = 0, second = -1, n = 0;
  bool json = false, trifree = false, greedy = false;
  std::uint64_t max_nodes = Budget{}.max_nodes;
  long long time_limit_ms = 0;

  Budget budget() const {
    Budget b = Budget::nodes(max_nodes);
    if (time_limit_ms > 0) b.wall_clock = std::chrono::milliseconds(time_limit_ms);
    return b;
  }
};

inline int cmd_verify(const Options& o, std::ostream& out) {
  auto kind = parse_kind(o.kind);
  if (!kind) throw UsageError("unknown --kind '" + o.kind + "'");
  Graph g = read_graph_file(o.graph);
  std::string text = read_file(o.cover);
  std::istringstream peek(text);
  if (peek_cover_kind(peek) != *kind) throw UsageError("cover file kind does not match --kind " + o.kind);
  std::istringstream in(text);
  Verdict v;
  int k = 0;
  switch (*kind) {
    case CoverKind::orientation:
    case CoverKind::elbow: {
      OrientationCover c = parse_orientation_cover(in, g);
      k = c.size();
      v = *kind == CoverKind::elbow ? verify_elbow_cover(g, c, o.workers) : verify_orientation_cover(g, c, o.workers);
      break;
    }
    case CoverKind::eyebrow: {
      EyebrowCover c = parse_eyebrow_cover(in, g);
      k = c.size();
      v = verify_eyebrow_cover(g, c);
      break;
    }
    case CoverKind::equivalence: {
      EquivalenceCover c = parse_equivalence_cover(in, g);
      k = c.size();
      v = verify_equivalence_cover(g, c);
      break;
    }
  }
  if (o.json)
    out << json{{"valid", v.valid()}, {"k", k}, {"line", v.line(k)}}.dump() << '\n';
  else
    out << v.line(k) << '\n';
  return v ? Exit::ok : Exit::violation;
}

inline int cmd_solve(const Options& o, std::ostream& out, Outputs& files) {
  auto inv = parse_invariant(o.invariant);
  if (!inv) throw UsageError("unknown --invariant '" + o.invariant + "'");
  Graph g = read_graph_file(o.graph);
  SolveResult r = solve(g, *inv, o.budget());
  const std::string name(invariant_name(*inv));
  if (!o.out.empty()) files.add(o.out, witness_text(*inv == Invariant::eqL ? line_graph(g).line : g, r.witness));
  if (o.json) {
    json j{{"invariant", name}, {"lo", r.lo}, {"hi", r.hi}, {"status", std::string(status_name(r.status))},
           {"nodes", r.nodes}};
    if (r.exact()) j["value"] = r.lo;
    out << j.dump() << '\n';
  } else if (r.exact()) {
    out << name << " = " << r.lo << '\n';
  } else {
    out << name << " in [" << r.lo << ", " << r.hi << "] (" << status_name(r.status) << ")\n";
  }
  return r.exact() ? Exit::ok : Exit::timeout;
}

// One constructed certificate: the reference graph, the serialized file and
// the line that re-verified it.
struct Built {
  Graph graph;
  std::string text;
  std::string check;
};

template <class Cover>
Built certify(const Graph& g, const Cover& c, bool elbow = false) {
  Verdict v;
  if constexpr (std::is_same_v<Cover, OrientationCover>)
    v = elbow ? verify_elbow_cover(g, c) : verify_orientation_cover(g, c);
  else if constexpr (std::is_same_v<Cover, EyebrowCover>)
    v = verify_eyebrow_cover(g, c);
  else
    v = verify_equivalence_cover(g, c);
  if (!v) throw std::logic_error("constructed certificate failed verification: " + v.line(c.size()));
  return {g, to_string(g, c), v.line(c.size())};
}

inline Built certify_coloring(const Graph& g, const Coloring& c) {
  if (!c.is_proper(g)) throw std::logic_error("constructed coloring is not proper");
  std::ostringstream s;
  write_coloring(s, c);
  return {g, s.str(), "PROPER colors=" + std::to_string(c.palette_size())};
}

inline OrientationCover read_orientation_cover(const Options& o, const Graph& g) {
  std::istringstream in(read_file(o.cover));
  return parse_orientation_cover(in, g);
}

inline const std::vector<std::string>& construct_ops() {
  static const std::vector<std::string> ops{
      "eq-from-orientation", "orientation-from-eq", "elbow-double", "elbow-complete", "eyebrow-complete",
      "orientation-from-elbow", "bipartite", "via-coloring", "coloring-from-elbow", "coloring-from-orientation",
      "k16-table", "k4-sigma", "analogue"};
  return ops;
}

inline Built build(const Options& o) {
  auto need = [&](const std::string& value, const char* flag) {
    if (value.empty()) throw UsageError("construct " + o.op + " needs " + flag);
  };
  const std::string& op = o.op;
  if (op == "k16-table") return certify(complete_graph(16), k16_table_cover().orientations);
  if (op == "k4-sigma") return certify(complete_graph(4), k4_sigma_cover());
  if (op == "elbow-complete" || op == "eyebrow-complete") {
    if (o.n < 1) throw UsageError("construct " + op + " needs --n >= 1");
    Graph kn = complete_graph(o.n);
    if (op == "eyebrow-complete") return certify(kn, eyebrow_cover_complete(o.n));
    return certify(kn, elbow_cover_complete(o.n), true);
  }
  need(o.graph, "--graph");
  Graph g = read_graph_file(o.graph);
  if (op == "bipartite") return certify(g, bipartite_orientation_cover(g));
  if (op == "via-coloring") {
    std::optional<Coloring> supplied;
    if (!o.coloring.empty()) {
      std::istringstream in(read_file(o.coloring));
      supplied = parse_coloring(in, g);
    }
    return certify(g, cover_via_coloring(g, supplied, o.greedy ? ColoringSource::greedy : ColoringSource::exact,
                                         o.budget()).cover);
  }
  need(o.cover, "--cover");
  if (op == "analogue") {
    OrientationCover c = read_orientation_cover(o, g);
    if (c.size() != 1) throw UsageError("construct analogue needs a cover with exactly one orientation");
    LineGraphMap lm = line_graph(g);
    return certify(lm.line, EquivalenceCover{{analogue(lm, c.orientations.front())}});
  }
  if (op == "eq-from-orientation") {
    LineGraphMap lm = line_graph(g);
    return certify(lm.line, eq_cover_from_orientation_cover(lm, read_orientation_cover(o, g)));
  }
  if (op == "orientation-from-eq") {
    LineGraphMap lm = line_graph(g);
    std::istringstream in(read_file(o.cover));
    EquivalenceCover c = parse_equivalence_cover(in, lm.line);
    return certify(g, o.trifree ? orientation_cover_from_eq_cover_trifree(lm, c) : orientation_cover_from_eq_cover(lm, c));
  }
  if (op == "elbow-double") {
    CoverOnGraph d = elbow_double(g, read_orientation_cover(o, g));
    return certify(d.graph, d.cover, true);
  }
  if (op == "orientation-from-elbow") return certify(g, orientation_cover_from_elbow(g, read_orientation_cover(o, g)));
  if (op == "coloring-from-elbow") return certify_coloring(g, coloring_from_elbow_cover(g, read_orientation_cover(o, g)));
  if (op == "coloring-from-orientation")
    return certify_coloring(g, coloring_from_orientation_cover(g, read_orientation_cover(o, g)));
  throw UsageError("unknown construct op '" + op + "'");
}

inline int cmd_construct(const Options& o, std::ostream& out, Outputs& files) {
  Built b = build(o);
  if (o.out.empty()) {
    out << b.text;
  } else {
    files.add(o.out, b.text);
    out << b.check << '\n';
  }
  if (!o.graph_out.empty()) files.add(o.graph_out, to_string(b.graph));
  return Exit::ok;
}

inline int cmd_bounds(const Options& o, std::ostream& out, Outputs& files) {
  Graph g = read_graph_file(o.graph);
  BoundsReport r = bounds_report(g, o.budget());
  std::vector<std::pair<std::string, std::string>> witness_files;
  if (!o.witness_dir.empty()) {
    namespace fs = std::filesystem;
    auto add = [&](const std::string& key, const std::string& name, std::string content) {
      std::string path = (fs::path(o.witness_dir) / name).string();
      files.add(path, std::move(content));
      witness_files.emplace_back(key, path);
    };
    if (r.chi_witness) add("chi", "chi.col", witness_text(g, *r.chi_witness));
    if (r.sigma_witness) add("sigma", "sigma.cov", witness_text(g, *r.sigma_witness));
    if (r.elb_witness) add("elb", "elb.cov", witness_text(g, *r.elb_witness));
    if (r.eqL_witness) {
      LineGraphMap lm = line_graph(g);
      add("eqL", "eqL.cov", witness_text(lm.line, *r.eqL_witness));
      add("line_graph", "line.g", to_string(lm.line));
    }
  }
  const bool trivial_alon = r.alon && !r.alon->lower;
  if (o.json) {
    json j{{"n", r.n},
           {"m", r.m},
           {"min_degree", r.min_degree},
           {"bipartite", r.bipartite},
           {"triangle_free", r.triangle_free},
           {"chi", interval_json(r.chi)},
           {"sigma", interval_json(r.sigma)},
           {"elb", interval_json(r.elb)},
           {"eqL", interval_json(r.eqL)},
           {"status", std::string(status_name(r.status()))}};
    if (r.alon) {
      j["alon_lower"] = trivial_alon ? json("unbounded-by-formula") : json(fixed7(*r.alon->lower));
      if (trivial_alon) j["alon_lower_substitute"] = 1;
      j["alon_upper"] = fixed7(r.alon->upper);
    }
    json w = json::object();
    for (const auto& [key, path] : witness_files) w[key] = path;
    j["witness"] = w;
    out << j.dump(2) << '\n';
    return Exit::ok;
  }
  out << "n: " << r.n << '\n'
      << "m: " << r.m << '\n'
      << "min_degree: " << r.min_degree << '\n'
      << "bipartite: " << (r.bipartite ? "true" : "false") << '\n'
      << "triangle_free: " << (r.triangle_free ? "true" : "false") << '\n'
      << "chi: " << interval_text(r.chi) << '\n'
      << "sigma: " << interval_text(r.sigma) << '\n'
      << "elb: " << interval_text(r.elb) << '\n'
      << "eqL: " << interval_text(r.eqL) << '\n';
  if (r.alon) {
    if (trivial_alon)
      out << "alon_lower: unbounded-by-formula [density-bound; eq >= 1 used]\n";
    else
      out << "alon_lower: " << fixed7(*r.alon->lower) << " [density-bound]\n";
    out << "alon_upper: " << fixed7(r.alon->upper) << " [density-bound]\n";
  }
  for (const auto& [key, path] : witness_files) out << key << "_witness: " << path << '\n';
  out << "status: " << status_name(r.status()) << '\n';
  return Exit::ok;
}

inline int cmd_linegraph(const Options& o, std::ostream& out, Outputs& files) {
  Graph g = read_graph_file(o.graph);
  LineGraphMap lm = line_graph(g);
  std::ostringstream index;
  for (EdgeId e = 0; e < g.size(); ++e) index << lm.vertex_of_edge(e) << ' ' << g.edge(e).u << ' ' << g.edge(e).v << '\n';
  if (o.out.empty()) {
    out << to_string(lm.line);
  } else {
    files.add(o.out, to_string(lm.line));
    files.add(o.out + ".index", index.str());
    out << "line graph n=" << lm.line.order() << " m=" << lm.line.size() << '\n';
  }
  return Exit::ok;
}

inline int cmd_gen(const Options& o, std::ostream& out, Outputs& files) {
  Graph g = generate_family(o.family, o.param, o.second);
  if (o.out.empty())
    out << to_string(g);
  else
    files.add(o.out, to_string(g));
  return Exit::ok;
}

}  // namespace detail

// Runs one command line (args excludes the program name). Exit codes: 0 ok,
// 1 violation found, 2 malformed input or failed precondition, 3 timeout.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  Options o;
  CLI::App app{"Covering invariants of graphs: verify, solve, construct, bounds"};
  app.require_subcommand(1);

  auto budget_flags = [&](CLI::App* sub) {
    sub->add_option("--max-nodes", o.max_nodes, "search node budget");
    sub->add_option("--time-limit-ms", o.time_limit_ms, "optional wall-clock cap");
  };

  auto* verify = app.add_subcommand("verify", "check a cover file against a graph");
  verify->add_option("--kind", o.kind, "orientation | elbow | eyebrow | equivalence")->required();
  verify->add_option("--graph", o.graph, "graph file")->required();
  verify->add_option("--cover", o.cover, "cover file")->required();
  verify->add_option("--workers", o.workers, "verification threads")->check(CLI::Range(1, 256));
  verify->add_flag("--json", o.json);

  auto* solve_cmd = app.add_subcommand("solve", "exact value of an invariant");
  solve_cmd->add_option("--invariant", o.invariant, "sigma | elb | eq | eqL | eye | chi")->required();
  solve_cmd->add_option("--graph", o.graph, "graph file")->required();
  solve_cmd->add_option("--out", o.out, "witness file");
  solve_cmd->add_flag("--json", o.json);
  budget_flags(solve_cmd);

  auto* construct = app.add_subcommand("construct", "build a certified cover or coloring");
  construct->add_option("--op", o.op, "construction")->required()->check(CLI::IsMember(construct_ops()));
  construct->add_option("--graph", o.graph, "input graph file");
  construct->add_option("--cover", o.cover, "input cover file");
  construct->add_option("--coloring", o.coloring, "input coloring file (via-coloring)");
  construct->add_option("--n", o.n, "vertex count (elbow-complete, eyebrow-complete)");
  construct->add_option("--out", o.out, "output file (default: standard output)");
  construct->add_option("--graph-out", o.graph_out, "also write the certificate's reference graph");
  construct->add_flag("--trifree", o.trifree, "one orientation per subgraph (triangle-free hosts)");
  construct->add_flag("--greedy", o.greedy, "greedy instead of exact coloring (via-coloring)");
  budget_flags(construct);

  auto* bounds = app.add_subcommand("bounds", "interval report for chi, sigma, elb, eq(L)");
  bounds->add_option("--graph", o.graph, "graph file")->required();
  bounds->add_option("--witness-dir", o.witness_dir, "directory for witness files");
  bounds->add_flag("--json", o.json);
  budget_flags(bounds);

  auto* linegraph = app.add_subcommand("linegraph", "write L(G) and its index sidecar");
  linegraph->add_option("--graph", o.graph, "graph file")->required();
  linegraph->add_option("--out", o.out, "output graph file");

  auto* gen = app.add_subcommand("gen", "generate a named graph family");
  gen->add_option("--family", o.family, "family")->required()->check(CLI::IsMember(family_names()));
  gen->add_option("--param", o.param, "family parameter");
  gen->add_option("--param2", o.second, "second parameter (complete-bipartite)");
  gen->add_option("--out", o.out, "output file (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Exit::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return Exit::bad_input;
  }

  Outputs files;
  try {
    int code = Exit::bad_input;
    if (*verify) code = cmd_verify(o, out);
    if (*solve_cmd) code = cmd_solve(o, out, files);
    if (*construct) code = cmd_construct(o, out, files);
    if (*bounds) code = cmd_bounds(o, out, files);
    if (*linegraph) code = cmd_linegraph(o, out, files);
    if (*gen) code = cmd_gen(o, out, files);
    files.flush();
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
  }
  return Exit::bad_input;
}

}  // namespace eqcover::cli
