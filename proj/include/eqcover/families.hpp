#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eqcover/error.hpp"
#include "eqcover/graph.hpp"

namespace eqcover {

// Mycielskian: originals 0..n-1, shadow of v at n+v (adjacent to N(v)),
// apex 2n adjacent to every shadow.
inline Graph mycielskian(const Graph& g) {
  const int n = g.order();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : g.edges()) {
    pairs.emplace_back(e.u, e.v);
    pairs.emplace_back(e.u, n + e.v);
    pairs.emplace_back(e.v, n + e.u);
  }
  for (Vertex v = 0; v < n; ++v) pairs.emplace_back(n + v, 2 * n);
  return Graph(2 * n + 1, std::move(pairs));
}

// Canonical test-corpus graphs. Labelings:
//   complete(n)              K_n on 0..n-1
//   cycle(n), n >= 3         i ~ i+1 (mod n)
//   path(n), n >= 1          n vertices, i ~ i+1
//   star(k)                  center 0, leaves 1..k
//   complete-bipartite(a,b)  parts 0..a-1 and a..a+b-1 (b defaults to a)
//   petersen                 outer cycle 0..4, spokes i ~ i+5, inner i+5 ~ (i+2 mod 5)+5
//   mycielski-iterate(t)     M_2 = K_2, M_{t+1} = mycielskian(M_t); M_3 = C_5, M_4 = Groetzsch
//   triangle-plus-pendant    triangle 0,1,2 and pendant edge 2-3
inline Graph generate_family(std::string_view family, int parameter = 0, int second = -1) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw Error(std::string(family) + ": " + what + " (got " + std::to_string(parameter) + ")");
  };
  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (family == "complete") {
    need(parameter >= 0, "parameter must be >= 0");
    return complete_graph(parameter);
  }
  if (family == "cycle") {
    need(parameter >= 3, "cycle length must be >= 3");
    for (int i = 0; i < parameter; ++i) pairs.emplace_back(i, (i + 1) % parameter);
    return Graph(parameter, std::move(pairs));
  }
  if (family == "path") {
    need(parameter >= 1, "path needs at least one vertex");
    for (int i = 0; i + 1 < parameter; ++i) pairs.emplace_back(i, i + 1);
    return Graph(parameter, std::move(pairs));
  }
  if (family == "star") {
    need(parameter >= 0, "leaf count must be >= 0");
    for (int i = 1; i <= parameter; ++i) pairs.emplace_back(0, i);
    return Graph(parameter + 1, std::move(pairs));
  }
  if (family == "complete-bipartite") {
    int b = second < 0 ? parameter : second;
    need(parameter >= 0, "part sizes must be >= 0");
    for (int i = 0; i < parameter; ++i)
      for (int j = 0; j < b; ++j) pairs.emplace_back(i, parameter + j);
    return Graph(parameter + b, std::move(pairs));
  }
  if (family == "petersen") {
    for (int i = 0; i < 5; ++i) {
      pairs.emplace_back(i, (i + 1) % 5);
      pairs.emplace_back(i, i + 5);
      pairs.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph(10, std::move(pairs));
  }
  if (family == "mycielski-iterate") {
    need(parameter >= 2, "iterate index must be >= 2");
    need(parameter <= 12, "iterate index must be <= 12");
    Graph g = complete_graph(2);
    for (int t = 2; t < parameter; ++t) g = mycielskian(g);
    return g;
  }
  if (family == "triangle-plus-pendant") return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  throw Error("unknown graph family '" + std::string(family) + "'");
}

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"complete",  "cycle",    "path",
                                              "star",      "complete-bipartite",
                                              "petersen",  "mycielski-iterate",
                                              "triangle-plus-pendant"};
  return names;
}

}  // namespace eqcover
