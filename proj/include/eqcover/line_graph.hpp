#pragma once

#include <vector>

#include "eqcover/graph.hpp"

namespace eqcover {

// L(G) together with its correspondence to the host G. Vertex i of the line
// graph is host edge i; cliques[v] lists the line vertices whose host edge
// touches v, ascending.
struct LineGraphMap {
  Graph host;
  Graph line;
  std::vector<std::vector<Vertex>> cliques;

  Vertex vertex_of_edge(EdgeId e) const noexcept { return e; }
  EdgeId edge_of_vertex(Vertex w) const noexcept { return w; }
};

inline LineGraphMap line_graph(const Graph& g) {
  LineGraphMap lm;
  lm.host = g;
  lm.cliques.resize(static_cast<std::size_t>(g.order()));
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto inc = g.incident_edges(v);
    lm.cliques[v].assign(inc.begin(), inc.end());
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) pairs.emplace_back(inc[i], inc[j]);
  }
  // In a simple graph two edges share at most one endpoint, so no pair repeats.
  lm.line = Graph(g.size(), std::move(pairs));
  return lm;
}

}  // namespace eqcover
