#pragma once

#include <utility>
#include <vector>

#include "erdf/graph.hpp"

namespace erdf {

struct LineGraph {
  Graph graph;                                   // vertex i <-> edge i of the host
  std::vector<std::pair<int, int>> host_edges;   // the correspondence
};

// L(G): one vertex per edge of g, adjacent when the edges share an endpoint.
inline LineGraph line_graph(const Graph& g) {
  int m = g.edge_count();
  Graph lg(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      auto [u1, v1] = g.edges()[a];
      auto [u2, v2] = g.edges()[b];
      if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) lg.add_edge(a, b);
    }
  return LineGraph{std::move(lg), g.edges()};
}

}  // namespace erdf
