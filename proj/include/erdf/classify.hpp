#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "erdf/cycles.hpp"
#include "erdf/graph.hpp"
#include "erdf/subdivision.hpp"

namespace erdf {

struct DegeneracyResult {
  int k = 0;
  std::vector<int> elimination_order;  // deletion sequence, min-degree first
};

// Repeatedly delete a minimum-degree vertex (smallest index on ties);
// k is the largest degree seen at deletion time.
inline DegeneracyResult degeneracy(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("degeneracy undefined for the empty graph");
  std::vector<bool> alive(n, true);
  std::vector<int> deg(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

  DegeneracyResult out;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    out.k = std::max(out.k, deg[pick]);
    out.elimination_order.push_back(pick);
    alive[pick] = false;
    for (int w : g.neighbors(pick))
      if (alive[w]) --deg[w];
  }
  return out;
}

struct GraphClass {
  int degeneracy = 0;
  int max_degree = 0;
  std::optional<int> girth;  // nullopt = acyclic
  bool connected = false;
  bool subcubic = false;
  bool k23_subdivision_free = false;
  bool c5_separable = false;
};

inline GraphClass classify(const Graph& g) {
  GraphClass c;
  c.degeneracy = g.vertex_count() > 0 ? erdf::degeneracy(g).k : 0;
  c.max_degree = g.max_degree();
  c.girth = erdf::girth(g);
  c.connected = g.is_connected();
  c.subcubic = c.max_degree <= 3;
  c.k23_subdivision_free = !contains_k23_subdivision(g);
  c.c5_separable = erdf::c5_separable(g);
  return c;
}

}  // namespace erdf
