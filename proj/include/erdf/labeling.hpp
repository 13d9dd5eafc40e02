#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "erdf/graph.hpp"

namespace erdf {

// Total map edge -> {0,1,2}, indexed by edge id of the host graph.
struct EdgeLabeling {
  std::vector<std::uint8_t> labels;

  EdgeLabeling() = default;
  explicit EdgeLabeling(const Graph& host) : labels(host.edge_count(), 0) {}

  std::uint8_t& operator[](int e) { return labels[e]; }
  std::uint8_t operator[](int e) const { return labels[e]; }
  int size() const { return static_cast<int>(labels.size()); }
};

inline int weight(const EdgeLabeling& f) {
  int w = 0;
  for (auto l : f.labels) w += l;
  return w;
}

// Every 0-labeled edge must be adjacent to a 2-labeled edge.
inline bool is_valid_erdf(const Graph& g, const EdgeLabeling& f) {
  if (f.size() != g.edge_count())
    throw std::invalid_argument("labeling domain does not match the edge set");
  for (int e = 0; e < g.edge_count(); ++e) {
    if (f[e] > 2) throw std::invalid_argument("label out of {0,1,2}");
    if (f[e] != 0) continue;
    auto [u, v] = g.edges()[e];
    bool covered = false;
    for (int w : g.neighbors(u))
      if (w != v && f[g.edge_index(u, w)] == 2) {
        covered = true;
        break;
      }
    if (!covered)
      for (int w : g.neighbors(v))
        if (w != u && f[g.edge_index(v, w)] == 2) {
          covered = true;
          break;
        }
    if (!covered) return false;
  }
  return true;
}

// Maximal matching labeled 2, everything else 0. Valid by maximality: every
// edge outside the matching touches a matched vertex.
inline EdgeLabeling greedy_matching_upper(const Graph& g) {
  EdgeLabeling f(g);
  std::vector<bool> used(g.vertex_count(), false);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    if (!used[u] && !used[v]) {
      used[u] = used[v] = true;
      f[e] = 2;
    }
  }
  return f;
}

}  // namespace erdf
