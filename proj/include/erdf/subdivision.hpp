#pragma once

#include <algorithm>
#include <deque>
#include <vector>

#include "erdf/graph.hpp"

namespace erdf {

namespace detail {

// Max number of internally vertex-disjoint u-v paths with at least one
// internal vertex each: unit-capacity flow on the vertex-split network with
// the direct u-v edge (if any) removed. Stops as soon as `enough` is reached.
inline int internally_disjoint_paths(const Graph& g, int u, int v, int enough) {
  int n = g.vertex_count();
  // node 2w = w_in, 2w+1 = w_out; source = u_out, sink = v_in
  int nodes = 2 * n;
  std::vector<std::vector<int>> arc_to(nodes), arc_id(nodes);
  std::vector<int> cap;
  auto add_arc = [&](int a, int b, int c) {
    arc_to[a].push_back(b);
    arc_id[a].push_back(static_cast<int>(cap.size()));
    cap.push_back(c);
    arc_to[b].push_back(a);
    arc_id[b].push_back(static_cast<int>(cap.size()));
    cap.push_back(0);
  };
  for (int w = 0; w < n; ++w) add_arc(2 * w, 2 * w + 1, (w == u || w == v) ? n : 1);
  for (auto [a, b] : g.edges()) {
    if ((a == u && b == v) || (a == v && b == u)) continue;
    add_arc(2 * a + 1, 2 * b, 1);
    add_arc(2 * b + 1, 2 * a, 1);
  }
  int source = 2 * u + 1, sink = 2 * v;

  int flow = 0;
  std::vector<int> prev_node(nodes), prev_arc(nodes);
  while (flow < enough) {
    std::fill(prev_node.begin(), prev_node.end(), -1);
    prev_node[source] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && prev_node[sink] < 0) {
      int a = queue.front();
      queue.pop_front();
      for (size_t i = 0; i < arc_to[a].size(); ++i) {
        int b = arc_to[a][i], id = arc_id[a][i];
        if (cap[id] > 0 && prev_node[b] < 0) {
          prev_node[b] = a;
          prev_arc[b] = id;
          queue.push_back(b);
        }
      }
    }
    if (prev_node[sink] < 0) break;
    for (int b = sink; b != source; b = prev_node[b]) {
      cap[prev_arc[b]] -= 1;
      cap[prev_arc[b] ^ 1] += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace detail

// True iff two vertices are joined by three internally vertex-disjoint paths,
// each with an internal vertex — i.e. g contains a subdivision of K_{2,3}.
inline bool contains_k23_subdivision(const Graph& g) {
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) < 3) continue;
    for (int v = u + 1; v < n; ++v) {
      if (g.degree(v) < 3) continue;
      if (detail::internally_disjoint_paths(g, u, v, 3) >= 3) return true;
    }
  }
  return false;
}

namespace detail {

inline bool is_c5_component(const Graph& g, const std::vector<int>& comp) {
  if (comp.size() != 5) return false;
  for (int v : comp)
    if (g.degree(v) != 2) return false;
  return true;  // connected 2-regular on 5 vertices is the 5-cycle
}

}  // namespace detail

// True iff some component of g is a 5-cycle, or deleting a single vertex
// creates one.
inline bool c5_separable(const Graph& g) {
  for (const auto& comp : g.components())
    if (detail::is_c5_component(g, comp)) return true;
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    std::vector<int> keep;
    for (int w = 0; w < n; ++w)
      if (w != v) keep.push_back(w);
    Graph h = g.induced(keep);
    for (const auto& comp : h.components())
      if (detail::is_c5_component(h, comp)) return true;
  }
  return false;
}

}  // namespace erdf
