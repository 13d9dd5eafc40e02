#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <optional>
#include <vector>

#include "erdf/graph.hpp"

namespace erdf {

// Cyclic sequence of distinct vertices, length >= 3, consecutive vertices
// adjacent in the host graph.
struct Cycle {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }

  bool valid_in(const Graph& g) const {
    if (vertices.size() < 3) return false;
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (size_t i = 0; i < vertices.size(); ++i)
      if (!g.has_edge(vertices[i], vertices[(i + 1) % vertices.size()])) return false;
    return true;
  }

  // Chords of this cycle in g: pairs of cycle POSITIONS (a,b), a < b.
  std::vector<std::pair<int, int>> chord_positions(const Graph& g) const {
    std::vector<std::pair<int, int>> out;
    int len = length();
    for (int a = 0; a < len; ++a)
      for (int b = a + 1; b < len; ++b) {
        if (b - a == 1 || (a == 0 && b == len - 1)) continue;
        if (g.has_edge(vertices[a], vertices[b])) out.emplace_back(a, b);
      }
    return out;
  }
};

// Length of a shortest cycle; nullopt when acyclic. BFS from every vertex;
// the minimum candidate dist(u)+dist(w)+1 over non-tree edges is exact.
inline std::optional<int> girth(const Graph& g) {
  int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          int cand = dist[u] + dist[w] + 1;
          if (best < 0 || cand < best) best = cand;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

namespace detail {

// Lexicographically-first simple cycle of exactly the given length whose
// minimum vertex is start, as the canonical sequence (min vertex first,
// second vertex smaller than last). DFS with ascending neighbors, pruned by
// distance back to start, so the first hit is the lexicographic minimum.
inline bool dfs_cycle(const Graph& g, int start, int target_len, std::vector<int>& path,
                      std::vector<bool>& on_path, const std::vector<int>& dist_to_start) {
  int v = path.back();
  int have = static_cast<int>(path.size());
  if (have == target_len) {
    if (g.has_edge(v, start) && path[1] < path.back()) return true;
    return false;
  }
  for (int w : g.neighbors(v)) {
    if (w <= start || on_path[w]) continue;
    if (dist_to_start[w] < 0 || dist_to_start[w] > target_len - have) continue;
    path.push_back(w);
    on_path[w] = true;
    if (dfs_cycle(g, start, target_len, path, on_path, dist_to_start)) return true;
    on_path[w] = false;
    path.pop_back();
  }
  return false;
}

inline std::optional<Cycle> shortest_cycle_of_length(const Graph& g, int len) {
  int n = g.vertex_count();
  for (int start = 0; start + len <= n; ++start) {
    // distances back to start restricted to vertices > start
    std::vector<int> dist(n, -1);
    std::deque<int> queue{start};
    dist[start] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u))
        if (w > start && dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
    }
    std::vector<int> path{start};
    std::vector<bool> on_path(n, false);
    on_path[start] = true;
    if (dfs_cycle(g, start, len, path, on_path, dist)) return Cycle{path};
  }
  return std::nullopt;
}

}  // namespace detail

// Shortest cycle among all cycles of length not congruent to 1 mod 3; nullopt
// when none exists. Ties break to the lexicographically smallest sequence
// after rotating the minimum vertex first, so reduction traces reproduce.
inline std::optional<Cycle> shortest_cycle_valid_residue(const Graph& g) {
  auto shortest = girth(g);
  if (!shortest) return std::nullopt;
  for (int len = *shortest; len <= g.vertex_count(); ++len) {
    if (len % 3 == 1) continue;
    if (auto c = detail::shortest_cycle_of_length(g, len)) return c;
  }
  return std::nullopt;
}

// Smallest triangle in lexicographic vertex order, if any.
inline std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  for (auto [u, v] : g.edges())
    for (int w : g.neighbors(u)) {
      if (w <= v) continue;
      if (g.has_edge(v, w)) return std::array<int, 3>{u, v, w};
    }
  return std::nullopt;
}

}  // namespace erdf
