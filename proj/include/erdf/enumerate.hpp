#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "erdf/graph.hpp"

namespace erdf {

namespace detail {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.vertex_count()) {
    adj_.assign(n_, 0);
    for (auto [u, v] : g.edges()) {
      adj_[u] |= 1u << v;
      adj_[v] |= 1u << u;
    }
    required_deg_.resize(n_);
    for (int v = 0; v < n_; ++v) required_deg_[v] = g.degree(v);
    std::sort(required_deg_.begin(), required_deg_.end(), std::greater<int>());
    best_cols_.assign(n_, INT32_MAX);
    perm_.assign(n_, -1);
  }

  std::uint64_t run() {
    descend(0, 0u);
    std::uint64_t code = 0;
    for (int j = 1; j < n_; ++j) code = code << j | static_cast<std::uint64_t>(best_cols_[j]);
    return code;
  }

 private:
  void descend(int j, std::uint32_t used) {
    if (j == n_) return;
    for (int v = 0; v < n_; ++v) {
      if (used >> v & 1) continue;
      if (deg(v) != required_deg_[j]) continue;
      int col = 0;
      for (int i = 0; i < j; ++i) col = col << 1 | static_cast<int>(adj_[v] >> perm_[i] & 1u);
      if (col > best_cols_[j]) continue;
      if (col < best_cols_[j]) {
        best_cols_[j] = col;
        for (int k = j + 1; k < n_; ++k) best_cols_[k] = INT32_MAX;
      }
      perm_[j] = v;
      descend(j + 1, used | 1u << v);
    }
  }

  int deg(int v) const { return std::popcount(adj_[v]); }

  int n_;
  std::vector<std::uint32_t> adj_;
  std::vector<int> required_deg_;
  std::vector<int> best_cols_;
  std::vector<int> perm_;
};

}  // namespace detail

// Minimum upper-triangle bit encoding over all vertex relabelings that list
// degrees in non-increasing order. Restricting to degree-sorted relabelings
// keeps the minimum an isomorphism invariant while pruning the search.
// Fits 64 bits for n <= 11.
inline std::uint64_t canonical_code(const Graph& g) {
  if (g.vertex_count() > 11)
    throw std::invalid_argument("canonical_code supports at most 11 vertices");
  if (g.vertex_count() <= 1) return 0;
  detail::CanonicalSearch search(g);
  return search.run();
}

inline Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  for (int j = n - 1; j >= 1; --j) {
    std::uint64_t col = code & ((1ull << j) - 1);
    code >>= j;
    for (int i = 0; i < j; ++i)
      if (col >> (j - 1 - i) & 1) g.add_edge(i, j);
  }
  return g;
}

// Permutation search with degree pruning via canonical codes; capped at 10
// vertices, which covers every recognition site in this project.
inline bool is_isomorphic_small(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  if (g.vertex_count() > 10)
    throw std::invalid_argument("is_isomorphic_small supports at most 10 vertices");
  std::vector<int> dg, dh;
  for (int v = 0; v < g.vertex_count(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_code(g) == canonical_code(h);
}

// One representative per isomorphism class of connected graphs on n vertices,
// built by attaching a fresh vertex to every nonempty neighborhood of every
// connected (n-1)-vertex graph and deduplicating by canonical code. Every
// connected graph arises this way because deleting a non-cut vertex keeps
// the rest connected. Output is sorted by code, so the order is reproducible.
inline std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("enumerate_connected_graphs supports 1 <= n <= 8");
  if (n == 1) return {Graph(1)};
  std::vector<Graph> parents = enumerate_connected_graphs(n - 1);
  std::set<std::uint64_t> seen;
  for (const Graph& p : parents) {
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
      Graph h(n);
      for (auto [u, v] : p.edges()) h.add_edge(u, v);
      for (int v = 0; v < n - 1; ++v)
        if (mask >> v & 1) h.add_edge(v, n - 1);
      seen.insert(canonical_code(h));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (std::uint64_t code : seen) out.push_back(graph_from_code(n, code));
  return out;
}

}  // namespace erdf
