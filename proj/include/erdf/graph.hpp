#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace erdf {

// Simple undirected graph on vertices 0..n-1. Edges are stored sorted as
// (u,v) with u < v, and the position of an edge in edges() is its edge id;
// labelings, line graphs and solver output all index edges that way.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    n_ = n;
    adj_.assign(n, {});
  }

  Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : Graph(n) {
    for (auto [u, v] : edge_list) add_edge(u, v);
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    auto e = std::make_pair(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e)
      throw std::invalid_argument("duplicate edge rejected: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    edges_.insert(it, e);
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
  }

  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

  // Edge id of (u,v), or -1 when absent.
  int edge_index(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return -1;
    if (u > v) std::swap(u, v);
    auto e = std::make_pair(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  // Vertices reachable from start, sorted ascending.
  std::vector<int> component_of(int start) const {
    check_vertex(start);
    std::vector<bool> seen(n_, false);
    std::vector<int> stack{start}, out;
    seen[start] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.push_back(v);
      for (int w : adj_[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Components ordered by their smallest vertex.
  std::vector<std::vector<int>> components() const {
    std::vector<bool> seen(n_, false);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < n_; ++v) {
      if (seen[v]) continue;
      auto comp = component_of(v);
      for (int w : comp) seen[w] = true;
      out.push_back(std::move(comp));
    }
    return out;
  }

  bool is_connected() const {
    if (n_ <= 1) return true;
    return static_cast<int>(component_of(0).size()) == n_;
  }

  // Induced subgraph on keep (sorted, unique, in range); vertex i of the
  // result is keep[i].
  Graph induced(const std::vector<int>& keep) const {
    std::vector<int> index(n_, -1);
    for (size_t i = 0; i < keep.size(); ++i) {
      check_vertex(keep[i]);
      if (i > 0 && keep[i] <= keep[i - 1])
        throw std::invalid_argument("induced: vertex list must be sorted and unique");
      index[keep[i]] = static_cast<int>(i);
    }
    Graph h(static_cast<int>(keep.size()));
    for (auto [u, v] : edges_)
      if (index[u] >= 0 && index[v] >= 0) h.add_edge(index[u], index[v]);
    return h;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                                  std::to_string(n_) + ")");
  }

  static void insert_sorted(std::vector<int>& xs, int v) {
    xs.insert(std::lower_bound(xs.begin(), xs.end(), v), v);
  }

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

inline std::vector<int> all_vertices(const Graph& g) {
  std::vector<int> v(g.vertex_count());
  for (size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
  return v;
}

}  // namespace erdf
