#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "erdf/graph.hpp"

namespace erdf {

namespace detail {

// Exhaustive maximum matching over an adjacency list, by branch and bound.
// Degree-one vertices are matched without branching (always safe); otherwise
// a minimum-degree vertex branches on each partner plus leave-unmatched.
// Call sites keep the vertex count small, so no blossom machinery is needed.
class MatchingSearch {
 public:
  explicit MatchingSearch(std::vector<std::vector<int>> adj)
      : adj_(std::move(adj)), active_(adj_.size(), true), deg_(adj_.size(), 0) {
    for (size_t v = 0; v < adj_.size(); ++v) deg_[v] = static_cast<int>(adj_[v].size());
  }

  std::vector<std::pair<int, int>> run() {
    std::vector<bool> used(adj_.size(), false);
    for (size_t v = 0; v < adj_.size(); ++v) {
      if (used[v]) continue;
      for (int w : adj_[v])
        if (!used[w]) {
          used[v] = used[w] = true;
          best_.emplace_back(static_cast<int>(v), w);
          break;
        }
    }
    search();
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void search() {
    std::vector<int> touched;
    size_t forced = 0;
    for (;;) {
      int pick = -1, pick_deg = 0, alive = 0;
      for (size_t v = 0; v < adj_.size(); ++v) {
        if (!active_[v] || deg_[v] == 0) continue;
        ++alive;
        if (pick < 0 || deg_[v] < pick_deg) {
          pick = static_cast<int>(v);
          pick_deg = deg_[v];
        }
      }
      if (pick < 0) {
        if (cur_.size() > best_.size()) best_ = cur_;
        break;
      }
      if (cur_.size() + alive / 2 <= best_.size()) break;
      if (pick_deg == 1) {
        int partner = -1;
        for (int w : adj_[pick])
          if (active_[w]) partner = w;
        match(pick, partner, touched);
        ++forced;
        continue;
      }
      for (int w : adj_[pick]) {
        if (!active_[w]) continue;
        std::vector<int> local;
        match(pick, w, local);
        search();
        cur_.pop_back();
        undo(local);
      }
      {
        std::vector<int> local;
        remove(pick, local);
        search();
        undo(local);
      }
      break;
    }
    while (forced-- > 0) cur_.pop_back();
    undo(touched);
  }

  void remove(int v, std::vector<int>& log) {
    active_[v] = false;
    log.push_back(v);
    for (int w : adj_[v])
      if (active_[w]) --deg_[w];
  }

  void match(int v, int w, std::vector<int>& log) {
    remove(v, log);
    remove(w, log);
    cur_.emplace_back(std::min(v, w), std::max(v, w));
  }

  void undo(std::vector<int>& log) {
    for (auto it = log.rbegin(); it != log.rend(); ++it) {
      active_[*it] = true;
      for (int w : adj_[*it])
        if (active_[w]) ++deg_[w];
    }
    log.clear();
  }

  std::vector<std::vector<int>> adj_;
  std::vector<bool> active_;
  std::vector<int> deg_;
  std::vector<std::pair<int, int>> cur_, best_;
};

}  // namespace detail

// Maximum-cardinality matching of the induced subgraph G[s]. Exhaustive
// search; every call site keeps |s| small. s must be sorted and unique.
// Returned edges are (u,v) pairs of g with u < v, sorted.
inline std::vector<std::pair<int, int>> maximum_matching_within(const Graph& g,
                                                                const std::vector<int>& s) {
  Graph h = g.induced(s);
  std::vector<std::vector<int>> adj(h.vertex_count());
  for (int v = 0; v < h.vertex_count(); ++v) adj[v] = h.neighbors(v);
  detail::MatchingSearch search(std::move(adj));
  auto local = search.run();
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : local) {
    int u = s[a], v = s[b];
    out.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Maximum matching of a bipartite graph given by left/right vertex lists and
// per-left adjacency (indices into right), via augmenting paths.
// Deterministic: left vertices in order, neighbors ascending.
inline std::vector<std::pair<int, int>> bipartite_maximum_matching(
    const std::vector<int>& left, const std::vector<int>& right,
    const std::vector<std::vector<int>>& left_adj) {
  std::vector<int> match_right(right.size(), -1);
  std::vector<int> match_left(left.size(), -1);

  std::vector<bool> visited;
  auto augment = [&](auto&& self, int li) -> bool {
    for (int ri : left_adj[li]) {
      if (visited[ri]) continue;
      visited[ri] = true;
      if (match_right[ri] < 0 || self(self, match_right[ri])) {
        match_right[ri] = li;
        match_left[li] = ri;
        return true;
      }
    }
    return false;
  };
  for (size_t li = 0; li < left.size(); ++li) {
    visited.assign(right.size(), false);
    augment(augment, static_cast<int>(li));
  }

  std::vector<std::pair<int, int>> out;
  for (size_t li = 0; li < left.size(); ++li)
    if (match_left[li] >= 0) {
      int u = left[li], v = right[match_left[li]];
      out.emplace_back(std::min(u, v), std::max(u, v));
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace erdf
