#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <vector>

#include "erdf/graph.hpp"
#include "erdf/solver.hpp"

namespace erdf {

struct VertexRomanResult {
  int value = 0;
  std::vector<std::uint8_t> witness;  // vertex -> {0,1,2}
  SolveStatus status = SolveStatus::exact;
  long long nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

inline bool is_valid_roman(const Graph& g, const std::vector<std::uint8_t>& f) {
  if (static_cast<int>(f.size()) != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (f[v] != 0) continue;
    bool covered = false;
    for (int w : g.neighbors(v))
      if (f[w] == 2) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

namespace detail {

// Vertex-side mirror of the edge search, written separately so the
// line-graph identity is checked across two code paths.
class VertexRomanSearch {
 public:
  VertexRomanSearch(const Graph& g, const SolveBudgets& budgets)
      : g_(g), budgets_(budgets), n_(g.vertex_count()) {
    towers_.assign(n_, 0);  // how many chosen 2-vertices dominate v
    chosen_.assign(n_, false);
    banned_.assign(n_, false);
    ones_.assign(n_, false);
  }

  VertexRomanResult run() {
    auto start = std::chrono::steady_clock::now();
    deadline_ = start + budgets_.time_limit;

    // incumbent: all-ones, improved by a coverage greedy
    best_ = n_;
    best_witness_.assign(n_, 1);
    greedy_incumbent();

    descend(0);

    VertexRomanResult r;
    r.value = best_;
    r.witness = best_witness_;
    r.status = stopped_ ? SolveStatus::upper_bound : SolveStatus::exact;
    r.nodes_explored = nodes_;
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return r;
  }

 private:
  void greedy_incumbent() {
    std::vector<bool> dominated(n_, false);
    std::vector<std::uint8_t> f(n_, 0);
    int cost = 0;
    for (;;) {
      int pick = -1, gain = -1;
      for (int v = 0; v < n_; ++v) {
        int u = dominated[v] ? 0 : 1;
        for (int w : g_.neighbors(v))
          if (!dominated[w]) ++u;
        if (u > gain) {
          gain = u;
          pick = v;
        }
      }
      if (gain <= 0) break;
      f[pick] = 2;
      cost += 2;
      dominated[pick] = true;
      for (int w : g_.neighbors(pick)) dominated[w] = true;
    }
    for (int v = 0; v < n_; ++v)
      if (!dominated[v] && f[v] == 0) {
        f[v] = 1;
        ++cost;
      }
    if (cost < best_) {
      best_ = cost;
      best_witness_ = f;
    }
  }

  bool uncovered(int v) const { return !chosen_[v] && towers_[v] == 0 && !ones_[v]; }

  void collect_candidates(int v, std::vector<int>& out) const {
    out.clear();
    if (!banned_[v]) out.push_back(v);
    for (int w : g_.neighbors(v))
      if (!banned_[w] && !chosen_[w]) out.push_back(w);
  }

  void place(int v) {
    chosen_[v] = true;
    cost_ += 2;
    for (int w : g_.neighbors(v)) ++towers_[w];
  }
  void unplace(int v) {
    chosen_[v] = false;
    cost_ -= 2;
    for (int w : g_.neighbors(v)) --towers_[w];
  }

  void descend(int depth) {
    if (stopped_) return;
    ++nodes_;
    if (nodes_ >= budgets_.node_limit ||
        ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_)) {
      stopped_ = true;
      return;
    }
    if (cost_ >= best_) return;

    std::vector<int> open, forced, cand;
    for (int v = 0; v < n_; ++v) {
      if (!uncovered(v)) continue;
      collect_candidates(v, cand);
      if (cand.empty())
        forced.push_back(v);
      else
        open.push_back(v);
    }
    for (int v : forced) {
      ones_[v] = true;
      ++cost_;
    }

    if (open.empty()) {
      if (cost_ < best_) {
        best_ = static_cast<int>(cost_);
        best_witness_.assign(n_, 0);
        for (int v = 0; v < n_; ++v)
          best_witness_[v] = chosen_[v] ? 2 : (ones_[v] ? 1 : 0);
      }
    } else if (packing_bound(open) < best_) {
      int pick = -1;
      size_t width = 0;
      for (int v : open) {
        collect_candidates(v, cand);
        if (pick < 0 || cand.size() > width) {
          pick = v;
          width = cand.size();
        }
      }
      collect_candidates(pick, cand);
      std::vector<int> tried;
      for (int c : cand) {
        place(c);
        descend(depth + 1);
        unplace(c);
        banned_[c] = true;
        tried.push_back(c);
        if (stopped_) break;
      }
      if (!stopped_) {
        ones_[pick] = true;
        ++cost_;
        descend(depth + 1);
        --cost_;
        ones_[pick] = false;
      }
      for (int c : tried) banned_[c] = false;
    }

    for (int v : forced) {
      ones_[v] = false;
      --cost_;
    }
  }

  long long packing_bound(const std::vector<int>& open) {
    std::vector<bool> used(n_, false);
    std::vector<int> cand;
    long long packed = 0;
    for (int v : open) {
      collect_candidates(v, cand);
      bool clash = false;
      for (int c : cand)
        if (used[c]) {
          clash = true;
          break;
        }
      if (clash) continue;
      for (int c : cand) used[c] = true;
      ++packed;
    }
    return cost_ + packed;
  }

  const Graph& g_;
  SolveBudgets budgets_;
  int n_;
  std::vector<int> towers_;
  std::vector<bool> chosen_, banned_, ones_;
  long long cost_ = 0;
  int best_ = 0;
  std::vector<std::uint8_t> best_witness_;
  long long nodes_ = 0;
  bool stopped_ = false;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace detail

// Exact Roman domination number of g (vertex version); used to cross-check
// the edge solver through the line graph.
inline VertexRomanResult vertex_roman_exact(const Graph& g, const SolveBudgets& budgets = {}) {
  detail::VertexRomanSearch search(g, budgets);
  return search.run();
}

}  // namespace erdf
