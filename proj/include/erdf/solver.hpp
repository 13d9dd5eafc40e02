#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "erdf/graph.hpp"
#include "erdf/labeling.hpp"

namespace erdf {

struct SolveBudgets {
  std::chrono::milliseconds time_limit{10'000};
  long long node_limit = 10'000'000;
};

enum class SolveStatus { exact, upper_bound };

inline const char* to_string(SolveStatus s) {
  return s == SolveStatus::exact ? "exact" : "upper_bound";
}

struct SolveResult {
  int value = 0;
  EdgeLabeling witness;
  SolveStatus status = SolveStatus::exact;
  long long nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

namespace detail {

// Branch and bound over sets D of 2-labeled edges: the weight of the best
// labeling extending D is 2|D| plus one per edge that can no longer be
// dominated. Branching resolves an uncovered edge e by trying every
// still-allowed candidate of its closed neighborhood in D, excluding tried
// candidates as it goes, and finally committing e to label 1.
class EdgeRomanSearch {
 public:
  EdgeRomanSearch(const Graph& g, const SolveBudgets& budgets) : g_(g), budgets_(budgets) {
    m_ = g.edge_count();
    adj_.resize(m_);
    for (int a = 0; a < m_; ++a)
      for (int b = 0; b < m_; ++b) {
        if (a == b) continue;
        auto [u1, v1] = g.edges()[a];
        auto [u2, v2] = g.edges()[b];
        if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) adj_[a].push_back(b);
      }
    state_.assign(m_, FREE);
    dominated_.assign(m_, 0);
    fixed_one_.assign(m_, false);
  }

  SolveResult run(const EdgeLabeling* warm) {
    auto start = std::chrono::steady_clock::now();
    EdgeLabeling greedy = greedy_matching_upper(g_);
    best_value_ = weight(greedy);
    best_labels_ = greedy;
    if (warm && warm->size() == m_ && is_valid_erdf(g_, *warm) && weight(*warm) < best_value_) {
      best_value_ = weight(*warm);
      best_labels_ = *warm;
    }
    deadline_ = start + budgets_.time_limit;
    cost_ = 0;
    search();
    SolveResult r;
    r.value = best_value_;
    r.witness = best_labels_;
    r.status = aborted_ ? SolveStatus::upper_bound : SolveStatus::exact;
    r.nodes_explored = nodes_;
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return r;
  }

 private:
  enum State : std::uint8_t { FREE, IN_D, OUT };

  bool open(int e) const { return state_[e] != IN_D && dominated_[e] == 0 && !fixed_one_[e]; }

  // candidates that could still dominate e: e itself plus adjacent edges,
  // minus everything excluded from D
  void candidates(int e, std::vector<int>& out) const {
    out.clear();
    if (state_[e] == FREE) out.push_back(e);
    for (int b : adj_[e])
      if (state_[b] == FREE) out.push_back(b);
  }

  void add_to_d(int e) {
    state_[e] = IN_D;
    cost_ += 2;
    for (int b : adj_[e]) ++dominated_[b];
  }
  void undo_add(int e) {
    state_[e] = FREE;
    cost_ -= 2;
    for (int b : adj_[e]) --dominated_[b];
  }

  long long lower_bound(const std::vector<int>& open_edges) {
    // greedy packing: open edges with pairwise disjoint candidate sets each
    // force at least one more unit of weight
    long long packed = 0;
    scratch_used_.assign(m_, false);
    std::vector<int> cand;
    for (int e : open_edges) {
      candidates(e, cand);
      bool clash = false;
      for (int c : cand)
        if (scratch_used_[c]) {
          clash = true;
          break;
        }
      if (clash) continue;
      for (int c : cand) scratch_used_[c] = true;
      ++packed;
    }
    return cost_ + packed;
  }

  void search() {
    if (aborted_) return;
    ++nodes_;
    if (nodes_ >= budgets_.node_limit) {
      aborted_ = true;
      return;
    }
    if ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) {
      aborted_ = true;
      return;
    }
    if (cost_ >= best_value_) return;

    std::vector<int> open_edges, forced;
    std::vector<int> cand;
    for (int e = 0; e < m_; ++e) {
      if (!open(e)) continue;
      candidates(e, cand);
      if (cand.empty())
        forced.push_back(e);  // can never be dominated: pays 1
      else
        open_edges.push_back(e);
    }
    for (int e : forced) {
      fixed_one_[e] = true;
      ++cost_;
    }

    if (cost_ < best_value_ && open_edges.empty()) {
      best_value_ = static_cast<int>(cost_);
      best_labels_ = EdgeLabeling(g_);
      for (int e = 0; e < m_; ++e)
        best_labels_[e] = state_[e] == IN_D ? 2 : (fixed_one_[e] ? 1 : 0);
    } else if (!open_edges.empty() && lower_bound(open_edges) < best_value_) {
      // branch on the open edge with the largest candidate set
      int pick = -1;
      size_t pick_size = 0;
      for (int e : open_edges) {
        candidates(e, cand);
        if (pick < 0 || cand.size() > pick_size) {
          pick = e;
          pick_size = cand.size();
        }
      }
      candidates(pick, cand);
      std::vector<int> tried;
      for (int c : cand) {
        add_to_d(c);
        search();
        undo_add(c);
        state_[c] = OUT;
        tried.push_back(c);
        if (aborted_) break;
      }
      if (!aborted_) {
        // every candidate excluded: pick is committed to label 1
        fixed_one_[pick] = true;
        ++cost_;
        search();
        --cost_;
        fixed_one_[pick] = false;
      }
      for (int c : tried) state_[c] = FREE;
    }

    for (int e : forced) {
      fixed_one_[e] = false;
      --cost_;
    }
  }

  const Graph& g_;
  SolveBudgets budgets_;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<State> state_;
  std::vector<int> dominated_;
  std::vector<bool> fixed_one_;
  std::vector<bool> scratch_used_;
  long long cost_ = 0;
  int best_value_ = 0;
  EdgeLabeling best_labels_;
  long long nodes_ = 0;
  bool aborted_ = false;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace detail

// Exact edge Roman domination number when the search space is exhausted
// within the budgets; otherwise the best incumbent with status upper_bound.
// An optional warm start seeds the incumbent (it must be a valid labeling).
inline SolveResult exact_gamma(const Graph& g, const SolveBudgets& budgets = {},
                               const EdgeLabeling* warm_start = nullptr) {
  detail::EdgeRomanSearch search(g, budgets);
  return search.run(warm_start);
}

}  // namespace erdf
