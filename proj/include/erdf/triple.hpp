#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "erdf/graph.hpp"
#include "erdf/labeling.hpp"
#include "erdf/matching.hpp"
#include "erdf/rational.hpp"

namespace erdf {

// (S, M2, M1): S a nonempty vertex set carrying two disjoint matchings of
// G[S] such that every edge incident to S and outside M1 u M2 is adjacent to
// an edge of M2. Deleting S then costs at most 2|M2| + |M1| extra weight.
struct RemovableTriple {
  std::vector<int> s;                          // sorted vertex set
  std::vector<std::pair<int, int>> m2, m1;     // (u,v) with u < v, sorted

  Rational ratio() const {
    return Rational(2 * static_cast<long long>(m2.size()) + static_cast<long long>(m1.size()),
                    static_cast<long long>(s.size()));
  }
};

inline Rational ratio(const RemovableTriple& t) {
  if (t.s.empty()) throw std::invalid_argument("removable triple with empty vertex set");
  return t.ratio();
}

struct TripleCheck {
  bool ok = true;
  std::string violation;  // first failure, empty when ok
};

// Re-checks the defining conditions; structural problems (references outside
// g) throw, semantic failures come back as ok=false with the first witness.
inline TripleCheck validate_triple(const Graph& g, const RemovableTriple& t) {
  auto fail = [](std::string why) { return TripleCheck{false, std::move(why)}; };

  if (t.s.empty()) return fail("vertex set S is empty");
  std::set<int> s_set;
  for (int v : t.s) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("triple references vertex outside the graph");
    if (!s_set.insert(v).second) return fail("duplicate vertex in S");
  }

  auto check_matching = [&](const std::vector<std::pair<int, int>>& m,
                            const char* name) -> TripleCheck {
    std::set<int> touched;
    for (auto [u, v] : m) {
      if (!g.has_edge(u, v))
        throw std::invalid_argument(std::string(name) + " references a non-edge");
      if (!s_set.count(u) || !s_set.count(v))
        return fail(std::string(name) + " edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") leaves S");
      if (!touched.insert(u).second || !touched.insert(v).second)
        return fail(std::string(name) + " is not a matching");
    }
    return {};
  };
  if (auto c = check_matching(t.m2, "M2"); !c.ok) return c;
  if (auto c = check_matching(t.m1, "M1"); !c.ok) return c;

  std::set<std::pair<int, int>> m2_set(t.m2.begin(), t.m2.end());
  std::set<std::pair<int, int>> m1_set(t.m1.begin(), t.m1.end());
  for (const auto& e : t.m1)
    if (m2_set.count(e)) return fail("M1 and M2 share an edge");

  // coverage: every edge at S outside M1 u M2 must touch an M2 edge
  std::vector<bool> m2_vertex(g.vertex_count(), false);
  for (auto [u, v] : t.m2) m2_vertex[u] = m2_vertex[v] = true;
  for (auto [u, v] : g.edges()) {
    if (!s_set.count(u) && !s_set.count(v)) continue;
    auto key = std::make_pair(u, v);
    if (m1_set.count(key) || m2_set.count(key)) continue;
    if (!m2_vertex[u] && !m2_vertex[v])
      return fail("edge (" + std::to_string(u) + "," + std::to_string(v) +
                  ") incident to S is not adjacent to M2");
  }
  return {};
}

// Lift a valid labeling of g-S to g: keep it on g-S, label M2 with 2, M1
// with 1, everything else 0. The result is valid and weighs
// weight(f_inner) + 2|M2| + |M1|.  g-S is induced(g, V-S) with vertices in
// ascending order; f_inner must be a labeling of exactly that graph.
inline EdgeLabeling extend_labeling(const Graph& g, const RemovableTriple& t,
                                    const EdgeLabeling& f_inner) {
  auto check = validate_triple(g, t);
  if (!check.ok)
    throw std::invalid_argument("extend_labeling: invalid triple: " + check.violation);

  std::vector<bool> in_s(g.vertex_count(), false);
  for (int v : t.s) in_s[v] = true;
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!in_s[v]) keep.push_back(v);
  Graph inner = g.induced(keep);
  if (f_inner.size() != inner.edge_count() || !is_valid_erdf(inner, f_inner))
    throw std::invalid_argument("extend_labeling: inner labeling invalid for g-S");

  EdgeLabeling f(g);
  for (int e = 0; e < inner.edge_count(); ++e) {
    auto [a, b] = inner.edges()[e];
    f[g.edge_index(keep[a], keep[b])] = f_inner[e];
  }
  for (auto [u, v] : t.m2) f[g.edge_index(u, v)] = 2;
  for (auto [u, v] : t.m1) f[g.edge_index(u, v)] = 1;
  return f;
}

// Removable triple rooted at v, built from a maximum matching M of G[N(v)],
// the unmatched neighbors X, their outside neighborhood Y, and a maximum
// matching M' of the bipartite graph between X and Y. Guarantees
// |S| <= 2d+1 and ratio <= (2d-2|M|)/(2d+1-2|M|) for d = deg(v).
inline RemovableTriple mad_triple(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("mad_triple: vertex outside g");
  const std::vector<int>& nbrs = g.neighbors(v);

  auto m = maximum_matching_within(g, nbrs);
  std::vector<bool> matched(g.vertex_count(), false);
  for (auto [a, b] : m) matched[a] = matched[b] = true;

  std::vector<int> x;
  for (int w : nbrs)
    if (!matched[w]) x.push_back(w);

  std::vector<bool> closed(g.vertex_count(), false);
  closed[v] = true;
  for (int w : nbrs) closed[w] = true;
  std::set<int> y_set;
  for (int w : x)
    for (int z : g.neighbors(w))
      if (!closed[z]) y_set.insert(z);
  std::vector<int> y(y_set.begin(), y_set.end());

  std::vector<std::vector<int>> x_adj(x.size());
  for (size_t xi = 0; xi < x.size(); ++xi)
    for (size_t yi = 0; yi < y.size(); ++yi)
      if (g.has_edge(x[xi], y[yi])) x_adj[xi].push_back(static_cast<int>(yi));
  auto m_prime = bipartite_maximum_matching(x, y, x_adj);

  std::vector<bool> x_matched(g.vertex_count(), false);
  std::set<int> s_set{v};
  for (int w : nbrs) s_set.insert(w);
  for (auto [a, b] : m_prime) {
    x_matched[a] = x_matched[b] = true;
    s_set.insert(a);
    s_set.insert(b);
  }
  std::vector<int> x_unmatched;
  for (int w : x)
    if (!x_matched[w]) x_unmatched.push_back(w);

  RemovableTriple t;
  t.s.assign(s_set.begin(), s_set.end());
  t.m2 = m;
  t.m2.insert(t.m2.end(), m_prime.begin(), m_prime.end());
  if (x_unmatched.size() == 1) {
    int w = x_unmatched.front();
    t.m1.emplace_back(std::min(v, w), std::max(v, w));
  } else if (x_unmatched.size() >= 2) {
    int w = x_unmatched.front();  // smallest index
    t.m2.emplace_back(std::min(v, w), std::max(v, w));
  }
  std::sort(t.m2.begin(), t.m2.end());
  return t;
}

}  // namespace erdf
