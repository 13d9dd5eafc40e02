#pragma once

#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "erdf/graph.hpp"
#include "erdf/labeling.hpp"

namespace erdf {

// Parameterized graph families with closed-form edge Roman domination
// numbers and witness labelings. CLI string forms: kbip:3,3  grt:2,4
// path:7  cycle:9  kdd:3,2  c5chain:2  gridp2:5  gridp3:4
struct FamilySpec {
  enum class Kind { complete_bipartite, grt, path, cycle, disjoint_kdd, c5_chain, grid_p2, grid_p3 };
  Kind kind;
  int a = 0;  // r | r | n | n | Delta | k | n | n
  int b = 0;  // s | t | - | - | t     | - | - | -

  static FamilySpec complete_bipartite(int r, int s) { return {Kind::complete_bipartite, r, s}; }
  static FamilySpec grt(int r, int t) { return {Kind::grt, r, t}; }
  static FamilySpec path(int n) { return {Kind::path, n, 0}; }
  static FamilySpec cycle(int n) { return {Kind::cycle, n, 0}; }
  static FamilySpec disjoint_kdd(int delta, int t) { return {Kind::disjoint_kdd, delta, t}; }
  static FamilySpec c5_chain(int k) { return {Kind::c5_chain, k, 0}; }
  static FamilySpec grid_p2(int n) { return {Kind::grid_p2, n, 0}; }
  static FamilySpec grid_p3(int n) { return {Kind::grid_p3, n, 0}; }
};

inline std::string format_family(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  auto two = [&](const char* name) { return std::string(name) + ":" + std::to_string(spec.a) + "," + std::to_string(spec.b); };
  auto one = [&](const char* name) { return std::string(name) + ":" + std::to_string(spec.a); };
  switch (spec.kind) {
    case K::complete_bipartite: return two("kbip");
    case K::grt: return two("grt");
    case K::path: return one("path");
    case K::cycle: return one("cycle");
    case K::disjoint_kdd: return two("kdd");
    case K::c5_chain: return one("c5chain");
    case K::grid_p2: return one("gridp2");
    case K::grid_p3: return one("gridp3");
  }
  return "?";
}

inline void check_family_parameters(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  bool ok = true;
  switch (spec.kind) {
    case K::complete_bipartite: ok = 1 <= spec.a && spec.a <= spec.b; break;
    case K::grt: ok = spec.a >= 1 && spec.b >= 1; break;
    case K::path: ok = spec.a >= 1; break;
    case K::cycle: ok = spec.a >= 3; break;
    case K::disjoint_kdd: ok = spec.a >= 1 && spec.b >= 1; break;
    case K::c5_chain: ok = spec.a >= 1; break;
    case K::grid_p2: ok = spec.a >= 2; break;
    case K::grid_p3: ok = spec.a >= 1; break;
  }
  if (!ok) throw std::invalid_argument("family parameters out of range: " + format_family(spec));
}

inline std::optional<FamilySpec> parse_family(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  std::string name = text.substr(0, colon), args = text.substr(colon + 1);
  int a = 0, b = 0;
  int fields = std::sscanf(args.c_str(), "%d,%d", &a, &b);
  using K = FamilySpec::Kind;
  FamilySpec spec{K::path, 0, 0};
  if (name == "kbip" && fields == 2) spec = FamilySpec::complete_bipartite(a, b);
  else if (name == "grt" && fields == 2) spec = FamilySpec::grt(a, b);
  else if (name == "path" && fields == 1) spec = FamilySpec::path(a);
  else if (name == "cycle" && fields == 1) spec = FamilySpec::cycle(a);
  else if (name == "kdd" && fields == 2) spec = FamilySpec::disjoint_kdd(a, b);
  else if (name == "c5chain" && fields == 1) spec = FamilySpec::c5_chain(a);
  else if (name == "gridp2" && fields == 1) spec = FamilySpec::grid_p2(a);
  else if (name == "gridp3" && fields == 1) spec = FamilySpec::grid_p3(a);
  else return std::nullopt;
  check_family_parameters(spec);
  return spec;
}

// Generated graph plus a vertex-name side table, so tests can pin witness
// labelings edge by edge against the construction.
struct FamilyInstance {
  Graph graph;
  std::vector<std::string> vertex_names;

  int named(const std::string& name) const {
    for (size_t i = 0; i < vertex_names.size(); ++i)
      if (vertex_names[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("no vertex named " + name);
  }
};

inline FamilyInstance generate(const FamilySpec& spec) {
  check_family_parameters(spec);
  using K = FamilySpec::Kind;
  FamilyInstance out;
  auto name2 = [](const char* base, int i, int j) {
    return std::string(base) + std::to_string(i) + "^" + std::to_string(j);
  };
  switch (spec.kind) {
    case K::complete_bipartite: {
      int r = spec.a, s = spec.b;
      out.graph = Graph(r + s);
      for (int i = 0; i < r; ++i) out.vertex_names.push_back("x" + std::to_string(i + 1));
      for (int j = 0; j < s; ++j) out.vertex_names.push_back("y" + std::to_string(j + 1));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) out.graph.add_edge(i, r + j);
      break;
    }
    case K::grt: {
      // t blocks of K_{r,r+1}, consecutive blocks linked y_{r+1}^i -- y_1^{i+1},
      // wrapping around (at t=1 the link lands inside the single block)
      int r = spec.a, t = spec.b;
      int block = 2 * r + 1;
      out.graph = Graph(block * t);
      auto x = [&](int i, int j) { return block * (i - 1) + (j - 1); };          // 1<=j<=r
      auto y = [&](int i, int j) { return block * (i - 1) + r + (j - 1); };      // 1<=j<=r+1
      out.vertex_names.resize(block * t);
      for (int i = 1; i <= t; ++i) {
        for (int j = 1; j <= r; ++j) out.vertex_names[x(i, j)] = name2("x", j, i);
        for (int j = 1; j <= r + 1; ++j) out.vertex_names[y(i, j)] = name2("y", j, i);
      }
      for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= r; ++j)
          for (int jj = 1; jj <= r + 1; ++jj) out.graph.add_edge(x(i, j), y(i, jj));
      for (int i = 1; i <= t; ++i) out.graph.add_edge(y(i, r + 1), y(i % t + 1, 1));
      break;
    }
    case K::path: {
      int n = spec.a;
      out.graph = Graph(n);
      for (int v = 0; v < n; ++v) out.vertex_names.push_back("v" + std::to_string(v + 1));
      for (int v = 0; v + 1 < n; ++v) out.graph.add_edge(v, v + 1);
      break;
    }
    case K::cycle: {
      int n = spec.a;
      out.graph = Graph(n);
      for (int v = 0; v < n; ++v) out.vertex_names.push_back("v" + std::to_string(v + 1));
      for (int v = 0; v < n; ++v) out.graph.add_edge(v, (v + 1) % n);
      break;
    }
    case K::disjoint_kdd: {
      int d = spec.a, t = spec.b;
      out.graph = Graph(2 * d * t);
      for (int i = 1; i <= t; ++i) {
        for (int j = 1; j <= d; ++j) out.vertex_names.push_back(name2("x", j, i));
        for (int j = 1; j <= d; ++j) out.vertex_names.push_back(name2("y", j, i));
      }
      for (int i = 0; i < t; ++i)
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) out.graph.add_edge(2 * d * i + a, 2 * d * i + d + b);
      break;
    }
    case K::c5_chain: {
      // k disjoint 5-cycles plus an apex adjacent to one vertex of each
      int k = spec.a;
      out.graph = Graph(5 * k + 1);
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= 5; ++j) out.vertex_names.push_back(name2("c", j, i));
      out.vertex_names.push_back("apex");
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < 5; ++j) out.graph.add_edge(5 * i + j, 5 * i + (j + 1) % 5);
        out.graph.add_edge(5 * k, 5 * i);
      }
      break;
    }
    case K::grid_p2:
    case K::grid_p3: {
      int rows = spec.kind == K::grid_p2 ? 2 : 3;
      int cols = spec.a;
      out.graph = Graph(rows * cols);
      auto id = [&](int r, int c) { return r * cols + c; };
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
          out.vertex_names.push_back("v" + std::to_string(r) + "," + std::to_string(c));
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c) out.graph.add_edge(id(r, c), id(r, c + 1));
      for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c < cols; ++c) out.graph.add_edge(id(r, c), id(r + 1, c));
      break;
    }
  }
  return out;
}

inline int closed_form(const FamilySpec& spec) {
  check_family_parameters(spec);
  using K = FamilySpec::Kind;
  switch (spec.kind) {
    case K::complete_bipartite: return spec.a < spec.b ? 2 * spec.a : 2 * spec.a - 1;
    case K::grt: return 2 * spec.a * spec.b;
    case K::path: return 2 * spec.a / 3;
    case K::cycle: return (2 * spec.a + 2) / 3;
    case K::disjoint_kdd: return (2 * spec.a - 1) * spec.b;
    case K::c5_chain: return 4 * spec.a;
    case K::grid_p2: return (4 * spec.a + 2) / 3;
    case K::grid_p3: return 2 * spec.a;
  }
  throw std::logic_error("unreachable");
}

// A labeling achieving closed_form(spec); validity is asserted by tests via
// is_valid_erdf rather than trusted.
inline EdgeLabeling witness_labeling(const FamilySpec& spec) {
  FamilyInstance inst = generate(spec);
  const Graph& g = inst.graph;
  EdgeLabeling f(g);
  using K = FamilySpec::Kind;
  switch (spec.kind) {
    case K::complete_bipartite: {
      int r = spec.a, s = spec.b;
      for (int i = 0; i < r; ++i) f[g.edge_index(i, r + i)] = 2;
      if (r == s) f[g.edge_index(r - 1, r + r - 1)] = 1;
      break;
    }
    case K::grt: {
      int r = spec.a, t = spec.b, block = 2 * r + 1;
      for (int i = 0; i < t; ++i)
        for (int j = 0; j < r; ++j) f[g.edge_index(block * i + j, block * i + r + j)] = 2;
      break;
    }
    case K::path: {
      int m = g.edge_count();
      for (int e = 1; e < m; e += 3) f[e] = 2;  // edges 2,5,8,... one-based
      if (m % 3 == 1) f[m - 1] = 1;
      break;
    }
    case K::cycle: {
      int n = spec.a;
      for (int i = 0; i + 2 < n; i += 3) f[g.edge_index(i, i + 1)] = 2;
      if (n % 3 == 1) f[g.edge_index(n - 2, n - 1)] = 1;
      if (n % 3 == 2) f[g.edge_index(n - 2, n - 1)] = 2;
      break;
    }
    case K::disjoint_kdd: {
      int d = spec.a, t = spec.b;
      for (int i = 0; i < t; ++i) {
        for (int j = 0; j < d; ++j) f[g.edge_index(2 * d * i + j, 2 * d * i + d + j)] = 2;
        f[g.edge_index(2 * d * i + d - 1, 2 * d * i + 2 * d - 1)] = 1;
      }
      break;
    }
    case K::c5_chain: {
      // per 5-cycle: 2 on the edge at the apex-attached vertex and on the
      // opposite edge, so apex edges are dominated too
      int k = spec.a;
      for (int i = 0; i < k; ++i) {
        f[g.edge_index(5 * i, 5 * i + 1)] = 2;
        f[g.edge_index(5 * i + 2, 5 * i + 3)] = 2;
      }
      break;
    }
    case K::grid_p2: {
      int n = spec.a;
      auto top = [&](int c) { return c; };
      auto bottom = [&](int c) { return n + c; };
      int q = n / 3, p = n % 3;
      for (int i = 0; i < q; ++i) {
        f[g.edge_index(top(3 * i), top(3 * i + 1))] = 2;
        f[g.edge_index(bottom(3 * i + 1), bottom(3 * i + 2))] = 2;
      }
      if (p == 1) f[g.edge_index(top(n - 1), bottom(n - 1))] = 2;
      if (p == 2) {
        f[g.edge_index(top(n - 2), bottom(n - 2))] = 2;
        f[g.edge_index(top(n - 1), bottom(n - 1))] = 1;
      }
      break;
    }
    case K::grid_p3: {
      // even columns: 2 on the upper rung; odd columns: 2 on the lower rung
      int n = spec.a;
      for (int c = 0; c < n; ++c)
        f[c % 2 == 0 ? g.edge_index(c, n + c) : g.edge_index(n + c, 2 * n + c)] = 2;
      break;
    }
  }
  return f;
}

struct Conjecture1Report {
  int exact = 0;            // 2rt, oracle-confirmable for small instances
  long long ceiling_bound = 0;  // ceil(Delta/(Delta+1) * n)
  bool is_counterexample = false;
};

// Compares the family value 2rt against ceil(Delta/(Delta+1) n) with
// Delta = r+1 and n = (2r+1)t.
inline Conjecture1Report audit_conjecture1(const FamilySpec& spec) {
  if (spec.kind != FamilySpec::Kind::grt)
    throw std::invalid_argument("audit_conjecture1 expects a grt family");
  check_family_parameters(spec);
  long long r = spec.a, t = spec.b;
  long long delta = r + 1, n = (2 * r + 1) * t;
  Conjecture1Report rep;
  rep.exact = static_cast<int>(2 * r * t);
  rep.ceiling_bound = (delta * n + delta) / (delta + 1);  // ceil(delta*n/(delta+1))
  rep.is_counterexample = rep.exact > rep.ceiling_bound;
  return rep;
}

// Named graphs used by the planar and subcubic audits.
inline Graph wheel_graph(int n) {  // hub + cycle on n-1 vertices
  if (n < 4) throw std::invalid_argument("wheel needs at least 4 vertices");
  Graph g(n);
  for (int i = 1; i < n; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i % (n - 1) + 1);
  }
  return g;
}

inline Graph prism_graph(int k) {  // C_k x K_2
  if (k < 3) throw std::invalid_argument("prism needs cycle length at least 3");
  Graph g(2 * k);
  for (int i = 0; i < k; ++i) {
    g.add_edge(i, (i + 1) % k);
    g.add_edge(k + i, k + (i + 1) % k);
    g.add_edge(i, k + i);
  }
  return g;
}

// outer n-cycle, inner (n,k) star polygon, spokes
inline Graph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n)
    throw std::invalid_argument("generalized_petersen needs n >= 3, 1 <= k < n/2");
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(n + i, n + (i + k) % n);
    g.add_edge(i, n + i);
  }
  return g;
}

inline Graph petersen_graph() { return generalized_petersen(5, 2); }
inline Graph desargues_graph() { return generalized_petersen(10, 3); }
inline Graph mobius_kantor_graph() { return generalized_petersen(8, 3); }

inline Graph heawood_graph() {  // C14 plus chords i -- i+5 at even i
  Graph g(14);
  for (int i = 0; i < 14; ++i) g.add_edge(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) g.add_edge(i, (i + 5) % 14);
  return g;
}

inline Graph pappus_graph() {  // LCF [5,7,-7,7,-7,-5]^3
  Graph g(18);
  static constexpr int jumps[6] = {5, 7, -7, 7, -7, -5};
  for (int i = 0; i < 18; ++i) g.add_edge(i, (i + 1) % 18);
  for (int i = 0; i < 18; ++i) {
    int j = ((i + jumps[i % 6]) % 18 + 18) % 18;
    if (!g.has_edge(i, j)) g.add_edge(i, j);
  }
  return g;
}

inline Graph cube_graph() {  // Q3
  Graph g(8);
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit)
      if (v < (v ^ (1 << bit))) g.add_edge(v, v ^ (1 << bit));
  return g;
}

}  // namespace erdf
