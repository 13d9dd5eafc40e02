#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "erdf/enumerate.hpp"
#include "erdf/families.hpp"
#include "erdf/reduce.hpp"
#include "erdf/solver.hpp"
#include "erdf/triple.hpp"
#include "test_support.hpp"

using namespace erdf;
using testsupport::random_graph;

namespace {

Graph cycle_graph(int n) { return generate(FamilySpec::cycle(n)).graph; }
Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

RemovableTriple to_local(const RemovableTriple& t, const std::vector<int>& keep) {
  std::vector<int> index(keep.empty() ? 0 : keep.back() + 1, -1);
  for (size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  RemovableTriple out;
  for (int v : t.s) out.s.push_back(index[v]);
  std::sort(out.s.begin(), out.s.end());
  for (auto [u, v] : t.m2)
    out.m2.emplace_back(std::min(index[u], index[v]), std::max(index[u], index[v]));
  for (auto [u, v] : t.m1)
    out.m1.emplace_back(std::min(index[u], index[v]), std::max(index[u], index[v]));
  std::sort(out.m2.begin(), out.m2.end());
  std::sort(out.m1.begin(), out.m1.end());
  return out;
}

// Replays a trace step by step: every S must be alive and disjoint from the
// previous ones, every triple must validate on the graph it was applied to
// with ratio at most the rule target, and the union must cover everything.
void check_trace(const Graph& g, const ReductionTrace& t,
                 const std::function<Rational(const ReductionStep&, size_t)>& target_for) {
  std::vector<bool> alive(g.vertex_count(), true);
  int covered = 0;
  for (size_t i = 0; i < t.steps.size(); ++i) {
    const ReductionStep& step = t.steps[i];
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (alive[v]) keep.push_back(v);
    REQUIRE(step.n_before == static_cast<int>(keep.size()));
    for (int v : step.triple.s) REQUIRE(alive[v]);
    Graph cur = g.induced(keep);
    RemovableTriple local = to_local(step.triple, keep);
    auto check = validate_triple(cur, local);
    INFO(step.rule << ": " << check.violation);
    REQUIRE(check.ok);
    REQUIRE(local.ratio() <= target_for(step, i));
    for (int v : step.triple.s) {
      alive[v] = false;
      ++covered;
    }
    REQUIRE(step.n_after == step.n_before - static_cast<int>(step.triple.s.size()));
  }
  REQUIRE(covered == g.vertex_count());
  REQUIRE(is_valid_erdf(g, t.labeling));
  REQUIRE(weight(t.labeling) == t.weight);
}

Rational subcubic_target(const ReductionStep& s, size_t) {
  return s.rule == "k33-component" ? Rational(5, 6) : Rational(4, 5);
}

}  // namespace

TEST_CASE("ratio is the exact fraction from the definition") {
  RemovableTriple c5_triple{{0, 1, 2, 3, 4}, {{0, 1}, {2, 3}}, {}};
  CHECK(ratio(c5_triple).num == 4);
  CHECK(ratio(c5_triple).den == 5);

  RemovableTriple isolated{{3}, {}, {}};
  CHECK(ratio(isolated).num == 0);
  CHECK(ratio(isolated).den == 1);

  RemovableTriple k4_triple{{0, 1, 2, 3}, {{0, 1}}, {{2, 3}}};
  CHECK(ratio(k4_triple) == Rational(3, 4));

  CHECK_THROWS_AS(ratio(RemovableTriple{}), std::invalid_argument);
}

TEST_CASE("triple validation") {
  Graph c5 = cycle_graph(5);
  RemovableTriple whole{{0, 1, 2, 3, 4}, {{0, 1}, {2, 3}}, {}};
  CHECK(validate_triple(c5, whole).ok);

  // a single vertex with positive degree covers nothing
  RemovableTriple lonely{{0}, {}, {}};
  auto r = validate_triple(c5, lonely);
  CHECK(!r.ok);
  CHECK(r.violation.find("(0,1)") != std::string::npos);

  // shared edge between the two matchings
  Graph k4 = complete_graph(4);
  RemovableTriple shared{{0, 1, 2, 3}, {{0, 1}}, {{0, 1}}};
  CHECK(!validate_triple(k4, shared).ok);

  RemovableTriple outside{{0, 7}, {}, {}};
  CHECK_THROWS_AS(validate_triple(c5, outside), std::invalid_argument);
}

TEST_CASE("extend_labeling lifts a labeling over a removed triple") {
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  RemovableTriple t{{0, 1, 2}, {{1, 2}}, {}};
  REQUIRE(validate_triple(p4, t).ok);
  EdgeLabeling inner;  // g - S is the single vertex 3, no edges
  auto f = extend_labeling(p4, t, inner);
  CHECK(is_valid_erdf(p4, f));
  CHECK(weight(f) == 2);
  CHECK(f[p4.edge_index(1, 2)] == 2);
  CHECK(f[p4.edge_index(0, 1)] == 0);
  CHECK(f[p4.edge_index(2, 3)] == 0);

  // whole-graph triple with an empty inner labeling
  Graph c5 = cycle_graph(5);
  RemovableTriple whole{{0, 1, 2, 3, 4}, {{0, 1}, {2, 3}}, {}};
  auto g = extend_labeling(c5, whole, EdgeLabeling{});
  CHECK(weight(g) == 4);
  CHECK(is_valid_erdf(c5, g));

  RemovableTriple bad{{0}, {}, {}};
  CHECK_THROWS_AS(extend_labeling(p4, bad, inner), std::invalid_argument);
}

TEST_CASE("extend_labeling preserves validity on random instances") {
  std::mt19937 rng(9101);
  int done = 0;
  while (done < 200) {
    Graph g = random_graph(rng, 4 + done % 10, 0.35);
    std::uniform_int_distribution<int> vd(0, g.vertex_count() - 1);
    auto t = mad_triple(g, vd(rng));
    if (!validate_triple(g, t).ok) continue;
    std::vector<int> keep;
    std::vector<bool> in_s(g.vertex_count(), false);
    for (int v : t.s) in_s[v] = true;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!in_s[v]) keep.push_back(v);
    Graph inner = g.induced(keep);
    auto f_inner = greedy_matching_upper(inner);
    auto f = extend_labeling(g, t, f_inner);
    REQUIRE(is_valid_erdf(g, f));
    REQUIRE(weight(f) == weight(f_inner) + 2 * static_cast<int>(t.m2.size()) +
                             static_cast<int>(t.m1.size()));
    ++done;
  }
}

TEST_CASE("mad_triple cases from the construction") {
  // isolated vertex
  Graph lone(3, {{1, 2}});
  auto t0 = mad_triple(lone, 0);
  CHECK(t0.s == std::vector<int>{0});
  CHECK(ratio(t0).num == 0);

  // star center: no matching among leaves, no second neighborhood
  Graph k13(4, {{0, 1}, {0, 2}, {0, 3}});
  auto t1 = mad_triple(k13, 0);
  CHECK(t1.s == std::vector<int>{0, 1, 2, 3});
  CHECK(t1.m2 == std::vector<std::pair<int, int>>{{0, 1}});  // v joined to the first leaf
  CHECK(t1.m1.empty());
  CHECK(ratio(t1).num == 2);
  CHECK(ratio(t1).den == 4);
  CHECK(validate_triple(k13, t1).ok);

  // triangle: the neighborhood matching swallows everything
  Graph k3 = complete_graph(3);
  auto t2 = mad_triple(k3, 0);
  CHECK(t2.s == std::vector<int>{0, 1, 2});
  CHECK(t2.m2 == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(ratio(t2) == Rational(2, 3));
}

TEST_CASE("mad_triple guarantees on random graphs") {
  std::mt19937 rng(9102);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(rng, 1 + trial % 30, 0.1 + 0.02 * (trial % 20));
    for (int v = 0; v < g.vertex_count(); ++v) {
      int d = g.degree(v);
      auto t = mad_triple(g, v);
      auto check = validate_triple(g, t);
      INFO(check.violation);
      REQUIRE(check.ok);
      REQUIRE(static_cast<int>(t.s.size()) <= 2 * d + 1);
      long long mm = static_cast<long long>(maximum_matching_within(g, g.neighbors(v)).size());
      auto r = ratio(t);
      if (d > 0)
        REQUIRE(r.num * (2 * d + 1 - 2 * mm) <= (2 * d - 2 * mm) * r.den);
      else
        REQUIRE(r.num == 0);
    }
  }
  CHECK_THROWS_AS(mad_triple(Graph(2), 5), std::invalid_argument);
}

TEST_CASE("degenerate reduction meets its bound") {
  for (const Graph& g : {generate(FamilySpec::path(4)).graph, complete_graph(4),
                         generate(FamilySpec::grt(2, 2)).graph, cycle_graph(9)}) {
    int k = degeneracy(g).k;
    auto t = reduce_degenerate(g);
    CHECK(t.claimed_bound == Rational(2LL * k * g.vertex_count(), 2 * k + 1));
    CHECK(leq(t.weight, t.claimed_bound));
    check_trace(g, t, [&](const ReductionStep&, size_t) { return Rational(2LL * k, 2 * k + 1); });
    CHECK(t.weight >= exact_gamma(g).value);
  }
  auto p4 = generate(FamilySpec::path(4)).graph;
  CHECK(reduce_degenerate(p4).weight == 2);
}

TEST_CASE("connected max-degree reduction meets its bound") {
  auto check_graph = [&](const Graph& g) {
    int delta = g.max_degree();
    auto t = reduce_max_degree_connected(g);
    CHECK(t.claimed_bound == Rational((2LL * delta - 2) * g.vertex_count() + 2, 2 * delta - 1));
    CHECK(leq(t.weight, t.claimed_bound));
    check_trace(g, t, [&](const ReductionStep&, size_t i) {
      return i == 0 ? Rational(2LL * delta, 2 * delta + 1)
                    : Rational(2LL * delta - 2, 2 * delta - 1);
    });
    CHECK(t.weight >= exact_gamma(g).value);
  };
  check_graph(cycle_graph(7));
  check_graph(complete_graph(4));
  check_graph(generate(FamilySpec::complete_bipartite(3, 3)).graph);
  check_graph(generate(FamilySpec::grid_p3(3)).graph);

  CHECK_THROWS_AS(reduce_max_degree_connected(Graph(3)), std::invalid_argument);
  Graph two_parts(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(reduce_max_degree_connected(two_parts), std::invalid_argument);
}

TEST_CASE("K33 trace matches the worked example") {
  auto k33 = generate(FamilySpec::complete_bipartite(3, 3)).graph;
  auto t = reduce_max_degree_connected(k33);
  CHECK(t.weight == 5);
  CHECK(t.claimed_bound == Rational(26, 5));
  CHECK(t.steps.size() == 1);  // the opening triple swallows the whole graph
}

TEST_CASE("subcubic reduction on named graphs") {
  // K4: the fixed 3/4 triple
  auto k4_trace = reduce_subcubic(complete_graph(4));
  CHECK(k4_trace.weight == 3);
  CHECK(k4_trace.steps.at(0).rule == "k4-component");
  check_trace(complete_graph(4), k4_trace, subcubic_target);

  // K33 alone: flagged, weight 5 above 4/5 n
  auto k33 = generate(FamilySpec::complete_bipartite(3, 3)).graph;
  auto k33_trace = reduce_subcubic(k33);
  CHECK(k33_trace.weight == 5);
  CHECK(k33_trace.excluded_components.size() == 1);
  CHECK(5 * 5 > 4 * 6);
  check_trace(k33, k33_trace, subcubic_target);

  // tightness family
  for (int t = 1; t <= 3; ++t) {
    Graph g = generate(FamilySpec::grt(2, t)).graph;
    auto trace = reduce_subcubic(g);
    CHECK(trace.weight == 4 * t);  // exactly 4/5 n
    CHECK(trace.excluded_components.empty());
    check_trace(g, trace, subcubic_target);
  }

  // cubic classics
  for (const Graph& g : {petersen_graph(), cube_graph(), prism_graph(3), prism_graph(4),
                         prism_graph(5)}) {
    auto trace = reduce_subcubic(g);
    check_trace(g, trace, subcubic_target);
    CHECK(trace.weight * 5 <= 4 * g.vertex_count());
    CHECK(trace.weight >= exact_gamma(g).value);
  }

  CHECK_THROWS_AS(reduce_subcubic(complete_graph(5)), std::invalid_argument);
}

TEST_CASE("cycle constructions fire on larger-girth cubic graphs") {
  // girth 6 drives the mod-0 branch, generalized Petersen (7,2) the mod-2
  // branch; the constructions must validate without the fallback search
  struct Case {
    const char* name;
    Graph graph;
    const char* rule;
  };
  std::vector<Case> cases;
  cases.push_back({"mobius-kantor", mobius_kantor_graph(), "cycle-mod0"});
  cases.push_back({"pappus", pappus_graph(), "cycle-mod0"});
  cases.push_back({"desargues", desargues_graph(), "cycle-mod0"});
  cases.push_back({"gp(7,2)", generalized_petersen(7, 2), "cycle-mod2"});
  cases.push_back({"heawood", heawood_graph(), "cycle-u-bridge-c6"});
  cases.push_back({"petersen", petersen_graph(), "cycle-u-bridge-c5"});
  for (const auto& c : cases) {
    INFO(c.name);
    REQUIRE(c.graph.max_degree() == 3);
    auto trace = reduce_subcubic(c.graph);
    check_trace(c.graph, trace, subcubic_target);
    CHECK(trace.weight * 5 <= 4 * c.graph.vertex_count());
    CHECK(trace.steps.at(0).rule == c.rule);
    for (const auto& step : trace.steps) CHECK(step.diagnostic.empty());
  }
}

TEST_CASE("subcubic reduction covers every small connected subcubic graph") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      if (g.max_degree() > 3) continue;
      auto trace = reduce_subcubic(g);
      check_trace(g, trace, subcubic_target);
      bool is_k33 = !trace.excluded_components.empty();
      if (!is_k33) CHECK(trace.weight * 5 <= 4 * n);
      CHECK(trace.weight >= exact_gamma(g).value);  // constructive never beats exact
    }
}

TEST_CASE("disconnected inputs are legal for the component-wise reducers") {
  // K33 + C5 + isolated vertex
  Graph g(12);
  auto k33 = generate(FamilySpec::complete_bipartite(3, 3)).graph;
  for (auto [u, v] : k33.edges()) g.add_edge(u, v);
  for (int i = 0; i < 5; ++i) g.add_edge(6 + i, 6 + (i + 1) % 5);
  auto trace = reduce_subcubic(g);
  CHECK(trace.excluded_components.size() == 1);
  CHECK(is_valid_erdf(g, trace.labeling));
  CHECK(trace.weight == 5 + 4);  // K33 exact + C5 at its 4/5 bound
  check_trace(g, trace, subcubic_target);

  auto td = reduce_degenerate(g);
  CHECK(is_valid_erdf(g, td.labeling));
}

TEST_CASE("exhaustive fallback search finds textbook triples") {
  Graph c5 = cycle_graph(5);
  detail::TripleSearch search(c5, Rational(4, 5), 8);
  auto t = search.run();
  REQUIRE(t.has_value());
  CHECK(validate_triple(c5, *t).ok);
  CHECK(t->ratio() <= Rational(4, 5));
}
