#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "erdf/enumerate.hpp"
#include "erdf/families.hpp"
#include "erdf/labeling.hpp"
#include "erdf/linegraph.hpp"
#include "erdf/solver.hpp"
#include "erdf/vertex_roman.hpp"
#include "test_support.hpp"

using namespace erdf;
using testsupport::random_graph;

namespace {
Graph cycle_graph(int n) { return generate(FamilySpec::cycle(n)).graph; }
}

TEST_CASE("weight sums labels") {
  Graph c5 = cycle_graph(5);
  EdgeLabeling f(c5);
  CHECK(weight(f) == 0);
  f[c5.edge_index(0, 1)] = 2;
  f[c5.edge_index(2, 3)] = 2;
  CHECK(weight(f) == 4);

  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EdgeLabeling g(k4);
  g[k4.edge_index(0, 1)] = 2;
  g[k4.edge_index(2, 3)] = 1;
  CHECK(weight(g) == 3);
  CHECK(is_valid_erdf(k4, g));
}

TEST_CASE("validity of the defining condition") {
  Graph p3(3, {{0, 1}, {1, 2}});
  EdgeLabeling zeros(p3);
  CHECK(!is_valid_erdf(p3, zeros));
  EdgeLabeling one2(p3);
  one2[0] = 2;
  CHECK(is_valid_erdf(p3, one2));

  // K_{r,s} with the r diagonal edges labeled 2
  auto inst = generate(FamilySpec::complete_bipartite(2, 4));
  EdgeLabeling f(inst.graph);
  f[inst.graph.edge_index(inst.named("x1"), inst.named("y1"))] = 2;
  f[inst.graph.edge_index(inst.named("x2"), inst.named("y2"))] = 2;
  CHECK(is_valid_erdf(inst.graph, f));

  EdgeLabeling wrong_size;
  CHECK_THROWS_AS(is_valid_erdf(p3, wrong_size), std::invalid_argument);
}

TEST_CASE("greedy matching incumbent") {
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  auto f = greedy_matching_upper(p4);
  CHECK(is_valid_erdf(p4, f));
  CHECK(weight(f) % 2 == 0);

  auto k33 = generate(FamilySpec::complete_bipartite(3, 3)).graph;
  auto g = greedy_matching_upper(k33);
  CHECK(weight(g) == 6);  // perfect matching; one above the optimum
  CHECK(is_valid_erdf(k33, g));

  CHECK(weight(greedy_matching_upper(Graph(4))) == 0);
}

TEST_CASE("exact values on paper families") {
  CHECK(exact_gamma(cycle_graph(5)).value == 4);
  CHECK(exact_gamma(generate(FamilySpec::complete_bipartite(3, 3)).graph).value == 5);
  CHECK(exact_gamma(generate(FamilySpec::path(4)).graph).value == 2);
  CHECK(exact_gamma(generate(FamilySpec::grt(2, 2)).graph).value == 8);
}

TEST_CASE("solver result invariants") {
  std::mt19937 rng(8101);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = random_graph(rng, 2 + trial % 8, 0.4);
    auto r = exact_gamma(g);
    REQUIRE(r.status == SolveStatus::exact);
    CHECK(is_valid_erdf(g, r.witness));
    CHECK(weight(r.witness) == r.value);
  }
}

TEST_CASE("exact solver agrees with plain enumeration") {
  std::mt19937 rng(8102);
  int done = 0;
  while (done < 40) {
    Graph g = random_graph(rng, 3 + done % 5, 0.5);
    if (g.edge_count() > 12) continue;
    ++done;
    CHECK(exact_gamma(g).value == testsupport::brute_force_edge_roman(g));
  }
}

TEST_CASE("budget exhaustion degrades to an upper bound") {
  Graph g = generate(FamilySpec::grt(2, 2)).graph;
  SolveBudgets tiny;
  tiny.node_limit = 3;
  auto r = exact_gamma(g, tiny);
  CHECK(r.status == SolveStatus::upper_bound);
  CHECK(r.value >= 8);  // never below the optimum
  CHECK(is_valid_erdf(g, r.witness));
  CHECK(r.nodes_explored <= 3);

  auto full = exact_gamma(g);
  CHECK(full.status == SolveStatus::exact);
  CHECK(full.value == 8);
}

TEST_CASE("warm start seeds the incumbent") {
  auto spec = FamilySpec::grt(2, 2);
  Graph g = generate(spec).graph;
  auto witness = witness_labeling(spec);
  SolveBudgets b;
  auto r = exact_gamma(g, b, &witness);
  CHECK(r.value == 8);
  CHECK(r.status == SolveStatus::exact);
}

TEST_CASE("vertex Roman solver basics") {
  CHECK(vertex_roman_exact(Graph(1)).value == 1);
  Graph k13(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(vertex_roman_exact(k13).value == 2);
  CHECK(vertex_roman_exact(cycle_graph(5)).value == 4);
}

TEST_CASE("vertex Roman solver agrees with enumeration") {
  std::mt19937 rng(8103);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(rng, 1 + trial % 8, 0.35);
    auto r = vertex_roman_exact(g);
    REQUIRE(r.status == SolveStatus::exact);
    CHECK(r.value == testsupport::brute_force_vertex_roman(g));
    CHECK(is_valid_roman(g, r.witness));
  }
}

TEST_CASE("edge Roman number equals vertex Roman number of the line graph") {
  std::mt19937 rng(8104);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(rng, 2 + trial % 5, 0.5);
    CHECK(exact_gamma(g).value == vertex_roman_exact(line_graph(g).graph).value);
  }
}
