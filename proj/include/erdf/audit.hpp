#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "erdf/classify.hpp"
#include "erdf/enumerate.hpp"
#include "erdf/families.hpp"
#include "erdf/graph6.hpp"
#include "erdf/report.hpp"
#include "erdf/solver.hpp"

namespace erdf {

struct AuditResult {
  json report;
  bool violation = false;  // a theorem/conjecture check failed
};

// Sweep the two-parameter family and report which instances beat the ceiling
// bound; the audit fails if the known counterexample does not reproduce.
inline AuditResult audit_conjecture1_sweep(const SolveBudgets& budgets) {
  AuditResult out;
  json instances = json::array();
  bool disproof_seen = false;
  for (int r = 1; r <= 3; ++r)
    for (int t = 1; t <= 4; ++t) {
      FamilySpec spec = FamilySpec::grt(r, t);
      auto rep = audit_conjecture1(spec);
      FamilyInstance inst = generate(spec);
      json j{{"family", format_family(spec)},
             {"n", inst.graph.vertex_count()},
             {"max_degree", inst.graph.max_degree()},
             {"value", rep.exact},
             {"ceiling_bound", rep.ceiling_bound},
             {"is_counterexample", rep.is_counterexample}};
      if (inst.graph.edge_count() <= 28) {
        auto witness = witness_labeling(spec);
        auto oracle = exact_gamma(inst.graph, budgets, &witness);
        j["oracle"] = {{"value", oracle.value}, {"status", to_string(oracle.status)}};
        j["oracle_agrees"] = oracle.status == SolveStatus::exact && oracle.value == rep.exact;
      }
      if (rep.is_counterexample) disproof_seen = true;
      instances.push_back(std::move(j));
    }
  out.report = json{{"target", "conjecture1"},
                    {"claim", "gamma' <= ceil(Delta/(Delta+1) n)"},
                    {"instances", instances},
                    {"disproved", disproof_seen}};
  out.violation = !disproof_seen;  // failing to reproduce the disproof is the failure here
  return out;
}

namespace detail {

struct PlanarCase {
  std::string name;
  Graph graph;
};

// families that are planar by construction; planarity recognition is out of
// scope, so the audit only ever touches these
inline std::vector<PlanarCase> builtin_planar_corpus() {
  std::vector<PlanarCase> out;
  for (int n = 2; n <= 6; ++n)
    out.push_back({format_family(FamilySpec::grid_p2(n)), generate(FamilySpec::grid_p2(n)).graph});
  for (int n = 1; n <= 4; ++n)
    out.push_back({format_family(FamilySpec::grid_p3(n)), generate(FamilySpec::grid_p3(n)).graph});
  for (int n = 4; n <= 8; ++n) out.push_back({"wheel:" + std::to_string(n), wheel_graph(n)});
  for (int k = 3; k <= 5; ++k) out.push_back({"prism:" + std::to_string(k), prism_graph(k)});
  return out;
}

}  // namespace detail

// gamma' <= 6/7 n over generated planar families (grids, wheels, prisms).
inline AuditResult audit_conjecture2_empirical(const SolveBudgets& budgets) {
  AuditResult out;
  json cases = json::array();
  Rational best_ratio(0, 1);
  std::string best_name;
  for (const auto& [name, g] : detail::builtin_planar_corpus()) {
    auto r = exact_gamma(g, budgets);
    Rational bound(6LL * g.vertex_count(), 7);
    bool pass = leq(r.value, bound);
    if (!pass && r.status == SolveStatus::exact) out.violation = true;
    Rational observed(r.value, g.vertex_count());
    if (observed > best_ratio) {
      best_ratio = observed;
      best_name = name;
    }
    cases.push_back(json{{"name", name},
                         {"n", g.vertex_count()},
                         {"value", r.value},
                         {"status", to_string(r.status)},
                         {"bound", to_json(bound)},
                         {"pass", pass}});
  }
  out.report = json{{"target", "conjecture2_empirical"},
                    {"claim", "gamma' <= 6/7 n on planar graphs"},
                    {"note", "empirical scan over families planar by construction"},
                    {"cases", cases},
                    {"max_ratio", to_json(best_ratio)},
                    {"max_ratio_at", best_name},
                    {"violations", out.violation}};
  return out;
}

// Evidence scan for gamma' <= (2k+2)/(3k+2) n at girth >= 3k+2, k = 1, 2.
// The conjecture concerns planar graphs; the corpus here is small graphs and
// cycles, so the report is evidence only, never a verification.
inline AuditResult audit_girth_conjecture(const SolveBudgets& budgets) {
  AuditResult out;
  json sweeps = json::array();
  for (int k = 1; k <= 2; ++k) {
    int min_girth = 3 * k + 2;
    Rational coeff(2LL * k + 2, 3LL * k + 2);
    int instances = 0, violations = 0;
    Rational max_ratio(0, 1);
    auto consider = [&](const Graph& g) {
      auto cls_girth = girth(g);
      if (cls_girth && *cls_girth < min_girth) return;
      auto r = exact_gamma(g, budgets);
      ++instances;
      Rational bound(coeff.num * g.vertex_count(), coeff.den);
      if (!leq(r.value, bound) && r.status == SolveStatus::exact) ++violations;
      Rational observed(r.value, g.vertex_count());
      if (observed > max_ratio) max_ratio = observed;
    };
    for (int n = 2; n <= 7; ++n)
      for (const Graph& g : enumerate_connected_graphs(n)) consider(g);
    for (int n = std::max(3, min_girth); n <= 12; ++n)
      consider(generate(FamilySpec::cycle(n)).graph);
    if (violations > 0) out.violation = true;
    sweeps.push_back(json{{"k", k},
                          {"min_girth", min_girth},
                          {"coefficient", to_json(coeff)},
                          {"instances", instances},
                          {"violations", violations},
                          {"max_ratio", to_json(max_ratio)}});
  }
  out.report = json{{"target", "girth_conjecture"},
                    {"claim", "gamma' <= (2k+2)/(3k+2) n for planar graphs of girth >= 3k+2"},
                    {"note", "evidence only; the conjecture remains open"},
                    {"sweeps", sweeps}};
  return out;
}

// K_{2,3}-subdivision-free bounds over every connected graph on up to 7
// vertices: 4/5 n for the class, 3/4 n when additionally no 5-cycle separates.
inline AuditResult audit_k23(const SolveBudgets& budgets) {
  AuditResult out;
  int free_count = 0, strict_count = 0, viol45 = 0, viol34 = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      if (contains_k23_subdivision(g)) continue;
      ++free_count;
      auto r = exact_gamma(g, budgets);
      if (!leq(r.value, Rational(4LL * n, 5))) ++viol45;
      if (!c5_separable(g)) {
        ++strict_count;
        if (!leq(r.value, Rational(3LL * n, 4))) ++viol34;
      }
    }
  out.violation = viol45 > 0 || viol34 > 0;
  out.report = json{{"target", "k23"},
                    {"claim", "gamma' <= 4/5 n when K_{2,3}-subdivision-free; "
                              "3/4 n when additionally no separable 5-cycle"},
                    {"subdivision_free_graphs", free_count},
                    {"also_not_c5_separable", strict_count},
                    {"violations_four_fifths", viol45},
                    {"violations_three_quarters", viol34}};
  return out;
}

}  // namespace erdf
