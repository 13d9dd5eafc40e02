#pragma once

#include <atomic>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "erdf/classify.hpp"
#include "erdf/enumerate.hpp"
#include "erdf/families.hpp"
#include "erdf/graph6.hpp"
#include "erdf/linegraph.hpp"
#include "erdf/reduce.hpp"
#include "erdf/solver.hpp"
#include "erdf/vertex_roman.hpp"

namespace erdf {

using nlohmann::json;

inline json to_json(const Rational& r) { return json{{"num", r.num}, {"den", r.den}}; }

inline json labeling_json(const Graph& g, const EdgeLabeling& f) {
  json arr = json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    arr.push_back(json::array({u, v, f[e]}));
  }
  return arr;
}

inline json to_json(const Graph& g, const SolveResult& r) {
  return json{{"value", r.value},
              {"status", to_string(r.status)},
              {"nodes", r.nodes_explored},
              {"millis", r.elapsed.count()},
              {"labeling", labeling_json(g, r.witness)}};
}

inline json to_json(const Graph& g, const ReductionTrace& t) {
  json steps = json::array();
  for (const auto& step : t.steps) {
    json edges2 = json::array(), edges1 = json::array();
    for (auto [u, v] : step.triple.m2) edges2.push_back(json::array({u, v}));
    for (auto [u, v] : step.triple.m1) edges1.push_back(json::array({u, v}));
    json s{{"rule", step.rule},
           {"S", step.triple.s},
           {"M2", edges2},
           {"M1", edges1},
           {"ratio", to_json(step.triple.ratio())},
           {"n_before", step.n_before},
           {"n_after", step.n_after}};
    if (!step.diagnostic.empty()) s["diagnostic"] = step.diagnostic;
    steps.push_back(std::move(s));
  }
  json out{{"steps", steps},
           {"labeling", labeling_json(g, t.labeling)},
           {"weight", t.weight},
           {"bound", to_json(t.claimed_bound)},
           {"bound_holds", leq(t.weight, t.claimed_bound)}};
  if (!t.excluded_components.empty()) out["excluded_components"] = t.excluded_components;
  return out;
}

// Which theorem checks a scan evaluates. planar is caller-asserted (the
// corpus must be planar by construction); line_graph re-solves through the
// line graph and is opt-in since it roughly doubles the work.
struct CheckSelection {
  bool degenerate = true;
  bool connected = true;
  bool subcubic = true;
  bool k23 = true;
  bool planar = false;
  bool line_graph = false;

  static CheckSelection parse(const std::string& csv) {
    CheckSelection sel{false, false, false, false, false, false};
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item == "degenerate") sel.degenerate = true;
      else if (item == "connected") sel.connected = true;
      else if (item == "subcubic") sel.subcubic = true;
      else if (item == "k23") sel.k23 = true;
      else if (item == "planar") sel.planar = true;
      else if (item == "linegraph") sel.line_graph = true;
      else if (item == "all") sel = CheckSelection{true, true, true, true, true, true};
      else throw std::invalid_argument("unknown check: " + item);
    }
    return sel;
  }
};

enum class CheckOutcome { pass, fail, inconclusive };

inline const char* to_string(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::pass: return "pass";
    case CheckOutcome::fail: return "fail";
    case CheckOutcome::inconclusive: return "inconclusive";
  }
  return "?";
}

struct TheoremCheck {
  Rational bound{0, 1};
  CheckOutcome outcome = CheckOutcome::inconclusive;
  bool excluded = false;  // hypothesis failed in a flagged way (K33 component)
};

struct BoundReport {
  std::string graph6_id;
  int n = 0, m = 0;
  GraphClass cls;
  SolveResult exact;
  std::optional<int> weight_degenerate, weight_connected, weight_subcubic;
  std::optional<TheoremCheck> check_degenerate, check_connected, check_subcubic;
  std::optional<TheoremCheck> check_k23_45, check_k23_34, check_planar;
  std::optional<int> vertex_roman_value;
  std::optional<CheckOutcome> check_line_graph;
  std::string error;  // analysis aborted; counted as a failure
};

namespace detail {

// gamma' <= bound, taking solver status into account: an incumbent below the
// bound still proves the inequality, an incumbent above it proves nothing.
inline CheckOutcome value_check(const SolveResult& r, const Rational& bound) {
  if (leq(r.value, bound)) return CheckOutcome::pass;
  return r.status == SolveStatus::exact ? CheckOutcome::fail : CheckOutcome::inconclusive;
}

inline bool has_k33_component(const Graph& g) {
  for (const auto& comp : g.components()) {
    if (comp.size() != 6) continue;
    if (is_isomorphic_small(g.induced(comp), k33_reference())) return true;
  }
  return false;
}

}  // namespace detail

inline BoundReport analyze_graph(const Graph& g, const std::string& id,
                                 const CheckSelection& sel, const SolveBudgets& budgets) {
  BoundReport rep;
  rep.graph6_id = id;
  rep.n = g.vertex_count();
  rep.m = g.edge_count();
  rep.cls = classify(g);
  rep.exact = exact_gamma(g, budgets);
  long long n = rep.n;

  if (sel.degenerate && n >= 1) {
    long long k = rep.cls.degeneracy;
    TheoremCheck c;
    c.bound = Rational(2 * k * n, 2 * k + 1);
    auto trace = reduce_degenerate(g);
    rep.weight_degenerate = trace.weight;
    bool constructive_ok = is_valid_erdf(g, trace.labeling) && leq(trace.weight, c.bound);
    c.outcome = detail::value_check(rep.exact, c.bound);
    if (!constructive_ok) c.outcome = CheckOutcome::fail;
    rep.check_degenerate = c;
  }

  if (sel.connected && rep.cls.connected && rep.cls.max_degree >= 1) {
    long long d = rep.cls.max_degree;
    TheoremCheck c;
    c.bound = Rational((2 * d - 2) * n + 2, 2 * d - 1);
    auto trace = reduce_max_degree_connected(g);
    rep.weight_connected = trace.weight;
    bool constructive_ok = is_valid_erdf(g, trace.labeling) && leq(trace.weight, c.bound);
    c.outcome = detail::value_check(rep.exact, c.bound);
    if (!constructive_ok) c.outcome = CheckOutcome::fail;
    rep.check_connected = c;
  }

  if (sel.subcubic && rep.cls.subcubic) {
    TheoremCheck c;
    c.bound = Rational(4 * n, 5);
    if (detail::has_k33_component(g)) {
      c.excluded = true;  // theorem hypothesis fails; reported, never a failure
      auto trace = reduce_subcubic(g);
      rep.weight_subcubic = trace.weight;
      c.outcome = CheckOutcome::pass;
    } else {
      auto trace = reduce_subcubic(g);
      rep.weight_subcubic = trace.weight;
      bool constructive_ok = is_valid_erdf(g, trace.labeling) && leq(trace.weight, c.bound);
      c.outcome = detail::value_check(rep.exact, c.bound);
      if (!constructive_ok) c.outcome = CheckOutcome::fail;
    }
    rep.check_subcubic = c;
  }

  if (sel.k23 && rep.cls.k23_subdivision_free) {
    TheoremCheck c45;
    c45.bound = Rational(4 * n, 5);
    c45.outcome = detail::value_check(rep.exact, c45.bound);
    rep.check_k23_45 = c45;
    if (!rep.cls.c5_separable) {
      TheoremCheck c34;
      c34.bound = Rational(3 * n, 4);
      c34.outcome = detail::value_check(rep.exact, c34.bound);
      rep.check_k23_34 = c34;
    }
  }

  if (sel.planar) {
    TheoremCheck c;
    c.bound = Rational(6 * n, 7);
    c.outcome = detail::value_check(rep.exact, c.bound);
    rep.check_planar = c;
  }

  if (sel.line_graph) {
    auto lg = line_graph(g);
    auto vr = vertex_roman_exact(lg.graph, budgets);
    rep.vertex_roman_value = vr.value;
    if (rep.exact.status == SolveStatus::exact && vr.status == SolveStatus::exact)
      rep.check_line_graph =
          vr.value == rep.exact.value ? CheckOutcome::pass : CheckOutcome::fail;
    else
      rep.check_line_graph = CheckOutcome::inconclusive;
  }
  return rep;
}

inline json to_json(const BoundReport& r) {
  if (!r.error.empty()) return json{{"graph6", r.graph6_id}, {"error", r.error}};
  json out{{"graph6", r.graph6_id},
           {"n", r.n},
           {"m", r.m},
           {"max_degree", r.cls.max_degree},
           {"degeneracy", r.cls.degeneracy},
           {"girth", r.cls.girth ? json(*r.cls.girth) : json(nullptr)},
           {"connected", r.cls.connected},
           {"subcubic", r.cls.subcubic},
           {"k23_subdivision_free", r.cls.k23_subdivision_free},
           {"c5_separable", r.cls.c5_separable},
           {"exact",
            {{"value", r.exact.value},
             {"status", to_string(r.exact.status)},
             {"nodes", r.exact.nodes_explored},
             {"millis", r.exact.elapsed.count()}}}};
  json constructive = json::object();
  if (r.weight_degenerate) constructive["degenerate"] = *r.weight_degenerate;
  if (r.weight_connected) constructive["connected"] = *r.weight_connected;
  if (r.weight_subcubic) constructive["subcubic"] = *r.weight_subcubic;
  out["constructive"] = constructive;

  json checks;
  auto put = [&](const char* name, const std::optional<TheoremCheck>& c) {
    if (!c) return;
    json j{{"bound", to_json(c->bound)}};
    if (c->excluded) j["excluded"] = true;
    else j["result"] = to_string(c->outcome);
    checks[name] = j;
  };
  put("degenerate", r.check_degenerate);
  put("connected", r.check_connected);
  put("subcubic", r.check_subcubic);
  put("k23_four_fifths", r.check_k23_45);
  put("k23_three_quarters", r.check_k23_34);
  put("planar", r.check_planar);
  if (r.check_line_graph) {
    checks["line_graph"] = json{{"vertex_roman", *r.vertex_roman_value},
                                {"result", to_string(*r.check_line_graph)}};
  }
  out["checks"] = checks;
  return out;
}

inline std::string csv_header() {
  return "graph6,n,m,max_degree,degeneracy,girth,connected,subcubic,k23_subdivision_free,"
         "c5_separable,exact_value,exact_status,nodes,millis,w_degenerate,w_connected,"
         "w_subcubic,check_degenerate,check_connected,check_subcubic,check_k23_45,"
         "check_k23_34,check_planar,check_line_graph";
}

inline std::string to_csv(const BoundReport& r) {
  if (!r.error.empty()) return r.graph6_id + ",,,,,,,,,,,error,,,,,,,,,,,,";
  auto opt_int = [](const std::optional<int>& v) { return v ? std::to_string(*v) : ""; };
  auto chk = [](const std::optional<TheoremCheck>& c) -> std::string {
    if (!c) return "";
    if (c->excluded) return "excluded";
    return to_string(c->outcome);
  };
  std::ostringstream s;
  s << r.graph6_id << ',' << r.n << ',' << r.m << ',' << r.cls.max_degree << ','
    << r.cls.degeneracy << ',' << (r.cls.girth ? std::to_string(*r.cls.girth) : "inf") << ','
    << r.cls.connected << ',' << r.cls.subcubic << ',' << r.cls.k23_subdivision_free << ','
    << r.cls.c5_separable << ',' << r.exact.value << ',' << to_string(r.exact.status) << ','
    << r.exact.nodes_explored << ',' << r.exact.elapsed.count() << ','
    << opt_int(r.weight_degenerate) << ',' << opt_int(r.weight_connected) << ','
    << opt_int(r.weight_subcubic) << ',' << chk(r.check_degenerate) << ','
    << chk(r.check_connected) << ',' << chk(r.check_subcubic) << ',' << chk(r.check_k23_45)
    << ',' << chk(r.check_k23_34) << ',' << chk(r.check_planar) << ','
    << (r.check_line_graph ? to_string(*r.check_line_graph) : "");
  return s.str();
}

struct ScanSummary {
  int graphs = 0, passed = 0, failed = 0, inconclusive = 0;
};

inline void tally(const BoundReport& r, ScanSummary& sum) {
  ++sum.graphs;
  if (!r.error.empty()) {
    ++sum.failed;
    return;
  }
  bool any_fail = false, any_open = false;
  auto consider = [&](const std::optional<TheoremCheck>& c) {
    if (!c || c->excluded) return;
    if (c->outcome == CheckOutcome::fail) any_fail = true;
    if (c->outcome == CheckOutcome::inconclusive) any_open = true;
  };
  consider(r.check_degenerate);
  consider(r.check_connected);
  consider(r.check_subcubic);
  consider(r.check_k23_45);
  consider(r.check_k23_34);
  consider(r.check_planar);
  if (r.check_line_graph) {
    if (*r.check_line_graph == CheckOutcome::fail) any_fail = true;
    if (*r.check_line_graph == CheckOutcome::inconclusive) any_open = true;
  }
  if (any_fail) ++sum.failed;
  else if (any_open) ++sum.inconclusive;
  else ++sum.passed;
}

// Scan a list of graph6 records. Reports come back in input order no matter
// how many workers run; graphs are independent, so workers share nothing.
inline std::vector<BoundReport> scan_corpus(const std::vector<std::string>& lines,
                                            const CheckSelection& sel,
                                            const SolveBudgets& budgets, int jobs) {
  std::vector<Graph> graphs(lines.size());
  for (size_t i = 0; i < lines.size(); ++i) {
    try {
      graphs[i] = parse_graph6(lines[i]);
    } catch (const parse_error& e) {
      throw parse_error(std::string(e.what()) + " at line " + std::to_string(i + 1), e.offset);
    }
  }
  std::vector<BoundReport> reports(lines.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= lines.size()) return;
      try {
        reports[i] = analyze_graph(graphs[i], lines[i], sel, budgets);
      } catch (const std::exception& e) {
        reports[i].graph6_id = lines[i];
        reports[i].error = e.what();
      }
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return reports;
}

}  // namespace erdf
