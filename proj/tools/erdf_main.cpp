#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "erdf/audit.hpp"
#include "erdf/families.hpp"
#include "erdf/graph6.hpp"
#include "erdf/report.hpp"

namespace {

constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;

struct ResolvedInput {
  erdf::Graph graph;
  std::string id;  // family string or the graph6 record
};

// A positional input is a family string when it parses as one, otherwise a
// graph6 record. Explicit --family / --input flags override.
ResolvedInput resolve_input(const std::string& positional, const std::string& family_flag,
                            const std::string& g6_flag) {
  if (!family_flag.empty()) {
    auto spec = erdf::parse_family(family_flag);
    if (!spec) throw erdf::parse_error("unrecognized family: " + family_flag, 0);
    return {erdf::generate(*spec).graph, family_flag};
  }
  if (!g6_flag.empty()) return {erdf::parse_graph6(g6_flag), g6_flag};
  if (positional.empty()) throw erdf::parse_error("no input given", 0);
  if (auto spec = erdf::parse_family(positional))
    return {erdf::generate(*spec).graph, positional};
  return {erdf::parse_graph6(positional), positional};
}

std::vector<std::string> read_corpus(const std::string& path) {
  std::vector<std::string> lines;
  std::istream* in = &std::cin;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::runtime_error("cannot open corpus file: " + path);
    in = &file;
  }
  std::string line;
  while (std::getline(*in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

int default_jobs() {
  if (const char* env = std::getenv("ERDF_JOBS")) {
    int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge Roman domination: exact solver, constructive bounds, theorem audits"};
  app.require_subcommand(1);
  app.fallthrough();  // budget flags are accepted after the subcommand too

  long long time_ms = 10'000, nodes = 10'000'000;
  app.add_option("--time-ms", time_ms, "solver time budget per graph (ms)")->capture_default_str();
  app.add_option("--nodes", nodes, "solver node budget per graph")->capture_default_str();

  std::string positional, family_flag, input_flag;

  auto* solve = app.add_subcommand("solve", "exact gamma'_R of one graph");
  solve->add_option("graph", positional, "graph6 record or family string (e.g. grt:2,4)");
  solve->add_option("--family", family_flag, "family string");
  solve->add_option("--input", input_flag, "graph6 record");

  std::string algo = "degenerate";
  auto* bound = app.add_subcommand("bound", "constructive bound via the reduction engine");
  bound->add_option("graph", positional, "graph6 record or family string");
  bound->add_option("--family", family_flag, "family string");
  bound->add_option("--input", input_flag, "graph6 record");
  bound->add_option("--algo", algo, "degenerate | connected | subcubic")->capture_default_str();

  std::string corpus_path, checks_csv = "degenerate,connected,subcubic,k23";
  int jobs = default_jobs();
  bool csv = false;
  auto* scan = app.add_subcommand("scan", "per-graph bound reports over a graph6 corpus");
  scan->add_option("corpus", corpus_path, "corpus file of graph6 lines, or - for stdin")
      ->required();
  scan->add_option("--checks", checks_csv, "comma list: degenerate,connected,subcubic,k23,planar,linegraph,all")
      ->capture_default_str();
  scan->add_option("--jobs", jobs, "worker threads (default: ERDF_JOBS or 1)");
  scan->add_flag("--csv", csv, "CSV output instead of JSON lines");

  std::string target;
  auto* audit = app.add_subcommand("audit", "theorem and conjecture audits on built-in corpora");
  audit->add_option("target", target, "conjecture1 | conjecture2_empirical | girth_conjecture | k23")
      ->required();

  bool g6_only = false;
  auto* family = app.add_subcommand("family", "generate a parameterized family instance");
  family->add_option("spec", positional, "family string, e.g. kbip:3,3")->required();
  family->add_flag("--g6", g6_only, "print only the graph6 record");

  CLI11_PARSE(app, argc, argv);

  erdf::SolveBudgets budgets;
  budgets.time_limit = std::chrono::milliseconds(time_ms);
  budgets.node_limit = nodes;

  try {
    if (solve->parsed()) {
      auto in = resolve_input(positional, family_flag, input_flag);
      auto result = erdf::exact_gamma(in.graph, budgets);
      std::cout << erdf::to_json(in.graph, result).dump() << "\n";
      return 0;
    }

    if (bound->parsed()) {
      auto in = resolve_input(positional, family_flag, input_flag);
      erdf::ReductionTrace trace;
      if (algo == "degenerate") {
        trace = erdf::reduce_degenerate(in.graph);
      } else if (algo == "connected") {
        if (!in.graph.is_connected()) {
          std::cerr << "hypothesis violated: the connected-graph bound needs a connected input\n";
          return kExitUsage;
        }
        if (in.graph.max_degree() < 1) {
          std::cerr << "hypothesis violated: the connected-graph bound needs maximum degree >= 1\n";
          return kExitUsage;
        }
        trace = erdf::reduce_max_degree_connected(in.graph);
      } else if (algo == "subcubic") {
        if (in.graph.max_degree() > 3) {
          std::cerr << "hypothesis violated: the subcubic bound needs maximum degree <= 3\n";
          return kExitUsage;
        }
        trace = erdf::reduce_subcubic(in.graph);
      } else {
        std::cerr << "unknown algorithm: " << algo << "\n";
        return kExitUsage;
      }
      auto j = erdf::to_json(in.graph, trace);
      j["input"] = in.id;
      j["algorithm"] = algo;
      std::cout << j.dump() << "\n";
      return erdf::leq(trace.weight, trace.claimed_bound) ? 0 : kExitChecksFailed;
    }

    if (scan->parsed()) {
      auto sel = erdf::CheckSelection::parse(checks_csv);
      auto lines = read_corpus(corpus_path);
      auto reports = erdf::scan_corpus(lines, sel, budgets, jobs);
      erdf::ScanSummary summary;
      if (csv) std::cout << erdf::csv_header() << "\n";
      for (const auto& rep : reports) {
        erdf::tally(rep, summary);
        std::cout << (csv ? erdf::to_csv(rep) : erdf::to_json(rep).dump()) << "\n";
      }
      nlohmann::json sj{{"summary",
                         {{"graphs", summary.graphs},
                          {"pass", summary.passed},
                          {"fail", summary.failed},
                          {"timeout", summary.inconclusive}}}};
      if (csv)
        std::cerr << sj.dump() << "\n";
      else
        std::cout << sj.dump() << "\n";
      return summary.failed > 0 ? kExitChecksFailed : 0;
    }

    if (audit->parsed()) {
      erdf::AuditResult result;
      if (target == "conjecture1") result = erdf::audit_conjecture1_sweep(budgets);
      else if (target == "conjecture2_empirical") result = erdf::audit_conjecture2_empirical(budgets);
      else if (target == "girth_conjecture") result = erdf::audit_girth_conjecture(budgets);
      else if (target == "k23") result = erdf::audit_k23(budgets);
      else {
        std::cerr << "unknown audit target: " << target << "\n";
        return kExitUsage;
      }
      std::cout << result.report.dump(2) << "\n";
      return result.violation ? kExitChecksFailed : 0;
    }

    if (family->parsed()) {
      auto spec = erdf::parse_family(positional);
      if (!spec) {
        std::cerr << "unrecognized family: " << positional << "\n";
        return kExitUsage;
      }
      auto inst = erdf::generate(*spec);
      std::string record = erdf::emit_graph6(inst.graph);
      if (g6_only) {
        std::cout << record << "\n";
        return 0;
      }
      auto witness = erdf::witness_labeling(*spec);
      nlohmann::json j{{"family", erdf::format_family(*spec)},
                       {"n", inst.graph.vertex_count()},
                       {"m", inst.graph.edge_count()},
                       {"graph6", record},
                       {"closed_form", erdf::closed_form(*spec)},
                       {"witness_weight", erdf::weight(witness)},
                       {"witness_valid", erdf::is_valid_erdf(inst.graph, witness)},
                       {"witness", erdf::labeling_json(inst.graph, witness)}};
      std::cout << j.dump() << "\n";
      return 0;
    }
  } catch (const erdf::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
