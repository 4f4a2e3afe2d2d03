#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "steiner/flow.hpp"
#include "steiner/generators.hpp"
#include "steiner/io.hpp"
#include "steiner/oracle.hpp"
#include "steiner/pipeline.hpp"

using namespace steiner;

namespace {

constexpr int kOk = 0, kIoError = 1, kInfeasible = 2;

std::uint64_t default_seed() {
  const char* s = std::getenv("STEINER_SEED");
  if (!s || !*s) return 1;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw InvalidInput("STEINER_SEED is not an unsigned integer");
  }
}

struct Input {
  std::string text_path, positional;
  void bind(CLI::App* app) {
    app->add_option("-t,--text", text_path, "graph file in text format");
    app->add_option("graph", positional, "graph file in text format");
  }
  GraphFile load() const {
    const std::string& p = text_path.empty() ? positional : text_path;
    if (p.empty()) throw InvalidInput("no graph file given");
    return parse_graph_text(read_file(p));
  }
};

Weight tau_of(const GraphFile& gf, Weight flag) {
  if (flag >= 0) return flag;
  if (gf.tau) return *gf.tau;
  throw InvalidInput("no target connectivity: pass --tau or put it in the header");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner connectivity augmentation and splitting-off"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0;
  bool seed_given = false;
  int base_case = SupremeOptions{}.base_case;
  app.add_option_function<std::uint64_t>(
         "--seed", [&](std::uint64_t s) { seed = s, seed_given = true; }, "random seed (default $STEINER_SEED or 1)")
      ->expected(1);
  app.add_option("--base-case", base_case, "terminal count handled by direct enumeration");
  auto options = [&] {
    PipelineOptions o;
    o.seed = seed_given ? seed : default_seed();
    o.supreme.base_case = base_case;
    return o;
  };

  Input in;
  Weight tau = -1;
  bool report = false;

  auto* aug = app.add_subcommand("augment", "minimum-weight augmentation to --tau");
  in.bind(aug);
  aug->add_option("--tau", tau, "target Steiner connectivity");
  aug->add_flag("--report", report, "print the phase report on stderr");

  int x = -1;
  auto* split = app.add_subcommand("splitoff", "split off every edge at a non-terminal vertex");
  in.bind(split);
  split->add_option("-x,--vertex", x, "vertex to split (default: the last one)");
  split->add_flag("--report", report, "print the phase report on stderr");

  std::string format = "json";
  auto* sup = app.add_subcommand("supreme", "supreme-set forest");
  in.bind(sup);
  sup->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "text"}));
  sup->add_option("--tau", tau, "also annotate recursive demands for this target");

  std::string solution;
  auto* ver = app.add_subcommand("verify", "check a solution file");
  in.bind(ver);
  ver->add_option("solution", solution, "JSON edge list")->required();
  ver->add_option("--tau", tau, "target Steiner connectivity");

  int oracle_limit = kDefaultOracleLimit;
  auto* orc = app.add_subcommand("oracle", "brute-force reference values (small graphs)");
  in.bind(orc);
  orc->add_option("--tau", tau, "target Steiner connectivity");
  orc->add_option("--oracle-limit", oracle_limit, "largest vertex count enumerated")
      ->check(CLI::Range(1, kHardOracleLimit));

  int bench_n = 100, bench_count = 3;
  auto* bench = app.add_subcommand("bench", "time the augmentation pipeline on random graphs");
  bench->add_option("-n", bench_n, "vertices per graph")->check(CLI::Range(3, 5000));
  bench->add_option("--count", bench_count, "graphs")->check(CLI::Range(1, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kIoError;
  }

  try {
    if (aug->parsed()) {
      auto gf = in.load();
      auto r = augment_pipeline(gf.graph, tau_of(gf, tau), options());
      std::cout << solution_to_json(r.edges) << "\n";
      if (report) std::cerr << report_to_json(r.report) << "\n";
    } else if (split->parsed()) {
      auto gf = in.load();
      auto r = splitoff_pipeline(gf.graph, x >= 0 ? x : gf.graph.vertex_count() - 1, options());
      std::cout << solution_to_json(r.edges) << "\n";
      if (report) std::cerr << report_to_json(r.report) << "\n";
    } else if (sup->parsed()) {
      auto gf = in.load();
      LaminarForest f = supreme_forest(gf.graph, options().seed, options().supreme);
      if (tau >= 0 || gf.tau) compute_rdem(f, tau_of(gf, tau));
      if (format == "dot") std::cout << forest_to_dot(f);
      else if (format == "text") std::cout << forest_to_text(f);
      else std::cout << forest_to_json(f) << "\n";
    } else if (ver->parsed()) {
      auto gf = in.load();
      auto f = parse_solution_json(read_file(solution));
      auto v = verify_solution(gf.graph, tau_of(gf, tau), f);
      nlohmann::json j;
      j["connectivity"] = v.connectivity;
      j["weight"] = f.total_weight();
      if (v.witness_cut) j["witness_cut"] = *v.witness_cut;
      std::cout << (v.ok ? "PASS" : "FAIL") << " " << v.reason << (v.reason.empty() ? "" : " ")
                << j.dump() << "\n";
      return v.ok ? kOk : kInfeasible;
    } else if (orc->parsed()) {
      auto gf = in.load();
      nlohmann::json j;
      nlohmann::json sets = nlohmann::json::array();
      for (const auto& s : extreme_sets_bruteforce(gf.graph, oracle_limit).sets)
        sets.push_back({{"members", s.members}, {"value", s.value}});
      j["extreme_sets"] = sets;
      j["connectivity"] = steiner_connectivity(gf.graph);
      if (tau >= 0 || gf.tau) {
        Weight t = tau_of(gf, tau);
        Weight k = optimal_external_value(gf.graph, t, oracle_limit);
        j["tau"] = t;
        j["external_value"] = k;
        j["augmentation_value"] = (k + 1) / 2;
      }
      std::cout << j.dump(2) << "\n";
    } else if (bench->parsed()) {
      std::mt19937_64 rng(options().seed);
      RandomSpec spec;
      spec.n_min = spec.n_max = bench_n;
      spec.extra = 4.0 / bench_n;
      for (int i = 0; i < bench_count; ++i) {
        Graph g = random_graph(rng, spec);
        Weight t = steiner_connectivity(g) + 2;
        auto start = std::chrono::steady_clock::now();
        auto r = augment_pipeline(g, t, options());
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        nlohmann::json j = nlohmann::json::parse(report_to_json(r.report));
        j["n"] = bench_n;
        j["seconds"] = secs;
        std::cout << j.dump() << "\n";
      }
    }
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kIoError;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kOk;
}
