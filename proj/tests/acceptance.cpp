#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "steiner/deg_chains.hpp"
#include "steiner/flow.hpp"
#include "steiner/generators.hpp"
#include "steiner/match_one.hpp"
#include "steiner/oracle.hpp"
#include "steiner/pipeline.hpp"
#include "support/chain_checks.hpp"
#include "support/deg_setup.hpp"

using namespace steiner;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Corpus {
  std::vector<Graph> graphs;
  std::vector<Weight> lambda;
};

Corpus make_corpus(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Corpus c;
  for (int i = 0; i < count; ++i) {
    Graph g = random_graph(rng, {.n_min = 3, .n_max = 10, .max_w = 5});
    c.lambda.push_back(steiner_connectivity(g));
    c.graphs.push_back(std::move(g));
  }
  return c;
}

using Shape = std::set<std::pair<VertexSet, Weight>>;

Shape shape(const LaminarForest& f) {
  Shape s;
  for (int v : f.live_nodes()) s.insert({f.node(v).terminals, f.node(v).cut_value});
  return s;
}

LaminarForest prepared(const Graph& g, Weight tau, std::uint64_t seed) {
  return deg_setup::prepared_forest(g, tau, seed);
}

Outcome supreme_structure(const Corpus& c) {
  auto t0 = Clock::now();
  int match = 0, recovered = 0;
  const int total = static_cast<int>(c.graphs.size());
  for (int i = 0; i < total; ++i) {
    Shape want = shape(supreme_sets_bruteforce(c.graphs[i]));
    // Small base cases force the recursive split on these sizes.
    SupremeOptions opt{.base_case = 2 + i % 7};
    if (shape(supreme_forest(c.graphs[i], 1000 + i, opt)) == want) {
      ++match;
      continue;
    }
    recovered += shape(supreme_forest(c.graphs[i], 0x5eed0000ULL + i, opt)) == want;
  }
  double secs = seconds_since(t0);
  int mismatched = total - match;
  std::ostringstream d;
  d << match << "/" << total << " match, " << recovered << "/" << mismatched << " recovered on reseed, "
    << secs << " s";
  return {match >= 0.99 * total && recovered == mismatched && secs < 60, d.str()};
}

Outcome optimal_value(const Corpus& c) {
  int runs = 0, bad = 0;
  for (std::size_t i = 0; i < c.graphs.size(); ++i)
    for (Weight tau = c.lambda[i] + 1; tau <= c.lambda[i] + 3; ++tau) {
      ++runs;
      auto r = augment_pipeline(c.graphs[i], tau, {.seed = i});
      Weight want = (optimal_external_value(c.graphs[i], tau) + 1) / 2;
      bad += r.edges.total_weight() != want || !verify_solution(c.graphs[i], tau, r.edges).ok;
    }
  return {bad == 0, std::to_string(runs - bad) + "/" + std::to_string(runs) + " optimal and verified"};
}

Outcome no_new_extreme(const Corpus& c) {
  std::mt19937_64 rng(31);
  long batches = 0, violations = 0;
  for (std::size_t i = 0; i < c.graphs.size(); ++i) {
    const Graph& g = c.graphs[i];
    auto before = chain_checks::extreme_members(g);
    auto observe = [&](const ChainEvent& ev) {
      ++batches;
      violations += !chain_checks::no_new_extreme(g, before, ev.state.output());
    };
    for (Weight tau = c.lambda[i] + 1; tau <= c.lambda[i] + 3; ++tau) {
      auto f = prepared(g, tau, i);
      auto ext = make_even(external_augment(f, tau, g.vertex_count()));
      run_chains(g, f, ext.beta, tau, observe);
      auto beta = deg_setup::feasible_budget(g, tau, f, rng);
      split_off_chains(g, f, deg_external_augment(g, tau, beta, f), tau, observe);
    }
  }
  return {violations == 0, std::to_string(batches) + " batches, " + std::to_string(violations) + " violations"};
}

Outcome splitting_off() {
  std::mt19937_64 rng(37);
  int done = 0, bad = 0, attempts = 0;
  while (done < 150 && attempts < 2000) {
    ++attempts;
    Graph g = random_graph(rng, {.n_min = 3, .n_max = 9, .max_w = 4});
    auto star = random_star(rng, g.vertex_count());
    Graph gx = attach(g, star);
    const int x = g.vertex_count();
    try {
      check_splittable(gx, x);
    } catch (const InvalidInput&) {
      continue;
    }
    ++done;
    Weight tau = steiner_connectivity(gx);
    Weight dx = 0;
    for (Weight w : star) dx += w;
    auto r = splitoff_pipeline(gx, x, {.seed = static_cast<std::uint64_t>(done)});
    auto deg = r.edges.degrees(x);
    bool ok = 2 * r.edges.total_weight() == dx && steiner_connectivity(add_edges(g, r.edges)) >= tau;
    for (int v = 0; v < x; ++v) ok = ok && deg[v] == star[v];
    bad += !ok;
  }
  return {done >= 100 && bad == 0, std::to_string(done - bad) + "/" + std::to_string(done) + " exact splittings"};
}

Outcome matching_probability() {
  std::ostringstream d;
  bool pass = true;
  for (int n : {8, 16, 32}) {
    Graph g = [&] {
      std::vector<Graph::Edge> e;
      std::vector<int> t;
      for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1}), t.push_back(i);
      return Graph(n, e, t);
    }();
    Rng rng(41 + n);
    const int trials = 1000;
    int ok = 0;
    for (int i = 0; i < trials; ++i) {
      auto pairs = sample_phase_matching(n, rng);
      std::vector<char> used(n, 0);
      EdgeAdditions m;
      for (auto [a, b] : pairs) m.add(a, b, 1), used[a] = used[b] = 1;
      std::vector<int> star;
      for (int v = 0; v < n; ++v)
        if (!used[v]) star.push_back(v);
      ok += is_feasible_partial(g, star, m, 3);
    }
    double p = static_cast<double>(ok) / trials;
    pass = pass && p >= 0.28;
    d << "C" << n << "=" << p << " ";
  }
  return {pass, d.str()};
}

Outcome scheduler_differential() {
  std::mt19937_64 rng(43);
  int runs = 0, events = 0, lazy = 0, expiry = 0;
  for (int it = 0; runs < 1000; ++it) {
    Graph g = random_graph(rng, {.n_min = 3, .n_max = 8, .max_w = 4, .extra = 0.15 + 0.1 * (it % 3)});
    Weight tau = steiner_connectivity(g) + 1 + static_cast<Weight>(rng() % 5);
    auto f = prepared(g, tau, it);
    chain_checks::Audit a;
    if (it % 2 == 0) {
      auto ext = make_even(external_augment(f, tau, g.vertex_count()));
      a = chain_checks::audit(unconstrained_scheduler(g, f, ext.beta, tau), g);
    } else {
      auto beta = deg_setup::feasible_budget(g, tau, f, rng);
      a = chain_checks::audit(deg_scheduler(g, f, deg_external_augment(g, tau, beta, f), tau), g);
    }
    ++runs;
    events += a.events;
    lazy += a.lazy_mismatches;
    expiry += a.expiry_mismatches;
  }
  std::ostringstream d;
  d << runs << " runs, " << events << " batches, " << lazy << " value and " << expiry << " expiry mismatches";
  return {lazy == 0 && expiry == 0, d.str()};
}

Outcome degree_external(const Corpus& c) {
  std::mt19937_64 rng(47);
  int runs = 0, bad = 0, paths = 0;
  for (std::size_t i = 0; i < c.graphs.size(); ++i) {
    const Graph& g = c.graphs[i];
    for (Weight tau = c.lambda[i] + 1; tau <= c.lambda[i] + 3; ++tau) {
      auto f = prepared(g, tau, i);
      auto beta = deg_setup::feasible_budget(g, tau, f, rng);
      auto r = deg_external_augment(g, tau, beta, f);
      Weight rdem_sum = 0;
      for (int root : f.roots()) rdem_sum += f.node(root).rdem;
      bool ok = r.solution.total() == rdem_sum && rdem_sum == optimal_external_value(g, tau);
      for (int p : r.order) ok = ok && r.flow_values[p] == tau;
      paths += static_cast<int>(r.order.size());
      ++runs;
      bad += !ok;
    }
  }
  return {bad == 0, std::to_string(runs - bad) + "/" + std::to_string(runs) + " optimal, " + std::to_string(paths) +
                        " paths at flow tau"};
}

Outcome call_budget() {
  std::mt19937_64 rng(53);
  std::ostringstream d;
  bool pass = true;
  for (int n : {50, 100, 200}) {
    Graph g = random_graph(rng, {.n_min = n, .n_max = n, .max_w = 5, .extra = 3.0 / n,
                                 .min_terminals = n / 2});
    Weight tau = steiner_connectivity(g) + 2;
    reset_flow_invocations();
    auto t0 = Clock::now();
    auto r = augment_pipeline(g, tau, {.seed = static_cast<std::uint64_t>(n)});
    double secs = seconds_since(t0);
    double ln = std::log(static_cast<double>(n));
    double budget = 50.0 * n * ln * ln * ln;
    const auto k = static_cast<double>(g.terminals().size());
    double depth_cap = 25.0 * std::log(k) + 5;
    bool ok = static_cast<double>(r.report.flow_calls) <= budget && r.report.supreme.max_depth <= depth_cap &&
              secs < 10 && verify_solution(g, tau, r.edges).ok;
    pass = pass && ok;
    d << "n=" << n << ": " << r.report.flow_calls << "/" << static_cast<long long>(budget) << " calls, depth "
      << r.report.supreme.max_depth << "/" << depth_cap << ", " << secs << " s; ";
  }
  return {pass, d.str()};
}

Outcome frank_baseline(const Corpus& c) {
  int runs = 0, bad = 0;
  for (std::size_t i = 0; i < c.graphs.size(); ++i)
    for (Weight tau = c.lambda[i] + 1; tau <= c.lambda[i] + 3; ++tau) {
      const Graph& g = c.graphs[i];
      auto fr = frank_greedy_external(g, tau);
      ++runs;
      bad += steiner_connectivity(with_external_vertex(g, fr.beta)) < tau ||
             fr.total() > 2 * optimal_augmentation_value(g, tau) + 1;
    }
  return {bad == 0, std::to_string(runs - bad) + "/" + std::to_string(runs) + " feasible within 2 opt + 1"};
}

Outcome exponential_family() {
  std::ostringstream d;
  bool pass = true;
  for (int n : {5, 6, 7}) {
    std::vector<Graph::Edge> e;
    for (int i = 1; i + 1 < n; ++i) e.push_back({0, i, 1});
    e.push_back({0, n - 1, 3});
    Graph g(n, e, {0, n - 1});
    auto fam = extreme_sets_bruteforce(g);
    bool ok = fam.sets.size() == (std::size_t{1} << (n - 2)) + 1;
    for (const auto& x : fam.sets) {
      if (x.members == CutSide{n - 1}) continue;
      auto extra = static_cast<Weight>(x.members.size()) - 1;
      ok = ok && contains(x.members, 0) && x.value == n + 1 - extra;
    }
    pass = pass && ok;
    d << "n=" << n << ": " << fam.sets.size() << " sets; ";
  }
  return {pass, d.str()};
}

}  // namespace

int main() {
  Corpus corpus = make_corpus(220, 2024);
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"supreme structure equals oracle", [&] { return supreme_structure(corpus); }},
      {"augmentation weight is optimal", [&] { return optimal_value(corpus); }},
      {"chains create no extreme sets", [&] { return no_new_extreme(corpus); }},
      {"splitting off is exact", splitting_off},
      {"phase matching feasibility", matching_probability},
      {"lazy scheduler matches eager", scheduler_differential},
      {"degree-constrained external optimum", [&] { return degree_external(corpus); }},
      {"max-flow call budget", call_budget},
      {"greedy external baseline", [&] { return frank_baseline(corpus); }},
      {"exponential extreme family", exponential_family},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
