#include "steiner/pipeline.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

#include "steiner/deg_chains.hpp"
#include "steiner/external_aug.hpp"
#include "steiner/flow.hpp"

namespace steiner {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int v) { return p[v] == v ? v : p[v] = find(p[v]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// Terminals grouped by connected component, groups ordered by lowest terminal.
std::vector<VertexSet> terminal_components(const Graph& g) {
  Dsu d(g.vertex_count());
  for (const auto& e : g.edges()) d.unite(e.u, e.v);
  std::map<int, VertexSet> by_root;
  for (int t : g.terminals()) by_root[d.find(t)].push_back(t);
  std::vector<VertexSet> out;
  for (auto& [r, ts] : by_root) out.push_back(ts);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> vertex_components(const Graph& g) {
  Dsu d(g.vertex_count());
  for (const auto& e : g.edges()) d.unite(e.u, e.v);
  std::map<int, VertexSet> by_root;
  for (int v = 0; v < g.vertex_count(); ++v) by_root[d.find(v)].push_back(v);
  std::vector<VertexSet> out;
  for (auto& [r, vs] : by_root) out.push_back(vs);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

AugmentResult augment_pipeline(const Graph& g, Weight tau, const PipelineOptions& opt) {
  AugmentResult res;
  AugmentReport& rep = res.report;
  rep.tau = tau;
  if (tau < 0) throw InvalidInput("target connectivity must be non-negative");
  const std::uint64_t calls0 = flow_invocations();
  if (g.terminals().size() < 2 || tau == 0) return res;
  rep.initial_connectivity = steiner_connectivity(g);
  if (rep.initial_connectivity >= tau) {
    rep.flow_calls = flow_invocations() - calls0;
    return res;
  }
  if (tau == 1) {
    auto comps = terminal_components(g);
    for (std::size_t i = 0; i + 1 < comps.size(); ++i) res.edges.add(comps[i][0], comps[i + 1][0], 1);
    // A tree is optimal here; ⌈k/2⌉ does not apply.
    rep.external_value = static_cast<Weight>(comps.size());
    rep.lower_bound = rep.external_value - 1;
  } else {
    LaminarForest f = supreme_forest(g, opt.seed, opt.supreme, &rep.supreme);
    compute_rdem(f, tau);
    ExternalSolution ext = external_augment(f, tau, g.vertex_count());
    rep.external_value = ext.total();
    ext = make_even(ext);
    ChainOutcome chains = run_chains(g, f, ext.beta, tau);
    rep.chain_weight = chains.edges.total_weight();
    rep.chain_events = chains.events;
    rep.chain_edge_updates = chains.edge_updates;
    res.edges = chains.edges;
    Rng rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    auto k = build_K(chains.forest, tau);
    EdgeAdditions last = augment_by_one(add_edges(g, chains.edges), k, tau, rng, opt.match);
    rep.match_weight = last.total_weight();
    res.edges.append(last);
    res.edges = res.edges.canonical();
    rep.lower_bound = (rep.external_value + 1) / 2;
  }
  rep.total = res.edges.total_weight();
  rep.flow_calls = flow_invocations() - calls0;
  ensure(rep.total == rep.lower_bound, "augmentation weight differs from ⌈k/2⌉");
  return res;
}

void check_splittable(const Graph& g, int x) {
  const int n = g.vertex_count();
  if (x < 0 || x >= n) throw InvalidInput("split vertex out of range");
  if (g.is_terminal(x)) throw InvalidInput("split vertex is a terminal");
  std::map<int, Weight> link;
  for (const auto& e : g.edges()) {
    if (e.u == x) link[e.v] += e.w;
    if (e.v == x) link[e.u] += e.w;
  }
  Weight deg = 0;
  for (auto [u, w] : link) deg += w;
  if (deg % 2) throw InvalidInput("split vertex has odd degree " + std::to_string(deg));
  if (deg > 0 && link.size() < 2)
    throw InvalidInput("split vertex has a single neighbour; splitting would only create self-loops");
  for (auto [u, w] : link)
    if (2 * w > deg)
      throw InvalidInput("neighbour " + std::to_string(u) +
                         " holds more than half of d(x); a complete splitting needs self-loops");
  for (auto [u, w] : link) {
    if (w != 1) continue;
    // A unit link is a cut edge iff x and u fall apart without it.
    Dsu d(n);
    bool skipped = false;
    for (const auto& e : g.edges()) {
      if (!skipped && ((e.u == x && e.v == u) || (e.v == x && e.u == u))) {
        skipped = true;
        continue;
      }
      d.unite(e.u, e.v);
    }
    if (d.find(x) != d.find(u))
      throw InvalidInput("edge (" + std::to_string(x) + "," + std::to_string(u) + ") is a cut edge");
  }
}

void complete_pairing(EdgeAdditions& f, std::vector<Weight> beta) {
  Weight s = 0;
  for (Weight b : beta) {
    if (b < 0) throw InvalidInput("negative budget");
    s += b;
  }
  if (s % 2) throw Infeasible("odd total budget");
  auto entries = f.canonical().entries();
  for (;;) {
    int v = static_cast<int>(std::max_element(beta.begin(), beta.end()) - beta.begin());
    if (beta.empty() || 2 * beta[v] <= s) break;
    // Subdividing (a, b) through v keeps every cut: one of (a, v), (v, b) crosses
    // whatever (a, b) crossed.
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const auto& e) { return e.u != v && e.v != v; });
    if (it == entries.end()) throw Infeasible("budget concentrated on one vertex");
    int a = it->u, b = it->v;
    if (--it->w == 0) entries.erase(it);
    entries.push_back({std::min(a, v), std::max(a, v), 1});
    entries.push_back({std::min(b, v), std::max(b, v), 1});
    beta[v] -= 2;
    s -= 2;
  }
  std::vector<int> units;
  for (int v = 0; v < static_cast<int>(beta.size()); ++v)
    for (Weight k = 0; k < beta[v]; ++k) units.push_back(v);
  const std::size_t half = units.size() / 2;
  EdgeAdditions out(entries);
  for (std::size_t i = 0; i < half; ++i) out.add(units[i], units[i + half], 1);
  f = out.canonical();
}

SplitoffResult splitoff_pipeline(const Graph& g_with_x, int x, const PipelineOptions& opt) {
  check_splittable(g_with_x, x);
  const std::uint64_t calls0 = flow_invocations();
  const int n = g_with_x.vertex_count() - 1;
  if (n < 1) throw InvalidInput("graph has no vertex besides x");
  auto to_new = [x](int v) { return v < x ? v : v - 1; };
  auto to_old = [x](int v) { return v < x ? v : v + 1; };
  std::vector<Weight> beta(n, 0);
  std::vector<Graph::Edge> edges;
  for (const auto& e : g_with_x.edges()) {
    if (e.u == x) beta[to_new(e.v)] += e.w;
    else if (e.v == x) beta[to_new(e.u)] += e.w;
    else edges.push_back({to_new(e.u), to_new(e.v), e.w});
  }
  VertexSet terms;
  for (int t : g_with_x.terminals()) terms.push_back(to_new(t));
  Graph g(n, std::move(edges), terms);

  SplitoffResult res;
  SplitoffReport& rep = res.report;
  for (Weight b : beta) rep.degree += b;
  const bool steiner = g.terminals().size() >= 2;
  rep.tau = steiner ? steiner_connectivity(g_with_x) : 0;
  const Weight tau = rep.tau;
  EdgeAdditions f;
  std::vector<Weight> left = beta;
  if (tau == 1) {
    // Thread a cycle through the terminal components; each has budget ≥ 2 as x has no cut edge.
    std::vector<std::vector<int>> units;
    for (const auto& comp : vertex_components(g)) {
      if (projection(g, comp).empty()) continue;
      std::vector<int> u;
      for (int v : comp)
        for (Weight k = 0; k < left[v] && u.size() < 2; ++k) u.push_back(v);
      ensure(u.size() == 2, "terminal component with budget below 2");
      units.push_back(u);
    }
    if (units.size() >= 2)
      for (std::size_t i = 0; i < units.size(); ++i) {
        int a = units[i][1], b = units[(i + 1) % units.size()][0];
        f.add(a, b, 1);
        --left[a], --left[b];
      }
    rep.chain_weight = f.total_weight();
  } else if (tau >= 2) {
    LaminarForest forest = supreme_forest(g, opt.seed, opt.supreme);
    compute_rdem(forest, tau);
    mark_critical(forest, tau);
    compute_l2_lhigh(forest);
    DegExternalResult ext = deg_external_augment(g, tau, beta, forest);
    rep.external_value = ext.solution.total();
    ChainOutcome chains = split_off_chains(g, forest, ext, tau);
    rep.chain_weight = chains.edges.total_weight();
    rep.chain_events = chains.events;
    f = chains.edges;
    for (int v = 0; v < n; ++v) left[v] -= ext.solution.beta[v] - chains.remaining[v];
    Rng rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    auto k = build_K(chains.forest, tau);
    auto m = deg_augment_by_one(add_edges(g, f), tau, left, k, rng, opt.check, opt.match);
    rep.match_weight = m.edges.total_weight();
    for (const auto& e : m.edges.entries()) left[e.u] -= e.w, left[e.v] -= e.w;
    f.append(m.edges);
  }
  const Weight before = f.total_weight();
  complete_pairing(f, left);
  rep.completion_weight = f.total_weight() - before;
  rep.total = f.total_weight();
  ensure(2 * rep.total == rep.degree, "split-off weight differs from d(x)/2");
  auto deg = f.degrees(n);
  for (int v = 0; v < n; ++v) ensure(deg[v] == beta[v], "split-off degree differs from the link weight");
  if (steiner) ensure(steiner_connectivity(add_edges(g, f)) >= tau, "split-off lost connectivity");
  for (const auto& e : f.entries()) res.edges.add(to_old(e.u), to_old(e.v), e.w);
  res.edges = res.edges.canonical();
  rep.flow_calls = flow_invocations() - calls0;
  return res;
}

std::string report_to_json(const AugmentReport& r) {
  nlohmann::json j;
  j["tau"] = r.tau;
  j["initial_connectivity"] = r.initial_connectivity;
  j["external_value"] = r.external_value;
  j["lower_bound"] = r.lower_bound;
  j["chain_weight"] = r.chain_weight;
  j["match_weight"] = r.match_weight;
  j["total"] = r.total;
  j["flow_calls"] = r.flow_calls;
  j["chain_events"] = r.chain_events;
  j["chain_edge_updates"] = r.chain_edge_updates;
  j["recursion_depth"] = r.supreme.max_depth;
  j["resamples"] = r.supreme.resamples;
  return j.dump();
}

std::string report_to_json(const SplitoffReport& r) {
  nlohmann::json j;
  j["tau"] = r.tau;
  j["degree"] = r.degree;
  j["external_value"] = r.external_value;
  j["chain_weight"] = r.chain_weight;
  j["match_weight"] = r.match_weight;
  j["completion_weight"] = r.completion_weight;
  j["total"] = r.total;
  j["flow_calls"] = r.flow_calls;
  j["chain_events"] = r.chain_events;
  return j.dump();
}

}  // namespace steiner
