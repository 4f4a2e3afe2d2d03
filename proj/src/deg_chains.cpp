#include "steiner/deg_chains.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace steiner {

int representative_leaf(const HeavyPathDecomposition& hld, const DegAssignment& a) {
  const HeavyPath& p = hld.paths.at(a.path);
  return p.level == PathLevel::kUpper ? p.leaf() : p.contracted_into;
}

DegChainSetup init_state(const LaminarForest& f, const DegExternalResult& ext) {
  DegChainSetup s;
  std::vector<char> keep(f.size(), 0);
  for (int v : f.live_nodes())
    if (f.node(v).in_l2)
      for (int u = v; u >= 0 && !keep[u]; u = f.node(u).parent) keep[u] = 1;
  s.forest = f.restricted(keep);
  s.protected_nodes.assign(f.size(), 0);
  for (int v : f.live_nodes())
    if (f.node(v).in_l2) s.protected_nodes[v] = 1;
  std::map<std::pair<int, int>, Weight> by_key;
  for (const auto& a : ext.assignments) by_key[{a.path, a.vertex}] += a.weight;
  using Key = std::tuple<int, int, int, int>;
  std::vector<std::pair<Key, VacancyBucket>> rows;
  for (const auto& [key, w] : by_key) {
    auto [path, vertex] = key;
    const HeavyPath& p = ext.hld.paths[path];
    int leaf = representative_leaf(ext.hld, {vertex, w, path, p.level});
    ensure(leaf >= 0 && s.protected_nodes[leaf], "representative leaf outside L2");
    rows.push_back({{p.level == PathLevel::kLower ? 0 : 1, p.depth, vertex, path}, {vertex, leaf, w}});
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [key, b] : rows) s.buckets.push_back(b);
  return s;
}

ChainScheduler deg_scheduler(const Graph& g, const LaminarForest& f, const DegExternalResult& ext,
                             Weight tau) {
  DegChainSetup s = init_state(f, ext);
  return ChainScheduler(std::move(s.forest), std::move(s.protected_nodes), std::move(s.buckets), tau,
                        g.vertex_count());
}

ChainOutcome split_off_chains(const Graph& g, const LaminarForest& f, const DegExternalResult& ext,
                              Weight tau, const ChainObserver& observer) {
  ChainScheduler sched = deg_scheduler(g, f, ext, tau);
  sched.run(observer);
  ChainOutcome out;
  out.edges = sched.output().canonical();
  out.forest = sched.snapshot();
  out.remaining = sched.remaining_by_vertex();
  out.events = sched.events();
  out.edge_updates = sched.edge_updates();
  return out;
}

}  // namespace steiner
