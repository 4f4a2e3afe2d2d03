#include "steiner/deg_external.hpp"

#include <algorithm>

namespace steiner {

bool check_feasibility(const Graph& g, Weight tau, const std::vector<Weight>& beta) {
  if (g.terminals().size() < 2) return true;
  std::vector<Weight> star(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count() && v < static_cast<int>(beta.size()); ++v) star[v] = beta[v];
  return steiner_connectivity(with_external_vertex(g, star)) >= tau;
}

namespace {

// rdem(R_i) - Σ_{B(R_i)} rdem for each prefix R_1..R_i of the path.
std::vector<Weight> prefix_deltas(const LaminarForest& f, const HeavyPath& p) {
  std::vector<Weight> out;
  Weight hanging = 0;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const ForestNode& x = f.node(p.nodes[i]);
    for (int c : x.children)
      if (i == 0 || c != p.nodes[i - 1]) hanging += f.node(c).rdem;
    out.push_back(x.rdem - hanging);
  }
  return out;
}

}  // namespace

Weight path_delta(const LaminarForest& f, const HeavyPath& p) {
  auto d = prefix_deltas(f, p);
  for (std::size_t i = 1; i < d.size(); ++i) ensure(d[i] >= d[i - 1], "path capacity decreases upward");
  ensure(d.back() >= 0, "negative path capacity");
  return d.back();
}

HNetwork build_H(const Graph& g, const std::vector<Weight>& beta, const std::vector<Weight>& ext,
                 const LaminarForest& f, const HeavyPath& p) {
  const int n = g.vertex_count();
  const ForestNode& head = f.node(p.head());
  if (!head.vertex_set) throw InvalidInput("heavy path head has no vertex set");
  HNetwork h;
  h.delta = path_delta(f, p);
  h.sink = h.net.add_node();
  h.label.assign(n, h.sink);
  std::vector<int> block;
  VertexSet below;
  for (int r : p.nodes) {
    int b = h.net.add_node();
    block.push_back(b);
    for (int t : set_difference(f.node(r).terminals, below)) h.label[t] = b;
    below = f.node(r).terminals;
  }
  for (int v : *head.vertex_set)
    if (!g.is_terminal(v)) h.label[v] = h.net.add_node();
  h.y = h.net.add_node();
  h.source = block.front();
  for (const auto& e : g.edges())
    if (h.label[e.u] != h.label[e.v]) h.net.add_arc(h.label[e.u], h.label[e.v], e.w, e.w);
  h.to_y.assign(n, -1);
  for (int u = 0; u < n; ++u) {
    if (h.label[u] == h.sink) continue;
    Weight bu = u < static_cast<int>(beta.size()) ? beta[u] : 0;
    if (ext[u] > 0) h.net.add_arc(h.label[u], h.sink, ext[u], ext[u]);
    ensure(bu >= ext[u], "external weight exceeds the budget");
    h.to_y[u] = h.net.add_arc(h.label[u], h.y, bu - ext[u]);
  }
  for (std::size_t i = 1; i < block.size(); ++i) h.net.add_infinite_arc(block[i], block[i - 1]);
  h.net.add_arc(h.y, h.sink, h.delta);
  h.net.add_source(h.source);
  h.net.add_sink(h.sink);
  return h;
}

Weight process_path(const Graph& g, const std::vector<Weight>& beta, std::vector<Weight>& ext,
                    const LaminarForest& f, const HeavyPathDecomposition& hld, int path,
                    std::vector<DegAssignment>* log) {
  const HeavyPath& p = hld.paths[path];
  HNetwork h = build_H(g, beta, ext, f, p);
  auto res = max_flow(h.net);
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (h.to_y[u] < 0) continue;
    Weight add = res.arc_flow[h.to_y[u]];
    if (add <= 0) continue;
    ext[u] += add;
    if (log) log->push_back({u, add, path, p.level});
  }
  return res.value;
}

DegExternalResult deg_external_augment(const Graph& g, Weight tau, const std::vector<Weight>& beta,
                                       const LaminarForest& f) {
  DegExternalResult r;
  const int n = g.vertex_count();
  r.solution.beta.assign(n, 0);
  r.hld = heavy_light(f, true);
  const int k = static_cast<int>(r.hld.paths.size());
  r.flow_values.assign(k, 0);
  r.deltas.assign(k, 0);
  for (int i = 0; i < k; ++i) r.order.push_back(i);
  std::sort(r.order.begin(), r.order.end(), [&](int a, int b) {
    const auto &pa = r.hld.paths[a], &pb = r.hld.paths[b];
    return std::pair(-pa.depth, pa.head()) < std::pair(-pb.depth, pb.head());
  });
  for (int i : r.order) {
    r.deltas[i] = path_delta(f, r.hld.paths[i]);
    r.flow_values[i] = process_path(g, beta, r.solution.beta, f, r.hld, i, &r.assignments);
    if (r.flow_values[i] < tau) throw Infeasible("degree budget cannot reach the target");
    ensure(r.flow_values[i] == tau, "heavy path flow exceeds the target");
  }
  Weight want = 0;
  for (int root : f.roots()) want += f.node(root).rdem;
  ensure(r.solution.total() == want, "external weight differs from the root demand sum");
  return r;
}

}  // namespace steiner
