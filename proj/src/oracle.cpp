#include "steiner/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

#include "steiner/flow.hpp"

namespace steiner {

namespace {

using Mask = std::uint32_t;

void check_size(const Graph& g, int limit) {
  limit = std::min(limit, kHardOracleLimit);
  if (g.vertex_count() > limit) throw SizeLimitExceeded("graph exceeds the oracle size limit");
}

Mask terminal_mask(const Graph& g) {
  Mask m = 0;
  for (int t : g.terminals()) m |= Mask{1} << t;
  return m;
}

CutSide members(Mask m, int n) {
  CutSide r;
  for (int v = 0; v < n; ++v)
    if (m >> v & 1) r.push_back(v);
  return r;
}

Mask to_bits(const VertexSet& s) {
  Mask m = 0;
  for (int v : s) m |= Mask{1} << v;
  return m;
}

}  // namespace

std::vector<Weight> all_cut_values(const Graph& g, int limit) {
  check_size(g, limit);
  const int n = g.vertex_count();
  std::vector<Weight> d(std::size_t{1} << n, 0);
  for (Mask x = 0; x < d.size(); ++x)
    for (const auto& e : g.edges())
      if ((x >> e.u & 1) != (x >> e.v & 1)) d[x] += e.w;
  return d;
}

ExtremeFamily extreme_sets_bruteforce(const Graph& g, int limit) {
  const int n = g.vertex_count();
  auto d = all_cut_values(g, limit);
  const Mask tm = terminal_mask(g);
  const Weight inf = std::numeric_limits<Weight>::max();
  auto steiner = [&](Mask x) { return (x & tm) != 0 && (x & tm) != tm; };
  // below[X] = min d(Y) over Steiner Y ⊊ X.
  std::vector<Weight> below(d.size(), inf);
  for (Mask x = 1; x < d.size(); ++x)
    for (int v = 0; v < n; ++v) {
      if (!(x >> v & 1)) continue;
      Mask y = x & ~(Mask{1} << v);
      below[x] = std::min(below[x], below[y]);
      if (steiner(y)) below[x] = std::min(below[x], d[y]);
    }
  ExtremeFamily fam;
  for (Mask x = 1; x < d.size(); ++x)
    if (steiner(x) && below[x] > d[x]) fam.sets.push_back({members(x, n), d[x]});
  return fam;
}

LaminarForest supreme_sets_bruteforce(const Graph& g, int limit) {
  const int n = g.vertex_count();
  auto fam = extreme_sets_bruteforce(g, limit);
  std::map<VertexSet, Mask> by_projection;
  for (const auto& x : fam.sets) by_projection[projection(g, x.members)] |= to_bits(x.members);
  std::vector<ForestNode> nodes;
  for (const auto& [r, m] : by_projection) {
    ForestNode node;
    node.terminals = r;
    node.vertex_set = members(m, n);
    node.cut_value = cut_value(g, *node.vertex_set);
    nodes.push_back(std::move(node));
  }
  return LaminarForest::from_nodes(std::move(nodes));
}

Weight optimal_external_value(const Graph& g, Weight tau, int limit) {
  LaminarForest f = supreme_sets_bruteforce(g, limit);
  compute_rdem(f, tau);
  Weight k = 0;
  for (int r : f.roots()) k += f.node(r).rdem;
  return k;
}

Weight optimal_augmentation_value(const Graph& g, Weight tau, bool cross_check, int limit) {
  Weight k = optimal_external_value(g, tau, limit);
  Weight value = (k + 1) / 2;
  if (cross_check) {
    auto found = exhaustive_augmentation_value(g, tau, value);
    ensure(found && *found == value, "exhaustive search disagrees with the lower bound");
  }
  return value;
}

std::optional<Weight> exhaustive_augmentation_value(const Graph& g, Weight tau, Weight max_weight) {
  const int n = g.vertex_count();
  if (n > 7) throw SizeLimitExceeded("exhaustive augmentation search is limited to 7 vertices");
  auto d = all_cut_values(g, n);
  const Mask tm = terminal_mask(g);
  std::vector<Mask> steiner;
  for (Mask x = 1; x < d.size(); ++x)
    if ((x & tm) != 0 && (x & tm) != tm) steiner.push_back(x);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::vector<Weight> cur(d.size(), 0);
  auto ok = [&] {
    for (Mask x : steiner)
      if (d[x] + cur[x] < tau) return false;
    return true;
  };
  // Multisets of `left` more pairs drawn from index `from` onward.
  std::function<bool(std::size_t, Weight)> search = [&](std::size_t from, Weight left) {
    if (left == 0) return ok();
    for (std::size_t i = from; i < pairs.size(); ++i) {
      auto [u, v] = pairs[i];
      for (Mask x : steiner)
        if ((x >> u & 1) != (x >> v & 1)) ++cur[x];
      bool hit = search(i, left - 1);
      for (Mask x : steiner)
        if ((x >> u & 1) != (x >> v & 1)) --cur[x];
      if (hit) return true;
    }
    return false;
  };
  for (Weight w = 0; w <= max_weight; ++w)
    if (search(0, w)) return w;
  return std::nullopt;
}

Weight min_cut_bruteforce(const Graph& g, const VertexSet& a, const VertexSet& b, int limit) {
  auto d = all_cut_values(g, limit);
  Mask am = to_bits(a), bm = to_bits(b);
  Weight best = std::numeric_limits<Weight>::max();
  for (Mask x = 0; x < d.size(); ++x)
    if ((x & am) == am && (x & bm) == 0) best = std::min(best, d[x]);
  return best;
}

ExternalSolution frank_greedy_external(const Graph& g, Weight tau) {
  const int n = g.vertex_count();
  std::vector<Weight> star(n, tau);
  for (int v = 0; v < n; ++v) {
    star[v] = 0;
    Weight lambda = steiner_connectivity(with_external_vertex(g, star));
    star[v] = std::max<Weight>(0, tau - lambda);
  }
  return {star};
}

Verdict verify_solution(const Graph& g, Weight tau, const EdgeAdditions& f,
                        const std::optional<std::vector<Weight>>& beta) {
  Verdict v;
  auto deg = f.degrees(g.vertex_count());
  if (beta) {
    for (int u = 0; u < g.vertex_count(); ++u) {
      Weight cap = u < static_cast<int>(beta->size()) ? (*beta)[u] : 0;
      if (deg[u] > cap) {
        v.reason = "degree budget exceeded at vertex " + std::to_string(u);
        v.witness_vertex = u;
        return v;
      }
    }
  }
  if (g.terminals().size() < 2) {
    v.ok = true;
    v.reason = "fewer than two terminals";
    return v;
  }
  auto cut = steiner_min_cut(add_edges(g, f));
  v.connectivity = cut.value;
  if (cut.value < tau) {
    v.reason = "Steiner cut of value " + std::to_string(cut.value) + " < " + std::to_string(tau);
    v.witness_cut = cut.side;
    return v;
  }
  v.ok = true;
  return v;
}

}  // namespace steiner
