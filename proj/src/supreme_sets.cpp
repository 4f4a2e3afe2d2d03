#include "steiner/supreme_sets.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "steiner/flow.hpp"

namespace steiner {

namespace {

struct LaminarShape {
  std::vector<int> order;   // indices by nonincreasing size: parents first
  std::vector<int> parent;  // -1 for tops
  std::vector<int> owner;   // per vertex, the smallest set holding it or -1
};

LaminarShape laminar_shape(int n, const std::vector<CutSide>& sets) {
  LaminarShape s;
  const int k = static_cast<int>(sets.size());
  s.order.resize(k);
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](int a, int b) { return sets[a].size() > sets[b].size(); });
  s.parent.assign(k, -1);
  s.owner.assign(n, -1);
  for (int i : s.order) {
    if (sets[i].empty()) throw InvalidInput("empty set in laminar family");
    s.parent[i] = s.owner[sets[i].front()];
    for (int u : sets[i]) {
      if (s.owner[u] != s.parent[i]) throw InvalidInput("family is not laminar");
      s.owner[u] = i;
    }
  }
  return s;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

class CandidateSolver {
 public:
  CandidateSolver(const SupremeOptions& opt, int n, std::uint64_t seed, SupremeStats* stats)
      : opt_(opt), rng_(seed), stats_(stats) {
    cap_ = opt.retry_cap > 0 ? opt.retry_cap
                             : 64 * std::max(1, static_cast<int>(std::ceil(std::log2(std::max(n, 2)))));
  }

  std::vector<CutSide> solve(const WideGraph& g, int depth) {
    if (stats_) {
      stats_->max_depth = std::max(stats_->max_depth, depth);
      ++stats_->subproblems;
      if (static_cast<int>(stats_->layer_vertices.size()) <= depth) stats_->layer_vertices.resize(depth + 1, 0);
      stats_->layer_vertices[depth] += g.vertex_count();
    }
    const VertexSet& t = g.terminals();
    const int k = static_cast<int>(t.size());
    if (k <= std::max(opt_.base_case, 3)) return base_case(g);

    std::map<int, std::vector<WideWeight>> lambda;  // λ̃(s, t[i]) per sampled s
    VertexSet t1, t2;
    for (int attempt = 0;; ++attempt) {
      if (attempt >= cap_) throw RetryExhausted("terminal split stayed unbalanced");
      if (stats_ && attempt > 0) ++stats_->resamples;
      int si = std::uniform_int_distribution<int>(0, k - 1)(rng_);
      int ti = std::uniform_int_distribution<int>(0, k - 2)(rng_);
      if (ti >= si) ++ti;
      auto it = lambda.find(si);
      if (it == lambda.end()) {
        std::vector<WideWeight> row(k, 0);
        for (int i = 0; i < k; ++i)
          if (i != si) row[i] = connectivity(g, t[si], t[i]);
        it = lambda.emplace(si, std::move(row)).first;
      }
      const auto& row = it->second;
      WideWeight phi = row[ti];
      t1.clear(), t2.clear();
      for (int i = 0; i < k; ++i) (i == si || row[i] >= phi ? t1 : t2).push_back(t[i]);
      const int a = static_cast<int>(t1.size()), b = static_cast<int>(t2.size());
      // Each side needs two terminals so both subproblems shrink.
      if (a >= 2 && b >= 2 && 16 * a >= k && 16 * b >= k) break;
    }

    CutSide s1 = earliest_min_cut(g, t1, t2);
    CutSide s2 = complement(g.vertex_count(), s1);
    auto g1 = contract(g, s1);  // S1 becomes t1; terminals T2 ∪ {t1}
    auto g2 = contract(g, s2);  // S2 becomes t2; terminals T1 ∪ {t2}
    const int t2_node = g2.mapping[s2.front()];

    std::vector<CutSide> out;
    for (const CutSide& y : solve(g1.graph, depth + 1)) out.push_back(preimage(g1.mapping, y));
    for (const CutSide& y : solve(g2.graph, depth + 1))
      if (!contains(y, t2_node)) out.push_back(preimage(g2.mapping, y));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  // Earliest R-(T∖R) min cut for every proper R, then uncross.
  std::vector<CutSide> base_case(const WideGraph& g) {
    const VertexSet& t = g.terminals();
    const int k = static_cast<int>(t.size());
    std::vector<CutSide> fam;
    std::vector<WideWeight> val;
    for (std::uint32_t m = 1; m + 1 < (1u << k); ++m) {
      VertexSet r, rest;
      for (int i = 0; i < k; ++i) (m >> i & 1 ? r : rest).push_back(t[i]);
      auto c = min_cut(g, r, rest);
      fam.push_back(std::move(c.earliest));
      val.push_back(c.value);
    }
    const int f = static_cast<int>(fam.size());
    std::vector<char> alive(f, 1);
    for (int i = 0; i < f; ++i)
      for (int j = i + 1; j < f && alive[i]; ++j) {
        if (!alive[j] || !crosses(fam[i], fam[j])) continue;
        // Posi-modularity: one of the two differences is no worse than its set.
        if (cut_value(g, set_difference(fam[i], fam[j])) <= val[i]) alive[i] = 0;
        else alive[j] = 0;
      }
    std::vector<CutSide> out;
    for (int i = 0; i < f; ++i)
      if (alive[i]) out.push_back(std::move(fam[i]));
    return out;
  }

  const SupremeOptions& opt_;
  std::mt19937_64 rng_;
  SupremeStats* stats_;
  int cap_;
};

// One post-order pass. drop(v, current_children, parent) decides removal; removed
// nodes hand their children to the parent.
struct Pruner {
  std::vector<std::vector<int>> children;
  std::vector<int> tops;

  template <class Drop>
  void run(Drop drop) {
    std::vector<std::vector<int>> next(children.size());
    std::function<std::vector<int>(int, int)> visit = [&](int v, int par) -> std::vector<int> {
      std::vector<int> kids;
      for (int c : children[v]) {
        auto got = visit(c, v);
        kids.insert(kids.end(), got.begin(), got.end());
      }
      if (drop(v, kids, par)) return kids;
      next[v] = std::move(kids);
      return {v};
    };
    std::vector<int> new_tops;
    for (int r : tops) {
      auto got = visit(r, -1);
      new_tops.insert(new_tops.end(), got.begin(), got.end());
    }
    children = std::move(next);
    tops = std::move(new_tops);
  }

  std::vector<int> survivors() const {
    std::vector<int> out;
    std::function<void(int)> go = [&](int v) {
      out.push_back(v);
      for (int c : children[v]) go(c);
    };
    for (int r : tops) go(r);
    return out;
  }
};

}  // namespace

template <class W>
std::vector<W> laminar_cut_values(const BasicGraph<W>& g, const std::vector<CutSide>& sets) {
  auto shape = laminar_shape(g.vertex_count(), sets);
  const int k = static_cast<int>(sets.size());
  std::vector<int> depth(k, 0);
  for (int i : shape.order) depth[i] = shape.parent[i] < 0 ? 1 : depth[shape.parent[i]] + 1;
  auto lca = [&](int a, int b) {
    auto d = [&](int x) { return x < 0 ? 0 : depth[x]; };
    while (d(a) > d(b)) a = shape.parent[a];
    while (d(b) > d(a)) b = shape.parent[b];
    while (a != b) a = shape.parent[a], b = shape.parent[b];
    return a;
  };
  std::vector<W> acc(k, 0);
  for (const auto& e : g.edges()) {
    int a = shape.owner[e.u], b = shape.owner[e.v];
    if (a == b) continue;
    if (a >= 0) acc[a] += e.w;
    if (b >= 0) acc[b] += e.w;
    int l = lca(a, b);
    if (l >= 0) acc[l] -= 2 * e.w;
  }
  for (auto it = shape.order.rbegin(); it != shape.order.rend(); ++it)
    if (shape.parent[*it] >= 0) acc[shape.parent[*it]] += acc[*it];
  return acc;
}

template std::vector<Weight> laminar_cut_values(const Graph&, const std::vector<CutSide>&);
template std::vector<WideWeight> laminar_cut_values(const WideGraph&, const std::vector<CutSide>&);

PerturbedGraph perturb(const Graph& g, std::uint64_t seed) {
  PerturbedGraph pg;
  pg.base = g;
  const auto& edges = g.edges();
  const WideWeight m = std::max<std::size_t>(edges.size(), 1);
  pg.n_bound = std::max<WideWeight>(static_cast<WideWeight>(g.total_weight()) + 1, WideWeight{1} << 32);
  pg.scale = m * pg.n_bound;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> r(1, static_cast<std::uint64_t>(pg.n_bound));
  std::vector<WideGraph::Edge> wide;
  wide.reserve(edges.size());
  for (const auto& e : edges) {
    WideWeight off = r(rng);
    pg.offsets.push_back(off);
    wide.push_back({e.u, e.v, pg.scale * e.w + off});
  }
  pg.wide = WideGraph(g.vertex_count(), std::move(wide), g.terminals());
  return pg;
}

std::vector<CutSide> find_supreme_candidates(const PerturbedGraph& pg, std::uint64_t seed,
                                             const SupremeOptions& opt, SupremeStats* stats) {
  if (pg.wide.terminals().size() < 2) return {};
  CandidateSolver solver(opt, pg.wide.vertex_count(), seed, stats);
  return solver.solve(pg.wide, 0);
}

LaminarForest postprocess(const std::vector<CutSide>& candidates, const PerturbedGraph& pg) {
  const Graph& g = pg.base;
  auto shape = laminar_shape(g.vertex_count(), candidates);
  auto dt = laminar_cut_values(pg.wide, candidates);
  auto d = laminar_cut_values(g, candidates);
  std::vector<std::size_t> tcount;
  for (const auto& s : candidates) tcount.push_back(projection(g, s).size());

  Pruner p;
  p.children.resize(candidates.size());
  for (int i : shape.order) (shape.parent[i] < 0 ? p.tops : p.children[shape.parent[i]]).push_back(i);

  p.run([&](int v, const std::vector<int>& kids, int) {
    for (int w : kids)
      if (dt[w] <= dt[v]) return true;
    return false;
  });
  // Parents seen here are still present: ancestors are visited later.
  std::vector<int> par(candidates.size(), -1);
  for (std::size_t v = 0; v < candidates.size(); ++v)
    for (int c : p.children[v]) par[c] = static_cast<int>(v);
  p.run([&](int v, const std::vector<int>&, int) { return par[v] >= 0 && tcount[par[v]] == tcount[v]; });
  p.run([&](int v, const std::vector<int>& kids, int) {
    for (int w : kids)
      if (d[w] <= d[v]) return true;
    return false;
  });

  std::vector<ForestNode> nodes;
  for (int v : p.survivors()) {
    ForestNode x;
    x.terminals = projection(g, candidates[v]);
    x.cut_value = d[v];
    x.vertex_set = candidates[v];
    nodes.push_back(std::move(x));
  }
  return LaminarForest::from_nodes(std::move(nodes));
}

LaminarForest supreme_forest(const Graph& g, std::uint64_t seed, const SupremeOptions& opt,
                             SupremeStats* stats) {
  if (g.terminals().size() < 2) throw InvalidInput("supreme forest needs at least two terminals");
  for (int attempt = 0;; ++attempt) {
    std::uint64_t s = splitmix(seed + static_cast<std::uint64_t>(attempt));
    SupremeStats local;
    try {
      PerturbedGraph pg = perturb(g, s);
      auto cand = find_supreme_candidates(pg, splitmix(s), opt, &local);
      LaminarForest f = postprocess(cand, pg);
      if (stats) *stats = std::move(local);
      return f;
    } catch (const RetryExhausted&) {
      if (attempt + 1 >= std::max(opt.reseeds, 1)) throw;
    }
  }
}

}  // namespace steiner
