#include "steiner/deg_match_one.hpp"

#include "steiner/flow.hpp"

namespace steiner {

namespace {

int lowest_with_budget(const CutSide& mu, const std::vector<Weight>& beta) {
  for (int v : mu)
    if (beta[v] >= 1) return v;
  return -1;
}

Weight budget_of(const CutSide& mu, const std::vector<Weight>& beta) {
  Weight s = 0;
  for (int v : mu) s += beta[v];
  return s;
}

}  // namespace

Surrogates find_surrogates(const Graph& g, const std::vector<VertexSet>& groups,
                           const std::vector<Weight>& beta) {
  std::vector<VertexSet> parts = groups;
  VertexSet rest = g.terminals();
  for (const auto& k : groups) rest = set_difference(rest, k);
  if (!rest.empty()) parts.push_back(rest);
  Surrogates s;
  s.mu = isolating_cuts(g, parts);
  s.mu.resize(groups.size());
  for (const auto& mu : s.mu) {
    int v = lowest_with_budget(mu, beta);
    if (v < 0) throw Infeasible("a minimal Steiner min cut has no vertex with budget");
    s.vertex.push_back(v);
  }
  return s;
}

DegMatchResult deg_augment_by_one(const Graph& g, Weight tau, const std::vector<Weight>& beta,
                                  const std::vector<VertexSet>& groups, Rng& rng,
                                  SurrogateCheck check, const MatchOptions& opt, MatchStats* stats) {
  DegMatchResult r;
  if (groups.empty()) return r;
  ensure(groups.size() >= 2, "a single minimal Steiner min cut");
  std::vector<Weight> left = beta;
  left.resize(g.vertex_count(), 0);
  r.surrogates = find_surrogates(g, groups, left);
  const auto& mu = r.surrogates.mu;
  std::vector<int> idx(groups.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  auto rep = [&](int i) {
    return check == SurrogateCheck::kTerminal ? groups[i].front() : lowest_with_budget(mu[i], left);
  };
  auto use = [&](int a, int b) {
    r.edges.add(a, b, 1);
    --left[a], --left[b];
  };
  Graph cur = g;
  if (idx.size() % 2) {
    // Join two groups and retire one; the survivor needs a second budget unit.
    int retire = -1, keep = -1;
    for (std::size_t v = 0; v < idx.size() && keep < 0; ++v) {
      if (budget_of(mu[v], left) < 2) continue;
      keep = static_cast<int>(v);
      retire = v == 0 ? 1 : 0;
    }
    if (keep >= 0) {
      EdgeAdditions e;
      e.add(rep(retire), rep(keep), 1);
      use(lowest_with_budget(mu[retire], left), lowest_with_budget(mu[keep], left));
      cur = add_edges(cur, e);
    } else {
      // No group can take two edges: send one group to a spare vertex outside all of them.
      std::vector<char> inside(g.vertex_count(), 0);
      for (const auto& m : mu)
        for (int v : m) inside[v] = 1;
      int w = -1;
      for (int v = 0; v < g.vertex_count() && w < 0; ++v)
        if (!inside[v] && left[v] >= 1) w = v;
      if (w < 0) throw Infeasible("odd number of groups and no spare budget");
      for (std::size_t u = 0; u < idx.size() && retire < 0; ++u) {
        EdgeAdditions e;
        e.add(rep(static_cast<int>(u)), w, 1);
        std::vector<int> star;
        for (std::size_t j = 0; j < idx.size(); ++j)
          if (j != u) star.push_back(rep(static_cast<int>(j)));
        if (!is_feasible_partial(cur, star, e, tau)) continue;
        retire = static_cast<int>(u);
        use(lowest_with_budget(mu[u], left), w);
        cur = add_edges(cur, e);
      }
      if (retire < 0) throw Infeasible("odd number of groups and no feasible spare edge");
    }
    idx.erase(idx.begin() + retire);
  }
  std::vector<int> reps;
  for (int i : idx) reps.push_back(rep(i));
  for (auto [a, b] : match_groups(cur, reps, tau, rng, opt, stats)) {
    int u = lowest_with_budget(mu[idx[a]], left), v = lowest_with_budget(mu[idx[b]], left);
    ensure(u >= 0 && v >= 0, "matched group without budget");
    use(u, v);
  }
  return r;
}

}  // namespace steiner
