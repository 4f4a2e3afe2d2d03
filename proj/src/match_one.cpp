#include "steiner/match_one.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "steiner/flow.hpp"

namespace steiner {

int default_retry_cap(int n) {
  int lg = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(std::max(n, 2) - 1))));
  return 64 * lg;
}

std::vector<VertexSet> build_K(const LaminarForest& f, Weight tau) {
  std::vector<VertexSet> k;
  for (int r : f.roots())
    if (f.node(r).cut_value == tau - 1) k.push_back(f.node(r).terminals);
  return k;
}

bool is_feasible_partial(const Graph& g_cur, const std::vector<int>& star, const EdgeAdditions& m,
                         Weight tau) {
  std::vector<Weight> s(g_cur.vertex_count(), 0);
  for (int v : star) ++s[v];
  return steiner_connectivity(with_external_vertex(add_edges(g_cur, m), s)) >= tau;
}

std::vector<std::pair<int, int>> sample_phase_matching(int k, Rng& rng) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 2 * (k / 4); i += 2) pairs.push_back({idx[i], idx[i + 1]});
  return pairs;
}

std::vector<std::pair<int, int>> match_groups(Graph g_cur, const std::vector<int>& rep, Weight tau,
                                              Rng& rng, const MatchOptions& opt, MatchStats* stats) {
  if (rep.size() % 2) throw InvalidInput("matching needs an even number of groups");
  const int cap = opt.retry_cap > 0 ? opt.retry_cap : default_retry_cap(g_cur.vertex_count());
  std::vector<int> alive(rep.size());
  std::iota(alive.begin(), alive.end(), 0);
  std::vector<std::pair<int, int>> out;
  while (alive.size() >= 4) {
    const int k = static_cast<int>(alive.size());
    if (stats) ++stats->phases;
    bool done = false;
    for (int attempt = 0; attempt < cap && !done; ++attempt) {
      if (stats) ++stats->samples;
      auto pairs = sample_phase_matching(k, rng);
      std::vector<char> used(k, 0);
      EdgeAdditions m;
      for (auto [a, b] : pairs) {
        used[a] = used[b] = 1;
        m.add(rep[alive[a]], rep[alive[b]], 1);
      }
      std::vector<int> star;
      for (int i = 0; i < k; ++i)
        if (!used[i]) star.push_back(rep[alive[i]]);
      if (!is_feasible_partial(g_cur, star, m, tau)) continue;
      g_cur = add_edges(g_cur, m);
      std::vector<int> rest;
      for (int i = 0; i < k; ++i)
        if (!used[i]) rest.push_back(alive[i]);
      for (auto [a, b] : pairs) out.push_back({alive[a], alive[b]});
      alive = std::move(rest);
      done = true;
    }
    if (!done) throw RetryExhausted("no feasible phase matching within the retry cap");
  }
  if (alive.size() == 2) out.push_back({alive[0], alive[1]});
  return out;
}

EdgeAdditions augment_by_one(const Graph& g, const std::vector<VertexSet>& k, Weight tau, Rng& rng,
                             const MatchOptions& opt, MatchStats* stats) {
  EdgeAdditions f;
  if (k.empty()) return f;
  ensure(k.size() >= 2, "a single minimal Steiner min cut");
  std::vector<int> rep;
  for (const auto& grp : k) rep.push_back(grp.front());
  Graph cur = g;
  if (rep.size() % 2) {
    // Join the first two groups and retire the first.
    f.add(rep[0], rep[1], 1);
    cur = add_edges(cur, f);
    rep.erase(rep.begin());
  }
  for (auto [a, b] : match_groups(cur, rep, tau, rng, opt, stats)) f.add(rep[a], rep[b], 1);
  return f;
}

}  // namespace steiner
