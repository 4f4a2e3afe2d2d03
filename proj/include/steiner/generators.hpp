#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

struct RandomSpec {
  int n_min = 3, n_max = 10;
  Weight max_w = 5;
  double extra = 0.3;  // probability of each non-tree pair
  int min_terminals = 2;
};

// Connected graph: random spanning tree plus random extra edges.
inline Graph random_graph(std::mt19937_64& rng, const RandomSpec& spec = {}) {
  std::uniform_int_distribution<int> nd(spec.n_min, spec.n_max);
  const int n = nd(rng);
  std::uniform_int_distribution<Weight> wd(1, spec.max_w);
  std::uniform_real_distribution<double> coin(0, 1);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Graph::Edge> e;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int i = 1; i < n; ++i) {
    int p = order[std::uniform_int_distribution<int>(0, i - 1)(rng)];
    e.push_back({p, order[i], wd(rng)});
    adj[p][order[i]] = adj[order[i]][p] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!adj[u][v] && coin(rng) < spec.extra) e.push_back({u, v, wd(rng)});
  int k = std::uniform_int_distribution<int>(std::min(spec.min_terminals, n), n)(rng);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> t(order.begin(), order.begin() + k);
  return Graph(n, e, t);
}

// g plus a new non-terminal vertex x = n joined by star[v] to each v.
inline Graph attach(const Graph& g, const std::vector<Weight>& star) {
  auto e = g.edges();
  const int x = g.vertex_count();
  for (int v = 0; v < x; ++v)
    if (star[v] > 0) e.push_back({v, x, star[v]});
  return Graph(x + 1, e, g.terminals());
}

// Random star with at least two neighbours, even total, and no neighbour above half.
inline std::vector<Weight> random_star(std::mt19937_64& rng, int n, Weight max_w = 3) {
  std::vector<Weight> s(n, 0);
  std::uniform_int_distribution<Weight> wd(0, max_w);
  for (;;) {
    int support = 0;
    Weight total = 0;
    for (auto& w : s) w = wd(rng), support += w > 0, total += w;
    if (support < 2) continue;
    if (total % 2) {
      for (auto& w : s)
        if (w > 0) {
          ++w, ++total;
          break;
        }
    }
    if (2 * *std::max_element(s.begin(), s.end()) > total) continue;
    return s;
  }
}

}  // namespace steiner
