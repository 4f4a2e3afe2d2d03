#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "steiner/generators.hpp"
#include "steiner/graph.hpp"

namespace fixtures {

using steiner::Graph;
using steiner::Weight;

// s=0, v=1, t=2.
inline Graph path() { return Graph(3, {{0, 1, 1}, {1, 2, 1}}, {0, 2}); }

// v1..v4 = 0..3.
inline Graph cyc4() { return Graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}, {0, 1, 2, 3}); }

inline Graph cycle(int n) {
  std::vector<Graph::Edge> e;
  std::vector<int> t;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1}), t.push_back(i);
  return Graph(n, e, t);
}

// s=0, v_i=i for i in 1..n-2, t=n-1.
inline Graph expo(int n) {
  std::vector<Graph::Edge> e;
  for (int i = 1; i <= n - 2; ++i) e.push_back({0, i, 1});
  e.push_back({0, n - 1, 3});
  return Graph(n, e, {0, n - 1});
}

// expo(4): s=0, v1=1, v2=2, t=3.
inline Graph split() { return expo(4); }

using steiner::RandomSpec;
using steiner::random_graph;
using steiner::attach;
using steiner::random_star;

}  // namespace fixtures

