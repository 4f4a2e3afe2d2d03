#include "steiner/graph.hpp"

#include <algorithm>
#include <map>

namespace steiner {

Weight EdgeAdditions::total_weight() const {
  Weight s = 0;
  for (const Entry& e : entries_) s += e.w;
  return s;
}

std::vector<Weight> EdgeAdditions::degrees(int n) const {
  std::vector<Weight> d(n, 0);
  for (const Entry& e : entries_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw InvalidInput("edge endpoint out of range");
    d[e.u] += e.w;
    d[e.v] += e.w;
  }
  return d;
}

EdgeAdditions EdgeAdditions::canonical() const {
  std::map<std::pair<int, int>, Weight> acc;
  for (const Entry& e : entries_) acc[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.w;
  EdgeAdditions r;
  for (const auto& [k, w] : acc) r.add(k.first, k.second, w);
  return r;
}

Graph add_edges(const Graph& g, const EdgeAdditions& f) {
  std::vector<Graph::Edge> edges = g.edges();
  for (const auto& e : f.entries()) {
    if (e.u < 0 || e.u >= g.vertex_count() || e.v < 0 || e.v >= g.vertex_count())
      throw InvalidInput("edge addition endpoint out of range");
    edges.push_back(e);
  }
  return Graph(g.vertex_count(), std::move(edges), g.terminals());
}

Graph with_external_vertex(const Graph& g, const std::vector<Weight>& star) {
  const int n = g.vertex_count();
  std::vector<Graph::Edge> edges = g.edges();
  for (int u = 0; u < n && u < static_cast<int>(star.size()); ++u)
    if (star[u] > 0) edges.push_back({u, n, star[u]});
  return Graph(n + 1, std::move(edges), g.terminals());
}

std::string to_string(WideWeight v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace steiner
