#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/vertex_set.hpp"

namespace steiner {

using Weight = std::int64_t;
using WideWeight = __int128;

// Inputs must keep perturbed cut values inside 128 bits; see perturb().
inline constexpr Weight kMaxTotalWeight = Weight{1} << 40;
inline constexpr std::size_t kMaxEdges = std::size_t{1} << 20;

template <class W>
struct WeightedEdge {
  int u = 0;
  int v = 0;
  W w = 0;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Undirected multigraph on vertices 0..n-1 with a terminal set. Immutable.
template <class W>
class BasicGraph {
 public:
  using weight_type = W;
  using Edge = WeightedEdge<W>;

  BasicGraph() = default;

  BasicGraph(int n, std::vector<Edge> edges, VertexSet terminals)
      : n_(n), edges_(std::move(edges)), terminals_(make_set(std::move(terminals))) {
    if (n <= 0) throw InvalidInput("graph needs at least one vertex");
    if (terminals_.empty()) throw InvalidInput("terminal set is empty");
    if (terminals_.front() < 0 || terminals_.back() >= n)
      throw InvalidInput("terminal id out of range");
    if (edges_.size() > kMaxEdges) throw InvalidInput("too many edges");
    W total = 0;
    for (const Edge& e : edges_) {
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
        throw InvalidInput("edge endpoint out of range");
      if (e.u == e.v) throw InvalidInput("self-loop");
      if (e.w <= 0) throw InvalidInput("edge weight must be positive");
      total += e.w;
      if constexpr (std::is_same_v<W, Weight>) {
        if (total > kMaxTotalWeight) throw InvalidInput("total edge weight exceeds bound");
      }
    }
    terminal_mask_.assign(n, 0);
    for (int t : terminals_) terminal_mask_[t] = 1;
  }

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const VertexSet& terminals() const { return terminals_; }
  bool is_terminal(int v) const { return terminal_mask_[v] != 0; }

  W total_weight() const {
    W s = 0;
    for (const Edge& e : edges_) s += e.w;
    return s;
  }

  // Weighted degree.
  std::vector<W> degrees() const {
    std::vector<W> d(n_, 0);
    for (const Edge& e : edges_) {
      d[e.u] += e.w;
      d[e.v] += e.w;
    }
    return d;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  VertexSet terminals_;
  std::vector<char> terminal_mask_;
};

using Graph = BasicGraph<Weight>;
using WideGraph = BasicGraph<WideWeight>;

// Multiset of weighted vertex pairs; the output F of augmentation and splitting.
class EdgeAdditions {
 public:
  using Entry = WeightedEdge<Weight>;

  EdgeAdditions() = default;
  explicit EdgeAdditions(std::vector<Entry> entries) {
    for (const Entry& e : entries) add(e.u, e.v, e.w);
  }

  void add(int u, int v, Weight w) {
    if (w == 0) return;
    if (w < 0) throw InvalidInput("edge addition weight must be positive");
    if (u == v) throw InvalidInput("edge addition is a self-loop");
    entries_.push_back({u, v, w});
  }
  void append(const EdgeAdditions& other) {
    for (const Entry& e : other.entries_) add(e.u, e.v, e.w);
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  Weight total_weight() const;
  std::vector<Weight> degrees(int n) const;
  // Same multiset with u < v, parallel pairs summed, sorted by (u, v).
  EdgeAdditions canonical() const;

  friend bool operator==(const EdgeAdditions&, const EdgeAdditions&) = default;

 private:
  std::vector<Entry> entries_;
};

template <class W>
W cut_value(const BasicGraph<W>& g, const std::vector<char>& in) {
  W s = 0;
  for (const auto& e : g.edges())
    if (in[e.u] != in[e.v]) s += e.w;
  return s;
}

template <class W>
W cut_value(const BasicGraph<W>& g, const CutSide& x) {
  for (int v : x)
    if (v < 0 || v >= g.vertex_count()) throw InvalidInput("vertex id out of range");
  return cut_value(g, to_mask(g.vertex_count(), x));
}

template <class W>
VertexSet projection(const BasicGraph<W>& g, const CutSide& x) {
  VertexSet r;
  for (int v : x)
    if (g.is_terminal(v)) r.push_back(v);
  return r;
}

template <class W>
bool is_steiner_cut(const BasicGraph<W>& g, const CutSide& x) {
  std::size_t k = projection(g, x).size();
  return k > 0 && k < g.terminals().size();
}

// φ maps old vertex ids to new ones.
template <class W>
struct Contraction {
  BasicGraph<W> graph;
  std::vector<int> mapping;
};

// Merge vertices by label (labels dense in 0..new_n-1). Loops dropped, parallels kept.
template <class W>
Contraction<W> quotient(const BasicGraph<W>& g, std::vector<int> label, int new_n) {
  std::vector<typename BasicGraph<W>::Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    int a = label[e.u], b = label[e.v];
    if (a != b) edges.push_back({a, b, e.w});
  }
  VertexSet terms;
  for (int t : g.terminals()) terms.push_back(label[t]);
  return {BasicGraph<W>(new_n, std::move(edges), make_set(std::move(terms))), std::move(label)};
}

// K collapses into the slot of min(K); other vertices keep their relative order.
template <class W>
Contraction<W> contract(const BasicGraph<W>& g, const VertexSet& k) {
  if (k.empty()) throw InvalidInput("contraction set is empty");
  const int n = g.vertex_count();
  std::vector<char> in = to_mask(n, k);
  std::vector<int> label(n);
  int next = 0, merged = -1;
  for (int v = 0; v < n; ++v) {
    if (in[v]) {
      if (merged < 0) merged = next++;
      label[v] = merged;
    } else {
      label[v] = next++;
    }
  }
  return quotient(g, std::move(label), next);
}

// φ⁻¹(Z).
inline VertexSet preimage(const std::vector<int>& mapping, const VertexSet& z) {
  VertexSet r;
  for (int v = 0; v < static_cast<int>(mapping.size()); ++v)
    if (contains(z, mapping[v])) r.push_back(v);
  return r;
}

Graph add_edges(const Graph& g, const EdgeAdditions& f);

// g plus an extra non-terminal vertex x = n joined to each u with weight star[u].
Graph with_external_vertex(const Graph& g, const std::vector<Weight>& star);

template <class W>
BasicGraph<W> with_terminals(const BasicGraph<W>& g, VertexSet terminals) {
  return BasicGraph<W>(g.vertex_count(), g.edges(), std::move(terminals));
}

std::string to_string(WideWeight v);

}  // namespace steiner
