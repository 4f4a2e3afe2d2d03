#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

namespace detail {
inline std::atomic<std::uint64_t> flow_calls{0};
}

// Number of max-flow computations since start (or the last reset).
inline std::uint64_t flow_invocations() { return detail::flow_calls.load(); }
inline void reset_flow_invocations() { detail::flow_calls.store(0); }

// Directed network. Each arc carries a forward capacity and an optional reverse
// capacity, so an undirected edge is a single arc with cap == reverse_cap.
template <class Cap>
class FlowNetwork {
 public:
  struct Arc {
    int from, to;
    Cap cap, reverse_cap;
    bool infinite;
  };

  explicit FlowNetwork(int n = 0) : n_(n) {}

  int add_node() { return n_++; }
  int node_count() const { return n_; }

  int add_arc(int from, int to, Cap cap, Cap reverse_cap = 0) {
    check(from), check(to);
    if (cap < 0 || reverse_cap < 0) throw InvalidInput("negative capacity");
    arcs_.push_back({from, to, cap, reverse_cap, false});
    return static_cast<int>(arcs_.size()) - 1;
  }
  int add_infinite_arc(int from, int to) {
    check(from), check(to);
    arcs_.push_back({from, to, 0, 0, true});
    return static_cast<int>(arcs_.size()) - 1;
  }
  void add_source(int v) { check(v), sources_.push_back(v); }
  void add_sink(int v) { check(v), sinks_.push_back(v); }

  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& sources() const { return sources_; }
  const std::vector<int>& sinks() const { return sinks_; }

  // Stand-in for ∞: exceeds every finite cut.
  Cap infinity() const {
    Cap s = 1;
    for (const Arc& a : arcs_)
      if (!a.infinite) s += a.cap + a.reverse_cap;
    return s;
  }

 private:
  void check(int v) const {
    if (v < 0 || v >= n_) throw InvalidInput("flow network node out of range");
  }
  int n_;
  std::vector<Arc> arcs_;
  std::vector<int> sources_, sinks_;
};

template <class Cap>
struct FlowResult {
  Cap value = 0;
  // Net flow along each arc (negative means it runs to → from).
  std::vector<Cap> arc_flow;
  // Residual-reachable from the sources: the earliest min cut.
  CutSide source_side;
  // Nodes with a residual path into the sinks; the latest min cut is the complement.
  VertexSet sink_side;
};

namespace detail {

// Dinic blocking flow. Deterministic: arcs are explored in insertion order.
template <class Cap>
class Dinic {
 public:
  explicit Dinic(int n) : head_(n, -1), level_(n), iter_(n) {}

  int add(int u, int v, Cap c, Cap rc) {
    int id = static_cast<int>(to_.size());
    push(u, v, c), push(v, u, rc);
    return id;
  }

  Cap run(int s, int t) {
    Cap total = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      while (Cap f = dfs(s, t, inf_)) total += f;
    }
    return total;
  }

  void set_inf(Cap inf) { inf_ = inf; }
  Cap residual(int e) const { return cap_[e]; }

  std::vector<char> reach_from(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> st{s};
    seen[s] = 1;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      for (int e = head_[u]; e >= 0; e = next_[e])
        if (cap_[e] > 0 && !seen[to_[e]]) seen[to_[e]] = 1, st.push_back(to_[e]);
    }
    return seen;
  }

  std::vector<char> reach_to(int t) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> st{t};
    seen[t] = 1;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      // e^1 is an arc u→v; its residual capacity decides whether u reaches v.
      for (int e = head_[v]; e >= 0; e = next_[e]) {
        int u = to_[e];
        if (cap_[e ^ 1] > 0 && !seen[u]) seen[u] = 1, st.push_back(u);
      }
    }
    return seen;
  }

 private:
  void push(int u, int v, Cap c) {
    to_.push_back(v);
    cap_.push_back(c);
    next_.push_back(head_[u]);
    head_[u] = static_cast<int>(to_.size()) - 1;
  }

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e = head_[u]; e >= 0; e = next_[e])
        if (cap_[e] > 0 && level_[to_[e]] < 0) {
          level_[to_[e]] = level_[u] + 1;
          q.push(to_[e]);
        }
    }
    return level_[t] >= 0;
  }

  Cap dfs(int u, int t, Cap f) {
    if (u == t) return f;
    for (int& e = iter_[u]; e >= 0; e = next_[e]) {
      int v = to_[e];
      if (cap_[e] > 0 && level_[v] == level_[u] + 1) {
        Cap d = dfs(v, t, f < cap_[e] ? f : cap_[e]);
        if (d > 0) {
          cap_[e] -= d;
          cap_[e ^ 1] += d;
          return d;
        }
      }
    }
    return 0;
  }

  std::vector<int> head_, next_, to_;
  std::vector<Cap> cap_;
  std::vector<int> level_, iter_;
  Cap inf_ = 0;
};

}  // namespace detail

template <class Cap>
FlowResult<Cap> max_flow(const FlowNetwork<Cap>& net) {
  const int n = net.node_count();
  if (net.sources().empty() || net.sinks().empty())
    throw InvalidInput("flow needs nonempty source and sink sets");
  std::vector<char> role(n, 0);
  for (int s : net.sources()) role[s] |= 1;
  for (int t : net.sinks()) {
    if (role[t] & 1) throw InvalidInput("sources and sinks overlap");
    role[t] |= 2;
  }
  detail::flow_calls.fetch_add(1, std::memory_order_relaxed);

  const Cap inf = net.infinity();
  const int ss = n, tt = n + 1;
  detail::Dinic<Cap> d(n + 2);
  d.set_inf(inf);
  std::vector<int> ids;
  ids.reserve(net.arcs().size());
  for (const auto& a : net.arcs())
    ids.push_back(a.infinite ? d.add(a.from, a.to, inf, 0) : d.add(a.from, a.to, a.cap, a.reverse_cap));
  for (int v = 0; v < n; ++v) {
    if (role[v] & 1) d.add(ss, v, inf, 0);
    if (role[v] & 2) d.add(v, tt, inf, 0);
  }

  FlowResult<Cap> r;
  r.value = d.run(ss, tt);
  if (r.value >= inf) throw NoFiniteCut("no finite cut separates sources from sinks");
  r.arc_flow.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto& a = net.arcs()[i];
    Cap c = a.infinite ? inf : a.cap;
    r.arc_flow.push_back(c - d.residual(ids[i]));
  }
  auto from_s = d.reach_from(ss);
  auto to_t = d.reach_to(tt);
  for (int v = 0; v < n; ++v) {
    if (from_s[v]) r.source_side.push_back(v);
    if (to_t[v]) r.sink_side.push_back(v);
  }
  return r;
}

template <class W>
FlowNetwork<W> network_from_graph(const BasicGraph<W>& g) {
  FlowNetwork<W> net(g.vertex_count());
  for (const auto& e : g.edges()) net.add_arc(e.u, e.v, e.w, e.w);
  return net;
}

template <class W>
struct MinCut {
  W value = 0;
  CutSide earliest;
  CutSide latest;
};

template <class W>
MinCut<W> min_cut(const BasicGraph<W>& g, const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty()) throw InvalidInput("min cut needs nonempty sides");
  auto net = network_from_graph(g);
  for (int v : a) net.add_source(v);
  for (int v : b) net.add_sink(v);
  auto f = max_flow(net);
  return {f.value, std::move(f.source_side), complement(g.vertex_count(), f.sink_side)};
}

template <class W>
CutSide earliest_min_cut(const BasicGraph<W>& g, const VertexSet& a, const VertexSet& b) {
  return min_cut(g, a, b).earliest;
}

template <class W>
CutSide latest_min_cut(const BasicGraph<W>& g, const VertexSet& a, const VertexSet& b) {
  return min_cut(g, a, b).latest;
}

// λ(s,t).
template <class W>
W connectivity(const BasicGraph<W>& g, int s, int t) {
  return min_cut(g, VertexSet{s}, VertexSet{t}).value;
}

// ct(s,φ) = {s} ∪ {t : λ(s,t) ≥ φ}, one max flow per candidate. Candidates default to V.
template <class W>
VertexSet cut_threshold(const BasicGraph<W>& g, int s, W phi,
                        const std::optional<VertexSet>& candidates = std::nullopt) {
  VertexSet r{s};
  auto test = [&](int t) {
    if (t != s && connectivity(g, s, t) >= phi) r.push_back(t);
  };
  if (candidates) {
    for (int t : *candidates) test(t);
  } else {
    for (int t = 0; t < g.vertex_count(); ++t) test(t);
  }
  return make_set(std::move(r));
}

// Minimal isolating cut of each part against the union of the others.
template <class W>
std::vector<CutSide> isolating_cuts(const BasicGraph<W>& g, const std::vector<VertexSet>& parts) {
  if (parts.size() < 2) throw InvalidInput("isolating cuts need at least two parts");
  std::vector<CutSide> r;
  r.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    VertexSet rest;
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i) rest = set_union(rest, parts[j]);
    r.push_back(earliest_min_cut(g, parts[i], rest));
  }
  return r;
}

template <class W>
struct SteinerCut {
  W value = 0;
  CutSide side;
};

// Minimum Steiner cut, as min over t of λ(s,t) for the lowest terminal s.
// The side returned is the earliest min cut around s for the first minimizing t.
template <class W>
SteinerCut<W> steiner_min_cut(const BasicGraph<W>& g) {
  const VertexSet& t = g.terminals();
  if (t.size() < 2) throw InvalidInput("Steiner connectivity needs at least two terminals");
  SteinerCut<W> best;
  bool first = true;
  for (std::size_t i = 1; i < t.size(); ++i) {
    auto c = min_cut(g, VertexSet{t[0]}, VertexSet{t[i]});
    if (first || c.value < best.value) {
      best = {c.value, std::move(c.earliest)};
      first = false;
    }
  }
  return best;
}

template <class W>
W steiner_connectivity(const BasicGraph<W>& g) {
  return steiner_min_cut(g).value;
}

}  // namespace steiner
