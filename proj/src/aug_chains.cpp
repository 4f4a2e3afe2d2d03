#include "steiner/aug_chains.hpp"

#include <algorithm>
#include <map>

namespace steiner {

namespace {

Weight ceil_div(Weight a, Weight b) { return a <= 0 ? 0 : (a + b - 1) / b; }

}  // namespace

std::vector<ChainEndpoint> AugChain::endpoints() const {
  std::vector<ChainEndpoint> r;
  for (int i = 0; i < size(); ++i) {
    if (i > 0) r.push_back(in[i]);
    if (i + 1 < size()) r.push_back(out[i]);
  }
  return r;
}

std::vector<std::pair<ChainEndpoint, ChainEndpoint>> AugChain::edges() const {
  std::vector<std::pair<ChainEndpoint, ChainEndpoint>> r;
  for (int i = 0; i + 1 < size(); ++i) r.push_back({out[i], in[i + 1]});
  return r;
}

ChainScheduler::ChainScheduler(LaminarForest forest, std::vector<char> protected_nodes,
                               std::vector<VacancyBucket> buckets, Weight tau, int vertex_count)
    : forest_(std::move(forest)),
      protected_(std::move(protected_nodes)),
      buckets_(std::move(buckets)),
      tau_(tau),
      n_(vertex_count) {
  const int k = forest_.size();
  protected_.resize(k, 0);
  std::vector<int> parent(k, -1);
  for (int v = 0; v < k; ++v) parent[v] = forest_.node(v).parent;
  tree_ = PathSumTree(parent);
  initial_c_.assign(k, 0);
  for (int v = 0; v < k; ++v) {
    initial_c_[v] = forest_.node(v).cut_value;
    tree_.set_value(v, initial_c_[v]);
  }
  for (const auto& b : buckets_) {
    if (b.remaining < 0) throw InvalidInput("negative vacancy");
    if (b.leaf < 0 || b.leaf >= k || !forest_.is_live(b.leaf))
      throw InvalidInput("vacancy bucket without a live leaf");
  }
}

std::vector<int> ChainScheduler::q_roots() const {
  std::vector<int> q;
  for (int r : forest_.roots())
    if (c(r) <= tau_ - 2) q.push_back(r);
  return q;
}

std::vector<Weight> ChainScheduler::remaining_by_vertex() const {
  std::vector<Weight> r(n_, 0);
  for (const auto& b : buckets_) r[b.vertex] += b.remaining;
  return r;
}

LaminarForest ChainScheduler::snapshot() const {
  LaminarForest f = forest_;
  for (int v : f.live_nodes()) f.node(v).cut_value = c(v);
  return f;
}

bool ChainScheduler::select(int root, bool need_in, bool need_out, ChainEndpoint& in,
                            ChainEndpoint& out) const {
  int need = need_in + need_out;
  std::vector<ChainEndpoint> got;
  for (int i = 0; i < static_cast<int>(buckets_.size()) && need > 0; ++i) {
    const auto& b = buckets_[i];
    if (b.remaining <= 0 || !tree_.is_ancestor(root, b.leaf)) continue;
    for (Weight k = 0; k < b.remaining && need > 0; ++k, --need) got.push_back({b.vertex, i, b.leaf});
  }
  if (need > 0) return false;
  std::size_t j = 0;
  in = need_in ? got[j++] : ChainEndpoint{};
  out = need_out ? got[j] : ChainEndpoint{};
  return true;
}

// X_1 = min (c, id); X_r = min (c, -id) among the rest; middle ascending id.
std::vector<int> ChainScheduler::order_roots(std::vector<int> q) const {
  std::sort(q.begin(), q.end());
  auto first = std::min_element(q.begin(), q.end(), [&](int a, int b) {
    return std::pair(c(a), a) < std::pair(c(b), b);
  });
  int x1 = *first;
  q.erase(first);
  auto last = std::min_element(q.begin(), q.end(), [&](int a, int b) {
    return std::pair(c(a), -a) < std::pair(c(b), -b);
  });
  int xr = *last;
  q.erase(last);
  std::vector<int> order{x1};
  order.insert(order.end(), q.begin(), q.end());
  order.push_back(xr);
  return order;
}

std::optional<AugChain> ChainScheduler::build_chain() const {
  auto q = q_roots();
  if (q.empty()) return std::nullopt;
  ensure(q.size() >= 2, "exactly one root with demand at least 2");
  AugChain ch;
  ch.roots = order_roots(std::move(q));
  const int r = ch.size();
  ch.in.resize(r), ch.out.resize(r);
  for (int i = 0; i < r; ++i)
    ensure(select(ch.roots[i], i > 0, i + 1 < r, ch.in[i], ch.out[i]),
           "root with demand at least 2 has no vacant degree");
  return ch;
}

Expiration ChainScheduler::expiration(const AugChain& ch) const {
  Expiration e;
  std::map<int, Weight> uses;
  auto eps = ch.endpoints();
  for (const auto& p : eps) ++uses[p.bucket];
  for (auto [b, u] : uses) e.t1 = std::min(e.t1, buckets_[b].remaining / u);
  const int r = ch.size();
  for (int i = 0; i < r; ++i) {
    int x = ch.roots[i];
    Weight dfx = (i > 0) + (i + 1 < r);
    e.t2 = std::min(e.t2, ceil_div(tau_ - 1 - c(x), dfx));
    if (protected_[x]) continue;
    for (int w : forest_.node(x).children) {
      Weight dfw = 0;
      for (const auto& p : eps) dfw += tree_.is_ancestor(w, p.leaf);
      if (dfx <= dfw) continue;
      ensure(c(w) > c(x), "live node is not below its children");
      e.t3 = std::min(e.t3, ceil_div(c(w) - c(x), dfx - dfw));
    }
  }
  ensure(e.t() >= 1, "chain expired at birth");
  return e;
}

void ChainScheduler::apply(const AugChain& ch, Weight t) {
  if (t <= 0) return;
  for (const auto& p : ch.endpoints()) {
    ensure(buckets_[p.bucket].remaining >= t, "vacancy underflow");
    buckets_[p.bucket].remaining -= t;
    tree_.add_to_root(p.leaf, t);
    applied_.push_back({p.leaf, t});
  }
  for (const auto& [a, b] : ch.edges()) output_.add(a.vertex, b.vertex, t);
  cascade_deletions();
}

void ChainScheduler::cascade_deletions() {
  for (bool changed = true; changed;) {
    changed = false;
    for (int v : forest_.live_nodes()) {
      if (protected_[v]) continue;
      for (int w : forest_.node(v).children)
        if (c(v) >= c(w)) {
          forest_.delete_node(v);
          changed = true;
          break;
        }
    }
  }
}

bool ChainScheduler::ends_minimal(const std::vector<int>& roots) const {
  std::vector<Weight> cs;
  for (int x : roots) cs.push_back(c(x));
  std::sort(cs.begin(), cs.end());
  Weight a = c(roots.front()), b = c(roots.back());
  if (a > b) std::swap(a, b);
  return a == cs[0] && b == cs[1];
}

bool ChainScheduler::chain_valid(const AugChain& ch) const {
  auto q = q_roots();
  std::vector<int> mine = ch.roots;
  std::sort(mine.begin(), mine.end());
  if (mine != q || ch.size() < 2 || !ends_minimal(ch.roots)) return false;
  std::map<int, Weight> uses;
  for (const auto& p : ch.endpoints()) {
    ++uses[p.bucket];
  }
  for (auto [b, u] : uses)
    if (buckets_[b].remaining < u) return false;
  for (int i = 0; i < ch.size(); ++i) {
    const auto check = [&](const ChainEndpoint& p) { return tree_.is_ancestor(ch.roots[i], p.leaf); };
    if (i > 0 && !check(ch.in[i])) return false;
    if (i + 1 < ch.size() && !check(ch.out[i])) return false;
  }
  return true;
}

std::optional<AugChain> ChainScheduler::patch(const AugChain& old, int* changed_edges) const {
  auto count_changes = [&](const std::optional<AugChain>& next) {
    if (!changed_edges) return;
    *changed_edges = 0;
    if (!next) return;
    auto before = old.edges();
    for (const auto& e : next->edges())
      if (std::find(before.begin(), before.end(), e) == before.end()) ++*changed_edges;
  };
  auto q = q_roots();
  if (q.empty()) {
    count_changes(std::nullopt);
    return std::nullopt;
  }
  // Case 2 drops roots that fell to demand ≤ 1; case 3 swaps a deleted root for
  // the descendants that surfaced as roots.
  std::vector<int> roots;
  for (int x : old.roots) {
    if (forest_.is_live(x)) {
      if (std::binary_search(q.begin(), q.end(), x)) roots.push_back(x);
      continue;
    }
    for (int y : q)
      if (tree_.is_ancestor(x, y)) roots.push_back(y);
  }
  std::vector<int> sorted = roots;
  std::sort(sorted.begin(), sorted.end());
  bool rebuild = sorted != q || roots.size() < 2 || roots.front() != old.roots.front() ||
                 roots.back() != old.roots.back() || !ends_minimal(roots);
  if (rebuild) {
    auto next = build_chain();
    count_changes(next);
    return next;
  }
  // Case 1: keep endpoints whose buckets still cover one more copy.
  AugChain ch;
  ch.roots = roots;
  const int r = ch.size();
  ch.in.resize(r), ch.out.resize(r);
  std::map<int, Weight> budget;
  for (int i = 0; i < r; ++i) {
    int x = ch.roots[i];
    bool need_in = i > 0, need_out = i + 1 < r;
    auto pos = std::find(old.roots.begin(), old.roots.end(), x) - old.roots.begin();
    bool reused = false;
    if (pos < old.size()) {
      bool old_in = pos > 0, old_out = pos + 1 < old.size();
      if (old_in == need_in && old_out == need_out) {
        std::map<int, Weight> u;
        if (need_in) ++u[old.in[pos].bucket];
        if (need_out) ++u[old.out[pos].bucket];
        bool fits = true;
        for (auto [b, k] : u) fits = fits && buckets_[b].remaining >= k;
        if (fits) {
          ch.in[i] = need_in ? old.in[pos] : ChainEndpoint{};
          ch.out[i] = need_out ? old.out[pos] : ChainEndpoint{};
          reused = true;
        }
      }
    }
    if (!reused)
      ensure(select(x, need_in, need_out, ch.in[i], ch.out[i]),
             "root with demand at least 2 has no vacant degree");
  }
  count_changes(ch);
  return ch;
}

void ChainScheduler::run(const ChainObserver& observer) {
  auto ch = build_chain();
  int changed = ch ? ch->size() - 1 : 0;
  edge_updates_ += changed;
  while (ch) {
    Expiration e = expiration(*ch);
    apply(*ch, e.t());
    ++events_;
    if (observer) observer(ChainEvent{*ch, e, e.t(), changed, *this});
    ch = patch(*ch, &changed);
    edge_updates_ += changed;
  }
  ensure(edge_updates_ <= 16 * std::max(n_, forest_.size()), "chain edge updates exceed 16n");
}

int lowest_node_containing(const LaminarForest& f, int v) {
  int best = -1;
  for (int x : f.live_nodes())
    if (contains(f.node(x).terminals, v) &&
        (best < 0 || f.node(x).terminals.size() < f.node(best).terminals.size()))
      best = x;
  return best;
}

ChainScheduler unconstrained_scheduler(const Graph& g, const LaminarForest& forest,
                                       const std::vector<Weight>& beta, Weight tau) {
  std::vector<VacancyBucket> buckets;
  for (int v = 0; v < g.vertex_count() && v < static_cast<int>(beta.size()); ++v) {
    if (beta[v] <= 0) continue;
    int leaf = lowest_node_containing(forest, v);
    if (leaf >= 0) buckets.push_back({v, leaf, beta[v]});
  }
  return ChainScheduler(forest, {}, std::move(buckets), tau, g.vertex_count());
}

ChainOutcome run_chains(const Graph& g, const LaminarForest& forest, const std::vector<Weight>& beta,
                        Weight tau, const ChainObserver& observer) {
  ChainScheduler s = unconstrained_scheduler(g, forest, beta, tau);
  s.run(observer);
  ChainOutcome out;
  out.edges = s.output().canonical();
  out.forest = s.snapshot();
  out.remaining = s.remaining_by_vertex();
  // Budget outside every deficient set never becomes an endpoint.
  for (int v = 0; v < g.vertex_count() && v < static_cast<int>(beta.size()); ++v)
    if (lowest_node_containing(forest, v) < 0) out.remaining[v] += beta[v];
  out.events = s.events();
  out.edge_updates = s.edge_updates();
  return out;
}

}  // namespace steiner
