#include <doctest.h>

#include "steiner/deg_external.hpp"
#include "steiner/oracle.hpp"
#include "support/deg_setup.hpp"
#include "support/fixtures.hpp"

using namespace steiner;
using deg_setup::feasible_budget;
using deg_setup::prepared_forest;

namespace {

// Outgoing capacity of a node set of H; -1 when an infinite arc leaves it.
Weight out_capacity(const HNetwork& h, const std::vector<char>& in) {
  Weight s = 0;
  for (const auto& a : h.net.arcs()) {
    if (in[a.from] && !in[a.to]) {
      if (a.infinite) return -1;
      s += a.cap;
    }
    if (in[a.to] && !in[a.from]) s += a.reverse_cap;
  }
  return s;
}

}  // namespace

TEST_CASE("feasibility of degree budgets") {
  CHECK(check_feasibility(fixtures::path(), 3, {2, 0, 2}));
  CHECK_FALSE(check_feasibility(fixtures::path(), 3, {1, 0, 2}));
  CHECK(check_feasibility(fixtures::cyc4(), 2, {0, 0, 0, 0}));
}

TEST_CASE("degree-constrained external augmentation of the path") {
  Graph g = fixtures::path();
  auto f = prepared_forest(g, 3, 1);
  auto hld = heavy_light(f, true);
  for (const auto& p : hld.paths) {
    HNetwork h = build_H(g, {2, 0, 2}, {0, 0, 0}, f, p);
    CHECK(h.delta == 2);
    CHECK(h.net.node_count() == 3 + static_cast<int>(f.node(p.head()).vertex_set->size()) - 1);
  }
  auto r = deg_external_augment(g, 3, {2, 0, 2}, f);
  CHECK(r.solution.beta == std::vector<Weight>{2, 0, 2});
  for (auto v : r.flow_values) CHECK(v == 3);
}

TEST_CASE("degree-constrained external augmentation routes through non-terminals") {
  Graph g = fixtures::split();
  std::vector<Weight> beta{0, 2, 2, 2};
  auto f = prepared_forest(g, 4, 1);
  auto r = deg_external_augment(g, 4, beta, f);
  CHECK(r.solution.beta[0] == 0);
  CHECK(r.solution.beta[1] + r.solution.beta[2] == 1);
  CHECK(r.solution.beta[3] == 1);
  CHECK(steiner_connectivity(with_external_vertex(g, r.solution.beta)) >= 4);
}

TEST_CASE("already connected graphs need nothing") {
  auto f = prepared_forest(fixtures::cyc4(), 2, 1);
  auto r = deg_external_augment(fixtures::cyc4(), 2, {1, 1, 1, 1}, f);
  CHECK(r.solution.total() == 0);
}

TEST_CASE("degree-constrained external augmentation on random graphs") {
  std::mt19937_64 rng(73);
  for (int it = 0; it < 150; ++it) {
    Graph g = fixtures::random_graph(rng, {.n_min = 3, .n_max = 9});
    Weight tau = steiner_connectivity(g) + 1 + static_cast<Weight>(rng() % 3);
    auto f = prepared_forest(g, tau, it);
    auto beta = feasible_budget(g, tau, f, rng);
    CAPTURE(it);
    auto r = deg_external_augment(g, tau, beta, f);
    CHECK(r.solution.total() == optimal_external_value(g, tau));
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(r.solution.beta[v] <= beta[v]);
    CHECK(steiner_connectivity(with_external_vertex(g, r.solution.beta)) >= tau);
    for (int i : r.order) CHECK(r.flow_values[i] == tau);
    for (std::size_t a = 0; a < r.hld.paths.size(); ++a)
      for (std::size_t b = a + 1; b < r.hld.paths.size(); ++b)
        if (r.hld.paths[a].depth == r.hld.paths[b].depth)
          CHECK(set_intersection(*f.node(r.hld.paths[a].head()).vertex_set,
                                 *f.node(r.hld.paths[b].head()).vertex_set).empty());

    // Unbounded budgets reproduce the unconstrained optimum.
    std::vector<Weight> big(g.vertex_count(), 1000);
    CHECK(deg_external_augment(g, tau, big, f).solution.total() ==
          external_augment(f, tau, g.vertex_count()).total());
  }
}

TEST_CASE("flow network identities and per-path effects") {
  std::mt19937_64 rng(79);
  for (int it = 0; it < 60; ++it) {
    Graph g = fixtures::random_graph(rng, {.n_min = 3, .n_max = 7, .max_w = 3});
    Weight tau = steiner_connectivity(g) + 1 + static_cast<Weight>(rng() % 3);
    auto f = prepared_forest(g, tau, it);
    auto beta = feasible_budget(g, tau, f, rng);
    auto oracle = supreme_sets_bruteforce(g);
    auto true_mu = [&](const VertexSet& r) {
      for (int v : oracle.live_nodes())
        if (oracle.node(v).terminals == r) return *oracle.node(v).vertex_set;
      return CutSide{};
    };
    auto hld = heavy_light(f, true);
    std::vector<int> order(hld.paths.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::pair(-hld.paths[a].depth, hld.paths[a].head()) < std::pair(-hld.paths[b].depth, hld.paths[b].head());
    });
    const VertexSet& T = g.terminals();
    std::vector<Weight> ext(g.vertex_count(), 0);
    for (int pi : order) {
      const HeavyPath& p = hld.paths[pi];
      HNetwork h = build_H(g, beta, ext, f, p);
      Graph before = with_external_vertex(g, ext);
      const int x = g.vertex_count();
      // δ_H(S) = d(S) + β(S) and δ_H(S ∪ {y}) = d_{G_{ℓ-1}}(S) + Δ for S ⊆ μ̃(R_k) with ρ(S) = R_i.
      const CutSide& mu = *f.node(p.head()).vertex_set;
      VertexSet free_part;
      for (int v : mu)
        if (!g.is_terminal(v)) free_part.push_back(v);
      for (std::uint32_t m = 0; m < (1u << free_part.size()); ++m)
        for (int r : p.nodes) {
          CutSide s = f.node(r).terminals;
          for (std::size_t j = 0; j < free_part.size(); ++j)
            if (m >> j & 1) s.push_back(free_part[j]);
          s = make_set(s);
          std::vector<char> in(h.net.node_count(), 0);
          for (int v : s) in[h.label[v]] = 1;
          Weight bs = 0;
          for (int v : s) bs += beta[v];
          CHECK(out_capacity(h, in) == cut_value(g, s) + bs);
          in[h.y] = 1;
          CHECK(out_capacity(h, in) == cut_value(before, s) + h.delta);
        }
      std::vector<DegAssignment> log;
      process_path(g, beta, ext, f, hld, pi, &log);
      Graph after = with_external_vertex(g, ext);
      // New weight lands in the true supreme set of the highest critical node.
      int rm = -1;
      for (int r : p.nodes)
        if (f.node(r).critical) rm = r;
      REQUIRE(rm >= 0);
      CutSide mu_m = true_mu(f.node(rm).terminals);
      for (const auto& a : log) CHECK(contains(mu_m, a.vertex));
      // Every R ⊇ R_k gains exactly Δ in its R-(T∖R) min cut, x kept off the R side.
      const VertexSet& rk = f.node(p.head()).terminals;
      for (std::uint32_t m = 0; m < (1u << T.size()); ++m) {
        VertexSet r;
        for (std::size_t j = 0; j < T.size(); ++j)
          if (m >> j & 1) r.push_back(T[j]);
        if (r.size() == T.size() || !is_subset(rk, r)) continue;
        VertexSet rest = set_difference(T, r);
        rest.push_back(x);
        CHECK(min_cut(after, r, rest).value - min_cut(before, r, rest).value == h.delta);
      }
    }
  }
}
