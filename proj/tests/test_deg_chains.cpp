#include <doctest.h>

#include "steiner/deg_chains.hpp"
#include "steiner/flow.hpp"
#include "steiner/match_one.hpp"
#include "steiner/oracle.hpp"
#include "support/chain_checks.hpp"
#include "support/deg_setup.hpp"
#include "support/fixtures.hpp"

using namespace steiner;
using deg_setup::feasible_budget;
using deg_setup::prepared_forest;

TEST_CASE("split-off chains on the path with exact budgets") {
  Graph g = fixtures::path();
  auto f = prepared_forest(g, 3, 1);
  auto ext = deg_external_augment(g, 3, {2, 0, 2}, f);
  auto setup = init_state(f, ext);
  for (const auto& b : setup.buckets) CHECK(setup.protected_nodes[b.leaf]);
  auto out = split_off_chains(g, f, ext, 3);
  CHECK(out.edges.total_weight() == 1);
  CHECK(out.remaining == std::vector<Weight>{1, 0, 1});
}

TEST_CASE("split-off chains on the 4-cycle") {
  Graph g = fixtures::cyc4();
  auto f = prepared_forest(g, 4, 1);
  auto ext = deg_external_augment(g, 4, {2, 2, 2, 2}, f);
  CHECK(ext.solution.total() == 8);
  CHECK_THROWS_AS(deg_external_augment(g, 4, {1, 1, 1, 1}, f), Infeasible);
  auto out = split_off_chains(g, f, ext, 4);
  Graph cur = add_edges(g, out.edges);
  CHECK(steiner_connectivity(cur) >= 3);
  CHECK(steiner_connectivity(with_external_vertex(cur, out.remaining)) >= 4);
}

TEST_CASE("split-off chain properties on random graphs") {
  std::mt19937_64 rng(83);
  int events = 0, multi = 0;
  for (int it = 0; it < 250; ++it) {
    Graph g = fixtures::random_graph(rng, {.n_min = 3, .n_max = 9, .max_w = 4, .extra = 0.15 + 0.1 * (it % 3)});
    Weight tau = steiner_connectivity(g) + 1 + static_cast<Weight>(rng() % 5);
    auto f = prepared_forest(g, tau, it);
    auto beta = feasible_budget(g, tau, f, rng);
    auto ext = deg_external_augment(g, tau, beta, f);
    CAPTURE(it);

    auto setup = init_state(f, ext);
    for (const auto& b : setup.buckets) {
      CHECK(setup.protected_nodes[b.leaf]);
      CHECK(setup.forest.is_live(b.leaf));
    }

    auto before = chain_checks::extreme_members(g);
    int bad = 0;
    auto out = split_off_chains(g, f, ext, tau, [&](const ChainEvent& ev) {
      bad += !chain_checks::no_new_extreme(g, before, ev.state.output());
      CHECK(ev.applied >= 1);
    });
    CHECK(bad == 0);
    Graph cur = add_edges(g, out.edges);
    CHECK(steiner_connectivity(cur) >= tau - 1);
    auto deg = out.edges.degrees(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
      CHECK(out.remaining[v] >= 0);
      CHECK(deg[v] + out.remaining[v] == ext.solution.beta[v]);
    }
    std::vector<int> star;
    for (int v = 0; v < g.vertex_count(); ++v)
      for (Weight k = 0; k < out.remaining[v]; ++k) star.push_back(v);
    CHECK(is_feasible_partial(cur, star, {}, tau));

    auto a = chain_checks::audit(deg_scheduler(g, f, ext, tau), g);
    CHECK(a.lazy_mismatches == 0);
    CHECK(a.expiry_mismatches == 0);
    events += a.events;
    multi += a.events > 1;
  }
  MESSAGE("split-off batches: " << events << ", runs with several batches: " << multi);
  CHECK(multi > 20);
}

TEST_CASE("unbounded budgets match the unconstrained chain weight") {
  std::mt19937_64 rng(89);
  for (int it = 0; it < 100; ++it) {
    Graph g = fixtures::random_graph(rng, {.n_min = 3, .n_max = 9});
    Weight tau = steiner_connectivity(g) + 1 + static_cast<Weight>(rng() % 3);
    auto f = prepared_forest(g, tau, it);
    std::vector<Weight> big(g.vertex_count(), 1000);
    auto ext = deg_external_augment(g, tau, big, f);
    auto out = split_off_chains(g, f, ext, tau);
    auto free_ext = external_augment(f, tau, g.vertex_count());
    auto ref = run_chains(g, f, free_ext.beta, tau);
    CAPTURE(it);
    CHECK(ext.solution.total() == free_ext.total());
    CHECK(add_edges(g, out.edges).vertex_count() == g.vertex_count());
    // Both leave K of the same size for the final matching.
    CHECK(ext.solution.total() - 2 * out.edges.total_weight() ==
          free_ext.total() - 2 * ref.edges.total_weight());
  }
}
