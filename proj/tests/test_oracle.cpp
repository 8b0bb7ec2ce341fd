#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "minmax/oracle.hpp"
#include "minmax/rng.hpp"
#include "minmax/scenarios.hpp"

using namespace minmax;

namespace {

Digraph edge_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  Digraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// Reference in-set by backward walking, one round at a time, using only the
// edge lists. Deliberately avoids the bitset composition the library uses.
std::set<int> slow_in_set(const RunHistory& hist, int u, Round a, Round b) {
  std::set<int> reach{u};
  for (Round r = b; r >= std::max<Round>(a, 1); --r) {
    std::set<int> grown = reach;
    for (auto [w, v] : hist.active_at(r).edges(true))
      if (reach.count(v)) grown.insert(w);
    reach = std::move(grown);
  }
  return reach;
}

}  // namespace

TEST_CASE("active graph keeps edges between started agents only") {
  Digraph full = Digraph::complete(3);
  std::vector<Round> starts{1, 2, 4};
  CHECK_EQ(active_graph(full, starts, 1), Digraph::loops_only(3));
  CHECK_EQ(active_graph(full, starts, 2), edge_graph(3, {{0, 1}, {1, 0}}));
  CHECK_EQ(active_graph(full, starts, 3), edge_graph(3, {{0, 1}, {1, 0}}));
  CHECK_EQ(active_graph(full, starts, 4), full);

  std::vector<Round> never{1, kNeverActive};
  CHECK_EQ(active_graph(Digraph::complete(2), never, 1000), Digraph::loops_only(2));
}

TEST_CASE("least heard input") {
  // chain 0->1->2 with inputs 2,1,0: minima flow downstream only
  Schedule chain({}, {edge_graph(3, {{0, 1}, {1, 2}})});
  RunHistory hist(chain, {2, 1, 0}, {1, 1, 1}, 6);
  CHECK_EQ(hist.oracle_m(0, 0), 2);
  CHECK_EQ(hist.oracle_m(0, 6), 2);
  CHECK_EQ(hist.oracle_m(1, 1), 1);
  CHECK_EQ(hist.oracle_m(1, 6), 1);
  CHECK_EQ(hist.oracle_m(2, 1), 0);

  Schedule complete({}, {Digraph::complete(3)});
  RunHistory all(complete, {2, 1, 0}, {1, 1, 1}, 4);
  for (int u = 0; u < 3; ++u) CHECK_EQ(all.oracle_m(u, 1), 0);

  CHECK_THROWS_AS(hist.oracle_m(0, 7), std::out_of_range);
  CHECK_THROWS_AS(hist.oracle_m(3, 1), std::out_of_range);
}

TEST_CASE("windowed output value") {
  Schedule chain({}, {edge_graph(3, {{0, 1}, {1, 2}})});
  RunHistory hist(chain, {2, 1, 0}, {1, 1, 1}, 6);
  // theta = t: nobody else in the window, falls back to the own minimum
  for (int u = 0; u < 3; ++u) CHECK_EQ(hist.oracle_y(u, 4, 4), hist.oracle_m(u, 4));
  // theta = 0: the largest initial input heard of in 1..t
  CHECK_EQ(hist.oracle_y(2, 4, 0), 2);
  CHECK_EQ(hist.oracle_y(1, 4, 0), 2);
  CHECK_EQ(hist.oracle_y(0, 4, 0), 2);
  // theta between: a one-round window shows node 2 only node 1, whose
  // minimum at theta = 1 is still its own input
  CHECK_EQ(hist.oracle_y(2, 2, 1), 1);
  // a two-round window lets node 0's value through as well
  CHECK_EQ(hist.oracle_y(2, 4, 2), 2);

  CHECK_THROWS_AS(hist.oracle_y(0, 4, 5), std::domain_error);
  CHECK_THROWS_AS(hist.oracle_y(0, 4, -1), std::domain_error);
}

TEST_CASE("in-sets match a naive backward walk") {
  Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    const int n = rng.uniform_int(2, 5);
    const Round horizon = rng.uniform_int(4, 10);
    Schedule sched = random_schedule(rng, n, 2, 3, 350000);
    std::vector<int> inputs(static_cast<size_t>(n));
    for (int& x : inputs) x = rng.uniform_int(0, 3);
    std::vector<Round> starts(static_cast<size_t>(n));
    for (Round& s : starts) s = rng.uniform_int(1, 3);
    RunHistory hist(sched, inputs, starts, horizon);
    for (int u = 0; u < n; ++u)
      for (Round a = 1; a <= horizon; ++a)
        for (Round b = a - 1; b <= horizon; ++b) {
          auto members = hist.active_in_set(u, a, b).members();
          std::set<int> fast(members.begin(), members.end());
          CHECK_EQ(fast, slow_in_set(hist, u, a, b));
        }
  }
}

TEST_CASE("heard minimum never increases over time") {
  Rng rng(32);
  for (int i = 0; i < 30; ++i) {
    const int n = rng.uniform_int(2, 5);
    Schedule sched = random_schedule(rng, n, 2, 3, 400000);
    std::vector<int> inputs(static_cast<size_t>(n));
    for (int& x : inputs) x = rng.uniform_int(0, 4);
    RunHistory hist(sched, inputs, std::vector<Round>(static_cast<size_t>(n), 1), 12);
    for (int u = 0; u < n; ++u)
      for (Round t = 1; t <= 12; ++t) CHECK_LE(hist.oracle_m(u, t), hist.oracle_m(u, t - 1));
  }
}

TEST_CASE("long-run minima on hand-checked schedules") {
  // complete graph: everyone settles on the global minimum
  MStarReport ms = m_star_analysis(Schedule({}, {Digraph::complete(3)}), {2, 1, 0}, {1, 1, 1}, 12);
  CHECK_EQ(ms.per_node, std::vector<int>({0, 0, 0}));
  CHECK_EQ(ms.overall, 0);

  // constant chain: the head never hears the smaller values downstream
  Digraph g = edge_graph(3, {{0, 1}, {1, 2}});
  MStarReport head = m_star_analysis(Schedule({}, {g}), {1, 0, 0}, {1, 1, 1}, 12);
  CHECK_EQ(head.per_node, std::vector<int>({1, 0, 0}));
  CHECK_EQ(head.overall, 1);

  // play the chain three rounds, then the rotated chain forever: node 1
  // keeps its own 0, and the rotation floods 0 everywhere, so the max drops
  Digraph h = edge_graph(3, {{1, 2}, {2, 0}});
  MStarReport flip = m_star_analysis(Schedule({g, g, g}, {h}), {1, 0, 0}, {1, 1, 1}, 20);
  CHECK_EQ(flip.per_node, std::vector<int>({0, 0, 0}));
  CHECK_EQ(flip.overall, 0);

  CHECK_EQ(ms.settle_round, 1);
  CHECK_GE(flip.settle_round, 1);
  // the settle round really is the first round where every node is at its limit
  RunHistory hist(Schedule({g, g, g}, {h}), {1, 0, 0}, {1, 1, 1}, 20);
  for (int u = 0; u < 3; ++u)
    CHECK_EQ(hist.oracle_m(u, flip.settle_round), flip.per_node[static_cast<size_t>(u)]);
  bool earlier_differs = false;
  for (int u = 0; u < 3; ++u)
    earlier_differs |=
        hist.oracle_m(u, flip.settle_round - 1) != flip.per_node[static_cast<size_t>(u)];
  CHECK(earlier_differs);
}

TEST_CASE("saturation certificate demands a long enough horizon") {
  Digraph g = edge_graph(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(m_star_analysis(Schedule({}, {g}), {1, 0, 0}, {1, 1, 1}, 2), UnsaturatedError);
  CHECK_THROWS_AS(m_star_analysis(Schedule({}, {g}), {1, 0, 0}, {1, kNeverActive, 1}, 10),
                  std::invalid_argument);
  // staggered but finite starts are fine with room to spare
  MStarReport ms = m_star_analysis(Schedule({}, {g}), {1, 0, 0}, {4, 1, 2}, 16);
  CHECK_EQ(ms.overall, 1);  // node 0 still never hears anyone
}
