#include <stdexcept>

#include "doctest.h"
#include "minmax/rng.hpp"
#include "minmax/scenarios.hpp"
#include "minmax/schedule.hpp"

using namespace minmax;

namespace {

Digraph edge_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  Digraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// forward and rotated 3-node chains; their union is a full ring, so
// alternating them forever leaves every node able to reach every other.
Schedule alternating_chains3() {
  Digraph g = edge_graph(3, {{0, 1}, {1, 2}});
  Digraph h = edge_graph(3, {{1, 2}, {2, 0}});
  return Schedule({}, {g, h});
}

}  // namespace

TEST_CASE("graph_at walks prefix then cycle") {
  Digraph a = edge_graph(2, {{0, 1}});
  Digraph b = edge_graph(2, {{1, 0}});
  Digraph c = Digraph::loops_only(2);
  Schedule s({a}, {b, c});
  CHECK_EQ(s.prefix_length(), 1);
  CHECK_EQ(s.cycle_length(), 2);
  const Digraph* expected[] = {&a, &b, &c, &b, &c, &b};
  for (Round t = 1; t <= 6; ++t) CHECK_EQ(s.graph_at(t), *expected[t - 1]);
  CHECK_THROWS_AS(s.graph_at(0), std::out_of_range);

  Schedule constant({}, {b});
  for (Round t = 1; t <= 4; ++t) CHECK_EQ(constant.graph_at(t), b);

  CHECK_THROWS_AS(Schedule({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Schedule({Digraph(2)}, {Digraph(3)}), std::invalid_argument);
}

TEST_CASE("cumulative products") {
  Digraph chain = edge_graph(3, {{0, 1}, {1, 2}});
  Schedule s({}, {chain});
  CHECK_EQ(s.cumulative(2, 1), Digraph::loops_only(3));
  CHECK_EQ(s.cumulative(5, 0), Digraph::loops_only(3));
  CHECK_EQ(s.cumulative(2, 2), chain);
  CHECK_EQ(s.cumulative(1, 2).edges(false),
           std::vector<std::pair<int, int>>({{0, 1}, {0, 2}, {1, 2}}));

  // splitting the window anywhere gives the same product
  Rng rng(21);
  Schedule r = random_schedule(rng, 4, 2, 3, 400000);
  for (Round t = 1; t <= 3; ++t)
    for (Round mid = t; mid <= 6; ++mid)
      for (Round t2 = mid + 1; t2 <= 8; ++t2)
        CHECK_EQ(r.cumulative(t, t2),
                 product(r.cumulative(t, mid), r.cumulative(mid + 1, t2)));
}

TEST_CASE("limit superior ignores the prefix") {
  Digraph loud = Digraph::complete(3);
  Digraph quiet = Digraph::loops_only(3);
  CHECK_EQ(Schedule({loud}, {quiet}).limit_superior(), quiet);
  CHECK_EQ(Schedule({}, {loud}).limit_superior(), loud);

  Schedule alt = alternating_chains3();
  CHECK_EQ(alt.limit_superior(),
           edge_graph(3, {{0, 1}, {1, 2}, {2, 0}}));
}

TEST_CASE("integral saturates to the closure of the recurring edges") {
  Digraph chain = edge_graph(3, {{0, 1}, {1, 2}});
  Schedule constant({}, {chain});
  CHECK_EQ(constant.integral_at(1), chain.transitive_closure());
  CHECK_EQ(constant.integral_limit(), chain.transitive_closure());

  Schedule quiet({}, {Digraph::loops_only(4)});
  CHECK_EQ(quiet.integral_at(3), Digraph::loops_only(4));

  // a loud prefix shows up in integral_at(1) but not in the limit
  Schedule loud_start({Digraph::complete(3)}, {Digraph::loops_only(3)});
  CHECK_EQ(loud_start.integral_at(1), Digraph::complete(3));
  CHECK_EQ(loud_start.integral_at(2), Digraph::loops_only(3));
  CHECK_EQ(loud_start.integral_limit(), Digraph::loops_only(3));

  // once inside the cycle the start round stops mattering
  Rng rng(22);
  for (int i = 0; i < 30; ++i) {
    Schedule s = random_schedule(rng, 5, 3, 4, 350000);
    Digraph limit = s.integral_limit();
    Round p = s.prefix_length();
    CHECK_EQ(s.integral_at(p + 1), limit);
    CHECK_EQ(s.integral_at(p + s.cycle_length() + 1), limit);
    Digraph from_start = s.integral_at(1);
    CHECK_EQ(from_start.union_with(limit), from_start);
  }
}

TEST_CASE("kernel of simple schedules") {
  Digraph chain = edge_graph(3, {{0, 1}, {1, 2}});
  CHECK_EQ(Schedule({}, {chain}).kernel().to_string(), "{0}");
  CHECK_EQ(Schedule({}, {Digraph::complete(4)}).kernel(), NodeSet::all(4));

  Digraph split(4);
  split.add_edge(0, 1);
  split.add_edge(1, 0);
  split.add_edge(2, 3);
  split.add_edge(3, 2);
  CHECK(Schedule({}, {split}).kernel().empty());
}

TEST_CASE("kernel of alternating chains is every node") {
  // both chain orders recur forever, so their union (a directed ring)
  // governs the limit: every node reaches every other infinitely often.
  Schedule alt = alternating_chains3();
  CHECK_EQ(alt.kernel(), NodeSet::all(3));
  CHECK_EQ(alt.limit_superior().roots(), NodeSet::all(3));
  CHECK_EQ(alt.integral_limit().central_roots(), NodeSet::all(3));
  CHECK_EQ(alt.integral_limit(), Digraph::complete(3));

  // same shape on five nodes
  Digraph g(5), h(5);
  for (int i = 0; i + 1 < 5; ++i) g.add_edge(i, i + 1);
  for (int i = 0; i < 4; ++i) h.add_edge((i + 1) % 5, (i + 2) % 5);
  Schedule alt5({}, {g, h});
  CHECK_EQ(alt5.kernel(), NodeSet::all(5));

  // a chain alone keeps only its head
  CHECK_EQ(Schedule({}, {edge_graph(3, {{0, 1}, {1, 2}})}).kernel().to_string(), "{0}");
}

TEST_CASE("rooted with delay") {
  Digraph chain = edge_graph(3, {{0, 1}, {1, 2}});
  CHECK(Schedule({}, {chain}).is_rooted_with_delay(1));

  Digraph star(3);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  Schedule lazy({}, {Digraph::loops_only(3), star});
  CHECK_FALSE(lazy.is_rooted_with_delay(1));
  CHECK(lazy.is_rooted_with_delay(2));

  Digraph split(4);
  split.add_edge(0, 1);
  split.add_edge(1, 0);
  split.add_edge(2, 3);
  split.add_edge(3, 2);
  Schedule never({}, {split});
  for (int T = 1; T <= 6; ++T) CHECK_FALSE(never.is_rooted_with_delay(T));

  CHECK_THROWS_AS(lazy.is_rooted_with_delay(0), std::invalid_argument);
}

TEST_CASE("bounded reach scan") {
  Schedule complete({}, {Digraph::complete(4)});
  auto s0 = complete.bounded_reach_check(1, 10);
  REQUIRE(s0.has_value());
  CHECK_EQ(*s0, 1);

  Digraph chain = edge_graph(3, {{0, 1}, {1, 2}});
  auto s1 = Schedule({}, {chain}).bounded_reach_check(1, 8);
  REQUIRE(s1.has_value());
  CHECK_EQ(*s1, 1);  // kernel {0} feeds everyone within 2 rounds

  // empty kernel: no window ever meets it
  Digraph split(4);
  split.add_edge(0, 1);
  split.add_edge(1, 0);
  split.add_edge(2, 3);
  split.add_edge(3, 2);
  CHECK_FALSE(Schedule({}, {split}).bounded_reach_check(1, 8).has_value());
}
