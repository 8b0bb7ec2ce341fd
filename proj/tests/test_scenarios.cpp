#include <stdexcept>

#include "doctest.h"
#include "minmax/rng.hpp"
#include "minmax/scenarios.hpp"
#include "minmax/simulator.hpp"

using namespace minmax;

TEST_CASE("seeded rng is platform independent") {
  Rng a(7);
  Rng b(7);
  for (int i = 0; i < 20; ++i) CHECK_EQ(a.next(), b.next());
  Rng c(7);
  std::uint64_t first = c.next();
  Rng d(8);
  CHECK_NE(first, d.next());
  Rng e(7);
  for (int i = 0; i < 100; ++i) {
    int v = e.uniform_int(3, 9);
    CHECK_GE(v, 3);
    CHECK_LE(v, 9);
  }
  CHECK_THROWS_AS(e.uniform_int(5, 4), std::invalid_argument);
}

TEST_CASE("random digraphs respect density extremes and seeds") {
  Rng rng(51);
  CHECK_EQ(random_digraph(rng, 4, 0), Digraph::loops_only(4));
  CHECK_EQ(random_digraph(rng, 4, 1000000), Digraph::complete(4));
  Rng r1(52), r2(52);
  for (int i = 0; i < 10; ++i) CHECK_EQ(random_digraph(r1, 5, 400000), random_digraph(r2, 5, 400000));
}

TEST_CASE("random schedules stay inside the requested shape") {
  Rng rng(53);
  for (int i = 0; i < 30; ++i) {
    Schedule s = random_schedule(rng, 4, 3, 4, 300000);
    CHECK_EQ(s.node_count(), 4);
    CHECK_LE(s.prefix_length(), 3);
    CHECK_GE(s.cycle_length(), 1);
    CHECK_LE(s.cycle_length(), 4);
  }
  Rng r1(54), r2(54);
  CHECK_EQ(random_schedule(r1, 5, 2, 3, 350000), random_schedule(r2, 5, 2, 3, 350000));
}

TEST_CASE("chain digraph follows the given order") {
  Digraph g = chain_digraph(4, {2, 0, 3, 1});
  CHECK_EQ(g.edges(false),
           std::vector<std::pair<int, int>>({{0, 3}, {2, 0}, {3, 1}}));
  CHECK_EQ(chain_digraph(3, {0}).edge_count(false), 0);
}

TEST_CASE("fixed rooted scenario") {
  for (int n : {3, 6, 10}) {
    Schedule s = scenario_fixed_rooted(n, 99);
    CHECK_EQ(s.prefix_length(), 0);
    CHECK_EQ(s.cycle_length(), 1);
    CHECK(s.cycle()[0].is_rooted());
  }
  CHECK_EQ(scenario_fixed_rooted(5, 7), scenario_fixed_rooted(5, 7));
}

TEST_CASE("bounded delay scenario") {
  for (int T : {1, 2, 3}) {
    Schedule s = scenario_bounded_delay(6, T, 2, 123);
    CHECK_EQ(s.cycle_length(), 2);
    CHECK(s.is_rooted_with_delay(T));
  }
  CHECK_THROWS_AS(scenario_bounded_delay(4, 0, 1, 1), std::invalid_argument);
  CHECK_EQ(scenario_bounded_delay(5, 2, 2, 11), scenario_bounded_delay(5, 2, 2, 11));
}

TEST_CASE("empty kernel scenario splits the nodes") {
  for (int n : {2, 4, 5, 8}) {
    EmptyKernelScenario s = scenario_empty_kernel(n);
    CHECK(s.schedule.kernel().empty());
    CHECK_EQ(static_cast<int>(s.inputs.size()), n);
    CHECK_EQ(s.inputs.front(), 0);
    CHECK_EQ(s.inputs.back(), 1);
  }
  CHECK_THROWS_AS(scenario_empty_kernel(1), std::invalid_argument);
}

TEST_CASE("non-split scenario") {
  Schedule s = scenario_non_split(5, 3, 77);
  CHECK_EQ(s.cycle_length(), 3);
  for (const Digraph& g : s.cycle()) CHECK(g.is_non_split());
  CHECK_FALSE(s.kernel().empty());
}

TEST_CASE("adversary forces four flips then runs dry") {
  for (int n : {3, 5})
    for (const CutoffFamily& cutoff : {CutoffFamily::half(), CutoffFamily::log2()}) {
      INFO("n=", n, " cutoff=", cutoff.name());
      AdversaryResult r = adversary_alternating_chains(n, cutoff, 4);
      CHECK_EQ(r.phase_end_rounds, std::vector<Round>({2, 3, 4, 5}));
      CHECK_EQ(r.phase_end_values, std::vector<int>({1, 0, 1, 0}));
      CHECK_EQ(r.trace.horizon, 5);
      CHECK_EQ(static_cast<int>(r.prefix.size()), 5);
      // played graphs: forward twice, then rotated/forward/rotated
      CHECK_EQ(r.prefix[0], r.forward_chain);
      CHECK_EQ(r.prefix[1], r.forward_chain);
      CHECK_EQ(r.prefix[2], r.rotated_chain);
      CHECK_EQ(r.prefix[3], r.forward_chain);
      CHECK_EQ(r.prefix[4], r.rotated_chain);

      // the two chains cover a full ring, so continuing them forever lets
      // every node reach every other: the kernel is all of V
      CHECK_EQ(r.realized_schedule().kernel(), NodeSet::all(n));

      // a fifth phase can never end: from round 6 on the smallest value has
      // reached everyone and the large value's age outruns every safe cutoff
      CHECK_THROWS_AS(adversary_alternating_chains(n, cutoff, 5), AdversaryStallError);
    }
}

TEST_CASE("adversary respects an explicit phase budget") {
  CHECK_THROWS_AS(adversary_alternating_chains(3, CutoffFamily::half(), 4, 1),
                  AdversaryStallError);
  AdversaryResult a = adversary_alternating_chains(3, CutoffFamily::half(), 4);
  AdversaryResult b = adversary_alternating_chains(3, CutoffFamily::half(), 4);
  CHECK_EQ(a.trace, b.trace);
  CHECK_EQ(a.prefix, b.prefix);
}

TEST_CASE("adversary chain shapes") {
  AdversaryResult r = adversary_alternating_chains(3, CutoffFamily::half(), 1);
  CHECK_EQ(r.forward_chain.edges(false),
           std::vector<std::pair<int, int>>({{0, 1}, {1, 2}}));
  CHECK_EQ(r.rotated_chain.edges(false),
           std::vector<std::pair<int, int>>({{1, 2}, {2, 0}}));
  CHECK_EQ(r.trace.cycle_length, 2);
  CHECK_EQ(r.trace.cutoff, "half");
  CHECK_EQ(r.phase_end_rounds, std::vector<Round>({2}));
}
