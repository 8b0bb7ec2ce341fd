#include <stdexcept>

#include "doctest.h"
#include "minmax/oracle.hpp"
#include "minmax/rng.hpp"
#include "minmax/scenarios.hpp"
#include "minmax/simulator.hpp"

using namespace minmax;

namespace {

Digraph edge_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  Digraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

RunConfig complete3(Algorithm algorithm, Round horizon) {
  return RunConfig{ValueDomain::contiguous(3), {0, 1, 2}, {1, 1, 1},
                   Schedule({}, {Digraph::complete(3)}), CutoffFamily::half(), algorithm, horizon};
}

}  // namespace

TEST_CASE("config validation") {
  RunConfig ok = complete3(Algorithm::MinMax, 5);
  CHECK_NOTHROW(ok.validate());
  RunConfig bad_inputs = ok;
  bad_inputs.inputs = {0, 1};
  CHECK_THROWS_AS(bad_inputs.validate(), std::invalid_argument);
  RunConfig outside = ok;
  outside.inputs = {0, 1, 7};
  CHECK_THROWS_AS(outside.validate(), std::invalid_argument);
  RunConfig bad_start = ok;
  bad_start.starts = {0, 1, 1};
  CHECK_THROWS_AS(bad_start.validate(), std::invalid_argument);
  RunConfig bad_horizon = ok;
  bad_horizon.horizon = 0;
  CHECK_THROWS_AS(bad_horizon.validate(), std::invalid_argument);
}

TEST_CASE("config hash tracks content") {
  RunConfig a = complete3(Algorithm::MinMax, 5);
  RunConfig b = complete3(Algorithm::MinMax, 5);
  CHECK_EQ(a.hash(), b.hash());
  b.inputs = {0, 2, 1};
  CHECK_NE(a.hash(), b.hash());
  RunConfig c = complete3(Algorithm::Min, 5);
  CHECK_NE(a.hash(), c.hash());
}

TEST_CASE("single agent keeps its input") {
  Trace tr = run(RunConfig{ValueDomain::contiguous(2), {1}, {1}, Schedule({}, {Digraph(1)}),
                           CutoffFamily::half(), Algorithm::MinMax, 6});
  for (Round t = 1; t <= 6; ++t) CHECK_EQ(tr.at(t).agents[0].y, 1);
  StabilizationReport rep = check_stabilization(tr);
  CHECK_EQ(rep.status, StabilizationStatus::Stabilized);
  CHECK_EQ(rep.round, 1);
  CHECK_EQ(rep.value, 1);
  CHECK(rep.validity_ok);
}

TEST_CASE("complete graph floods the minimum in one round") {
  Trace tr = run(complete3(Algorithm::MinMax, 10));
  for (int u = 0; u < 3; ++u) {
    CHECK_EQ(tr.at(1).agents[u].x, 0);
    CHECK_EQ(tr.at(1).agents[u].y, 0);
  }
  StabilizationReport rep = check_stabilization(tr);
  CHECK_EQ(rep.status, StabilizationStatus::Stabilized);
  CHECK_EQ(rep.round, 1);
  CHECK_EQ(rep.value, 0);

  Trace min_tr = run(complete3(Algorithm::Min, 10));
  CHECK_EQ(check_stabilization(min_tr).value, 0);
}

TEST_CASE("stabilized needs a confirmation margin") {
  // settles at round 1, margin is max(2n, cycle) = 6
  Trace shy = run(complete3(Algorithm::MinMax, 6));
  CHECK_EQ(check_stabilization(shy).status, StabilizationStatus::Undetermined);
  CHECK_EQ(check_stabilization(shy).round, 1);
  Trace sure = run(complete3(Algorithm::MinMax, 7));
  CHECK_EQ(check_stabilization(sure).status, StabilizationStatus::Stabilized);
}

TEST_CASE("min baseline on a chain leaves a gradient") {
  // 0 -> 1 -> 2 with inputs 2,1,0: nobody upstream ever improves
  Schedule chain({}, {edge_graph(3, {{0, 1}, {1, 2}})});
  Trace tr = run(RunConfig{ValueDomain::contiguous(3), {2, 1, 0}, {1, 1, 1}, chain,
                           CutoffFamily::half(), Algorithm::Min, 9});
  CHECK_EQ(tr.at(9).agents[0].x, 2);
  CHECK_EQ(tr.at(9).agents[1].x, 1);
  CHECK_EQ(tr.at(9).agents[2].x, 0);
  CHECK_EQ(check_stabilization(tr).status, StabilizationStatus::Disagreement);
}

TEST_CASE("passive agents stay frozen and wake up on their start round") {
  Schedule complete({}, {Digraph::complete(2)});
  Trace tr = run(RunConfig{ValueDomain::contiguous(2), {1, 0}, {1, 3}, complete,
                           CutoffFamily::half(), Algorithm::MinMax, 8});
  // rounds 1..2: agent 1 is passive, identical frozen state, no edges active
  CHECK_EQ(tr.at(1).agents[1], tr.at(2).agents[1]);
  CHECK_EQ(tr.at(1).agents[1].counter, 0);
  CHECK_EQ(tr.at(1).agents[1].y, 0);
  CHECK_EQ(tr.at(1).active.edge_count(false), 0);
  CHECK_EQ(tr.at(2).agents[0].x, 1);  // alone so far
  // round 3: the edge appears, both hear the global minimum
  CHECK_EQ(tr.at(3).active.edge_count(false), 2);
  CHECK_EQ(tr.at(3).agents[0].x, 0);
  CHECK_EQ(tr.at(3).agents[1].counter, 1);
  RunHistory hist(complete, {1, 0}, {1, 3}, 8);
  for (Round t = 1; t <= 8; ++t)
    for (int u = 0; u < 2; ++u) CHECK_EQ(tr.at(t).agents[u].x, hist.oracle_m(u, t));
}

TEST_CASE("agent state matches the closed forms on random runs") {
  Rng rng(41);
  for (int i = 0; i < 10; ++i) {
    const int n = rng.uniform_int(2, 5);
    const Round horizon = rng.uniform_int(8, 16);
    ValueDomain domain = ValueDomain::contiguous(rng.uniform_int(2, 4));
    std::vector<int> inputs(static_cast<size_t>(n));
    for (int& x : inputs) x = domain.value_at(rng.uniform_int(0, domain.size() - 1));
    std::vector<Round> starts(static_cast<size_t>(n));
    for (Round& s : starts) s = rng.uniform_int(1, 3);
    Schedule sched = random_schedule(rng, n, 2, 3, 400000);
    CutoffFamily cutoff = i % 2 == 0 ? CutoffFamily::half() : CutoffFamily::log2();
    Trace tr = run(RunConfig{domain, inputs, starts, sched, cutoff, Algorithm::MinMax, horizon});
    RunHistory hist(sched, inputs, starts, horizon);
    for (Round t = 1; t <= horizon; ++t)
      for (int u = 0; u < n; ++u) {
        const AgentState& a = tr.at(t).agents[u];
        CHECK_EQ(a.x, hist.oracle_m(u, t));
        CHECK_EQ(a.y, hist.oracle_y(u, t, t - a.delta));
      }
  }
}

TEST_CASE("manual stepping matches run()") {
  RunConfig cfg = complete3(Algorithm::MinMax, 4);
  Trace via_run = run(cfg);
  Simulation sim(cfg.domain, cfg.inputs, cfg.starts, cfg.cutoff, cfg.algorithm);
  for (Round t = 1; t <= 4; ++t) sim.step(cfg.schedule.graph_at(t));
  Trace manual = sim.take_trace();
  manual.cycle_length = cfg.schedule.cycle_length();
  manual.config_hash = cfg.hash();
  CHECK_EQ(via_run, manual);
  CHECK_THROWS_AS(via_run.at(5), std::out_of_range);
  CHECK_THROWS_AS(via_run.at(0), std::out_of_range);
  CHECK_THROWS_AS(sim.step(Digraph(2)), std::invalid_argument);
}

TEST_CASE("disagreement when outputs never level out") {
  EmptyKernelScenario split = scenario_empty_kernel(4);
  Trace tr = run(RunConfig{ValueDomain::contiguous(2), split.inputs, {1, 1, 1, 1}, split.schedule,
                           CutoffFamily::half(), Algorithm::MinMax, 16});
  StabilizationReport rep = check_stabilization(tr);
  CHECK_EQ(rep.status, StabilizationStatus::Disagreement);
  CHECK(rep.validity_ok);
  CHECK_EQ(status_name(rep.status), "disagreement");
}
