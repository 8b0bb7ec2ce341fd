#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minmax/agent.hpp"
#include "minmax/schedule.hpp"

namespace minmax {

enum class Algorithm { MinMax, Min };

std::string algorithm_name(Algorithm a);

struct RunConfig {
  ValueDomain domain;
  std::vector<int> inputs;   // one per node, each in the domain
  std::vector<Round> starts; // one per node, >= 1 or kNeverActive
  Schedule schedule;
  CutoffFamily cutoff;
  Algorithm algorithm = Algorithm::MinMax;
  Round horizon = 1;

  int node_count() const { return schedule.node_count(); }
  void validate() const;  // throws std::invalid_argument
  std::uint64_t hash() const;
};

//! Snapshot at the end of a round: the communication graph that was in force
//! and every agent's state (agents that have not started yet carry their
//! initialized state, frozen).
struct TraceRound {
  Digraph active;
  std::vector<AgentState> agents;

  bool operator==(const TraceRound& other) const = default;
};

struct Trace {
  int n = 0;
  Round horizon = 0;
  int cycle_length = 1;  // of the producing schedule; sets the checker's margin
  std::string algorithm;
  std::string cutoff;
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
  std::vector<int> inputs;
  std::vector<TraceRound> rounds;  // index t-1

  const TraceRound& at(Round t) const;

  bool operator==(const Trace& other) const = default;
};

//! Advances a run one round at a time against caller-supplied digraphs, so
//! both fixed schedules and adaptive constructions drive the same agent code.
//! Agents of a round all read the previous round's states (synchronous).
class Simulation {
 public:
  Simulation(ValueDomain domain, std::vector<int> inputs, std::vector<Round> starts,
             CutoffFamily cutoff, Algorithm algorithm);

  const std::vector<AgentState>& step(const Digraph& scheduled);
  Round rounds_done() const { return round_; }
  const std::vector<AgentState>& states() const { return states_; }
  const std::vector<TraceRound>& recorded() const { return recorded_; }
  Trace take_trace();

 private:
  ValueDomain domain_;
  std::vector<int> inputs_;
  std::vector<Round> starts_;
  CutoffFamily cutoff_;
  Algorithm algorithm_;
  Round round_ = 0;
  std::vector<AgentState> states_;
  std::vector<TraceRound> recorded_;
};

Trace run(const RunConfig& config);

enum class StabilizationStatus { Stabilized, Undetermined, Disagreement };

std::string status_name(StabilizationStatus s);

//! Result of scanning a trace for a constant all-agents-equal suffix.
//! `round` and `value` are meaningful unless status is Disagreement.
//! Stabilized is only claimed with a confirmation margin of max(2n, cycle)
//! rounds between `round` and the horizon; a shorter margin reports
//! Undetermined. validity_ok: every output at every round was some input.
struct StabilizationReport {
  StabilizationStatus status = StabilizationStatus::Disagreement;
  bool stabilized = false;
  Round round = 0;
  int value = 0;
  bool validity_ok = false;
};

StabilizationReport check_stabilization(const Trace& trace);

}  // namespace minmax
