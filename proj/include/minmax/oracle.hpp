#pragma once

#include <stdexcept>
#include <vector>

#include "minmax/agent.hpp"
#include "minmax/schedule.hpp"

namespace minmax {

//! The per-round communication graphs actually in force for a run: the
//! scheduled digraph restricted to started agents (self-loops always stay).
//! Gives reference values to test the distributed agents against: everything
//! here is computed from graph compositions, never from agent state.
class RunHistory {
 public:
  //! Derive active graphs for rounds 1..horizon from a schedule and the
  //! agents' start rounds.
  RunHistory(const Schedule& schedule, std::vector<int> inputs, std::vector<Round> starts,
             Round horizon);
  //! Adopt active graphs as recorded (e.g. from a trace).
  RunHistory(std::vector<Digraph> active_graphs, std::vector<int> inputs,
             std::vector<Round> starts);

  int node_count() const { return n_; }
  Round horizon() const { return static_cast<Round>(active_.size()); }
  const std::vector<int>& inputs() const { return inputs_; }
  const std::vector<Round>& starts() const { return starts_; }

  const Digraph& active_at(Round t) const;
  //! Composition of the active graphs over rounds a..b (loops-only if b < a).
  Digraph active_cumulative(Round a, Round b) const;
  //! Nodes with a temporal path to u across rounds a..b.
  NodeSet active_in_set(int u, Round a, Round b) const;

  //! Smallest input value with a temporal path to u within the first t
  //! rounds; the agent's own input at t = 0. Nonincreasing in t.
  int oracle_m(int u, Round t) const;
  //! Closed form of the output rule: the largest oracle_m(v, theta) over all
  //! v heard between rounds theta+1 and t. theta must lie in [0, t].
  int oracle_y(int u, Round t, Round theta) const;

 private:
  void validate() const;
  const Digraph& from_start(Round t) const;  // cumulative(1, t), cached

  int n_;
  std::vector<int> inputs_;
  std::vector<Round> starts_;
  std::vector<Digraph> active_;
  mutable std::vector<Digraph> from_start_;  // [t] = rounds 1..t composed
};

//! Build the active graph of one round: scheduled edges whose endpoints have
//! both started, plus all self-loops.
Digraph active_graph(const Digraph& scheduled, const std::vector<Round>& starts, Round t);

class UnsaturatedError : public std::runtime_error {
 public:
  explicit UnsaturatedError(const std::string& what) : std::runtime_error(what) {}
};

//! Limit of oracle_m per node, certified by saturation: once every agent has
//! started and the heard-of sets stay fixed across one full schedule cycle
//! past the prefix, they are fixed forever (monotone + periodic tail).
struct MStarReport {
  std::vector<int> per_node;    // lim_t oracle_m(u, t)
  int overall = 0;              // max over the nodes
  Round settle_round = 0;       // first round from which every oracle_m is at its limit
  Round saturation_round = 0;   // round where the heard-of sets were certified fixed
};

//! Throws UnsaturatedError if the horizon is too short to certify (a horizon
//! of max(start) + prefix + (n+1) * cycle rounds always suffices). Requires
//! every agent to start eventually.
MStarReport m_star_analysis(const Schedule& schedule, const std::vector<int>& inputs,
                            const std::vector<Round>& starts, Round horizon);

}  // namespace minmax
