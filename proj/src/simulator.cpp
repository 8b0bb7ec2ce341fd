#include "minmax/simulator.hpp"

#include <algorithm>
#include <stdexcept>

#include "minmax/oracle.hpp"

namespace minmax {

namespace {

// FNV-1a, for the trace's config fingerprint.
struct Fnv {
  std::uint64_t h = 1469598103934665603ull;
  void feed(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  void feed_int(int v) { feed(static_cast<std::uint64_t>(static_cast<std::int64_t>(v))); }
  void feed_str(const std::string& s) {
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
  }
  void feed_graph(const Digraph& g) {
    feed_int(g.node_count());
    for (int u = 0; u < g.node_count(); ++u) feed(g.row(u));
  }
};

}  // namespace

std::string algorithm_name(Algorithm a) { return a == Algorithm::MinMax ? "minmax" : "min"; }

void RunConfig::validate() const {
  const int n = node_count();
  if (static_cast<int>(inputs.size()) != n)
    throw std::invalid_argument("RunConfig: need one input per node");
  if (static_cast<int>(starts.size()) != n)
    throw std::invalid_argument("RunConfig: need one start round per node");
  for (int v : inputs)
    if (!domain.contains(v)) throw std::invalid_argument("RunConfig: input outside the domain");
  for (Round s : starts)
    if (s < 1) throw std::invalid_argument("RunConfig: start rounds begin at 1");
  if (horizon < 1) throw std::invalid_argument("RunConfig: horizon must be >= 1");
}

std::uint64_t RunConfig::hash() const {
  Fnv f;
  f.feed_str(algorithm_name(algorithm));
  f.feed_str(cutoff.name());
  f.feed_int(horizon);
  for (int v : domain.values()) f.feed_int(v);
  for (int v : inputs) f.feed_int(v);
  for (Round s : starts) f.feed_int(s);
  f.feed_int(schedule.prefix_length());
  for (const Digraph& g : schedule.prefix()) f.feed_graph(g);
  f.feed_int(schedule.cycle_length());
  for (const Digraph& g : schedule.cycle()) f.feed_graph(g);
  return f.h;
}

const TraceRound& Trace::at(Round t) const {
  if (t < 1 || t > horizon) throw std::out_of_range("Trace::at: round out of range");
  return rounds[static_cast<size_t>(t - 1)];
}

Simulation::Simulation(ValueDomain domain, std::vector<int> inputs, std::vector<Round> starts,
                       CutoffFamily cutoff, Algorithm algorithm)
    : domain_(std::move(domain)),
      inputs_(std::move(inputs)),
      starts_(std::move(starts)),
      cutoff_(std::move(cutoff)),
      algorithm_(algorithm) {
  if (inputs_.size() != starts_.size() || inputs_.empty())
    throw std::invalid_argument("Simulation: inputs/starts size mismatch");
  states_.reserve(inputs_.size());
  for (size_t u = 0; u < inputs_.size(); ++u) {
    AgentState s = agent_init(inputs_[u], domain_);
    s.start = starts_[u];
    states_.push_back(std::move(s));
  }
}

const std::vector<AgentState>& Simulation::step(const Digraph& scheduled) {
  const int n = static_cast<int>(states_.size());
  if (scheduled.node_count() != n) throw std::invalid_argument("Simulation::step: node count mismatch");
  const Round t = round_ + 1;
  const Digraph active = active_graph(scheduled, starts_, t);

  // All agents of the round read the snapshot from the end of round t-1
  // (a just-started neighbor contributes its initialized state).
  const std::vector<AgentState> prev = states_;
  for (int u = 0; u < n; ++u) {
    if (starts_[static_cast<size_t>(u)] > t) continue;  // not started: frozen
    if (algorithm_ == Algorithm::MinMax) {
      std::vector<AgeVector> received;
      for (int v : active.in_neighbors(u).members()) received.push_back(prev[static_cast<size_t>(v)].age);
      states_[static_cast<size_t>(u)] = agent_round(prev[static_cast<size_t>(u)], received, cutoff_, domain_);
    } else {
      std::vector<int> received;
      for (int v : active.in_neighbors(u).members()) received.push_back(prev[static_cast<size_t>(v)].x);
      states_[static_cast<size_t>(u)] = min_agent_round(prev[static_cast<size_t>(u)], received);
    }
  }
  round_ = t;
  recorded_.push_back(TraceRound{active, states_});
  return states_;
}

Trace Simulation::take_trace() {
  Trace tr;
  tr.n = static_cast<int>(states_.size());
  tr.horizon = round_;
  tr.algorithm = algorithm_name(algorithm_);
  tr.cutoff = cutoff_.name();
  tr.inputs = inputs_;
  tr.rounds = std::move(recorded_);
  recorded_.clear();
  return tr;
}

Trace run(const RunConfig& config) {
  config.validate();
  Simulation sim(config.domain, config.inputs, config.starts, config.cutoff, config.algorithm);
  for (Round t = 1; t <= config.horizon; ++t) sim.step(config.schedule.graph_at(t));
  Trace tr = sim.take_trace();
  tr.cycle_length = config.schedule.cycle_length();
  tr.config_hash = config.hash();
  return tr;
}

std::string status_name(StabilizationStatus s) {
  switch (s) {
    case StabilizationStatus::Stabilized: return "stabilized";
    case StabilizationStatus::Undetermined: return "undetermined";
    case StabilizationStatus::Disagreement: return "disagreement";
  }
  return "?";
}

StabilizationReport check_stabilization(const Trace& trace) {
  if (trace.rounds.empty()) throw std::invalid_argument("check_stabilization: empty trace");
  StabilizationReport report;

  // Validity: every output at every round is somebody's input.
  report.validity_ok = true;
  for (const TraceRound& r : trace.rounds)
    for (const AgentState& a : r.agents)
      if (std::find(trace.inputs.begin(), trace.inputs.end(), a.y) == trace.inputs.end()) {
        report.validity_ok = false;
        break;
      }

  // Least round from which every y is equal and stays put through the end.
  Round s = 0;
  for (Round t = trace.horizon; t >= 1; --t) {
    const std::vector<AgentState>& agents = trace.at(t).agents;
    const int v = agents.front().y;
    bool uniform = true;
    for (const AgentState& a : agents) uniform = uniform && a.y == v;
    if (!uniform || (s != 0 && v != report.value)) break;
    report.value = v;
    s = t;
  }

  if (s == 0) {
    report.status = StabilizationStatus::Disagreement;
    report.value = 0;
    return report;
  }
  report.round = s;
  const Round margin = std::max(2 * trace.n, trace.cycle_length);
  report.stabilized = trace.horizon - s >= margin;
  report.status = report.stabilized ? StabilizationStatus::Stabilized : StabilizationStatus::Undetermined;
  return report;
}

}  // namespace minmax
