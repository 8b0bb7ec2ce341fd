#include "minmax/oracle.hpp"

#include <algorithm>

namespace minmax {

Digraph active_graph(const Digraph& scheduled, const std::vector<Round>& starts, Round t) {
  const int n = scheduled.node_count();
  if (static_cast<int>(starts.size()) != n)
    throw std::invalid_argument("active_graph: starts size mismatch");
  Digraph g(n);
  for (auto [u, v] : scheduled.edges())
    if (starts[static_cast<size_t>(u)] <= t && starts[static_cast<size_t>(v)] <= t)
      g.add_edge(u, v);
  return g;
}

RunHistory::RunHistory(const Schedule& schedule, std::vector<int> inputs,
                       std::vector<Round> starts, Round horizon)
    : n_(schedule.node_count()), inputs_(std::move(inputs)), starts_(std::move(starts)) {
  if (horizon < 1) throw std::invalid_argument("RunHistory: horizon must be >= 1");
  active_.reserve(static_cast<size_t>(horizon));
  for (Round t = 1; t <= horizon; ++t) active_.push_back(active_graph(schedule.graph_at(t), starts_, t));
  validate();
}

RunHistory::RunHistory(std::vector<Digraph> active_graphs, std::vector<int> inputs,
                       std::vector<Round> starts)
    : n_(0), inputs_(std::move(inputs)), starts_(std::move(starts)), active_(std::move(active_graphs)) {
  if (active_.empty()) throw std::invalid_argument("RunHistory: need at least one round");
  n_ = active_.front().node_count();
  for (const Digraph& g : active_)
    if (g.node_count() != n_) throw std::invalid_argument("RunHistory: node count mismatch");
  validate();
}

void RunHistory::validate() const {
  if (static_cast<int>(inputs_.size()) != n_ || static_cast<int>(starts_.size()) != n_)
    throw std::invalid_argument("RunHistory: inputs/starts size mismatch");
  for (Round s : starts_)
    if (s < 1) throw std::invalid_argument("RunHistory: start rounds begin at 1");
}

const Digraph& RunHistory::active_at(Round t) const {
  if (t < 1 || t > horizon()) throw std::out_of_range("RunHistory::active_at");
  return active_[static_cast<size_t>(t - 1)];
}

const Digraph& RunHistory::from_start(Round t) const {
  if (from_start_.empty()) from_start_.push_back(active_at(1));
  while (static_cast<Round>(from_start_.size()) < t)
    from_start_.push_back(product(from_start_.back(), active_at(static_cast<Round>(from_start_.size()) + 1)));
  return from_start_[static_cast<size_t>(t - 1)];
}

Digraph RunHistory::active_cumulative(Round a, Round b) const {
  if (a < 1) throw std::out_of_range("RunHistory::active_cumulative: rounds start at 1");
  if (b > horizon()) throw std::out_of_range("RunHistory::active_cumulative: beyond recorded horizon");
  if (b < a) return Digraph::loops_only(n_);
  if (a == 1) return from_start(b);
  Digraph acc = active_at(a);
  for (Round r = a + 1; r <= b; ++r) acc = product(acc, active_at(r));
  return acc;
}

NodeSet RunHistory::active_in_set(int u, Round a, Round b) const {
  return active_cumulative(a, b).in_neighbors(u);
}

int RunHistory::oracle_m(int u, Round t) const {
  if (t < 0 || t > horizon()) throw std::out_of_range("RunHistory::oracle_m: round out of range");
  if (u < 0 || u >= n_) throw std::out_of_range("RunHistory::oracle_m: node out of range");
  if (t == 0) return inputs_[static_cast<size_t>(u)];
  int best = inputs_[static_cast<size_t>(u)];
  for (int v : active_in_set(u, 1, t).members()) best = std::min(best, inputs_[static_cast<size_t>(v)]);
  return best;
}

int RunHistory::oracle_y(int u, Round t, Round theta) const {
  if (theta < 0 || theta > t) throw std::domain_error("RunHistory::oracle_y: theta must be in [0, t]");
  if (t < 1 || t > horizon()) throw std::out_of_range("RunHistory::oracle_y: round out of range");
  int best = oracle_m(u, theta);  // u itself is always in the window (self-loops)
  for (int v : active_in_set(u, theta + 1, t).members()) best = std::max(best, oracle_m(v, theta));
  return best;
}

MStarReport m_star_analysis(const Schedule& schedule, const std::vector<int>& inputs,
                            const std::vector<Round>& starts, Round horizon) {
  const int n = schedule.node_count();
  for (Round s : starts)
    if (s == kNeverActive)
      throw std::invalid_argument("m_star_analysis: every agent must start eventually");
  RunHistory hist(schedule, inputs, starts, horizon);

  const int p = schedule.prefix_length();
  const int l = schedule.cycle_length();
  Round all_started = 1;
  for (Round s : starts) all_started = std::max(all_started, s);

  // Certify saturation: heard-of sets fixed across one full cycle, with the
  // whole quiet window past the prefix and past every start.
  Round sat = 0;
  const Round first = std::max<Round>(p + 1, all_started);
  for (Round t0 = first; t0 + l <= horizon; ++t0) {
    bool quiet = true;
    const Digraph& base = hist.active_cumulative(1, t0);
    for (int j = 1; j <= l && quiet; ++j) quiet = (hist.active_cumulative(1, t0 + j) == base);
    if (quiet) {
      sat = t0;
      break;
    }
  }
  if (sat == 0)
    throw UnsaturatedError(
        "m_star_analysis: horizon " + std::to_string(horizon) +
        " too short to certify saturation (try " +
        std::to_string(all_started + p + (n + 1) * l) + ")");

  MStarReport report;
  report.saturation_round = sat;
  report.per_node.resize(static_cast<size_t>(n));
  report.overall = std::numeric_limits<int>::min();
  report.settle_round = 0;
  for (int u = 0; u < n; ++u) {
    const int limit = hist.oracle_m(u, sat);
    report.per_node[static_cast<size_t>(u)] = limit;
    report.overall = std::max(report.overall, limit);
    // oracle_m is nonincreasing, so the first round at the limit settles it.
    Round settle = 0;
    while (settle < sat && hist.oracle_m(u, settle) != limit) ++settle;
    report.settle_round = std::max(report.settle_round, settle);
  }
  return report;
}

}  // namespace minmax
