#include "minmax/schedule.hpp"

#include <stdexcept>

namespace minmax {

Schedule::Schedule(std::vector<Digraph> prefix, std::vector<Digraph> cycle)
    : n_(0), prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw std::invalid_argument("Schedule: cycle must not be empty");
  n_ = cycle_.front().node_count();
  for (const Digraph& g : prefix_)
    if (g.node_count() != n_) throw std::invalid_argument("Schedule: node count mismatch in prefix");
  for (const Digraph& g : cycle_)
    if (g.node_count() != n_) throw std::invalid_argument("Schedule: node count mismatch in cycle");
}

const Digraph& Schedule::graph_at(Round t) const {
  if (t < 1) throw std::out_of_range("Schedule::graph_at: rounds start at 1");
  const int p = prefix_length();
  if (t <= p) return prefix_[static_cast<size_t>(t - 1)];
  return cycle_[static_cast<size_t>((t - p - 1) % cycle_length())];
}

Digraph Schedule::cumulative(Round t, Round t2) const {
  if (t < 1) throw std::out_of_range("Schedule::cumulative: rounds start at 1");
  if (t2 < t) return Digraph::loops_only(n_);
  Digraph acc = graph_at(t);
  for (Round r = t + 1; r <= t2; ++r) acc = product(acc, graph_at(r));
  return acc;
}

Digraph Schedule::limit_superior() const {
  Digraph acc = cycle_.front();
  for (size_t i = 1; i < cycle_.size(); ++i) acc = acc.union_with(cycle_[i]);
  return acc;
}

Digraph Schedule::integral_at(Round t) const {
  if (t < 1) throw std::out_of_range("Schedule::integral_at: rounds start at 1");
  const int p = prefix_length();
  const int l = cycle_length();
  Digraph acc = graph_at(t);
  int quiet = 0;
  Round tp = t;
  // Quiet steps only count past the prefix: a full cycle of them has then
  // absorbed every cycle position, and the edge set can never grow again.
  while (quiet < l) {
    ++tp;
    Digraph next = product(acc, graph_at(tp));
    if (next == acc) {
      if (tp > p) ++quiet;
    } else {
      quiet = 0;
      acc = std::move(next);
    }
  }
  return acc;
}

Digraph Schedule::integral_limit() const { return limit_superior().transitive_closure(); }

NodeSet Schedule::kernel() const {
  NodeSet via_roots = limit_superior().roots();
  NodeSet via_closure = integral_limit().central_roots();
  if (!(via_roots == via_closure))
    throw std::logic_error("Schedule::kernel: root/closure routes disagree (internal fault)");
  return via_roots;
}

bool Schedule::is_rooted_with_delay(int T) const {
  if (T < 1) throw std::invalid_argument("Schedule::is_rooted_with_delay: delay must be >= 1");
  const Round last = prefix_length() + cycle_length();
  for (Round t = 1; t <= last; ++t)
    if (!cumulative(t, t + T - 1).is_rooted()) return false;
  return true;
}

std::optional<Round> Schedule::bounded_reach_check(int T, Round horizon) const {
  if (T < 1) throw std::invalid_argument("Schedule::bounded_reach_check: delay must be >= 1");
  if (horizon < 1) throw std::invalid_argument("Schedule::bounded_reach_check: horizon must be >= 1");
  const NodeSet ker = kernel();
  const std::uint64_t kbits = ker.bits();
  const Round span = static_cast<Round>(T) * (n_ - ker.size());

  std::vector<bool> ok(static_cast<size_t>(horizon) + 1, false);
  for (Round t = 1; t <= horizon; ++t) {
    Digraph w = cumulative(t, t + span);
    bool all = true;
    for (int u = 0; u < n_ && all; ++u)
      all = (w.in_neighbors(u).bits() & kbits) != 0;
    ok[static_cast<size_t>(t)] = all;
  }
  if (!ok[static_cast<size_t>(horizon)]) return std::nullopt;
  Round s0 = horizon;
  while (s0 > 1 && ok[static_cast<size_t>(s0 - 1)]) --s0;
  return s0;
}

}  // namespace minmax
