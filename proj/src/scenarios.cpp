#include "minmax/scenarios.hpp"

#include <algorithm>
#include <string>

namespace minmax {

namespace {
constexpr int kSampleBudget = 100000;
}

Digraph random_digraph(Rng& rng, int n, std::uint32_t edge_ppm) {
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (rng.chance_ppm(edge_ppm)) g.add_edge(u, v);
    }
  return g;
}

Schedule random_schedule(Rng& rng, int n, int max_prefix, int max_cycle, std::uint32_t edge_ppm) {
  const int p = rng.uniform_int(0, max_prefix);
  const int l = rng.uniform_int(1, max_cycle);
  std::vector<Digraph> prefix;
  for (int i = 0; i < p; ++i) prefix.push_back(random_digraph(rng, n, edge_ppm));
  std::vector<Digraph> cycle;
  for (int i = 0; i < l; ++i) cycle.push_back(random_digraph(rng, n, edge_ppm));
  return Schedule(std::move(prefix), std::move(cycle));
}

Digraph chain_digraph(int n, const std::vector<int>& order) {
  Digraph g(n);
  for (size_t i = 0; i + 1 < order.size(); ++i) g.add_edge(order[i], order[i + 1]);
  return g;
}

Schedule scenario_fixed_rooted(int n, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < kSampleBudget; ++attempt) {
    Digraph g = random_digraph(rng, n, 350000);
    if (g.is_rooted()) return Schedule({}, {std::move(g)});
  }
  throw GenerationError("scenario_fixed_rooted: no rooted digraph within budget (n=" +
                        std::to_string(n) + ")");
}

Schedule scenario_bounded_delay(int n, int T, int L, std::uint64_t seed) {
  if (T < 1 || L < 1) throw std::invalid_argument("scenario_bounded_delay: T and L must be >= 1");
  Rng rng(seed);
  const std::uint32_t ppm = static_cast<std::uint32_t>(500000 / T);
  for (int attempt = 0; attempt < kSampleBudget; ++attempt) {
    std::vector<Digraph> cycle;
    for (int i = 0; i < L; ++i) cycle.push_back(random_digraph(rng, n, ppm));
    Schedule s({}, std::move(cycle));
    if (s.is_rooted_with_delay(T)) return s;
  }
  throw GenerationError("scenario_bounded_delay: sampling budget exhausted (n=" +
                        std::to_string(n) + ", T=" + std::to_string(T) + ", L=" +
                        std::to_string(L) + ")");
}

EmptyKernelScenario scenario_empty_kernel(int n) {
  if (n < 2) throw std::invalid_argument("scenario_empty_kernel: need at least two nodes");
  const int first = (n + 1) / 2;
  Digraph g(n);
  auto ring = [&g](int lo, int hi) {  // directed cycle over lo..hi (loop only if single)
    if (hi - lo < 1) return;
    for (int u = lo; u < hi; ++u) g.add_edge(u, u + 1);
    g.add_edge(hi, lo);
  };
  ring(0, first - 1);
  ring(first, n - 1);
  Schedule schedule({}, {std::move(g)});
  if (!schedule.kernel().empty())
    throw std::logic_error("scenario_empty_kernel: kernel unexpectedly nonempty");
  std::vector<int> inputs(static_cast<size_t>(n), 1);
  for (int u = 0; u < first; ++u) inputs[static_cast<size_t>(u)] = 0;
  return EmptyKernelScenario{std::move(schedule), std::move(inputs)};
}

Schedule scenario_non_split(int n, int L, std::uint64_t seed) {
  if (L < 1) throw std::invalid_argument("scenario_non_split: L must be >= 1");
  Rng rng(seed);
  std::vector<Digraph> cycle;
  for (int i = 0; i < L; ++i) {
    bool found = false;
    for (int attempt = 0; attempt < kSampleBudget; ++attempt) {
      Digraph g = random_digraph(rng, n, 600000);
      if (g.is_non_split()) {
        cycle.push_back(std::move(g));
        found = true;
        break;
      }
    }
    if (!found)
      throw GenerationError("scenario_non_split: sampling budget exhausted (n=" +
                            std::to_string(n) + ")");
  }
  return Schedule({}, std::move(cycle));
}

Schedule AdversaryResult::realized_schedule() const {
  return Schedule(prefix, {forward_chain, rotated_chain});
}

AdversaryResult adversary_alternating_chains(int n, const CutoffFamily& cutoff, int max_phases,
                                             Round phase_budget) {
  if (n < 2) throw std::invalid_argument("adversary_alternating_chains: need at least two nodes");
  if (max_phases < 1) throw std::invalid_argument("adversary_alternating_chains: need at least one phase");

  AdversaryResult result;
  {
    std::vector<int> fwd(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) fwd[static_cast<size_t>(i)] = i;
    result.forward_chain = chain_digraph(n, fwd);
    std::vector<int> rot(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rot[static_cast<size_t>(i)] = (i + 1) % n;
    result.rotated_chain = chain_digraph(n, rot);
  }

  std::vector<int> inputs(static_cast<size_t>(n), 0);
  inputs[0] = 1;
  std::vector<Round> starts(static_cast<size_t>(n), 1);
  Simulation sim(ValueDomain::contiguous(2), inputs, starts, cutoff, Algorithm::MinMax);

  Round prev_phase_len = 0;
  for (int phase = 0; phase < max_phases; ++phase) {
    const bool even = phase % 2 == 0;
    const Digraph& play = even ? result.forward_chain : result.rotated_chain;
    const int target = even ? 1 : 0;
    const Round budget = phase_budget > 0 ? phase_budget : 10 * n * (prev_phase_len + 1);
    const Round phase_start = sim.rounds_done();

    bool reached = false;
    while (sim.rounds_done() - phase_start < budget) {
      const std::vector<AgentState>& states = sim.step(play);
      result.prefix.push_back(play);
      if (states[1].y == target) {
        result.phase_end_rounds.push_back(sim.rounds_done());
        result.phase_end_values.push_back(target);
        reached = true;
        break;
      }
    }
    if (!reached)
      throw AdversaryStallError(
          "adversary stalled in phase " + std::to_string(phase) + ": node 1 never output " +
          std::to_string(target) + " within " + std::to_string(budget) + " rounds (n=" +
          std::to_string(n) + ", cutoff=" + cutoff.name() + ")");
    prev_phase_len = sim.rounds_done() - phase_start;
  }

  result.trace = sim.take_trace();
  result.trace.cycle_length = 2;
  result.trace.cutoff = cutoff.name();
  return result;
}

}  // namespace minmax
