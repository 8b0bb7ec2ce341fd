#include "minmax/acceptance.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "minmax/oracle.hpp"
#include "minmax/rng.hpp"
#include "minmax/scenarios.hpp"
#include "minmax/simulator.hpp"
#include "minmax/text_io.hpp"

namespace minmax {
namespace {

std::uint64_t mix_seed(std::uint64_t base, int id, int item) {
  // splitmix64 step over (base, id, item) so criteria and items decouple.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(id) * 100003ULL +
                                                    static_cast<std::uint64_t>(item) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CriterionResult fail(int id, std::string name, std::string detail) {
  return CriterionResult{id, std::move(name), false, std::move(detail)};
}

CriterionResult pass(int id, std::string name, std::string detail) {
  return CriterionResult{id, std::move(name), true, std::move(detail)};
}

std::vector<int> random_inputs(Rng& rng, int n, const ValueDomain& domain) {
  std::vector<int> inputs(static_cast<size_t>(n));
  for (int& x : inputs) x = domain.value_at(rng.uniform_int(0, domain.size() - 1));
  return inputs;
}

// 1. The two routes to the long-run composition agree: stepwise products
//    until saturation vs the transitive closure of the recurring edges, and
//    the per-node root search vs the closed graph's full rows.
CriterionResult criterion_integral_routes(std::uint64_t seed_base) {
  const std::string name = "integral-limit-routes";
  const int kSchedules = 200;
  for (int i = 0; i < kSchedules; ++i) {
    Rng rng(mix_seed(seed_base, 1, i));
    const int n = rng.uniform_int(2, 6);
    const std::uint32_t ppm = static_cast<std::uint32_t>(rng.uniform_int(100000, 700000));
    Schedule sched = random_schedule(rng, n, 3, 4, ppm);
    const int p = sched.prefix_length();
    const int l = sched.cycle_length();

    Digraph closed = sched.limit_superior().transitive_closure();
    Digraph stepped = sched.integral_at(p + 1);
    if (!(stepped == closed))
      return fail(1, name,
                  "schedule " + std::to_string(i) + ": stepped composition from round " +
                      std::to_string(p + 1) + " differs from the closure route");
    if (!(sched.integral_at(p + l + 1) == closed))
      return fail(1, name,
                  "schedule " + std::to_string(i) + ": composition limit depends on the start "
                  "round inside the periodic part");
    // From round 1 the prefix can only add edges on top of the limit.
    if (!(sched.integral_at(1).union_with(closed) == sched.integral_at(1)))
      return fail(1, name,
                  "schedule " + std::to_string(i) + ": round-1 composition lost limit edges");

    NodeSet via_roots = sched.limit_superior().roots();
    NodeSet via_closure = closed.central_roots();
    if (!(via_roots == via_closure))
      return fail(1, name,
                  "schedule " + std::to_string(i) + ": root search " + via_roots.to_string() +
                      " vs closure rows " + via_closure.to_string());
    if (!(sched.kernel() == via_roots))
      return fail(1, name, "schedule " + std::to_string(i) + ": kernel() disagrees with routes");
  }
  return pass(1, name,
              std::to_string(kSchedules) + " random schedules (n<=6, prefix<=3, cycle<=4): "
              "composition and closure routes agree, root routes agree");
}

// 2. Simulated agent state matches the closed forms round by round: x equals
//    the least input heard of so far, y equals the max over the lookback
//    window of the per-sender minima.
CriterionResult criterion_output_closed_form(std::uint64_t seed_base) {
  const std::string name = "output-closed-form";
  const int kRuns = 100;
  for (int i = 0; i < kRuns; ++i) {
    Rng rng(mix_seed(seed_base, 2, i));
    const int n = rng.uniform_int(2, 5);
    const Round horizon = rng.uniform_int(10, 30);
    ValueDomain domain = ValueDomain::contiguous(rng.uniform_int(2, 4));
    std::vector<int> inputs = random_inputs(rng, n, domain);
    std::vector<Round> starts(static_cast<size_t>(n));
    for (Round& s : starts) s = rng.uniform_int(1, 4);
    Schedule sched = random_schedule(rng, n, 3, 3, 400000);
    CutoffFamily cutoff = (i % 2 == 0) ? CutoffFamily::half() : CutoffFamily::log2();

    Trace trace = run(RunConfig{domain, inputs, starts, sched, cutoff, Algorithm::MinMax, horizon});
    RunHistory hist(sched, inputs, starts, horizon);
    for (Round t = 1; t <= horizon; ++t)
      for (int u = 0; u < n; ++u) {
        const AgentState& a = trace.at(t).agents[u];
        int want_x = hist.oracle_m(u, t);
        if (a.x != want_x)
          return fail(2, name,
                      "run " + std::to_string(i) + " round " + std::to_string(t) + " agent " +
                          std::to_string(u) + ": x=" + std::to_string(a.x) + " but least heard "
                          "input is " + std::to_string(want_x));
        int want_y = hist.oracle_y(u, t, t - a.delta);
        if (a.y != want_y)
          return fail(2, name,
                      "run " + std::to_string(i) + " round " + std::to_string(t) + " agent " +
                          std::to_string(u) + ": y=" + std::to_string(a.y) + " but closed form "
                          "gives " + std::to_string(want_y));
      }
  }
  return pass(2, name,
              std::to_string(kRuns) + " runs (n<=5, horizon<=30, half and log cutoffs, "
              "staggered starts): x and y match the closed forms at every round");
}

// 3. Age semantics, brute-forced: age_u[value](t) <= k iff some agent heard
//    within the last k rounds held that value as its minimum k rounds ago.
CriterionResult criterion_age_window(std::uint64_t seed_base) {
  const std::string name = "age-window-semantics";
  const int kRuns = 50;
  for (int i = 0; i < kRuns; ++i) {
    Rng rng(mix_seed(seed_base, 3, i));
    const int n = rng.uniform_int(2, 4);
    const Round horizon = rng.uniform_int(6, 15);
    ValueDomain domain = ValueDomain::contiguous(rng.uniform_int(2, 3));
    std::vector<int> inputs = random_inputs(rng, n, domain);
    std::vector<Round> starts(static_cast<size_t>(n));
    for (Round& s : starts) s = rng.uniform_int(1, 3);
    Schedule sched = random_schedule(rng, n, 2, 3, 400000);

    Trace trace = run(
        RunConfig{domain, inputs, starts, sched, CutoffFamily::half(), Algorithm::MinMax, horizon});
    RunHistory hist(sched, inputs, starts, horizon);
    auto x_at = [&](int v, Round t) { return t == 0 ? inputs[static_cast<size_t>(v)]
                                                    : trace.at(t).agents[v].x; };
    for (Round t = 1; t <= horizon; ++t)
      for (int u = 0; u < n; ++u) {
        const AgeVector& age = trace.at(t).agents[u].age;
        for (Round k = 0; k <= t; ++k) {
          NodeSet heard = hist.active_in_set(u, t - k + 1, t);
          for (int j = 0; j < domain.size(); ++j) {
            bool lhs = age.ages[static_cast<size_t>(j)] != kInfiniteAge &&
                       age.ages[static_cast<size_t>(j)] <= k;
            bool rhs = false;
            for (int v : heard.members())
              if (x_at(v, t - k) == domain.value_at(j)) {
                rhs = true;
                break;
              }
            if (lhs != rhs)
              return fail(3, name,
                          "run " + std::to_string(i) + " round " + std::to_string(t) + " agent " +
                              std::to_string(u) + " value " + std::to_string(domain.value_at(j)) +
                              " k=" + std::to_string(k) + ": age says " +
                              (lhs ? "reachable" : "unreachable") + ", graphs say the opposite");
          }
        }
      }
  }
  return pass(3, name,
              std::to_string(kRuns) + " runs (n<=4, horizon<=15): age<=k iff the value was "
              "a heard agent's minimum k rounds back, for every agent/value/window");
}

// 4. On schedules where every T-round window is rooted, both safe cutoff
//    rules settle to exactly the kernel consensus value within 20*n*T rounds.
CriterionResult criterion_safe_cutoff_convergence(std::uint64_t seed_base) {
  const std::string name = "safe-cutoff-convergence";
  const int kSchedules = 100;
  for (int i = 0; i < kSchedules; ++i) {
    Rng rng(mix_seed(seed_base, 4, i));
    const int n = rng.uniform_int(3, 8);
    const int T = rng.uniform_int(1, 3);
    const int L = rng.uniform_int(1, 3);
    Schedule sched = scenario_bounded_delay(n, T, L, mix_seed(seed_base, 40, i));
    ValueDomain domain = ValueDomain::contiguous(rng.uniform_int(2, 4));
    std::vector<int> inputs = random_inputs(rng, n, domain);
    std::vector<Round> starts(static_cast<size_t>(n), 1);

    MStarReport ms = m_star_analysis(sched, inputs, starts, 1 + (n + 1) * L + 2);
    const Round bound = 20 * n * T;
    const Round margin = std::max(2 * n, L);
    for (const CutoffFamily& cutoff : {CutoffFamily::half(), CutoffFamily::log2()}) {
      Trace trace = run(
          RunConfig{domain, inputs, starts, sched, cutoff, Algorithm::MinMax, bound + margin});
      StabilizationReport report = check_stabilization(trace);
      if (report.status != StabilizationStatus::Stabilized)
        return fail(4, name,
                    "schedule " + std::to_string(i) + " (" + cutoff.name() + ", n=" +
                        std::to_string(n) + ", T=" + std::to_string(T) + "): outputs not settled "
                        "by round " + std::to_string(bound + margin));
      if (report.round > bound)
        return fail(4, name,
                    "schedule " + std::to_string(i) + " (" + cutoff.name() + "): settled at round " +
                        std::to_string(report.round) + " > bound " + std::to_string(bound));
      if (report.value != ms.overall)
        return fail(4, name,
                    "schedule " + std::to_string(i) + " (" + cutoff.name() + "): settled on " +
                        std::to_string(report.value) + " but the kernel consensus value is " +
                        std::to_string(ms.overall));
    }
  }
  return pass(4, name,
              std::to_string(kSchedules) + " schedules with rooted T-windows (n<=8, T<=3): half "
              "and log cutoffs settle to the kernel consensus value within 20*n*T rounds");
}

// 5. A fixed rooted digraph with synchronous starts and the half cutoff
//    settles within 2n rounds.
CriterionResult criterion_rooted_bound(std::uint64_t seed_base) {
  const std::string name = "rooted-two-n-bound";
  const int kRuns = 100;
  for (int i = 0; i < kRuns; ++i) {
    Rng rng(mix_seed(seed_base, 5, i));
    const int n = 3 + (i % 8);
    Schedule sched = scenario_fixed_rooted(n, mix_seed(seed_base, 50, i));
    ValueDomain domain = ValueDomain::contiguous(3);
    std::vector<int> inputs = random_inputs(rng, n, domain);
    std::vector<Round> starts(static_cast<size_t>(n), 1);

    MStarReport ms = m_star_analysis(sched, inputs, starts, n + 4);
    Trace trace = run(RunConfig{domain, inputs, starts, sched, CutoffFamily::half(),
                                Algorithm::MinMax, 5 * n});
    StabilizationReport report = check_stabilization(trace);
    if (report.status != StabilizationStatus::Stabilized)
      return fail(5, name, "run " + std::to_string(i) + " (n=" + std::to_string(n) +
                               "): outputs not settled within 5n rounds");
    if (report.round > 2 * n)
      return fail(5, name, "run " + std::to_string(i) + " (n=" + std::to_string(n) +
                               "): settled at round " + std::to_string(report.round) + " > 2n=" +
                               std::to_string(2 * n));
    if (report.value != ms.overall)
      return fail(5, name, "run " + std::to_string(i) + ": settled on " +
                               std::to_string(report.value) + " instead of " +
                               std::to_string(ms.overall));
  }
  return pass(5, name,
              std::to_string(kRuns) + " fixed rooted digraphs (n=3..10, synchronous, half "
              "cutoff): settled to the kernel consensus value within 2n rounds");
}

// 6. The chain-alternation adversary forces four output flips against both
//    safe cutoffs, and the schedule it plays has kernel {0, 1}.
CriterionResult criterion_adversary(std::uint64_t seed_base) {
  (void)seed_base;  // fully deterministic, nothing random to seed
  const std::string name = "alternating-adversary";
  const int kPhases = 4;
  for (int n : {3, 5})
    for (const CutoffFamily& cutoff : {CutoffFamily::half(), CutoffFamily::log2()}) {
      std::optional<AdversaryResult> result;
      try {
        result.emplace(adversary_alternating_chains(n, cutoff, kPhases));
      } catch (const AdversaryStallError& ex) {
        return fail(6, name, "n=" + std::to_string(n) + " " + cutoff.name() + ": " + ex.what());
      }
      if (static_cast<int>(result->phase_end_rounds.size()) != kPhases)
        return fail(6, name,
                    "n=" + std::to_string(n) + " " + cutoff.name() + ": only " +
                        std::to_string(result->phase_end_rounds.size()) + " phases reached");
      for (int ph = 0; ph < kPhases; ++ph)
        if (result->phase_end_values[static_cast<size_t>(ph)] != (ph % 2 == 0 ? 1 : 0))
          return fail(6, name,
                      "n=" + std::to_string(n) + " " + cutoff.name() + ": phase " +
                          std::to_string(ph + 1) + " ended on output " +
                          std::to_string(result->phase_end_values[static_cast<size_t>(ph)]));
      NodeSet kernel = result->realized_schedule().kernel();
      NodeSet expected(n);
      expected.add(0);
      expected.add(1);
      if (!(kernel == expected))
        return fail(6, name,
                    "n=" + std::to_string(n) + " " + cutoff.name() + ": phases ok (4 flips), but "
                        "the played schedule's kernel is " + kernel.to_string() + ", expected " +
                        expected.to_string());
    }
  return pass(6, name,
              "n in {3,5}, half and log cutoffs: 4 alternating output phases and kernel {0,1} "
              "on the played schedule");
}

// 7. With an empty kernel (two rings that never hear each other), outputs
//    stay split forever, for the minmax rule and for plain min-diffusion.
CriterionResult criterion_empty_kernel(std::uint64_t seed_base) {
  (void)seed_base;  // fixed family, nothing random
  const std::string name = "empty-kernel-disagreement";
  for (int n : {2, 4, 5, 6}) {
    EmptyKernelScenario scenario = scenario_empty_kernel(n);
    if (!scenario.schedule.kernel().empty())
      return fail(7, name, "n=" + std::to_string(n) + ": generator produced kernel " +
                               scenario.schedule.kernel().to_string());
    ValueDomain domain = ValueDomain::contiguous(2);
    std::vector<Round> starts(static_cast<size_t>(n), 1);
    const Round horizon = 4 * n;
    struct Case {
      Algorithm algorithm;
      CutoffFamily cutoff;
    };
    for (const Case& c : {Case{Algorithm::MinMax, CutoffFamily::half()},
                          Case{Algorithm::MinMax, CutoffFamily::log2()},
                          Case{Algorithm::Min, CutoffFamily::half()}}) {
      Trace trace = run(RunConfig{domain, scenario.inputs, starts, scenario.schedule, c.cutoff,
                                  c.algorithm, horizon});
      StabilizationReport report = check_stabilization(trace);
      if (report.status != StabilizationStatus::Disagreement)
        return fail(7, name,
                    "n=" + std::to_string(n) + " " + algorithm_name(c.algorithm) + "/" +
                        c.cutoff.name() + ": expected permanent disagreement, checker says " +
                        status_name(report.status));
      for (Round t = 1; t <= horizon; ++t) {
        bool saw0 = false, saw1 = false;
        for (int u = 0; u < n; ++u) {
          int y = trace.at(t).agents[u].y;
          saw0 |= y == 0;
          saw1 |= y == 1;
        }
        if (!saw0 || !saw1)
          return fail(7, name,
                      "n=" + std::to_string(n) + " " + algorithm_name(c.algorithm) +
                          ": outputs agreed at round " + std::to_string(t));
      }
    }
  }
  return pass(7, name,
              "disconnected rings (n in {2,4,5,6}): outputs 0 and 1 both present at every "
              "round, for minmax (half, log) and min");
}

// 8. Every kernel member's long-run minimum equals the kernel consensus
//    value (the max of all long-run minima).
CriterionResult criterion_kernel_value(std::uint64_t seed_base) {
  const std::string name = "kernel-consensus-value";
  const int kSchedules = 100;
  for (int i = 0; i < kSchedules; ++i) {
    Rng rng(mix_seed(seed_base, 8, i));
    const int n = rng.uniform_int(2, 6);
    const int L = rng.uniform_int(1, 3);
    Schedule sched = scenario_non_split(n, L, mix_seed(seed_base, 80, i));
    NodeSet kernel = sched.kernel();
    if (kernel.empty())
      return fail(8, name, "schedule " + std::to_string(i) + ": generator produced an empty "
                           "kernel (every graph is non-split, so this cannot happen)");
    ValueDomain domain = ValueDomain::contiguous(rng.uniform_int(2, 4));
    std::vector<int> inputs = random_inputs(rng, n, domain);
    std::vector<Round> starts(static_cast<size_t>(n));
    for (Round& s : starts) s = rng.uniform_int(1, 3);

    MStarReport ms = m_star_analysis(sched, inputs, starts, 3 + (n + 1) * L + 2);
    for (int u : kernel.members())
      if (ms.per_node[static_cast<size_t>(u)] != ms.overall)
        return fail(8, name,
                    "schedule " + std::to_string(i) + ": kernel member " + std::to_string(u) +
                        " has long-run minimum " +
                        std::to_string(ms.per_node[static_cast<size_t>(u)]) + " != overall " +
                        std::to_string(ms.overall));
  }
  return pass(8, name,
              std::to_string(kSchedules) + " non-split schedules (n<=6, staggered starts): every "
              "kernel member's long-run minimum equals the consensus value");
}

// 9. On schedules with rooted T-windows, from some round s0 <= prefix+cycle
//    onward every agent hears a kernel member within T*(n-k) rounds.
CriterionResult criterion_reach_window(std::uint64_t seed_base) {
  const std::string name = "kernel-reach-window";
  const int kSchedules = 100;
  for (int i = 0; i < kSchedules; ++i) {
    Rng rng(mix_seed(seed_base, 9, i));
    const int n = rng.uniform_int(3, 8);
    const int T = rng.uniform_int(1, 3);
    const int L = rng.uniform_int(1, 3);
    Schedule sched = scenario_bounded_delay(n, T, L, mix_seed(seed_base, 90, i));
    const Round horizon = sched.prefix_length() + L + n * T + 5;
    std::optional<Round> s0 = sched.bounded_reach_check(T, horizon);
    if (!s0)
      return fail(9, name, "schedule " + std::to_string(i) + " (n=" + std::to_string(n) + ", T=" +
                               std::to_string(T) + "): no window start up to round " +
                               std::to_string(horizon) + " reaches the kernel");
    const Round bound = sched.prefix_length() + L;
    if (*s0 > bound)
      return fail(9, name, "schedule " + std::to_string(i) + ": windows only reach the kernel "
                               "from round " + std::to_string(*s0) + " > " +
                               std::to_string(bound));
  }
  return pass(9, name,
              std::to_string(kSchedules) + " schedules with rooted T-windows: every agent hears "
              "a kernel member within T*(n-k) rounds, from a round <= prefix+cycle");
}

// 10. Bit-for-bit reproducibility: the same seed yields the same schedule,
//     the same run, and the same serialized trace; the adversary is
//     deterministic as well.
CriterionResult criterion_determinism(std::uint64_t seed_base) {
  const std::string name = "trace-determinism";
  const int kSeeds = 20;
  std::set<std::string> distinct;
  for (int i = 0; i < kSeeds; ++i) {
    const std::uint64_t seed = mix_seed(seed_base, 10, i);
    auto build_and_run = [&](std::uint64_t s) {
      Rng rng(s);
      const int n = rng.uniform_int(2, 5);
      ValueDomain domain = ValueDomain::contiguous(rng.uniform_int(2, 4));
      std::vector<int> inputs = random_inputs(rng, n, domain);
      std::vector<Round> starts(static_cast<size_t>(n));
      for (Round& st : starts) st = rng.uniform_int(1, 3);
      Schedule sched = random_schedule(rng, n, 3, 3, 450000);
      CutoffFamily cutoff = rng.uniform_int(0, 1) == 0 ? CutoffFamily::half()
                                                       : CutoffFamily::log2();
      Trace trace = run(
          RunConfig{domain, inputs, starts, sched, cutoff, Algorithm::MinMax, 25});
      trace.seed = s;
      return trace;
    };
    Trace a = build_and_run(seed);
    Trace b = build_and_run(seed);
    if (!(a == b))
      return fail(10, name, "seed " + std::to_string(seed) + ": two runs differ in memory");
    std::string ja = trace_to_jsonl(a);
    std::string jb = trace_to_jsonl(b);
    if (ja != jb)
      return fail(10, name, "seed " + std::to_string(seed) + ": serialized traces differ");
    if (a.config_hash != b.config_hash)
      return fail(10, name, "seed " + std::to_string(seed) + ": config hashes differ");
    distinct.insert(std::move(ja));
  }
  if (distinct.size() < 2)
    return fail(10, name, "all seeds produced one identical trace; the generator ignores seeds");
  AdversaryResult adv1 = adversary_alternating_chains(3, CutoffFamily::half(), 3);
  AdversaryResult adv2 = adversary_alternating_chains(3, CutoffFamily::half(), 3);
  if (trace_to_jsonl(adv1.trace) != trace_to_jsonl(adv2.trace))
    return fail(10, name, "adversary runs with identical parameters serialize differently");
  return pass(10, name,
              std::to_string(kSeeds) + " seeds: byte-identical serialized traces per seed, "
              "distinct across seeds; adversary runs reproduce exactly");
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed_base) {
  switch (id) {
    case 1: return criterion_integral_routes(seed_base);
    case 2: return criterion_output_closed_form(seed_base);
    case 3: return criterion_age_window(seed_base);
    case 4: return criterion_safe_cutoff_convergence(seed_base);
    case 5: return criterion_rooted_bound(seed_base);
    case 6: return criterion_adversary(seed_base);
    case 7: return criterion_empty_kernel(seed_base);
    case 8: return criterion_kernel_value(seed_base);
    case 9: return criterion_reach_window(seed_base);
    case 10: return criterion_determinism(seed_base);
    default: throw std::invalid_argument("run_criterion: id must be 1..10");
  }
}

std::vector<CriterionResult> run_all(std::uint64_t seed_base) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 10; ++id) out.push_back(run_criterion(id, seed_base));
  return out;
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "graph-calculus") return {1};
  if (suite == "equivalence") return {2, 3};
  if (suite == "convergence") return {4, 5, 8, 9, 10};
  if (suite == "adversary") return {6, 7};
  throw std::invalid_argument("unknown suite '" + suite + "' (try: graph-calculus, equivalence, "
                              "convergence, adversary)");
}

std::vector<std::string> suite_names() {
  return {"graph-calculus", "equivalence", "convergence", "adversary"};
}

}  // namespace minmax
