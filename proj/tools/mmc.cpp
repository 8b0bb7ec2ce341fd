// mmc: command line front end for the consensus simulator.
//
// Subcommands:
//   analyze <schedule-file>   kernel, limits and delay of a schedule
//   run <config-file>         simulate a run, report stabilization
//   adversary                 adaptive two-chain oscillation construction
//   suite <name>              release gate checks behind one named block
//
// Exit codes: 0 success / expectation met, 1 property failure or expectation
// mismatch, 2 usage, parse or config errors.
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minmax/acceptance.hpp"
#include "minmax/scenarios.hpp"
#include "minmax/text_io.hpp"

namespace {

void print_edge_line(const std::string& label, const minmax::Digraph& g) {
  std::cout << label << ":";
  auto edges = g.edges(false);
  if (edges.empty()) std::cout << " (none)";
  for (auto [u, v] : edges) std::cout << ' ' << u << "->" << v;
  std::cout << '\n';
}

void print_kernel_line(const minmax::NodeSet& kernel) {
  std::cout << "kernel: " << kernel.to_string();
  if (kernel.is_all()) std::cout << " (all nodes)";
  std::cout << '\n';
}

void write_trace_file(const minmax::Trace& trace, const std::string& path,
                      const std::string& format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << (format == "text" ? minmax::trace_to_text(trace) : minmax::trace_to_jsonl(trace));
}

int cmd_analyze(const std::string& file) {
  minmax::Schedule schedule = minmax::parse_schedule(minmax::slurp_file(file));
  std::cout << "nodes: " << schedule.node_count() << '\n';
  std::cout << "prefix length: " << schedule.prefix_length() << '\n';
  std::cout << "cycle length: " << schedule.cycle_length() << '\n';
  print_kernel_line(schedule.kernel());
  print_edge_line("limit superior", schedule.limit_superior());
  print_edge_line("integral limit", schedule.integral_limit());

  // Windows grow monotonically (self-loops), so the first working T is
  // minimal. The cap is generous: past it nothing new composes in.
  const int cap = 2 * schedule.node_count() *
                  (schedule.prefix_length() + schedule.cycle_length());
  int delay = 0;
  for (int t = 1; t <= cap; ++t)
    if (schedule.is_rooted_with_delay(t)) {
      delay = t;
      break;
    }
  if (delay > 0)
    std::cout << "rooted delay: T=" << delay << '\n';
  else
    std::cout << "rooted delay: none (searched T=1.." << cap << ")\n";

  for (int i = 0; i < schedule.cycle_length(); ++i)
    std::cout << "cycle graph " << i + 1 << ": "
              << (schedule.cycle()[static_cast<size_t>(i)].is_non_split() ? "non-split" : "split")
              << '\n';
  return 0;
}

int cmd_run(const std::string& file, int horizon_override, std::uint64_t seed,
            const std::string& out_path, const std::string& format) {
  std::filesystem::path path(file);
  std::string base_dir = path.has_parent_path() ? path.parent_path().string() : ".";
  minmax::RunSpec spec = minmax::parse_run_config(minmax::slurp_file(file), base_dir);
  if (horizon_override > 0) spec.config.horizon = horizon_override;
  spec.config.validate();

  minmax::Trace trace = minmax::run(spec.config);
  trace.seed = seed;
  minmax::StabilizationReport report = minmax::check_stabilization(trace);
  if (!out_path.empty()) write_trace_file(trace, out_path, format);

  std::cout << minmax::report_to_text(report);
  if (spec.expect != minmax::Expectation::None)
    std::cout << "expected: " << minmax::expectation_name(spec.expect) << '\n';
  return minmax::expectation_met(spec.expect, report, trace) ? 0 : 1;
}

int cmd_adversary(int n, const std::string& cutoff_name, int phases, int phase_budget,
                  std::uint64_t seed, const std::string& out_path, const std::string& format) {
  minmax::CutoffFamily cutoff =
      cutoff_name == "log" ? minmax::CutoffFamily::log2() : minmax::CutoffFamily::half();
  minmax::AdversaryResult result =
      minmax::adversary_alternating_chains(n, cutoff, phases, phase_budget);
  result.trace.seed = seed;

  print_edge_line("forward chain", result.forward_chain);
  print_edge_line("rotated chain", result.rotated_chain);
  for (size_t i = 0; i < result.phase_end_rounds.size(); ++i)
    std::cout << "phase " << i + 1 << ": round " << result.phase_end_rounds[i] << " output "
              << result.phase_end_values[i] << '\n';
  print_kernel_line(result.realized_schedule().kernel());
  if (!out_path.empty()) write_trace_file(result.trace, out_path, format);
  return 0;
}

int cmd_suite(const std::string& name, std::uint64_t seed_base) {
  int failed = 0;
  std::vector<int> ids = minmax::suite_criteria(name);
  for (int id : ids) {
    minmax::CriterionResult r = minmax::run_criterion(id, seed_base);
    std::printf("[%s] %2d %s: %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  if (failed) std::printf("%d of %zu checks failed\n", failed, ids.size());
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simulate and analyze stabilizing consensus over time-varying digraphs"};
  app.require_subcommand(1);

  std::uint64_t seed = minmax::kDefaultSeedBase;
  std::string out_path;
  std::string format = "jsonl";

  auto add_common = [&](CLI::App* cmd, bool with_out) {
    cmd->add_option("--seed", seed, "seed recorded in trace metadata / shifting suite seeds")
        ->envname("MINMAX_SEED");
    if (with_out) {
      cmd->add_option("--out", out_path, "write the trace to this file");
      cmd->add_option("--format", format, "trace file format")
          ->check(CLI::IsMember({"text", "jsonl"}));
    }
  };

  std::string analyze_file;
  CLI::App* analyze = app.add_subcommand("analyze", "kernel, limits and delay of a schedule");
  analyze->add_option("schedule-file", analyze_file, "schedule description")->required();

  std::string run_file;
  int horizon = 0;
  CLI::App* run = app.add_subcommand("run", "simulate a run and report stabilization");
  run->add_option("config-file", run_file, "run configuration")->required();
  run->add_option("--horizon", horizon, "override the configured horizon")
      ->check(CLI::PositiveNumber);
  add_common(run, true);

  int adv_n = 3;
  std::string adv_cutoff = "half";
  int adv_phases = 4;
  int adv_budget = 0;
  CLI::App* adversary = app.add_subcommand("adversary", "adaptive oscillation construction");
  adversary->add_option("-n,--nodes", adv_n, "number of agents")->check(CLI::Range(2, 64));
  adversary->add_option("--cutoff", adv_cutoff, "cutoff family")
      ->check(CLI::IsMember({"half", "log"}));
  adversary->add_option("--phases", adv_phases, "phases to force")->check(CLI::PositiveNumber);
  adversary->add_option("--phase-budget", adv_budget,
                        "max rounds per phase (0: scale with the previous phase)");
  add_common(adversary, true);

  std::string suite_name;
  CLI::App* suite = app.add_subcommand("suite", "run one named block of release gate checks");
  suite->add_option("name", suite_name, "suite name")
      ->required()
      ->check(CLI::IsMember(minmax::suite_names()));
  add_common(suite, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help is fine, anything else is a usage error
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(analyze_file);
    if (app.got_subcommand(run)) return cmd_run(run_file, horizon, seed, out_path, format);
    if (app.got_subcommand(adversary))
      return cmd_adversary(adv_n, adv_cutoff, adv_phases, adv_budget, seed, out_path, format);
    if (app.got_subcommand(suite)) return cmd_suite(suite_name, seed);
  } catch (const minmax::AdversaryStallError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  } catch (const minmax::ParseError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
  return 2;
}
