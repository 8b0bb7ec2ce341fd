#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minmax/acceptance.hpp"
#include "minmax/oracle.hpp"
#include "minmax/scenarios.hpp"
#include "minmax/text_io.hpp"

namespace py = pybind11;
using namespace minmax;

namespace {

// RunConfig with python-friendly defaults: domain from the distinct inputs,
// everyone starting at round 1, half cutoff.
RunConfig make_config(std::vector<int> inputs, Schedule schedule, Round horizon,
                      std::optional<ValueDomain> domain, std::optional<std::vector<Round>> starts,
                      const CutoffFamily& cutoff, Algorithm algorithm) {
  if (!domain) {
    std::vector<int> vals = inputs;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    domain = ValueDomain(std::move(vals));
  }
  if (!starts) starts = std::vector<Round>(inputs.size(), 1);
  RunConfig config{std::move(*domain), std::move(inputs), std::move(*starts),
                   std::move(schedule), cutoff, algorithm, horizon};
  config.validate();
  return config;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "stabilizing consensus over time-varying digraphs";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<UnsaturatedError>(m, "UnsaturatedError");
  py::register_exception<GenerationError>(m, "GenerationError");
  py::register_exception<AdversaryStallError>(m, "AdversaryStallError");

  m.attr("MAX_NODES") = kMaxNodes;
  m.attr("NEVER_ACTIVE") = kNeverActive;
  m.attr("INFINITE_AGE") = kInfiniteAge;
  m.attr("DEFAULT_SEED_BASE") = kDefaultSeedBase;

  py::class_<NodeSet>(m, "NodeSet")
      .def(py::init<int, std::uint64_t>(), py::arg("n"), py::arg("bits") = 0)
      .def_static("all", &NodeSet::all, py::arg("n"))
      .def_static("single", &NodeSet::single, py::arg("n"), py::arg("u"))
      .def("add", &NodeSet::add)
      .def("contains", &NodeSet::contains)
      .def("members", &NodeSet::members)
      .def("empty", &NodeSet::empty)
      .def("is_all", &NodeSet::is_all)
      .def("__len__", &NodeSet::size)
      .def("__contains__", &NodeSet::contains)
      .def("__and__", &NodeSet::operator&)
      .def("__or__", &NodeSet::operator|)
      .def("__eq__", [](const NodeSet& a, const NodeSet& b) { return a == b; }, py::is_operator())
      .def("__repr__", &NodeSet::to_string);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init<int>(), py::arg("n"))
      .def_static("complete", &Digraph::complete, py::arg("n"))
      .def_static("loops_only", &Digraph::loops_only, py::arg("n"))
      .def_property_readonly("node_count", &Digraph::node_count)
      .def("add_edge", &Digraph::add_edge)
      .def("remove_edge", &Digraph::remove_edge)
      .def("has_edge", &Digraph::has_edge)
      .def("edges", &Digraph::edges, py::arg("with_loops") = false)
      .def("edge_count", &Digraph::edge_count, py::arg("with_loops") = false)
      .def("out_neighbors", &Digraph::out_neighbors)
      .def("in_neighbors", &Digraph::in_neighbors)
      .def("transitive_closure", &Digraph::transitive_closure)
      .def("roots", &Digraph::roots)
      .def("central_roots", &Digraph::central_roots)
      .def("is_rooted", &Digraph::is_rooted)
      .def("is_non_split", &Digraph::is_non_split)
      .def("strongly_connected_components", &Digraph::strongly_connected_components)
      .def("union_with", &Digraph::union_with)
      .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; }, py::is_operator())
      .def("__repr__", [](const Digraph& g) {
        return "<Digraph n=" + std::to_string(g.node_count()) +
               " edges=" + std::to_string(g.edge_count(false)) + ">";
      });

  m.def("product", &product, py::arg("a"), py::arg("b"),
        "composition: (u,v) in product(a,b) iff a-step then b-step connects u to v");

  py::class_<Schedule>(m, "Schedule")
      .def(py::init<std::vector<Digraph>, std::vector<Digraph>>(), py::arg("prefix"),
           py::arg("cycle"))
      .def_property_readonly("node_count", &Schedule::node_count)
      .def_property_readonly("prefix_length", &Schedule::prefix_length)
      .def_property_readonly("cycle_length", &Schedule::cycle_length)
      .def("graph_at", &Schedule::graph_at, py::arg("t"))
      .def("cumulative", &Schedule::cumulative, py::arg("t"), py::arg("t2"))
      .def("limit_superior", &Schedule::limit_superior)
      .def("integral_at", &Schedule::integral_at, py::arg("t"))
      .def("integral_limit", &Schedule::integral_limit)
      .def("kernel", &Schedule::kernel)
      .def("is_rooted_with_delay", &Schedule::is_rooted_with_delay, py::arg("T"))
      .def("bounded_reach_check", &Schedule::bounded_reach_check, py::arg("T"),
           py::arg("horizon"))
      .def("__eq__", [](const Schedule& a, const Schedule& b) { return a == b; },
           py::is_operator());

  py::class_<ValueDomain>(m, "ValueDomain")
      .def(py::init<std::vector<int>>(), py::arg("values"))
      .def_static("contiguous", &ValueDomain::contiguous, py::arg("m"))
      .def("values", &ValueDomain::values)
      .def("contains", &ValueDomain::contains)
      .def("__len__", &ValueDomain::size);

  py::class_<CutoffFamily>(m, "CutoffFamily")
      .def_static("half", &CutoffFamily::half)
      .def_static("log2", &CutoffFamily::log2)
      .def_static("constant", &CutoffFamily::constant, py::arg("c"))
      .def_static("table", &CutoffFamily::table, py::arg("entries"))
      .def("delta_for", &CutoffFamily::delta_for, py::arg("counter"))
      .def("is_safe", &CutoffFamily::is_safe)
      .def_property_readonly("name", &CutoffFamily::name);

  py::enum_<Algorithm>(m, "Algorithm")
      .value("MinMax", Algorithm::MinMax)
      .value("Min", Algorithm::Min);

  py::class_<AgentState>(m, "AgentState")
      .def_readonly("x", &AgentState::x)
      .def_readonly("y", &AgentState::y)
      .def_readonly("delta", &AgentState::delta)
      .def_readonly("counter", &AgentState::counter)
      .def_readonly("input", &AgentState::input)
      .def_property_readonly("age", [](const AgentState& s) { return s.age.ages; });

  py::class_<TraceRound>(m, "TraceRound")
      .def_readonly("active", &TraceRound::active)
      .def_readonly("agents", &TraceRound::agents);

  py::class_<Trace>(m, "Trace")
      .def_readonly("n", &Trace::n)
      .def_readonly("horizon", &Trace::horizon)
      .def_readonly("cycle_length", &Trace::cycle_length)
      .def_readonly("algorithm", &Trace::algorithm)
      .def_readonly("cutoff", &Trace::cutoff)
      .def_readonly("config_hash", &Trace::config_hash)
      .def_readwrite("seed", &Trace::seed)
      .def_readonly("inputs", &Trace::inputs)
      .def("at", &Trace::at, py::arg("t"), py::return_value_policy::reference_internal)
      .def("to_jsonl", [](const Trace& t) { return trace_to_jsonl(t); })
      .def("to_text", [](const Trace& t) { return trace_to_text(t); });

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init(&make_config), py::arg("inputs"), py::arg("schedule"), py::arg("horizon"),
           py::arg("domain") = std::nullopt, py::arg("starts") = std::nullopt,
           py::arg("cutoff") = CutoffFamily::half(), py::arg("algorithm") = Algorithm::MinMax)
      .def_readonly("inputs", &RunConfig::inputs)
      .def_readonly("starts", &RunConfig::starts)
      .def_readwrite("horizon", &RunConfig::horizon)
      .def("hash", &RunConfig::hash);

  m.def("run", &run, py::arg("config"), "simulate a run, returning its trace");

  py::class_<StabilizationReport>(m, "StabilizationReport")
      .def_property_readonly("status",
                             [](const StabilizationReport& r) { return status_name(r.status); })
      .def_readonly("stabilized", &StabilizationReport::stabilized)
      .def_readonly("round", &StabilizationReport::round)
      .def_readonly("value", &StabilizationReport::value)
      .def_readonly("validity_ok", &StabilizationReport::validity_ok)
      .def("to_json", [](const StabilizationReport& r) { return report_to_json(r); })
      .def("to_text", [](const StabilizationReport& r) { return report_to_text(r); });

  m.def("check_stabilization", &check_stabilization, py::arg("trace"));

  py::class_<RunHistory>(m, "RunHistory")
      .def(py::init<const Schedule&, std::vector<int>, std::vector<Round>, Round>(),
           py::arg("schedule"), py::arg("inputs"), py::arg("starts"), py::arg("horizon"))
      .def("active_at", &RunHistory::active_at, py::arg("t"))
      .def("active_cumulative", &RunHistory::active_cumulative, py::arg("a"), py::arg("b"))
      .def("active_in_set", &RunHistory::active_in_set, py::arg("u"), py::arg("a"), py::arg("b"))
      .def("oracle_m", &RunHistory::oracle_m, py::arg("u"), py::arg("t"))
      .def("oracle_y", &RunHistory::oracle_y, py::arg("u"), py::arg("t"), py::arg("theta"));

  py::class_<MStarReport>(m, "MStarReport")
      .def_readonly("per_node", &MStarReport::per_node)
      .def_readonly("overall", &MStarReport::overall)
      .def_readonly("settle_round", &MStarReport::settle_round)
      .def_readonly("saturation_round", &MStarReport::saturation_round);

  m.def("m_star_analysis", &m_star_analysis, py::arg("schedule"), py::arg("inputs"),
        py::arg("starts"), py::arg("horizon"));

  m.def("scenario_fixed_rooted", &scenario_fixed_rooted, py::arg("n"), py::arg("seed"));
  m.def("scenario_bounded_delay", &scenario_bounded_delay, py::arg("n"), py::arg("T"),
        py::arg("L"), py::arg("seed"));
  m.def("scenario_non_split", &scenario_non_split, py::arg("n"), py::arg("L"), py::arg("seed"));

  py::class_<EmptyKernelScenario>(m, "EmptyKernelScenario")
      .def_readonly("schedule", &EmptyKernelScenario::schedule)
      .def_readonly("inputs", &EmptyKernelScenario::inputs);
  m.def("scenario_empty_kernel", &scenario_empty_kernel, py::arg("n"));

  py::class_<AdversaryResult>(m, "AdversaryResult")
      .def_readonly("trace", &AdversaryResult::trace)
      .def_readonly("prefix", &AdversaryResult::prefix)
      .def_readonly("phase_end_rounds", &AdversaryResult::phase_end_rounds)
      .def_readonly("phase_end_values", &AdversaryResult::phase_end_values)
      .def_readonly("forward_chain", &AdversaryResult::forward_chain)
      .def_readonly("rotated_chain", &AdversaryResult::rotated_chain)
      .def("realized_schedule", &AdversaryResult::realized_schedule);
  m.def("adversary_alternating_chains", &adversary_alternating_chains, py::arg("n"),
        py::arg("cutoff"), py::arg("max_phases"), py::arg("phase_budget") = 0);

  m.def("parse_digraph", &parse_digraph, py::arg("text"));
  m.def("format_digraph", &format_digraph, py::arg("g"));
  m.def("parse_schedule", &parse_schedule, py::arg("text"));
  m.def("format_schedule", &format_schedule, py::arg("s"));

  py::class_<CriterionResult>(m, "CriterionResult")
      .def_readonly("id", &CriterionResult::id)
      .def_readonly("name", &CriterionResult::name)
      .def_readonly("passed", &CriterionResult::passed)
      .def_readonly("detail", &CriterionResult::detail);
  m.def("run_criterion", &run_criterion, py::arg("id"), py::arg("seed_base") = kDefaultSeedBase);
  m.def("run_all", &run_all, py::arg("seed_base") = kDefaultSeedBase);
  m.def("suite_criteria", &suite_criteria, py::arg("suite"));
  m.def("suite_names", &suite_names);
}
