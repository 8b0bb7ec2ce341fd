#pragma once

#include <stdexcept>
#include <string>

#include "minmax/simulator.hpp"

namespace minmax {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line),
        message_(message) {}
  int line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  std::string message_;
};

//! Digraph file: first line is the node count, every further line one
//! non-loop edge "u v". '#' starts a comment, blank lines are skipped,
//! self-loops are implicit (explicit ones are accepted and ignored).
Digraph parse_digraph(const std::string& text);
std::string format_digraph(const Digraph& g);

//! Schedule file: "prefix K" followed by K digraph blocks, then "cycle L"
//! followed by L digraph blocks. A block is a node-count line followed by its
//! edge lines (a line with a single integer opens the next block).
Schedule parse_schedule(const std::string& text);
std::string format_schedule(const Schedule& s);

//! What the caller expects a run to do; drives the CLI exit code.
enum class Expectation { None, Stabilize, Disagree, Oscillate, Undetermined };

std::string expectation_name(Expectation e);
Expectation parse_expectation(const std::string& word);  // throws std::invalid_argument

//! Oscillate additionally demands some agent's output still changing inside
//! the final max(2n, 2*cycle) rounds; disagree is any trace that never
//! settles.
bool expectation_met(Expectation e, const StabilizationReport& report, const Trace& trace);

//! Run configuration: flat "key: value" lines. Keys: inputs (required),
//! horizon (required), domain, starts ("inf" allowed), algorithm, cutoff
//! (half | log | constant:<c> | table:a,b,...), expect, and exactly one of
//!   schedule_file: <path>          resolved against base_dir
//!   schedule:                      followed by an indented schedule block
struct RunSpec {
  RunConfig config;
  Expectation expect = Expectation::None;
};

RunSpec parse_run_config(const std::string& text, const std::string& base_dir = ".");

//! One record per line: a meta object, then one object per round with the
//! active non-loop edges and each agent's {x, y, delta, counter, age};
//! unseen ages serialize as the token "inf".
std::string trace_to_jsonl(const Trace& trace);
//! Same content, line-oriented human format.
std::string trace_to_text(const Trace& trace);

std::string report_to_json(const StabilizationReport& report);
std::string report_to_text(const StabilizationReport& report);

std::string slurp_file(const std::string& path);  // throws std::runtime_error

}  // namespace minmax
