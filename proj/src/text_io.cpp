#include "minmax/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "minmax/agent.hpp"

namespace minmax {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Comment stripping plus whitespace tokenization; blank lines drop out but
// the original line numbers survive for error messages.
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    Line line{number, {}};
    std::istringstream ls(raw);
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

bool looks_like_int(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + i, s.end(), [](unsigned char c) { return std::isdigit(c); });
}

int parse_int(const std::string& s, int line, const std::string& what) {
  if (!looks_like_int(s)) throw ParseError(line, "expected " + what + ", got '" + s + "'");
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    throw ParseError(line, what + " out of range: '" + s + "'");
  }
}

int parse_node(const std::string& s, int n, int line) {
  int v = parse_int(s, line, "node id");
  if (v < 0 || v >= n)
    throw ParseError(line, "node " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
  return v;
}

// One digraph block out of a token stream: a node-count line, then edge
// lines. Stops before the next single-integer line (the following block) or
// any keyword line.
Digraph parse_block(const std::vector<Line>& lines, size_t& pos, int expect_n) {
  if (pos >= lines.size()) throw ParseError(lines.back().number, "missing digraph block");
  const Line& head = lines[pos];
  if (head.tokens.size() != 1)
    throw ParseError(head.number, "expected a node-count line opening a digraph block");
  int n = parse_int(head.tokens[0], head.number, "node count");
  if (n < 1 || n > kMaxNodes)
    throw ParseError(head.number, "node count must be in 1.." + std::to_string(kMaxNodes));
  if (expect_n > 0 && n != expect_n)
    throw ParseError(head.number, "node count " + std::to_string(n) + " does not match earlier " +
                                      std::to_string(expect_n));
  ++pos;
  Digraph g(n);
  while (pos < lines.size() && lines[pos].tokens.size() == 2 &&
         looks_like_int(lines[pos].tokens[0])) {
    const Line& line = lines[pos];
    int u = parse_node(line.tokens[0], n, line.number);
    int v = parse_node(line.tokens[1], n, line.number);
    if (u != v) g.add_edge(u, v);  // explicit loops are already implicit
    ++pos;
  }
  return g;
}

void format_edges(std::ostringstream& out, const Digraph& g) {
  for (auto [u, v] : g.edges(false)) out << u << ' ' << v << '\n';
}

std::string join_ints(const std::vector<int>& xs, char sep) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

nlohmann::ordered_json age_json(const AgeVector& age) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int a : age.ages) {
    if (a == kInfiniteAge)
      arr.push_back("inf");
    else
      arr.push_back(a);
  }
  return arr;
}

std::string age_text(const AgeVector& age) {
  std::string out = "[";
  for (size_t i = 0; i < age.ages.size(); ++i) {
    if (i) out += ',';
    out += age.ages[i] == kInfiniteAge ? "inf" : std::to_string(age.ages[i]);
  }
  return out + "]";
}

CutoffFamily parse_cutoff(const std::string& word, int line) {
  if (word == "half") return CutoffFamily::half();
  if (word == "log") return CutoffFamily::log2();
  if (word.rfind("constant:", 0) == 0)
    return CutoffFamily::constant(parse_int(word.substr(9), line, "cutoff constant"));
  if (word.rfind("table:", 0) == 0) {
    std::vector<int> entries;
    std::string rest = word.substr(6);
    std::istringstream in(rest);
    std::string item;
    while (std::getline(in, item, ','))
      entries.push_back(parse_int(item, line, "cutoff table entry"));
    if (entries.empty()) throw ParseError(line, "cutoff table needs at least one entry");
    return CutoffFamily::table(entries);
  }
  throw ParseError(line, "unknown cutoff '" + word + "'");
}

}  // namespace

Digraph parse_digraph(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty digraph description");
  size_t pos = 0;
  Digraph g = parse_block(lines, pos, 0);
  if (pos < lines.size())
    throw ParseError(lines[pos].number, "trailing content after digraph edges");
  return g;
}

std::string format_digraph(const Digraph& g) {
  std::ostringstream out;
  out << g.node_count() << '\n';
  format_edges(out, g);
  return out.str();
}

Schedule parse_schedule(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty schedule description");
  size_t pos = 0;
  auto keyword_count = [&](const char* word) {
    if (pos >= lines.size() || lines[pos].tokens.size() != 2 || lines[pos].tokens[0] != word)
      throw ParseError(pos < lines.size() ? lines[pos].number : lines.back().number,
                       std::string("expected '") + word + " <count>'");
    int k = parse_int(lines[pos].tokens[1], lines[pos].number, "block count");
    ++pos;
    return k;
  };

  int prefix_len = keyword_count("prefix");
  if (prefix_len < 0) throw ParseError(lines[0].number, "prefix length cannot be negative");
  std::vector<Digraph> prefix;
  int n = 0;
  for (int i = 0; i < prefix_len; ++i) {
    prefix.push_back(parse_block(lines, pos, n));
    n = prefix.back().node_count();
  }

  int cycle_len = keyword_count("cycle");
  if (cycle_len < 1) throw ParseError(lines[pos - 1].number, "cycle needs at least one digraph");
  std::vector<Digraph> cycle;
  for (int i = 0; i < cycle_len; ++i) {
    cycle.push_back(parse_block(lines, pos, n));
    n = cycle.back().node_count();
  }
  if (pos < lines.size())
    throw ParseError(lines[pos].number, "trailing content after last cycle block");
  return Schedule(std::move(prefix), std::move(cycle));
}

std::string format_schedule(const Schedule& s) {
  std::ostringstream out;
  out << "prefix " << s.prefix_length() << '\n';
  for (int i = 0; i < s.prefix_length(); ++i) {
    const Digraph& g = s.prefix()[i];
    out << g.node_count() << '\n';
    format_edges(out, g);
  }
  out << "cycle " << s.cycle_length() << '\n';
  for (int i = 0; i < s.cycle_length(); ++i) {
    const Digraph& g = s.cycle()[i];
    out << g.node_count() << '\n';
    format_edges(out, g);
  }
  return out.str();
}

std::string expectation_name(Expectation e) {
  switch (e) {
    case Expectation::None: return "none";
    case Expectation::Stabilize: return "stabilize";
    case Expectation::Disagree: return "disagree";
    case Expectation::Oscillate: return "oscillate";
    case Expectation::Undetermined: return "undetermined";
  }
  return "?";
}

Expectation parse_expectation(const std::string& word) {
  if (word == "none") return Expectation::None;
  if (word == "stabilize") return Expectation::Stabilize;
  if (word == "disagree") return Expectation::Disagree;
  if (word == "oscillate") return Expectation::Oscillate;
  if (word == "undetermined") return Expectation::Undetermined;
  throw std::invalid_argument("unknown expectation '" + word + "'");
}

bool expectation_met(Expectation e, const StabilizationReport& report, const Trace& trace) {
  switch (e) {
    case Expectation::None:
      return true;
    case Expectation::Stabilize:
      return report.status == StabilizationStatus::Stabilized;
    case Expectation::Undetermined:
      return report.status == StabilizationStatus::Undetermined;
    case Expectation::Disagree:
      return report.status == StabilizationStatus::Disagreement;
    case Expectation::Oscillate: {
      // Not settled, and at least one agent's output still moves inside the
      // final window. Plain disagreement with frozen outputs does not count.
      if (report.status == StabilizationStatus::Stabilized) return false;
      int window = std::max(2 * trace.n, 2 * trace.cycle_length);
      int from = std::max(1, trace.horizon - window + 1);
      for (int u = 0; u < trace.n; ++u) {
        int first = trace.at(from).agents[u].y;
        for (int t = from + 1; t <= trace.horizon; ++t)
          if (trace.at(t).agents[u].y != first) return true;
      }
      return false;
    }
  }
  return false;
}

RunSpec parse_run_config(const std::string& text, const std::string& base_dir) {
  std::vector<std::string> raw;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) raw.push_back(line);
  }

  std::optional<std::vector<int>> domain_values;
  std::vector<int> inputs;
  std::optional<std::vector<int>> starts;
  std::optional<Schedule> schedule;
  CutoffFamily cutoff = CutoffFamily::half();
  Algorithm algorithm = Algorithm::MinMax;
  int horizon = -1;
  Expectation expect = Expectation::None;
  int inputs_line = 0;

  auto strip = [](std::string s) {
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };

  for (size_t i = 0; i < raw.size(); ++i) {
    int number = static_cast<int>(i) + 1;
    bool indented = !raw[i].empty() && (raw[i][0] == ' ' || raw[i][0] == '\t');
    std::string line = strip(raw[i]);
    if (line.empty()) continue;
    if (indented) throw ParseError(number, "unexpected indented line outside a schedule block");
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(number, "expected 'key: value'");
    std::string key = strip(line.substr(0, colon));
    std::string value = strip(line.substr(colon + 1));

    auto int_list = [&](const std::string& v) {
      std::vector<int> out;
      std::istringstream in(v);
      std::string tok;
      while (in >> tok) out.push_back(parse_int(tok, number, key + " entry"));
      return out;
    };

    if (key == "domain") {
      domain_values = int_list(value);
    } else if (key == "inputs") {
      inputs = int_list(value);
      inputs_line = number;
    } else if (key == "starts") {
      std::vector<int> out;
      std::istringstream in(value);
      std::string tok;
      while (in >> tok)
        out.push_back(tok == "inf" || tok == "never" ? kNeverActive
                                                     : parse_int(tok, number, "start round"));
      starts = std::move(out);
    } else if (key == "algorithm") {
      if (value == "minmax")
        algorithm = Algorithm::MinMax;
      else if (value == "min")
        algorithm = Algorithm::Min;
      else
        throw ParseError(number, "unknown algorithm '" + value + "'");
    } else if (key == "cutoff") {
      cutoff = parse_cutoff(value, number);
    } else if (key == "horizon") {
      horizon = parse_int(value, number, "horizon");
    } else if (key == "expect") {
      try {
        expect = parse_expectation(value);
      } catch (const std::invalid_argument& ex) {
        throw ParseError(number, ex.what());
      }
    } else if (key == "schedule_file") {
      if (schedule) throw ParseError(number, "schedule given twice");
      std::filesystem::path p(value);
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      try {
        schedule = parse_schedule(slurp_file(p.string()));
      } catch (const ParseError& ex) {
        throw ParseError(number, value + ": " + ex.what());
      }
    } else if (key == "schedule") {
      if (schedule) throw ParseError(number, "schedule given twice");
      if (!value.empty()) throw ParseError(number, "inline schedule starts on the next line");
      // The block is every following line that is blank or indented.
      std::string block;
      size_t j = i + 1;
      for (; j < raw.size(); ++j) {
        std::string probe = strip(raw[j]);
        bool blank = probe.empty();
        bool ind = !raw[j].empty() && (raw[j][0] == ' ' || raw[j][0] == '\t');
        if (!blank && !ind) break;
        block += raw[j];
        block += '\n';
      }
      try {
        schedule = parse_schedule(block);
      } catch (const ParseError& ex) {
        throw ParseError(number + ex.line(), ex.message());
      }
      i = j - 1;
    } else {
      throw ParseError(number, "unknown key '" + key + "'");
    }
  }

  if (inputs.empty()) throw ParseError(1, "missing required key 'inputs'");
  if (horizon < 1) throw ParseError(1, "missing required key 'horizon' (must be >= 1)");
  if (!schedule) throw ParseError(1, "missing schedule (use 'schedule:' or 'schedule_file:')");

  int n = static_cast<int>(inputs.size());
  if (!domain_values) {
    std::vector<int> vals = inputs;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    domain_values = std::move(vals);
  }
  ValueDomain domain(*domain_values);
  for (int x : inputs)
    if (!domain.contains(x))
      throw ParseError(inputs_line, "input " + std::to_string(x) + " not in the value domain");
  if (!starts) starts = std::vector<int>(n, 1);

  RunSpec spec{RunConfig{std::move(domain), std::move(inputs), std::move(*starts),
                         std::move(*schedule), std::move(cutoff), algorithm, horizon},
               expect};
  spec.config.validate();
  return spec;
}

std::string trace_to_jsonl(const Trace& trace) {
  std::ostringstream out;
  nlohmann::ordered_json meta;
  meta["type"] = "meta";
  meta["n"] = trace.n;
  meta["horizon"] = trace.horizon;
  meta["cycle_length"] = trace.cycle_length;
  meta["algorithm"] = trace.algorithm;
  meta["cutoff"] = trace.cutoff;
  meta["config_hash"] = trace.config_hash;
  meta["seed"] = trace.seed;
  meta["inputs"] = trace.inputs;
  out << meta.dump() << '\n';
  for (int t = 1; t <= trace.horizon; ++t) {
    const TraceRound& round = trace.at(t);
    nlohmann::ordered_json rec;
    rec["type"] = "round";
    rec["round"] = t;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [u, v] : round.active.edges(false))
      edges.push_back(nlohmann::ordered_json::array({u, v}));
    rec["active_edges"] = std::move(edges);
    nlohmann::ordered_json agents = nlohmann::ordered_json::array();
    for (const AgentState& a : round.agents) {
      nlohmann::ordered_json rec_a;
      rec_a["x"] = a.x;
      rec_a["y"] = a.y;
      rec_a["delta"] = a.delta;
      rec_a["counter"] = a.counter;
      rec_a["age"] = age_json(a.age);
      agents.push_back(std::move(rec_a));
    }
    rec["agents"] = std::move(agents);
    out << rec.dump() << '\n';
  }
  return out.str();
}

std::string trace_to_text(const Trace& trace) {
  std::ostringstream out;
  out << "trace n=" << trace.n << " horizon=" << trace.horizon
      << " cycle_length=" << trace.cycle_length << " algorithm=" << trace.algorithm
      << " cutoff=" << trace.cutoff << " seed=" << trace.seed << '\n';
  out << "inputs " << join_ints(trace.inputs, ' ') << '\n';
  for (int t = 1; t <= trace.horizon; ++t) {
    const TraceRound& round = trace.at(t);
    out << "round " << t << " edges";
    for (auto [u, v] : round.active.edges(false)) out << ' ' << u << "->" << v;
    out << '\n';
    for (size_t u = 0; u < round.agents.size(); ++u) {
      const AgentState& a = round.agents[u];
      out << "  agent " << u << " x=" << a.x << " y=" << a.y << " delta=" << a.delta
          << " counter=" << a.counter << " age=" << age_text(a.age) << '\n';
    }
  }
  return out.str();
}

std::string report_to_json(const StabilizationReport& report) {
  nlohmann::ordered_json j;
  j["status"] = status_name(report.status);
  if (report.status == StabilizationStatus::Stabilized) {
    j["round"] = report.round;
    j["value"] = report.value;
  }
  j["validity"] = report.validity_ok;
  return j.dump();
}

std::string report_to_text(const StabilizationReport& report) {
  std::ostringstream out;
  out << "status: " << status_name(report.status) << '\n';
  if (report.status == StabilizationStatus::Stabilized) {
    out << "round: " << report.round << '\n';
    out << "value: " << report.value << '\n';
  }
  out << "validity: " << (report.validity_ok ? "ok" : "violated") << '\n';
  return out.str();
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace minmax
