#include "minmax/agent.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace minmax {

ValueDomain::ValueDomain(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("ValueDomain: must not be empty");
  for (size_t i = 1; i < values_.size(); ++i)
    if (values_[i - 1] >= values_[i])
      throw std::invalid_argument("ValueDomain: values must be strictly increasing");
}

ValueDomain ValueDomain::contiguous(int m) {
  if (m < 1) throw std::invalid_argument("ValueDomain::contiguous: need at least one value");
  std::vector<int> v(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) v[static_cast<size_t>(i)] = i;
  return ValueDomain(std::move(v));
}

int ValueDomain::value_at(int index) const {
  if (index < 0 || index >= size()) throw std::out_of_range("ValueDomain::value_at");
  return values_[static_cast<size_t>(index)];
}

int ValueDomain::index_of(int value) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), value);
  if (it == values_.end() || *it != value)
    throw std::invalid_argument("ValueDomain::index_of: value not in domain");
  return static_cast<int>(it - values_.begin());
}

bool ValueDomain::contains(int value) const {
  return std::binary_search(values_.begin(), values_.end(), value);
}

CutoffFamily::CutoffFamily(Kind kind, int constant, std::vector<int> entries, std::string name)
    : kind_(kind), constant_(constant), entries_(std::move(entries)), name_(std::move(name)) {}

CutoffFamily CutoffFamily::half() { return CutoffFamily(Kind::Half, 0, {}, "half"); }

CutoffFamily CutoffFamily::log2() { return CutoffFamily(Kind::Log, 0, {}, "log"); }

CutoffFamily CutoffFamily::constant(int c) {
  if (c < 0) throw std::invalid_argument("CutoffFamily::constant: cutoff must be >= 0");
  return CutoffFamily(Kind::Constant, c, {}, "constant(" + std::to_string(c) + ")");
}

CutoffFamily CutoffFamily::table(std::vector<int> entries) {
  if (entries.empty()) throw std::invalid_argument("CutoffFamily::table: need at least one entry");
  std::string name = "table(";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0) throw std::invalid_argument("CutoffFamily::table: entries must be >= 0");
    if (i) name += ",";
    name += std::to_string(entries[i]);
  }
  name += ")";
  return CutoffFamily(Kind::Table, 0, std::move(entries), std::move(name));
}

int CutoffFamily::delta_for(int counter) const {
  if (counter < 0) throw std::invalid_argument("CutoffFamily::delta_for: counter must be >= 0");
  int raw = 0;
  switch (kind_) {
    case Kind::Half:
      raw = counter / 2;
      break;
    case Kind::Log:
      raw = counter < 1 ? 0 : std::bit_width(static_cast<unsigned>(counter)) - 1;
      break;
    case Kind::Constant:
      raw = constant_;
      break;
    case Kind::Table:
      raw = counter < static_cast<int>(entries_.size()) ? entries_[static_cast<size_t>(counter)]
                                                        : entries_.back();
      break;
  }
  return std::clamp(raw, 0, counter);
}

bool CutoffFamily::is_safe() const { return kind_ == Kind::Half || kind_ == Kind::Log; }

AgentState agent_init(int input, const ValueDomain& domain) {
  AgentState s;
  s.x = input;
  s.y = input;
  s.delta = 0;
  s.age = AgeVector::unseen(domain.size());
  s.age.ages[static_cast<size_t>(domain.index_of(input))] = 0;
  s.counter = 0;
  s.input = input;
  return s;
}

AgentState agent_round(const AgentState& state, const std::vector<AgeVector>& received,
                       const CutoffFamily& cutoff, const ValueDomain& domain) {
  if (received.empty())
    throw std::invalid_argument("agent_round: received must include the agent's own age vector");
  const int m = domain.size();
  for (const AgeVector& av : received)
    if (static_cast<int>(av.ages.size()) != m)
      throw std::invalid_argument("agent_round: age vector size mismatch");

  AgentState next = state;

  // Every value ages by one round, taking the freshest report received.
  for (int i = 0; i < m; ++i) {
    int best = kInfiniteAge;
    for (const AgeVector& av : received) best = std::min(best, av.ages[static_cast<size_t>(i)]);
    next.age.ages[static_cast<size_t>(i)] = best == kInfiniteAge ? kInfiniteAge : best + 1;
  }

  // x: smallest value ever heard of; its age resets, x was held just now.
  int x_index = -1;
  for (int i = 0; i < m; ++i)
    if (next.age.ages[static_cast<size_t>(i)] != kInfiniteAge) {
      x_index = i;
      break;
    }
  // The own previous vector is in `received` and had a finite entry.
  next.x = domain.value_at(x_index);
  next.age.ages[static_cast<size_t>(x_index)] = 0;

  next.counter = state.counter + 1;
  next.delta = cutoff.delta_for(next.counter);

  // y: largest value recent enough to pass the cutoff. x itself always
  // qualifies (age 0), so y >= x and the max is never over an empty set.
  for (int i = m - 1; i >= 0; --i)
    if (next.age.ages[static_cast<size_t>(i)] <= next.delta) {
      next.y = domain.value_at(i);
      break;
    }
  return next;
}

AgentState min_agent_round(const AgentState& state, const std::vector<int>& received_x) {
  AgentState next = state;
  next.counter = state.counter + 1;
  for (int v : received_x) next.x = std::min(next.x, v);
  next.y = next.x;
  return next;
}

}  // namespace minmax
