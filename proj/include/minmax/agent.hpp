#pragma once

#include <limits>
#include <string>
#include <vector>

#include "minmax/schedule.hpp"

namespace minmax {

//! Start round of an agent that never becomes active.
inline constexpr Round kNeverActive = std::numeric_limits<Round>::max();
//! Age of a value the agent has never seen. Arithmetic saturates at it.
inline constexpr int kInfiniteAge = std::numeric_limits<int>::max();

//! The finite, totally ordered set of admissible input values.
class ValueDomain {
 public:
  explicit ValueDomain(std::vector<int> values);  // strictly increasing
  static ValueDomain contiguous(int m);           // 0..m-1

  int size() const { return static_cast<int>(values_.size()); }
  int value_at(int index) const;
  int index_of(int value) const;  // throws if absent
  bool contains(int value) const;
  const std::vector<int>& values() const { return values_; }

  bool operator==(const ValueDomain& other) const = default;

 private:
  std::vector<int> values_;
};

//! One age per domain value, indexed like the domain. ages[i] == k means the
//! agent learned k rounds ago (transitively) of someone holding value i;
//! kInfiniteAge means never.
struct AgeVector {
  std::vector<int> ages;

  static AgeVector unseen(int domain_size) {
    return AgeVector{std::vector<int>(static_cast<size_t>(domain_size), kInfiniteAge)};
  }
  bool operator==(const AgeVector& other) const = default;
};

struct AgentState {
  int x = 0;        // smallest input value heard of so far
  int y = 0;        // output: largest value with age within the cutoff
  int delta = 0;    // current cutoff
  AgeVector age;
  int counter = 0;  // rounds executed since activation
  Round start = 1;
  int input = 0;

  bool operator==(const AgentState& other) const = default;
};

//! Cutoff rule delta = f(counter). Evaluation clamps into [0, counter], so
//! the lookback window theta = t - delta always lands in [start-1, t].
class CutoffFamily {
 public:
  static CutoffFamily half();              // f(k) = floor(k/2)
  static CutoffFamily log2();              // f(0) = f(1) = 0, else floor(log2 k)
  static CutoffFamily constant(int c);     // f(k) = c (clamped); not safe
  static CutoffFamily table(std::vector<int> entries);  // last entry repeats

  int delta_for(int counter) const;
  //! Safe means delta -> infinity and counter - delta -> infinity; holds for
  //! half and log, fails for constant and (finite) table rules.
  bool is_safe() const;
  const std::string& name() const { return name_; }

  bool operator==(const CutoffFamily& other) const = default;

 private:
  enum class Kind { Half, Log, Constant, Table };
  CutoffFamily(Kind kind, int constant, std::vector<int> entries, std::string name);

  Kind kind_;
  int constant_;
  std::vector<int> entries_;
  std::string name_;
};

//! Fresh local state at activation: x = y = input, delta = 0, all ages
//! infinite except the own input at age 0.
AgentState agent_init(int input, const ValueDomain& domain);

//! One synchronous round. `received` must hold the age vectors the agent
//! received this round: its own previous vector (self-loop) plus one per
//! active in-neighbor, all as of the end of the previous round.
AgentState agent_round(const AgentState& state, const std::vector<AgeVector>& received,
                       const CutoffFamily& cutoff, const ValueDomain& domain);

//! Plain min-diffusion baseline: x and y become the minimum of the own and
//! all received x values.
AgentState min_agent_round(const AgentState& state, const std::vector<int>& received_x);

}  // namespace minmax
