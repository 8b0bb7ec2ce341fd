#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace minmax {

//! Outcome of one release gate check. `detail` is a single line: what was
//! covered on pass, the first counterexample on fail.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

inline constexpr std::uint64_t kDefaultSeedBase = 1729;

//! The ten release gate checks. Sample counts, bounds and seeds are pinned
//! inside; `seed_base` only shifts the pinned seeds as a block.
CriterionResult run_criterion(int id, std::uint64_t seed_base = kDefaultSeedBase);
std::vector<CriterionResult> run_all(std::uint64_t seed_base = kDefaultSeedBase);

//! Criterion ids behind a named suite (graph-calculus, equivalence,
//! convergence, adversary). Throws std::invalid_argument for unknown names.
std::vector<int> suite_criteria(const std::string& suite);
std::vector<std::string> suite_names();

}  // namespace minmax
