#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace minmax {

//! Deterministic random source. mt19937_64 output is fixed by the standard,
//! and all reductions below are plain modulo, so a seed pins the exact draw
//! sequence on every platform (std::*_distribution does not guarantee that).
//! Every generator/scenario takes one Rng and draws from it in the order
//! documented at its definition.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  //! Uniform integer in [lo, hi], inclusive. Modulo reduction: the tiny bias
  //! is irrelevant here, determinism is not.
  int uniform_int(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("Rng::uniform_int: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
    return lo + static_cast<int>(next() % span);
  }

  //! True with probability ppm / 1'000'000.
  bool chance_ppm(std::uint32_t ppm) { return next() % 1000000u < ppm; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace minmax
