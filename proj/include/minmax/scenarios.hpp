#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "minmax/rng.hpp"
#include "minmax/simulator.hpp"

namespace minmax {

class GenerationError : public std::runtime_error {
 public:
  explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

class AdversaryStallError : public std::runtime_error {
 public:
  explicit AdversaryStallError(const std::string& what) : std::runtime_error(what) {}
};

//! Random digraph: one Bernoulli(edge_ppm) draw per ordered non-loop pair, in
//! row-major order (u = 0..n-1, v = 0..n-1, skipping u == v).
Digraph random_digraph(Rng& rng, int n, std::uint32_t edge_ppm);

//! Random schedule. Draws, in order: prefix length in [0, max_prefix], cycle
//! length in [1, max_cycle], then the prefix digraphs, then the cycle
//! digraphs (each per random_digraph).
Schedule random_schedule(Rng& rng, int n, int max_prefix, int max_cycle, std::uint32_t edge_ppm);

//! Directed chain over nodes `order[0] -> order[1] -> ...` plus loops.
Digraph chain_digraph(int n, const std::vector<int>& order);

//! Constant schedule holding one rooted digraph, rejection-sampled
//! (edge probability 0.35, at most 100000 attempts).
Schedule scenario_fixed_rooted(int n, std::uint64_t seed);

//! Pure-cycle schedule of length L that is rooted with delay T,
//! rejection-sampled (edge probability ~0.5/T, at most 100000 attempts).
Schedule scenario_bounded_delay(int n, int T, int L, std::uint64_t seed);

//! Two isolated directed cycles (sizes ceil(n/2) and floor(n/2)), inputs 0 on
//! the first part and 1 on the second; the kernel is certified empty.
struct EmptyKernelScenario {
  Schedule schedule;
  std::vector<int> inputs;
};
EmptyKernelScenario scenario_empty_kernel(int n);

//! Pure-cycle schedule of L digraphs in which every pair of nodes has a
//! common in-neighbor (hence each round is rooted on its own),
//! rejection-sampled per graph (edge probability 0.6).
Schedule scenario_non_split(int n, int L, std::uint64_t seed);

//! Adaptive two-graph construction on the chain topologies
//!   forward: 0 -> 1 -> ... -> n-1       (root 0)
//!   rotated: 1 -> 2 -> ... -> n-1 -> 0  (root 1)
//! with input 1 at node 0 and 0 elsewhere, everyone starting at round 1.
//! Even phases play `forward` until node 1 outputs 1, odd phases play
//! `rotated` until node 1 outputs 0; each observation ends the phase. A phase
//! that exceeds its budget throws AdversaryStallError.
struct AdversaryResult {
  Trace trace;                        // rounds 1..last phase end
  std::vector<Digraph> prefix;        // digraph actually played per round
  std::vector<Round> phase_end_rounds;
  std::vector<int> phase_end_values;  // node 1's output at each phase end: 1,0,1,0,...
  Digraph forward_chain = Digraph(1);  // placeholders until the run fills them
  Digraph rotated_chain = Digraph(1);

  //! The played rounds as prefix, then the two chains alternating forever.
  Schedule realized_schedule() const;
};

//! phase_budget 0 means the default policy: 10 * n * (previous phase length + 1).
AdversaryResult adversary_alternating_chains(int n, const CutoffFamily& cutoff, int max_phases,
                                             Round phase_budget = 0);

}  // namespace minmax
