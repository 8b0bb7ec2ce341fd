#pragma once

#include <optional>
#include <vector>

#include "minmax/digraph.hpp"

namespace minmax {

//! Rounds are 1-based throughout.
using Round = int;

//! Eventually periodic sequence of digraphs: a finite prefix followed by a
//! repeating cycle. graph_at(t) = prefix[t-1] for t <= P, else
//! cycle[(t - P - 1) mod L]. All limit operations below lean on the
//! periodicity of the tail.
class Schedule {
 public:
  Schedule(std::vector<Digraph> prefix, std::vector<Digraph> cycle);

  int node_count() const { return n_; }
  int prefix_length() const { return static_cast<int>(prefix_.size()); }
  int cycle_length() const { return static_cast<int>(cycle_.size()); }
  const std::vector<Digraph>& prefix() const { return prefix_; }
  const std::vector<Digraph>& cycle() const { return cycle_; }

  const Digraph& graph_at(Round t) const;

  //! Left-to-right composition of rounds t..t2. Loops-only identity when
  //! t2 < t; graph_at(t) when t2 == t.
  Digraph cumulative(Round t, Round t2) const;

  //! Edges that occur in infinitely many rounds: the union of the cycle
  //! digraphs (prefix edges occur finitely often unless also in the cycle).
  Digraph limit_superior() const;

  //! Limit of the cumulative compositions started at round t: the edge set of
  //! cumulative(t, t') is nondecreasing in t' (self-loops), so the iteration
  //! stops once a full cycle's worth of steps past the prefix adds nothing.
  Digraph integral_at(Round t) const;

  //! integral_at(t) for large t; equals transitive_closure(limit_superior()).
  Digraph integral_limit() const;

  //! Roots of the limit superior; cross-checked against the central roots of
  //! the integral limit (the two agree for every schedule, by construction of
  //! the calculus; a mismatch would be an implementation fault and throws).
  NodeSet kernel() const;

  //! Every window of T consecutive rounds composes to a rooted digraph.
  //! Window starts range over one full period [1, P+L]; T >= 1.
  bool is_rooted_with_delay(int T) const;

  //! Least s0 <= horizon such that for every t in [s0, horizon] and every
  //! node u, the in-neighbors of u across rounds t..t+T*(n-k) meet the
  //! kernel (k = kernel size). Windows may extend past horizon; nullopt when
  //! even t = horizon fails.
  std::optional<Round> bounded_reach_check(int T, Round horizon) const;

  bool operator==(const Schedule& other) const = default;

 private:
  int n_;
  std::vector<Digraph> prefix_;
  std::vector<Digraph> cycle_;
};

}  // namespace minmax
