#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace minmax {

//! Nodes are 0..n-1 and adjacency is stored as one 64-bit row per node, so a
//! composition is a boolean matrix product over machine words. That puts a
//! hard cap on n.
inline constexpr int kMaxNodes = 64;

//! Subset of the nodes of an n-node digraph, as a bit mask.
class NodeSet {
 public:
  explicit NodeSet(int n, std::uint64_t bits = 0);
  static NodeSet all(int n);
  static NodeSet single(int n, int u);

  int universe_size() const { return n_; }
  std::uint64_t bits() const { return bits_; }

  void add(int u);
  bool contains(int u) const;
  int size() const;
  bool empty() const { return bits_ == 0; }
  bool is_all() const;
  std::vector<int> members() const;  // ascending

  NodeSet operator&(const NodeSet& other) const;
  NodeSet operator|(const NodeSet& other) const;
  bool operator==(const NodeSet& other) const = default;

  std::string to_string() const;  // "{0,2,5}", "{}" when empty

 private:
  int n_;
  std::uint64_t bits_;
};

//! Directed graph with a self-loop at every node. The loops are structural:
//! they are present from construction and cannot be removed, which makes the
//! composition product monotone (E(a) and E(b) both survive in a*b) and keeps
//! every node an in/out neighbor of itself.
class Digraph {
 public:
  explicit Digraph(int n);  // self-loops only
  static Digraph complete(int n);
  static Digraph loops_only(int n) { return Digraph(n); }

  int node_count() const { return n_; }

  void add_edge(int u, int v);
  //! Removing a self-loop is rejected (they are structural).
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const;

  std::uint64_t row(int u) const;  // out-neighbor mask of u
  NodeSet out_neighbors(int u) const;
  NodeSet in_neighbors(int v) const;
  //! Non-loop edges in lexicographic (u, v) order; loops prepended per node
  //! when with_loops is set.
  std::vector<std::pair<int, int>> edges(bool with_loops = false) const;
  int edge_count(bool with_loops = false) const;

  //! Smallest transitively closed supergraph: (u,v) present iff v is
  //! reachable from u (self-loops make it reflexive anyway).
  Digraph transitive_closure() const;
  //! Nodes from which every node is reachable. Computed by per-node forward
  //! search, deliberately not via transitive_closure, so the two can
  //! cross-check each other.
  NodeSet roots() const;
  //! Nodes with an edge to every node (roots of a transitively closed graph).
  NodeSet central_roots() const;
  bool is_rooted() const;
  //! Every pair of nodes has a common in-neighbor.
  bool is_non_split() const;

  //! Strongly connected components; members ascending, components ordered by
  //! smallest member. Deterministic.
  std::vector<NodeSet> strongly_connected_components() const;
  //! Components with no incoming edge from another component, in the same
  //! order as strongly_connected_components(). Exactly one source iff rooted.
  std::vector<NodeSet> condensation_sources() const;

  Digraph union_with(const Digraph& other) const;

  bool operator==(const Digraph& other) const = default;

 private:
  void check_node(int u) const;

  friend Digraph product(const Digraph& a, const Digraph& b);

  int n_;
  std::vector<std::uint64_t> rows_;
};

//! Composition: (u,v) in a*b iff some w has (u,w) in a and (w,v) in b.
//! Associative; Digraph(n) (loops only) is the identity.
Digraph product(const Digraph& a, const Digraph& b);

}  // namespace minmax
