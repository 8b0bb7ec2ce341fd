#include "minmax/digraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace minmax {

namespace {

std::uint64_t full_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Lowest set bit index, destructive iteration helper.
int pop_lowest(std::uint64_t& m) {
  int w = std::countr_zero(m);
  m &= m - 1;
  return w;
}

}  // namespace

NodeSet::NodeSet(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n < 0 || n > kMaxNodes) throw std::invalid_argument("NodeSet: bad universe size");
  if (bits & ~full_mask(n)) throw std::invalid_argument("NodeSet: bits outside universe");
}

NodeSet NodeSet::all(int n) { return NodeSet(n, full_mask(n)); }

NodeSet NodeSet::single(int n, int u) {
  NodeSet s(n);
  s.add(u);
  return s;
}

void NodeSet::add(int u) {
  if (u < 0 || u >= n_) throw std::out_of_range("NodeSet::add: node out of range");
  bits_ |= std::uint64_t{1} << u;
}

bool NodeSet::contains(int u) const {
  return u >= 0 && u < n_ && (bits_ >> u & 1);
}

int NodeSet::size() const { return std::popcount(bits_); }

bool NodeSet::is_all() const { return bits_ == full_mask(n_); }

std::vector<int> NodeSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(size()));
  std::uint64_t m = bits_;
  while (m) out.push_back(pop_lowest(m));
  return out;
}

NodeSet NodeSet::operator&(const NodeSet& other) const {
  if (n_ != other.n_) throw std::invalid_argument("NodeSet: universe mismatch");
  return NodeSet(n_, bits_ & other.bits_);
}

NodeSet NodeSet::operator|(const NodeSet& other) const {
  if (n_ != other.n_) throw std::invalid_argument("NodeSet: universe mismatch");
  return NodeSet(n_, bits_ | other.bits_);
}

std::string NodeSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int u : members()) {
    if (!first) out += ",";
    out += std::to_string(u);
    first = false;
  }
  out += "}";
  return out;
}

Digraph::Digraph(int n) : n_(n) {
  if (n < 1 || n > kMaxNodes) throw std::invalid_argument("Digraph: node count must be in [1, 64]");
  rows_.resize(static_cast<size_t>(n));
  for (int u = 0; u < n; ++u) rows_[static_cast<size_t>(u)] = std::uint64_t{1} << u;
}

Digraph Digraph::complete(int n) {
  Digraph g(n);
  for (int u = 0; u < n; ++u) g.rows_[static_cast<size_t>(u)] = full_mask(n);
  return g;
}

void Digraph::check_node(int u) const {
  if (u < 0 || u >= n_) throw std::out_of_range("Digraph: node out of range");
}

void Digraph::add_edge(int u, int v) {
  check_node(u);
  check_node(v);
  rows_[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
}

void Digraph::remove_edge(int u, int v) {
  check_node(u);
  check_node(v);
  if (u == v) throw std::invalid_argument("Digraph: self-loops are structural and cannot be removed");
  rows_[static_cast<size_t>(u)] &= ~(std::uint64_t{1} << v);
}

bool Digraph::has_edge(int u, int v) const {
  check_node(u);
  check_node(v);
  return rows_[static_cast<size_t>(u)] >> v & 1;
}

std::uint64_t Digraph::row(int u) const {
  check_node(u);
  return rows_[static_cast<size_t>(u)];
}

NodeSet Digraph::out_neighbors(int u) const { return NodeSet(n_, row(u)); }

NodeSet Digraph::in_neighbors(int v) const {
  check_node(v);
  NodeSet in(n_);
  for (int u = 0; u < n_; ++u)
    if (rows_[static_cast<size_t>(u)] >> v & 1) in.add(u);
  return in;
}

std::vector<std::pair<int, int>> Digraph::edges(bool with_loops) const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t m = rows_[static_cast<size_t>(u)];
    while (m) {
      int v = pop_lowest(m);
      if (u != v || with_loops) out.emplace_back(u, v);
    }
  }
  return out;
}

int Digraph::edge_count(bool with_loops) const {
  int c = 0;
  for (int u = 0; u < n_; ++u) c += std::popcount(rows_[static_cast<size_t>(u)]);
  return with_loops ? c : c - n_;
}

Digraph product(const Digraph& a, const Digraph& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("product: node count mismatch");
  Digraph out(a.n_);
  for (int u = 0; u < a.n_; ++u) {
    std::uint64_t acc = 0;
    std::uint64_t m = a.rows_[static_cast<size_t>(u)];
    while (m) {
      int w = std::countr_zero(m);
      m &= m - 1;
      acc |= b.rows_[static_cast<size_t>(w)];
    }
    out.rows_[static_cast<size_t>(u)] = acc;
  }
  return out;
}

Digraph Digraph::transitive_closure() const {
  Digraph c = *this;
  for (int w = 0; w < n_; ++w) {
    const std::uint64_t wrow = c.rows_[static_cast<size_t>(w)];
    for (int u = 0; u < n_; ++u)
      if (c.rows_[static_cast<size_t>(u)] >> w & 1) c.rows_[static_cast<size_t>(u)] |= wrow;
  }
  return c;
}

NodeSet Digraph::roots() const {
  const std::uint64_t full = full_mask(n_);
  NodeSet r(n_);
  for (int u = 0; u < n_; ++u) {
    std::uint64_t reach = std::uint64_t{1} << u;
    std::uint64_t prev = 0;
    while (reach != prev) {
      prev = reach;
      std::uint64_t frontier = reach;
      while (frontier) reach |= rows_[static_cast<size_t>(pop_lowest(frontier))];
    }
    if (reach == full) r.add(u);
  }
  return r;
}

NodeSet Digraph::central_roots() const {
  const std::uint64_t full = full_mask(n_);
  NodeSet r(n_);
  for (int u = 0; u < n_; ++u)
    if (rows_[static_cast<size_t>(u)] == full) r.add(u);
  return r;
}

bool Digraph::is_rooted() const { return !roots().empty(); }

bool Digraph::is_non_split() const {
  std::vector<std::uint64_t> cols(static_cast<size_t>(n_), 0);
  for (int u = 0; u < n_; ++u) {
    std::uint64_t m = rows_[static_cast<size_t>(u)];
    while (m) cols[static_cast<size_t>(pop_lowest(m))] |= std::uint64_t{1} << u;
  }
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if ((cols[static_cast<size_t>(a)] & cols[static_cast<size_t>(b)]) == 0) return false;
  return true;
}

std::vector<NodeSet> Digraph::strongly_connected_components() const {
  // Kosaraju with iterative DFS; node order 0..n-1 fixes the output.
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n_));
  std::uint64_t seen = 0;
  for (int s = 0; s < n_; ++s) {
    if (seen >> s & 1) continue;
    // stack entries: (node, out-mask still to visit)
    std::vector<std::pair<int, std::uint64_t>> stack;
    seen |= std::uint64_t{1} << s;
    stack.emplace_back(s, rows_[static_cast<size_t>(s)]);
    while (!stack.empty()) {
      auto& [u, rest] = stack.back();
      std::uint64_t unseen = rest & ~seen;
      if (unseen) {
        int v = pop_lowest(unseen);
        rest &= ~(std::uint64_t{1} << v);
        seen |= std::uint64_t{1} << v;
        stack.emplace_back(v, rows_[static_cast<size_t>(v)]);
      } else {
        order.push_back(u);
        stack.pop_back();
      }
    }
  }

  std::vector<std::uint64_t> tcols(static_cast<size_t>(n_), 0);  // transpose rows
  for (int u = 0; u < n_; ++u) {
    std::uint64_t m = rows_[static_cast<size_t>(u)];
    while (m) tcols[static_cast<size_t>(pop_lowest(m))] |= std::uint64_t{1} << u;
  }

  std::vector<NodeSet> comps;
  std::uint64_t assigned = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (assigned >> *it & 1) continue;
    std::uint64_t comp = 0;
    std::vector<int> stack{*it};
    assigned |= std::uint64_t{1} << *it;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp |= std::uint64_t{1} << u;
      std::uint64_t m = tcols[static_cast<size_t>(u)] & ~assigned;
      while (m) {
        int v = pop_lowest(m);
        assigned |= std::uint64_t{1} << v;
        stack.push_back(v);
      }
    }
    comps.emplace_back(n_, comp);
  }
  std::sort(comps.begin(), comps.end(), [](const NodeSet& a, const NodeSet& b) {
    return std::countr_zero(a.bits()) < std::countr_zero(b.bits());
  });
  return comps;
}

std::vector<NodeSet> Digraph::condensation_sources() const {
  std::vector<NodeSet> comps = strongly_connected_components();
  std::vector<int> comp_of(static_cast<size_t>(n_), -1);
  for (size_t c = 0; c < comps.size(); ++c)
    for (int u : comps[c].members()) comp_of[static_cast<size_t>(u)] = static_cast<int>(c);

  std::vector<bool> has_incoming(comps.size(), false);
  for (int u = 0; u < n_; ++u) {
    std::uint64_t m = rows_[static_cast<size_t>(u)];
    while (m) {
      int v = pop_lowest(m);
      if (comp_of[static_cast<size_t>(u)] != comp_of[static_cast<size_t>(v)])
        has_incoming[static_cast<size_t>(comp_of[static_cast<size_t>(v)])] = true;
    }
  }
  std::vector<NodeSet> sources;
  for (size_t c = 0; c < comps.size(); ++c)
    if (!has_incoming[c]) sources.push_back(comps[c]);
  return sources;
}

Digraph Digraph::union_with(const Digraph& other) const {
  if (n_ != other.n_) throw std::invalid_argument("union_with: node count mismatch");
  Digraph out = *this;
  for (int u = 0; u < n_; ++u) out.rows_[static_cast<size_t>(u)] |= other.rows_[static_cast<size_t>(u)];
  return out;
}

}  // namespace minmax
