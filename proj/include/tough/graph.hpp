#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tough {

/// Largest supported vertex count. Every vertex set fits one machine word.
inline constexpr int kMaxVertices = 64;

/// Thrown when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A subset of the vertices 0..n-1 of some graph, stored as a 64-bit mask.
class VertexSet {
 public:
  using Word = std::uint64_t;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Word bits) : bits_(bits) {}

  /// {0, ..., n-1}
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~Word{0} : (Word{1} << n) - 1);
  }
  static VertexSet of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  constexpr Word bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= Word{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(Word{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;

  /// Members in ascending order.
  std::vector<int> members() const;

  /// Iterates members in ascending order: `for (int v : set)`.
  class iterator {
   public:
    constexpr explicit iterator(Word rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr bool operator==(const iterator&) const = default;
   private:
    Word rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  Word bits_ = 0;
};

/// Connected components of G - S, blocks ordered by size, ties by smallest member.
struct ComponentPartition {
  std::vector<VertexSet> blocks;

  int count() const { return static_cast<int>(blocks.size()); }
  std::vector<int> sizes() const;
};

struct DegreeProfile {
  int max_degree = 0;
  int min_degree = 0;
  std::vector<int> degrees;
};

/// Immutable simple undirected graph on vertices 0..n-1 with bitset rows.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices (n K_1).
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  /// Rows must be symmetric, loop-free and confined to 0..n-1.
  static Graph from_rows(std::vector<VertexSet> rows);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph star(int leaves);
  static Graph petersen();

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const { return edges_; }

  VertexSet neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return rows_[v].size(); }
  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  VertexSet vertices() const { return VertexSet::full(order()); }

  std::vector<std::pair<int, int>> edge_list() const;

  /// G[keep], relabelled to 0..|keep|-1 preserving vertex order.
  Graph induced(VertexSet keep) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexSet> rows_;
  int edges_ = 0;
};

/// Next larger word with the same number of set bits (Gosper's hack).
constexpr std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t low = x & (~x + 1);
  const std::uint64_t ripple = x + low;
  return (((ripple ^ x) >> 2) / low) | ripple;
}

DegreeProfile degree_profile(const Graph& g);

/// Sum of degrees over X.
int volume(const Graph& g, VertexSet x);

/// e_{X,Y}: edges with one end in X and the other in Y. Edges with both ends in
/// X ∩ Y count twice, so edge_boundary(g, X, X) == 2 * edges inside X.
long edge_boundary(const Graph& g, VertexSet x, VertexSet y);

/// Number of edges with both ends in X.
int edges_within(const Graph& g, VertexSet x);

bool is_independent(const Graph& g, VertexSet x);

/// Vertices reachable from `start` inside `allowed`.
VertexSet reach(const Graph& g, int start, VertexSet allowed);

/// Components of G - removed. Throws PreconditionError when removed == V.
ComponentPartition components(const Graph& g, VertexSet removed);

/// Number of components of G - removed; 0 when nothing remains.
int count_components(const Graph& g, VertexSet removed);

Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
bool is_regular(const Graph& g);

}  // namespace tough
