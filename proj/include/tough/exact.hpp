#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tough/graph.hpp"

namespace tough {

/// Non-negative fraction num/den kept as two integers; compared exactly.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Ratio reduced() const {
    const auto g = std::gcd(num, den);
    return g == 0 ? *this : Ratio{num / g, den / g};
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend bool operator<(Ratio a, Ratio b) { return a.num * b.den < b.num * a.den; }
  friend bool operator==(Ratio a, Ratio b) { return a.num * b.den == b.num * a.den; }
};

struct ToughnessCertificate {
  bool infinite = false;  ///< set for complete graphs
  int cut_size = 0;       ///< |S|
  int omega = 0;          ///< components of G - S
  VertexSet cut;

  Ratio tau() const { return Ratio{cut_size, omega}; }
  /// +inf for complete graphs.
  double value() const;
  /// "inf" or the reduced fraction, e.g. "4/3".
  std::string to_string() const;
};

/// Exact toughness of a connected graph. Candidate cuts are scanned by
/// increasing size and, within a size, by increasing bitmask; only strict
/// improvements replace the incumbent, so the reported cut is the smallest
/// mask among minimum-ratio cuts of minimum size.
ToughnessCertificate toughness(const Graph& g);

struct IndependenceCertificate {
  int alpha = 0;
  VertexSet witness;
};

/// Maximum independent set by branch and bound with a clique-cover bound.
IndependenceCertificate independence_number(const Graph& g);

struct ConnectivityCertificate {
  int kappa = 0;
  std::optional<VertexSet> separator;  ///< absent for complete graphs
};

/// Vertex connectivity of a connected graph via unit-capacity vertex-split
/// max flow. Complete graphs report n - 1 without a separator.
ConnectivityCertificate vertex_connectivity(const Graph& g);

/// Maximum number of internally vertex-disjoint s-t paths for non-adjacent s,
/// t, with a minimum s-t separator.
std::pair<int, VertexSet> local_connectivity(const Graph& g, int s, int t);

/// Indices (ascending) of `sizes` summing to `target`. Requires positive
/// sizes with total at most 2p - 1 for p = sizes.size(), which guarantees a
/// solution for every 0 <= target <= total. Prefers lexicographically smallest.
std::vector<int> subset_with_sum(const std::vector<int>& sizes, int target);

struct BalancedSplit {
  std::vector<int> block_indices;  ///< blocks forming R, ascending
  VertexSet r;
  VertexSet t;
};

/// Groups the ω components of G - S into two unions R, T with |R|, |T| >= ω.
/// Requires exactly ω >= 2 blocks sorted by size, at least 2ω + 1 vertices in
/// total, and the ω - 1 smaller blocks holding at least ω vertices.
BalancedSplit balanced_component_split(const ComponentPartition& partition, int omega);

}  // namespace tough
