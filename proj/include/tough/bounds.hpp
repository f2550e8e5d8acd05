#pragma once

#include <optional>
#include <string>

#include "tough/exact.hpp"
#include "tough/graph.hpp"
#include "tough/spectra.hpp"

namespace tough {

/// Comparison tolerances for numeric bounds against exact invariants.
struct Tolerances {
  double slack = 1e-7;     ///< allowed amount by which a lower bound may exceed the invariant
  double equality = 1e-7;  ///< |invariant - bound| at or below this counts as equality
};

/// The three lower bounds max{1/Δ, (Δ+δ)/(Δn), δ(ξ+1)/(Δξ) - 2} on toughness.
struct Thm11Terms {
  double inv_max_degree = 0.0;
  double degree_term = 0.0;
  double spectral_term = 0.0;
  /// ξ was zero; spectral_term is then +inf and must not be read as a bound.
  bool xi_anomaly = false;

  double max() const;
};

Thm11Terms thm11_terms(const Graph& g, const SpectralSummary& s);

/// Laplacian toughness bounds μ1 μ_{n-1} / (n (μ1 - δ)) and μ_{n-1} / (μ1 - μ_{n-1}).
/// Both are +inf for complete graphs.
struct GuHaemersBounds {
  double eq11 = 0.0;
  double eq12 = 0.0;
};

GuHaemersBounds gu_haemers_bounds(const Graph& g, const SpectralSummary& s);

/// Regular-graph bounds in terms of d and λ = max(|λ2|, |λn|).
struct RegularBounds {
  double brouwer = 0.0;         ///< d/λ - 1, attained inequality τ >= d/λ - 1
  double brouwer_strict = 0.0;  ///< d/λ - 2, strict inequality τ > d/λ - 2
  double alon = 0.0;            ///< (d² / (dλ + λ²) - 1) / 3, strict
};

/// Absent unless g is regular of degree at least 1.
std::optional<RegularBounds> regular_bounds(const Graph& g, const SpectralSummary& s);

/// τ/(τ+1) μ1, an upper bound on the algebraic connectivity.
double corollary_cap(const SpectralSummary& s, Ratio tau);

/// Both sides of the irregular expander mixing inequality for (X, Y) and of
/// its single-set form for X.
struct MixingGap {
  double lhs = 0.0;
  double rhs = 0.0;
  double single_lhs = 0.0;
  double single_rhs = 0.0;
};

MixingGap mixing_gap(const Graph& g, VertexSet x, VertexSet y, const SpectralSummary& s);

/// Upper bounds nΔ/(Δ+δ), 2mξ/(δ(ξ+1)) and n(μ1-δ)/μ1 on α. The second is +inf
/// when δ = 0.
struct IndependenceBounds {
  double by_degrees = 0.0;
  double by_normalized = 0.0;
  double by_laplacian = 0.0;
};

IndependenceBounds independence_upper_bounds(const Graph& g, const SpectralSummary& s);

/// For an independent set I attaining n(μ1-δ)/μ1: true iff the edges between
/// I and V∖I form a (δ, μ1-δ)-semiregular bipartite graph.
bool semiregular_equality_check(const Graph& g, VertexSet independent, const SpectralSummary& s);

struct CutPartitionBounds {
  double size_x_cap = 0.0;    ///< (μ1 - μ_{n-1}) / (2μ1) * n
  double size_s_floor = 0.0;  ///< 2μ_{n-1} / (μ1 - μ_{n-1}) * |X|
};

/// S separates G and V∖S = X ⊔ Y with no X-Y edges and 1 <= |X| <= |Y|.
CutPartitionBounds cut_partition_bounds_check(const Graph& g, VertexSet cut, VertexSet x,
                                              VertexSet y, const SpectralSummary& s);

/// All bound values for one connected graph on n >= 2 vertices.
struct BoundReport {
  std::string graph_id;  ///< graph6
  int n = 0;
  int m = 0;
  int min_degree = 0;
  int max_degree = 0;
  ToughnessCertificate tau;
  Thm11Terms thm11;
  GuHaemersBounds gu_haemers;
  std::optional<RegularBounds> regular;
  std::optional<double> corollary_cap;  ///< absent when τ is infinite
  bool equality_eq11 = false;
  bool equality_eq12 = false;
};

BoundReport make_bound_report(const Graph& g, const SpectralSummary& s,
                              const ToughnessCertificate& tau, const Tolerances& tol = {});
BoundReport make_bound_report(const Graph& g, const Tolerances& tol = {});

}  // namespace tough
