#include "tough/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tough/graph_io.hpp"

namespace tough {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double Thm11Terms::max() const {
  const double spectral = xi_anomaly ? -kInf : spectral_term;
  return std::max({inv_max_degree, degree_term, spectral});
}

Thm11Terms thm11_terms(const Graph& g, const SpectralSummary& s) {
  if (g.order() < 2 || !is_connected(g)) {
    throw PreconditionError("toughness bounds need a connected graph on at least two vertices");
  }
  const auto deg = degree_profile(g);
  const double big = deg.max_degree;
  const double small = deg.min_degree;
  const double n = g.order();
  Thm11Terms t;
  t.inv_max_degree = 1.0 / big;
  t.degree_term = (big + small) / (big * n);
  if (s.xi == 0.0) {
    t.xi_anomaly = true;
    t.spectral_term = kInf;
  } else {
    t.spectral_term = small * (s.xi + 1.0) / (big * s.xi) - 2.0;
  }
  return t;
}

GuHaemersBounds gu_haemers_bounds(const Graph& g, const SpectralSummary& s) {
  if (g.order() < 2 || !is_connected(g)) {
    throw PreconditionError("toughness bounds need a connected graph on at least two vertices");
  }
  if (is_complete(g)) return {kInf, kInf};
  const double mu1 = s.mu_max();
  const double fiedler = s.algebraic_connectivity();
  const double n = g.order();
  const double delta = degree_profile(g).min_degree;
  return {mu1 * fiedler / (n * (mu1 - delta)), fiedler / (mu1 - fiedler)};
}

std::optional<RegularBounds> regular_bounds(const Graph& g, const SpectralSummary& s) {
  if (!s.lambda || !is_regular(g) || g.degree(0) < 1) return std::nullopt;
  const double d = g.degree(0);
  const double lambda = *s.lambda;
  if (lambda == 0.0) return RegularBounds{kInf, kInf, kInf};
  return RegularBounds{d / lambda - 1.0, d / lambda - 2.0,
                       (d * d / (d * lambda + lambda * lambda) - 1.0) / 3.0};
}

double corollary_cap(const SpectralSummary& s, Ratio tau) {
  // τ/(τ+1) = |S| / (|S| + ω)
  return static_cast<double>(tau.num) / static_cast<double>(tau.num + tau.den) * s.mu_max();
}

MixingGap mixing_gap(const Graph& g, VertexSet x, VertexSet y, const SpectralSummary& s) {
  const double total = volume(g, g.vertices());
  if (total == 0.0) throw PreconditionError("mixing inequality needs at least one edge");
  const double vx = volume(g, x);
  const double vy = volume(g, y);
  MixingGap gap;
  gap.lhs = std::abs(static_cast<double>(edge_boundary(g, x, y)) - vx * vy / total);
  gap.rhs = s.xi * std::sqrt(vx * vy * (1.0 - vx / total) * (1.0 - vy / total));
  gap.single_lhs = std::abs(2.0 * edges_within(g, x) - vx * vx / total);
  gap.single_rhs = s.xi * vx * (1.0 - vx / total);
  return gap;
}

IndependenceBounds independence_upper_bounds(const Graph& g, const SpectralSummary& s) {
  if (g.size() < 1) throw PreconditionError("independence bounds need at least one edge");
  const auto deg = degree_profile(g);
  const double n = g.order();
  const double big = deg.max_degree;
  const double small = deg.min_degree;
  const double mu1 = s.mu_max();
  IndependenceBounds b;
  b.by_degrees = n * big / (big + small);
  b.by_normalized = small == 0.0 ? kInf : 2.0 * g.size() * s.xi / (small * (s.xi + 1.0));
  b.by_laplacian = n * (mu1 - small) / mu1;
  return b;
}

bool semiregular_equality_check(const Graph& g, VertexSet independent, const SpectralSummary& s) {
  if (!independent.is_subset_of(g.vertices()) || !is_independent(g, independent)) {
    throw PreconditionError("semiregular check needs an independent set");
  }
  const int small = degree_profile(g).min_degree;
  const double other = s.mu_max() - small;
  const double rounded = std::round(other);
  if (std::abs(other - rounded) > 1e-6) return false;
  const VertexSet rest = g.vertices() - independent;
  for (int v : independent) {
    if ((g.neighbors(v) & rest).size() != small) return false;
  }
  for (int v : rest) {
    if ((g.neighbors(v) & independent).size() != static_cast<int>(rounded)) return false;
  }
  return true;
}

CutPartitionBounds cut_partition_bounds_check(const Graph& g, VertexSet cut, VertexSet x,
                                              VertexSet y, const SpectralSummary& s) {
  const VertexSet all = g.vertices();
  if (!(cut | x | y).is_subset_of(all) || cut.intersects(x) || cut.intersects(y) ||
      x.intersects(y) || (cut | x | y) != all) {
    throw PreconditionError("S, X, Y must partition the vertex set");
  }
  if (x.empty() || x.size() > y.size()) throw PreconditionError("need 1 <= |X| <= |Y|");
  if (edge_boundary(g, x, y) != 0) throw PreconditionError("X and Y must not be joined by edges");
  const double mu1 = s.mu_max();
  const double fiedler = s.algebraic_connectivity();
  const double n = g.order();
  CutPartitionBounds b;
  b.size_x_cap = (mu1 - fiedler) / (2.0 * mu1) * n;
  b.size_s_floor = 2.0 * fiedler / (mu1 - fiedler) * x.size();
  return b;
}

BoundReport make_bound_report(const Graph& g, const SpectralSummary& s,
                              const ToughnessCertificate& tau, const Tolerances& tol) {
  BoundReport r;
  r.graph_id = write_graph6(g);
  r.n = g.order();
  r.m = g.size();
  const auto deg = degree_profile(g);
  r.min_degree = deg.min_degree;
  r.max_degree = deg.max_degree;
  r.tau = tau;
  r.thm11 = thm11_terms(g, s);
  r.gu_haemers = gu_haemers_bounds(g, s);
  r.regular = regular_bounds(g, s);
  if (!tau.infinite) {
    r.corollary_cap = corollary_cap(s, tau.tau());
    const double t = tau.value();
    r.equality_eq11 = std::abs(t - r.gu_haemers.eq11) <= tol.equality;
    r.equality_eq12 = std::abs(t - r.gu_haemers.eq12) <= tol.equality;
  }
  return r;
}

BoundReport make_bound_report(const Graph& g, const Tolerances& tol) {
  return make_bound_report(g, spectral_summary(g), toughness(g), tol);
}

}  // namespace tough
