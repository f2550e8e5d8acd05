#include "tough/extremal.hpp"

#include <cmath>
#include <string>

#include "tough/exact.hpp"
#include "tough/spectra.hpp"

namespace tough {

bool join_eigen_condition(const Graph& h, int n, double eps) {
  const int delta = h.order();
  if (delta <= 1) return true;
  const auto mu = laplacian_spectrum(h);
  return *laplacian_eigenvalue(mu, delta - 1) >= 2.0 * delta - n - eps;
}

Graph build_extremal(const Graph& h, int n) {
  const int delta = h.order();
  if (delta < 1 || delta > n - 2) {
    throw PreconditionError("extremal construction needs 1 <= |H| <= n - 2, got |H| = " +
                            std::to_string(delta) + ", n = " + std::to_string(n));
  }
  return join(h, Graph(n - delta));
}

std::optional<ExtremalWitness> detect_join_form(const Graph& g, double eps) {
  const int n = g.order();
  if (n < 2 || !is_connected(g) || is_complete(g)) {
    throw PreconditionError("join-form detection needs a connected non-complete graph");
  }
  const int delta = degree_profile(g).min_degree;
  if (delta < 1 || delta > n - 2) return std::nullopt;

  std::optional<ExtremalWitness> first;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != delta) continue;
    const VertexSet side = g.vertices() - g.neighbors(v);
    if (side.size() != n - delta || !is_independent(g, side)) continue;
    bool twins = true;
    for (int u : side) twins = twins && g.neighbors(u) == g.neighbors(v);
    if (!twins) continue;

    ExtremalWitness w;
    w.base = g.induced(g.neighbors(v));
    w.independent_part = side;
    w.delta = delta;
    w.eigen_condition_ok = join_eigen_condition(w.base, n, eps);
    if (w.eigen_condition_ok) return w;
    if (!first) first = std::move(w);
  }
  return first;
}

EqualityVerdict equality_case_verdict(const Graph& g, const BoundReport& report) {
  EqualityVerdict v;
  v.eq11_holds = report.equality_eq11;
  v.eq12_holds = report.equality_eq12;
  const auto witness = detect_join_form(g);
  v.structural = witness && witness->eigen_condition_ok;
  v.consistent = v.eq11_holds == v.structural && v.eq12_holds == v.structural;
  return v;
}

EqualityVerdict equality_case_verdict(const Graph& g, const Tolerances& tol) {
  return equality_case_verdict(g, make_bound_report(g, tol));
}

bool fiedler_structure_check(const Graph& g, const Tolerances& tol) {
  const int n = g.order();
  if (n < 2 || !is_connected(g) || is_complete(g)) {
    throw PreconditionError("Fiedler structure check needs a connected non-complete graph");
  }
  const int kappa = vertex_connectivity(g).kappa;
  const auto mu = laplacian_spectrum(g);
  if (std::abs(mu[n - 2] - kappa) > tol.equality) {
    throw PreconditionError("algebraic connectivity differs from vertex connectivity");
  }
  // Every κ-subset whose removal disconnects G.
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = (std::uint64_t{1} << kappa) - 1; mask < limit;
       mask = next_combination(mask)) {
    const VertexSet cut(mask);
    if (count_components(g, cut) >= 2) {
      const VertexSet rest = g.vertices() - cut;
      for (int v : cut) {
        if (!rest.is_subset_of(g.neighbors(v))) return false;
      }
      if (!join_eigen_condition(g.induced(cut), n, tol.equality)) return false;
    }
  }
  return true;
}

}  // namespace tough
