#pragma once

#include <optional>

#include "tough/bounds.hpp"
#include "tough/graph.hpp"

namespace tough {

/// A decomposition G ≅ H ∨ (n-δ)K1 with H = G[V ∖ independent_part].
struct ExtremalWitness {
  Graph base;                 ///< H, order δ, relabelled in ascending vertex order
  VertexSet independent_part; ///< the (n-δ)K1 side
  int delta = 0;
  /// μ_{δ-1}(H) >= 2δ - n (vacuous for δ = 1).
  bool eigen_condition_ok = false;
};

/// μ_{δ-1}(H) >= 2δ - n - eps for δ = |H| and the given total order n.
bool join_eigen_condition(const Graph& h, int n, double eps = 1e-7);

/// H ∨ (n - |H|)K1 with H on labels 0..|H|-1. Requires 1 <= |H| <= n - 2.
Graph build_extremal(const Graph& h, int n);

/// Scans v = 0, 1, ... for V ∖ N(v) being an independent twin class of a
/// minimum-degree vertex. Among qualifying v, the first whose H satisfies the
/// eigenvalue condition wins; otherwise the first structural match is
/// returned with eigen_condition_ok = false.
std::optional<ExtremalWitness> detect_join_form(const Graph& g, double eps = 1e-7);

struct EqualityVerdict {
  bool eq11_holds = false;
  bool eq12_holds = false;
  bool structural = false;
  bool consistent = false;
};

EqualityVerdict equality_case_verdict(const Graph& g, const BoundReport& report);
EqualityVerdict equality_case_verdict(const Graph& g, const Tolerances& tol = {});

/// When μ_{n-1} = κ, checks every minimum vertex cut S: S is completely joined
/// to V ∖ S and μ_{κ-1}(G[S]) >= 2κ - n. Throws PreconditionError when
/// μ_{n-1} differs from κ by more than tol.equality.
bool fiedler_structure_check(const Graph& g, const Tolerances& tol = {});

}  // namespace tough
