#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "tough/graph.hpp"

namespace tough {

/// Dense row-major square matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim, 0.0) {}

  static Matrix identity(int dim);

  int dim() const { return dim_; }
  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * dim_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * dim_ + c]; }

 private:
  int dim_ = 0;
  std::vector<double> data_;
};

class EigenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sweep cap for the rotation solver.
inline constexpr int kMaxJacobiSweeps = 100;
/// Relative off-diagonal Frobenius threshold for convergence.
inline constexpr double kJacobiRelativeTolerance = 1e-12;
inline constexpr double kSymmetryTolerance = 1e-12;

/// Eigenvalues of a symmetric matrix, descending, via cyclic Jacobi rotations.
/// Throws EigenError on asymmetric input or when the sweep cap is exhausted.
std::vector<double> symmetric_eigenvalues(Matrix m);

Matrix adjacency_matrix(const Graph& g);
Matrix laplacian_matrix(const Graph& g);
/// D^{-1/2} L D^{-1/2}; rows and columns of isolated vertices are zero.
Matrix normalized_laplacian_matrix(const Graph& g);

std::vector<double> adjacency_spectrum(const Graph& g);
std::vector<double> laplacian_spectrum(const Graph& g);
std::vector<double> normalized_laplacian_spectrum(const Graph& g);

struct SpectralSummary {
  std::vector<double> adjacency;   ///< λ_1 >= ... >= λ_n
  std::vector<double> laplacian;   ///< μ_1 >= ... >= μ_n
  std::vector<double> normalized;  ///< ξ_1 >= ... >= ξ_n
  /// max(|1 - ξ_1|, |1 - ξ_{n-1}|)
  double xi = 0.0;
  /// max(|λ_2|, |λ_n|), present only for regular graphs.
  std::optional<double> lambda;

  /// Laplacian spectral radius μ_1.
  double mu_max() const { return laplacian.front(); }
  /// Algebraic connectivity μ_{n-1}.
  double algebraic_connectivity() const { return laplacian[laplacian.size() - 2]; }
};

/// Requires n >= 2.
SpectralSummary spectral_summary(const Graph& g);

/// Laplacian spectrum of G ∨ H from the spectra of G and H.
std::vector<double> join_laplacian_spectrum(std::span<const double> mu_g,
                                            std::span<const double> mu_h, int n_g, int n_h);

/// 1-based μ_i of a descending Laplacian spectrum; μ_0 of a one-vertex graph
/// and other out-of-range indices return nullopt.
std::optional<double> laplacian_eigenvalue(std::span<const double> spectrum, int index);

}  // namespace tough
