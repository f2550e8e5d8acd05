#include "tough/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace tough {

Matrix Matrix::identity(int dim) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

namespace {

double off_diagonal_norm(const Matrix& m) {
  double sum = 0.0;
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      if (i != j) sum += m(i, j) * m(i, j);
    }
  }
  return std::sqrt(sum);
}

double frobenius_norm(const Matrix& m) {
  double sum = 0.0;
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) sum += m(i, j) * m(i, j);
  }
  return std::sqrt(sum);
}

// Zeroes m(p, q) with a two-sided plane rotation.
void rotate(Matrix& m, int p, int q) {
  const double apq = m(p, q);
  if (apq == 0.0) return;
  const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const int n = m.dim();
  for (int k = 0; k < n; ++k) {
    const double mkp = m(k, p);
    const double mkq = m(k, q);
    m(k, p) = c * mkp - s * mkq;
    m(k, q) = s * mkp + c * mkq;
  }
  for (int k = 0; k < n; ++k) {
    const double mpk = m(p, k);
    const double mqk = m(q, k);
    m(p, k) = c * mpk - s * mqk;
    m(q, k) = s * mpk + c * mqk;
  }
  m(p, q) = 0.0;
  m(q, p) = 0.0;
}

}  // namespace

std::vector<double> symmetric_eigenvalues(Matrix m) {
  const int n = m.dim();
  if (n < 1) throw EigenError("eigenvalues of an empty matrix");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > kSymmetryTolerance) {
        throw EigenError("matrix is not symmetric at (" + std::to_string(i) + ", " +
                         std::to_string(j) + ")");
      }
    }
  }
  const double threshold = kJacobiRelativeTolerance * frobenius_norm(m) + 1e-300;
  bool converged = off_diagonal_norm(m) <= threshold;
  for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) rotate(m, p, q);
    }
    converged = off_diagonal_norm(m) <= threshold;
  }
  if (!converged) {
    throw EigenError("Jacobi iteration did not converge within " +
                     std::to_string(kMaxJacobiSweeps) + " sweeps");
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = m(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

Matrix adjacency_matrix(const Graph& g) {
  Matrix a(g.order());
  for (auto [u, v] : g.edge_list()) a(u, v) = a(v, u) = 1.0;
  return a;
}

Matrix laplacian_matrix(const Graph& g) {
  Matrix l(g.order());
  for (int v = 0; v < g.order(); ++v) l(v, v) = g.degree(v);
  for (auto [u, v] : g.edge_list()) l(u, v) = l(v, u) = -1.0;
  return l;
}

Matrix normalized_laplacian_matrix(const Graph& g) {
  Matrix l(g.order());
  for (int v = 0; v < g.order(); ++v) l(v, v) = g.degree(v) > 0 ? 1.0 : 0.0;
  for (auto [u, v] : g.edge_list()) {
    l(u, v) = l(v, u) = -1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
  }
  return l;
}

std::vector<double> adjacency_spectrum(const Graph& g) {
  return symmetric_eigenvalues(adjacency_matrix(g));
}

std::vector<double> laplacian_spectrum(const Graph& g) {
  return symmetric_eigenvalues(laplacian_matrix(g));
}

std::vector<double> normalized_laplacian_spectrum(const Graph& g) {
  return symmetric_eigenvalues(normalized_laplacian_matrix(g));
}

SpectralSummary spectral_summary(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw PreconditionError("spectral summary needs at least two vertices");
  SpectralSummary s;
  s.adjacency = adjacency_spectrum(g);
  s.laplacian = laplacian_spectrum(g);
  s.normalized = normalized_laplacian_spectrum(g);
  s.xi = std::max(std::abs(1.0 - s.normalized[0]), std::abs(1.0 - s.normalized[n - 2]));
  if (is_regular(g)) s.lambda = std::max(std::abs(s.adjacency[1]), std::abs(s.adjacency[n - 1]));
  return s;
}

namespace {

void check_laplacian_input(std::span<const double> mu, int n, const char* which) {
  const std::string name(which);
  if (n < 1 || static_cast<int>(mu.size()) != n) {
    throw PreconditionError(name + " spectrum length does not match its order");
  }
  for (std::size_t i = 1; i < mu.size(); ++i) {
    if (mu[i] > mu[i - 1] + 1e-9) throw PreconditionError(name + " spectrum is not descending");
  }
  if (std::abs(mu.back()) > 1e-8) {
    throw PreconditionError(name + " spectrum does not end in zero");
  }
}

}  // namespace

std::vector<double> join_laplacian_spectrum(std::span<const double> mu_g,
                                            std::span<const double> mu_h, int n_g, int n_h) {
  check_laplacian_input(mu_g, n_g, "first");
  check_laplacian_input(mu_h, n_h, "second");
  std::vector<double> out;
  out.reserve(n_g + n_h);
  out.push_back(n_g + n_h);
  for (int i = 0; i + 1 < n_g; ++i) out.push_back(mu_g[i] + n_h);
  for (int j = 0; j + 1 < n_h; ++j) out.push_back(n_g + mu_h[j]);
  out.push_back(0.0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::optional<double> laplacian_eigenvalue(std::span<const double> spectrum, int index) {
  if (index < 1 || index > static_cast<int>(spectrum.size())) return std::nullopt;
  return spectrum[index - 1];
}

}  // namespace tough
