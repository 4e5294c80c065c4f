#include "hilbertkit/decompositions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hilbertkit {

namespace {

constexpr int kSweepBudget = 60;
constexpr double kJacobiTol = 1e-13;
constexpr double kRankTol = 1e-12;

// tan of the Jacobi angle for the real symmetric 2x2 [[app, g],[g, aqq]],
// g > 0; picks the smaller rotation.
double jacobi_tangent(double app, double aqq, double g) {
  const double tau = (aqq - app) / (2.0 * g);
  const double root = std::sqrt(1.0 + tau * tau);
  return (tau >= 0.0) ? 1.0 / (tau + root) : 1.0 / (tau - root);
}

ComplexMatrix empty_block(std::size_t rows) { return ComplexMatrix(rows, 0); }

}  // namespace

SvdResult svd(const ComplexMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m == 0 || n == 0) {
    return SvdResult{empty_block(m), {}, empty_block(n), 0};
  }
  ComplexMatrix u = a;  // columns get rotated in place
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double fro = frobenius_norm(a);
  // columns this small carry only rotation round-off; they sit far below
  // the rank cutoff and rotating against them never reaches relative
  // orthogonality
  const double dead_col2 = (1e-14 * fro) * (1e-14 * fro);

  bool converged = (fro == 0.0) || (n == 1);
  for (int sweep = 0; sweep < kSweepBudget && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        Complex g = 0.0;     // <a_p, a_q> = a_p^dagger a_q
        double app = 0.0, aqq = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
          g += std::conj(u(k, p)) * u(k, q);
          app += std::norm(u(k, p));
          aqq += std::norm(u(k, q));
        }
        if (app <= dead_col2 || aqq <= dead_col2) continue;
        const double gabs = std::abs(g);
        // relative to the two column norms, which keeps the criterion
        // scale-invariant and bounds the left factor's orthogonality
        // defect by the same factor
        if (gabs <= kJacobiTol * std::sqrt(app * aqq)) continue;
        converged = false;

        const Complex alpha = std::conj(g) / gabs;  // makes the Gram entry real
        const double t = jacobi_tangent(app, aqq, gabs);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const Complex up = u(k, p);
          const Complex uq = alpha * u(k, q);
          u(k, p) = c * up - s * uq;
          u(k, q) = s * up + c * uq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vp = v(k, p);
          const Complex vq = alpha * v(k, q);
          v(k, p) = c * vp - s * vq;
          v(k, q) = s * vp + c * vq;
        }
      }
    }
  }
  if (!converged) {
    throw NoConvergence("svd: sweep budget exhausted");
  }

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s2 = 0.0;
    for (std::size_t k = 0; k < m; ++k) s2 += std::norm(u(k, j));
    norms[j] = std::sqrt(s2);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return norms[i] > norms[j]; });

  const double smax = norms.empty() ? 0.0 : norms[order[0]];
  std::size_t rank = 0;
  while (rank < n && norms[order[rank]] > kRankTol * smax) ++rank;
  if (smax == 0.0) rank = 0;

  SvdResult out{empty_block(m), {}, empty_block(n), rank};
  if (rank > 0) {
    out.left = ComplexMatrix(m, rank);
    out.right = ComplexMatrix(n, rank);
    out.singulars.resize(rank);
    for (std::size_t r = 0; r < rank; ++r) {
      const std::size_t j = order[r];
      out.singulars[r] = norms[j];
      for (std::size_t k = 0; k < m; ++k) out.left(k, r) = u(k, j) / norms[j];
      for (std::size_t k = 0; k < n; ++k) out.right(k, r) = v(k, j);
    }
  }
  return out;
}

HermitianEig hermitian_eig(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw NotSquare("hermitian_eig: matrix not square");
  }
  const std::size_t n = a.rows();
  const double fro = frobenius_norm(a);
  if (frobenius_norm(a - adjoint(a)) > 1e-10 * (1.0 + fro)) {
    throw NotHermitian("hermitian_eig: matrix not Hermitian");
  }

  ComplexMatrix h = Complex(0.5) * (a + adjoint(a));
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double thresh = kJacobiTol * fro;

  bool converged = (fro == 0.0) || (n == 1);
  for (int sweep = 0; sweep < kSweepBudget && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = h(p, q);
        const double gabs = std::abs(g);
        if (gabs <= thresh) continue;
        converged = false;

        const Complex alpha = std::conj(g) / gabs;
        const double t = jacobi_tangent(h(p, p).real(), h(q, q).real(), gabs);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // columns: [h_p, h_q] <- [h_p, alpha h_q] R
        for (std::size_t k = 0; k < n; ++k) {
          const Complex hp = h(k, p);
          const Complex hq = alpha * h(k, q);
          h(k, p) = c * hp - s * hq;
          h(k, q) = s * hp + c * hq;
        }
        // rows: conjugate transform
        for (std::size_t k = 0; k < n; ++k) {
          const Complex hp = h(p, k);
          const Complex hq = std::conj(alpha) * h(q, k);
          h(p, k) = c * hp - s * hq;
          h(q, k) = s * hp + c * hq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vp = v(k, p);
          const Complex vq = alpha * v(k, q);
          v(k, p) = c * vp - s * vq;
          v(k, q) = s * vp + c * vq;
        }
      }
    }
  }
  if (!converged) {
    throw NoConvergence("hermitian_eig: sweep budget exhausted");
  }

  std::vector<double> eigs(n);
  for (std::size_t i = 0; i < n; ++i) eigs[i] = h(i, i).real();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return eigs[i] > eigs[j]; });

  HermitianEig out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t r = 0; r < n; ++r) {
    out.eigenvalues[r] = eigs[order[r]];
    for (std::size_t k = 0; k < n; ++k) out.eigenvectors(k, r) = v(k, order[r]);
  }
  return out;
}

PolarDecomposition polar(const ComplexMatrix& a) {
  const SvdResult f = svd(a);
  const std::size_t n = a.cols();
  PolarDecomposition out{ComplexMatrix(a.rows(), n), ComplexMatrix(n, n)};
  if (f.rank == 0) return out;

  out.w = f.left * adjoint(f.right);
  ComplexMatrix scaled = f.right;  // right * diag(s)
  for (std::size_t j = 0; j < f.rank; ++j)
    for (std::size_t k = 0; k < n; ++k) scaled(k, j) *= f.singulars[j];
  out.abs = scaled * adjoint(f.right);
  return out;
}

bool is_psd(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) {
    throw NotSquare("is_psd: matrix not square");
  }
  const double scale = tol * (1.0 + frobenius_norm(a));
  if (frobenius_norm(a - adjoint(a)) > scale) return false;
  const HermitianEig e = hermitian_eig(Complex(0.5) * (a + adjoint(a)));
  return e.eigenvalues.empty() || e.eigenvalues.back() >= -scale;
}

double operator_norm(const ComplexMatrix& a) {
  const SvdResult f = svd(a);
  return f.rank == 0 ? 0.0 : f.singulars.front();
}

}  // namespace hilbertkit
