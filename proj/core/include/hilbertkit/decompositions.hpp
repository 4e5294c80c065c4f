#pragma once

#include <vector>

#include "hilbertkit/complex_matrix.hpp"

namespace hilbertkit {

// Thin SVD a = left * diag(singulars) * adjoint(right), truncated to rank.
// For the zero matrix rank is 0 and left/right have zero columns.
struct SvdResult {
  ComplexMatrix left;            // m x r, orthonormal columns
  std::vector<double> singulars; // descending, length r, all above rank cutoff
  ComplexMatrix right;           // n x r, orthonormal columns
  std::size_t rank;
};

struct HermitianEig {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // unitary, column k pairs with eigenvalue k
};

struct PolarDecomposition {
  ComplexMatrix w;    // partial isometry, m x n
  ComplexMatrix abs;  // (a^dagger a)^{1/2}, n x n, Hermitian PSD
};

// One-sided Jacobi SVD with cyclic pivots. Column pair (p,q) counts as
// converged when |<a_p,a_q>| <= 1e-13 * ||a_p|| * ||a_q||; columns that have
// collapsed below 1e-14 * ||a||_F are pure round-off and are skipped. Sweep
// budget 60. A singular value contributes to the rank iff s > 1e-12 * s_max.
SvdResult svd(const ComplexMatrix& a);

// Cyclic two-sided Jacobi for Hermitian matrices. Requires
// ||a - adjoint(a)||_F <= 1e-10 * (1 + ||a||_F). Off-diagonal entries count as
// converged below 1e-13 * ||a||_F; sweep budget 60.
HermitianEig hermitian_eig(const ComplexMatrix& a);

// Left polar decomposition a = w * abs via the SVD.
PolarDecomposition polar(const ComplexMatrix& a);

// Positive semidefiniteness: self-adjoint within tol*(1+||a||_F) and smallest
// eigenvalue >= -tol*(1+||a||_F).
bool is_psd(const ComplexMatrix& a, double tol);

double operator_norm(const ComplexMatrix& a);

}  // namespace hilbertkit
