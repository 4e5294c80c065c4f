#pragma once

#include <functional>
#include <vector>

#include "hilbertkit/decompositions.hpp"
#include "hilbertkit/tensor.hpp"

namespace hilbertkit {

// Hermitian, PSD, trace-one matrix with validated spectral decomposition.
class DensityOperator {
 public:
  static DensityOperator from_matrix(const ComplexMatrix& m);

  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const std::vector<double>& spectrum() const { return spectrum_; }
  const ComplexMatrix& eigvecs() const { return eigvecs_; }

 private:
  DensityOperator(ComplexMatrix m, std::vector<double> spectrum,
                  ComplexMatrix eigvecs);

  ComplexMatrix matrix_;
  std::vector<double> spectrum_;  // descending
  ComplexMatrix eigvecs_;         // unitary
};

// z = sum_k coeffs_k * (left_k (x) right_k) with orthonormal families and
// descending nonnegative coefficients; sum coeffs^2 = ||z||^2.
struct SchmidtForm {
  std::vector<double> coeffs;
  std::vector<Ket> left;   // in C^{left_dim}
  std::vector<Ket> right;  // in C^{right_dim}
};

SchmidtForm schmidt(const TensorElement& z);

// True iff the Schmidt rank exceeds 1, counting coefficients above
// tol * largest.
bool is_entangled(const TensorElement& z, double tol);

// D = sum_k weights_k * x_k x_k^dagger for unit vectors x_k and a
// probability vector of weights.
DensityOperator density_from_mixture(const std::vector<double>& weights,
                                     const std::vector<Ket>& vectors);

// Measure values on rank-one projections, mu(P) = tr(P D).
using ProjectionMeasure = std::function<double(const ComplexMatrix&)>;

// Rank-one projection onto the span of v.
ComplexMatrix rank_one_projection(const Ket& v);

// Recovers the density operator of a completely additive projection measure
// in dimension >= 3 from n^2 rank-one probes (basis directions plus the two
// polarization superpositions per pair). Validates the reconstruction
// against the probe set at 1e-9 and the density invariants.
DensityOperator gleason_reconstruct(const ProjectionMeasure& measure,
                                    std::size_t dim);

}  // namespace hilbertkit
