#pragma once

#include <vector>

#include "hilbertkit/conjspace.hpp"
#include "hilbertkit/decompositions.hpp"

namespace hilbertkit {

// All three norms from a single SVD so the chain
// operator_norm <= hs_norm <= nuclear_norm is internally consistent.
struct NormReport {
  double operator_norm;
  double hs_norm;
  double nuclear_norm;
  std::vector<double> singulars;  // descending
};

struct TraceDualityResult {
  double value;             // equals ||a||_F
  ComplexMatrix maximizer;  // adjoint(a)/||a||_F, Frobenius norm 1
};

struct CompositionBound {
  double n_st;   // nuclear norm of s*t
  double bound;  // hs_norm(s) * hs_norm(t)
};

double hs_norm(const ComplexMatrix& a);
double nuclear_norm(const ComplexMatrix& a);
NormReport norm_report(const ComplexMatrix& a);

// The Frobenius norm as a maximum of |tr(a*b)| over the unit-Frobenius ball,
// with the closed-form maximizer.
TraceDualityResult trace_duality_max(const ComplexMatrix& a);

CompositionBound composition_nuclear_bound(const ComplexMatrix& s,
                                           const ComplexMatrix& t);

// <a x, x> for a unit vector x; real for Hermitian a and equal to
// tr(a * x x^dagger).
Complex vector_state(const ComplexMatrix& a, const Ket& x);

}  // namespace hilbertkit
