#pragma once

#include <cstdint>
#include <vector>

#include "hilbertkit/decompositions.hpp"
#include "hilbertkit/conjspace.hpp"

namespace hilbertkit {

struct SummingEstimate {
  double p;
  double lower_bound;
  std::vector<Ket> witness_family;
  std::uint64_t iterations;
  // True when the value is known to equal the p-summing norm (p = 2, where
  // pi_2 coincides with the Hilbert-Schmidt norm); certified lower bounds
  // otherwise.
  bool exact;
};

// (sum ||T x_i||_2^p)^{1/p} divided by sup over unit a of
// (sum |<x_i,a>|^p)^{1/p}. For p = 2 the denominator is the top singular
// value of the matrix with rows x_i^dagger (exact); for p = 1 it is estimated
// by multi-start projected gradient ascent on the unit sphere. Only
// p in {1, 2} is supported.
double family_ratio(const ComplexMatrix& t, const std::vector<Ket>& family,
                    double p);

// Certified upper bound on sup_{||a||=1} sum_i |<x_i,a>|: the smaller of
// sum_i ||x_i|| and sqrt(k) * ||X||_op. Tight for orthonormal families.
double p1_denominator_upper_bound(const std::vector<Ket>& family);

// pi_2 with the standard-basis witness family; equals the Hilbert-Schmidt
// norm, so the estimate is exact.
SummingEstimate pi2_certify(const ComplexMatrix& t);

// Certified lower bound on pi_1(t): the best ratio
// (sum ||T x_i||) / p1_denominator_upper_bound over seeded random families of
// sizes 1..2*dim plus deterministic candidates (standard basis, top right
// singular vector). Monotone in the budget for a fixed seed.
SummingEstimate pi1_lower_bound(const ComplexMatrix& t, std::uint64_t budget,
                                std::uint64_t seed);

}  // namespace hilbertkit
