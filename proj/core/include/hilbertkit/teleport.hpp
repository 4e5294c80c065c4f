#pragma once

#include <map>
#include <string>
#include <vector>

#include "hilbertkit/complex_matrix.hpp"
#include "hilbertkit/conjspace.hpp"
#include "hilbertkit/errors.hpp"

namespace hilbertkit {

// Named unitary, validated at construction: ||U^dagger U - I||_F <= 1e-12.
struct Gate {
  std::string name;
  ComplexMatrix matrix;
  int arity = 1;
};

Gate make_gate(std::string name, ComplexMatrix matrix, int arity);

// One measurement branch of the teleportation pipeline.
struct TeleportOutcome {
  int branch = 1;           // 1..4
  Ket post_state;           // receiver's qubit before correction
  Ket corrected;            // after applying the branch's inverse Pauli
  double probability = 0.0; // squared norm of the branch 2-block
};

struct NoCloningCertificate {
  ComplexMatrix gram_in;
  ComplexMatrix gram_out;
  double gap = 0.0;
};

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// (e1 (x) e1 + e2 (x) e2) / sqrt(2) as a length-4 coordinate vector.
Ket bell_phi_plus();

// T1 = I2, T2 = sigma_x, T3 = sigma_z, T4 = sigma_x sigma_z,
// H1 = (sigma_x + sigma_z)/sqrt(2), U_CNOT = I2 (+) sigma_x.
std::map<std::string, Gate> standard_gates();

// The 8x8 real unitary 1/sqrt(2) * [[I2,0,0,I2],[0,I2,I2,0],
// [I2,0,0,-I2],[0,I2,-I2,0]]. Construction checks, exactly in IEEE
// arithmetic, that it equals (H1 (x) I4)(U_CNOT (x) I2) and that the
// matrix is symmetric with T^T = T^{-1}.
Gate teleport_matrix();

// Full pipeline for a unit ket xi in C^2: w = T (xi (x) phi+), split into
// four 2-blocks; branch i has post_state = 2 * block_i, probability
// ||block_i||^2, corrected = T_i^{-1} post_state. Throws NotUnit if
// ||xi|| - 1 exceeds 1e-10.
std::vector<TeleportOutcome> teleport(const Ket& xi);

// |<a,b>|: comparator that ignores a global phase.
double overlap_modulus(const Ket& a, const Ket& b);

// Gram matrices of {x(x)e, y(x)e} and {x(x)x, y(x)y} plus their Frobenius
// gap sqrt(2)*|<x,y> - <x,y>^2|. A nonzero gap certifies that no
// inner-product-preserving map clones both x and y. Inputs must be unit
// (NotUnit) and e must differ from x and y (InvalidArgument).
NoCloningCertificate no_cloning_certificate(const Ket& x, const Ket& y,
                                            const Ket& e);

}  // namespace hilbertkit
