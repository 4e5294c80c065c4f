#include "hilbertkit/teleport.hpp"

#include <cmath>
#include <utility>

#include "hilbertkit/tensor.hpp"

namespace hilbertkit {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

bool same_vector(const Ket& a, const Ket& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (std::abs(a.coords[i] - b.coords[i]) > 1e-12) return false;
  }
  return true;
}

void check_unit(const Ket& x, const char* what) {
  if (std::abs(norm(x) - 1.0) > 1e-10) throw NotUnit(what);
}

ComplexMatrix gram2(const Ket& u, const Ket& v) {
  ComplexMatrix g(2, 2);
  g(0, 0) = inner_product(u, u);
  g(0, 1) = inner_product(u, v);
  g(1, 0) = inner_product(v, u);
  g(1, 1) = inner_product(v, v);
  return g;
}

}  // namespace

Gate make_gate(std::string name, ComplexMatrix matrix, int arity) {
  if (!is_unitary(matrix, 1e-12)) {
    throw NotUnitaryBasis("gate '" + name + "' is not unitary");
  }
  return Gate{std::move(name), std::move(matrix), arity};
}

ComplexMatrix pauli_x() { return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}; }

ComplexMatrix pauli_y() {
  return ComplexMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
}

ComplexMatrix pauli_z() { return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}; }

Ket bell_phi_plus() {
  return make_ket({kInvSqrt2, 0.0, 0.0, kInvSqrt2});
}

std::map<std::string, Gate> standard_gates() {
  std::map<std::string, Gate> gates;
  gates.emplace("T1", make_gate("T1", ComplexMatrix::identity(2), 1));
  gates.emplace("T2", make_gate("T2", pauli_x(), 1));
  gates.emplace("T3", make_gate("T3", pauli_z(), 1));
  gates.emplace("T4", make_gate("T4", matmul(pauli_x(), pauli_z()), 1));
  gates.emplace("H1", make_gate("H1",
                                ComplexMatrix{{kInvSqrt2, kInvSqrt2},
                                              {kInvSqrt2, -kInvSqrt2}},
                                1));
  ComplexMatrix cnot(4, 4);
  cnot(0, 0) = 1.0;
  cnot(1, 1) = 1.0;
  cnot(2, 3) = 1.0;
  cnot(3, 2) = 1.0;
  gates.emplace("U_CNOT", make_gate("U_CNOT", std::move(cnot), 2));
  return gates;
}

Gate teleport_matrix() {
  ComplexMatrix t(8, 8);
  // block rows of 1/sqrt(2) * [[I,0,0,I],[0,I,I,0],[I,0,0,-I],[0,I,-I,0]]
  const int plus[4][2] = {{0, 0}, {1, 1}, {2, 0}, {3, 1}};
  const int tail[4][2] = {{0, 3}, {1, 2}, {2, 3}, {3, 2}};
  for (int b = 0; b < 4; ++b) {
    for (int d = 0; d < 2; ++d) {
      t(2 * plus[b][0] + d, 2 * plus[b][1] + d) = kInvSqrt2;
      const double sign = b < 2 ? 1.0 : -1.0;
      t(2 * tail[b][0] + d, 2 * tail[b][1] + d) = sign * kInvSqrt2;
    }
  }

  const auto gates = standard_gates();
  const ComplexMatrix factored =
      matmul(kron(gates.at("H1").matrix, ComplexMatrix::identity(4)),
             kron(gates.at("U_CNOT").matrix, ComplexMatrix::identity(2)));
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      // the factorization is exact in IEEE arithmetic: every product entry
      // is a single +-1/sqrt(2) term; real entries make adjoint == transpose
      if (t(i, j) != factored(i, j) || t(i, j).imag() != 0.0) {
        throw Error("teleportation matrix failed its construction checks");
      }
    }
  }
  if (frobenius_norm(matmul(transpose(t), t) - ComplexMatrix::identity(8)) >
      1e-14) {
    throw Error("teleportation matrix transpose is not its inverse");
  }
  return make_gate("T", std::move(t), 3);
}

std::vector<TeleportOutcome> teleport(const Ket& xi) {
  if (xi.space != Space::plain || xi.dim() != 2) {
    throw DimensionMismatch("teleport expects a plain ket of length 2");
  }
  check_unit(xi, "teleport input must be a unit vector");

  const Gate t = teleport_matrix();
  const Ket joint = kron(xi, bell_phi_plus());
  const Ket w = make_ket(
      matmul(t.matrix, ComplexMatrix(8, 1, joint.coords)).column(0));

  const auto gates = standard_gates();
  const char* names[4] = {"T1", "T2", "T3", "T4"};
  std::vector<TeleportOutcome> outcomes;
  outcomes.reserve(4);
  for (int b = 0; b < 4; ++b) {
    const Complex w0 = w.coords[2 * b];
    const Complex w1 = w.coords[2 * b + 1];
    TeleportOutcome out;
    out.branch = b + 1;
    out.probability = std::norm(w0) + std::norm(w1);
    out.post_state = make_ket({2.0 * w0, 2.0 * w1});
    const ComplexMatrix inverse = adjoint(gates.at(names[b]).matrix);
    out.corrected =
        make_ket(matmul(inverse, ComplexMatrix(2, 1, out.post_state.coords))
                     .column(0));
    outcomes.push_back(std::move(out));
  }
  return outcomes;
}

double overlap_modulus(const Ket& a, const Ket& b) {
  return std::abs(inner_product(a, b));
}

NoCloningCertificate no_cloning_certificate(const Ket& x, const Ket& y,
                                            const Ket& e) {
  check_unit(x, "no-cloning input x must be unit");
  check_unit(y, "no-cloning input y must be unit");
  check_unit(e, "no-cloning blank state e must be unit");
  if (same_vector(e, x) || same_vector(e, y)) {
    throw InvalidArgument("blank state e must differ from x and y");
  }

  NoCloningCertificate cert{
      gram2(kron(x, e), kron(y, e)),
      gram2(kron(x, x), kron(y, y)),
      0.0,
  };
  ComplexMatrix diff = cert.gram_in - cert.gram_out;
  cert.gap = frobenius_norm(diff);

  const double c = std::abs(inner_product(x, y));
  if (c > 1e-12 && std::abs(c - 1.0) > 1e-12 && cert.gap <= 1e-12) {
    throw Error("no-cloning gap degenerate for non-degenerate overlap");
  }
  return cert;
}

}  // namespace hilbertkit
