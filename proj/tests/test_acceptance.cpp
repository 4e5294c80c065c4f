// Acceptance suite: eleven end-to-end criteria, each printing one PASS/FAIL
// line. Tolerances are part of the contract and are asserted exactly as
// stated; every random draw is seeded so the run is reproducible.
#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hilbertkit/conjspace.hpp"
#include "hilbertkit/decompositions.hpp"
#include "hilbertkit/norms.hpp"
#include "hilbertkit/psumming.hpp"
#include "hilbertkit/states.hpp"
#include "hilbertkit/teleport.hpp"
#include "hilbertkit/tensor.hpp"
#include "test_support.hpp"

#ifndef HILBERTKIT_CLI_PATH
#error "HILBERTKIT_CLI_PATH must point at the CLI binary"
#endif

namespace hilbertkit {
namespace {

using hktest::random_ket;
using hktest::random_matrix;
using hktest::random_unit_ket;

class Criterion {
 public:
  Criterion(int index, std::string name)
      : index_(index), name_(std::move(name)) {}

  void check(bool condition, const std::string& what) {
    if (!condition && ok_) first_failure_ = what;
    ok_ = ok_ && condition;
  }

  void check_le(double value, double bound, const std::string& what) {
    std::ostringstream msg;
    msg << what << ": " << value << " > " << bound;
    check(value <= bound, msg.str());
  }

  void finish() {
    std::cout << "[ACCEPTANCE " << index_ << "/11] " << name_ << ": "
              << (ok_ ? "PASS" : "FAIL") << "\n";
    std::cout.flush();
    EXPECT_TRUE(ok_) << first_failure_;
  }

 private:
  int index_;
  std::string name_;
  bool ok_ = true;
  std::string first_failure_;
};

Ket basis_ket(std::size_t n, std::size_t i) {
  std::vector<Complex> v(n);
  v[i] = 1.0;
  return make_ket(std::move(v));
}

Ket apply_matrix(const ComplexMatrix& a, const Ket& x) {
  std::vector<Complex> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x.coords[j];
  return make_ket(std::move(out));
}

TEST(Acceptance, Criterion01TeleportationMatrix) {
  Criterion crit(1, "teleportation matrix, factorization and corrections");
  const auto start = std::chrono::steady_clock::now();

  const ComplexMatrix t = teleport_matrix().matrix;
  crit.check_le(
      frobenius_norm(matmul(adjoint(t), t) - ComplexMatrix::identity(8)),
      1e-14, "||T^dagger T - I_8||_F");

  const auto gates = standard_gates();
  const ComplexMatrix factored =
      matmul(kron(gates.at("H1").matrix, ComplexMatrix::identity(4)),
             kron(gates.at("U_CNOT").matrix, ComplexMatrix::identity(2)));
  crit.check(max_abs_diff(t, factored) == 0.0,
             "factorization through H and CNOT must be exact entrywise");

  const char* names[4] = {"T1", "T2", "T3", "T4"};
  std::mt19937_64 rng(42);
  double worst_equation = 0.0;
  double worst_correction = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Ket xi = random_unit_ket(rng, 2);
    const Ket w = apply_matrix(t, kron(xi, bell_phi_plus()));
    Ket rhs = make_ket(std::vector<Complex>(8));
    for (std::size_t b = 0; b < 4; ++b) {
      const Ket corrected_half =
          apply_matrix(gates.at(names[b]).matrix, xi);
      rhs = rhs + scale(Complex(0.5), kron(basis_ket(4, b), corrected_half));
    }
    worst_equation = std::max(worst_equation, norm(w - rhs));

    for (const TeleportOutcome& out : teleport(xi)) {
      worst_correction =
          std::max(worst_correction, norm(out.corrected - xi));
    }
  }
  crit.check_le(worst_equation, 1e-12, "teleportation equation residual");
  crit.check_le(worst_correction, 1e-10, "branch correction residual");

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  crit.check_le(elapsed, 1.0, "runtime in seconds");
  crit.finish();
}

TEST(Acceptance, Criterion02NormGapOnProjection) {
  Criterion crit(2, "nuclear/HS norm gap on a rank-2 projection");
  const ComplexMatrix p{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 0.0}};
  crit.check_le(std::abs(nuclear_norm(p) - 2.0), 1e-12, "nuclear norm vs 2");
  crit.check_le(std::abs(hs_norm(p) - std::sqrt(2.0)), 1e-12,
                "HS norm vs sqrt(2)");
  crit.check(hs_norm(p) < nuclear_norm(p), "sqrt(2) < 2 gap direction");
  crit.finish();
}

TEST(Acceptance, Criterion03SchmidtDecomposition) {
  Criterion crit(3, "Schmidt coefficients and reconstructions");
  const double s = 1.0 / std::sqrt(2.0);
  const TensorElement bell(
      2, 2,
      {{scale(Complex(s), basis_ket(2, 0)), basis_ket(2, 0)},
       {scale(Complex(s), basis_ket(2, 1)), basis_ket(2, 1)}});
  const SchmidtForm bf = schmidt(bell);
  crit.check(bf.coeffs.size() == 2, "bell state has Schmidt rank 2");
  double bell_sq = 0.0;
  for (double c : bf.coeffs) {
    crit.check_le(std::abs(c - s), 1e-12, "bell coefficient vs 1/sqrt(2)");
    bell_sq += c * c;
  }
  crit.check_le(std::abs(bell_sq - 1.0), 1e-12,
                "bell squared coefficients sum to one");

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const std::size_t m = 1 + rng() % 8;
    const TensorElement z =
        TensorElement::from_matrix(random_matrix(rng, m, n));
    const SchmidtForm f = schmidt(z);
    std::vector<std::pair<Ket, Ket>> terms;
    double sq = 0.0;
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
      terms.emplace_back(scale(Complex(f.coeffs[k]), f.left[k]), f.right[k]);
      sq += f.coeffs[k] * f.coeffs[k];
    }
    const TensorElement rebuilt(z.left_dim(), z.right_dim(), std::move(terms));
    crit.check_le(frobenius_norm(rebuilt.matrix_rep() - z.matrix_rep()),
                  1e-9 * (1.0 + z.norm()), "reconstruction residual");
    crit.check_le(std::abs(sq - z.norm() * z.norm()),
                  1e-9 * (1.0 + z.norm() * z.norm()),
                  "squared coefficients vs squared norm");
  }
  crit.finish();
}

TEST(Acceptance, Criterion04PiTwoEqualsHilbertSchmidt) {
  Criterion crit(4, "pi_2 certificate equals the HS norm");
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng() % 8;
    const std::size_t n = 1 + rng() % 8;
    const ComplexMatrix a = random_matrix(rng, m, n);
    const SummingEstimate e = pi2_certify(a);
    crit.check(e.exact, "pi_2 certificates are exact");
    crit.check_le(std::abs(e.lower_bound - hs_norm(a)),
                  1e-10 * (1.0 + hs_norm(a)), "pi_2 vs sigma_2");
  }
  crit.finish();
}

TEST(Acceptance, Criterion05TraceDuality) {
  Criterion crit(5, "trace duality attains the HS norm and dominates");
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng() % 8;
    const std::size_t n = 1 + rng() % 6;
    const ComplexMatrix a = random_matrix(rng, m, n);
    const TraceDualityResult r = trace_duality_max(a);
    crit.check_le(std::abs(r.value - frobenius_norm(a)),
                  1e-12 * (1.0 + r.value), "value vs ||A||_F");
    crit.check_le(std::abs(std::abs(trace(matmul(a, r.maximizer))) - r.value),
                  1e-12 * (1.0 + r.value), "maximizer attains the value");
    for (int c = 0; c < 100; ++c) {
      ComplexMatrix b = random_matrix(rng, n, m);
      const double nb = frobenius_norm(b);
      if (nb == 0.0) continue;
      b = Complex(1.0 / nb) * b;
      crit.check_le(std::abs(trace(matmul(a, b))), r.value + 1e-12,
                    "unit-Frobenius competitor");
    }
  }
  crit.finish();
}

TEST(Acceptance, Criterion06NuclearComposition) {
  Criterion crit(6, "nuclear norm of compositions");
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = 1 + rng() % 8;
    const std::size_t k = 1 + rng() % 8;
    const std::size_t n = 1 + rng() % 8;
    const ComplexMatrix a = random_matrix(rng, m, k);
    const ComplexMatrix b = random_matrix(rng, k, n);
    const CompositionBound bound = composition_nuclear_bound(a, b);
    crit.check_le(bound.n_st, bound.bound + 1e-10,
                  "N(ST) vs sigma_2(S) sigma_2(T)");
  }
  crit.finish();
}

TEST(Acceptance, Criterion07GleasonRoundtrip) {
  Criterion crit(7, "density reconstruction from projection measures");
  std::mt19937_64 rng(47);
  for (std::size_t dim = 3; dim <= 6; ++dim) {
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix g = random_matrix(rng, dim, dim);
      const ComplexMatrix gg = matmul(g, adjoint(g));
      const DensityOperator d =
          DensityOperator::from_matrix(Complex(1.0 / trace(gg).real()) * gg);
      const ProjectionMeasure measure = [&d](const ComplexMatrix& p) {
        return frobenius_inner(d.matrix(), p).real();
      };
      const DensityOperator rebuilt = gleason_reconstruct(measure, dim);
      crit.check_le(frobenius_norm(rebuilt.matrix() - d.matrix()), 1e-9,
                    "roundtrip Frobenius error");
      for (int probe = 0; probe < 50; ++probe) {
        const ComplexMatrix p =
            rank_one_projection(random_unit_ket(rng, dim));
        crit.check_le(
            std::abs(frobenius_inner(rebuilt.matrix(), p).real() -
                     frobenius_inner(d.matrix(), p).real()),
            1e-8, "held-out projection");
      }
    }
  }
  crit.finish();
}

TEST(Acceptance, Criterion08NoCloningGap) {
  Criterion crit(8, "no-cloning Gram gap");
  std::mt19937_64 rng(48);
  int accepted = 0;
  while (accepted < 100) {
    const Ket x = random_unit_ket(rng, 2);
    const Ket y = random_unit_ket(rng, 2);
    const Complex c = inner_product(x, y);
    if (std::abs(c) < 0.05 || std::abs(c) > 0.95) continue;
    Ket e = random_unit_ket(rng, 2);
    if (std::abs(std::abs(inner_product(e, x)) - 1.0) < 1e-6 ||
        std::abs(std::abs(inner_product(e, y)) - 1.0) < 1e-6) {
      continue;
    }
    ++accepted;
    const NoCloningCertificate cert = no_cloning_certificate(x, y, e);
    crit.check_le(std::abs(cert.gap - std::sqrt(2.0) * std::abs(c - c * c)),
                  1e-10, "gap vs sqrt(2)|c - c^2|");
    crit.check(cert.gap > 1e-12, "gap strictly positive");
  }
  const Ket e1 = basis_ket(2, 0);
  const Ket e2 = basis_ket(2, 1);
  const double s = 1.0 / std::sqrt(2.0);
  const Ket blank = make_ket({s, s});
  crit.check_le(no_cloning_certificate(e1, e2, blank).gap, 1e-12,
                "orthogonal control");
  crit.check_le(no_cloning_certificate(e1, e1, e2).gap, 1e-12,
                "parallel control");
  crit.finish();
}

TEST(Acceptance, Criterion09KroneckerIdentities) {
  Criterion crit(9, "Kronecker, commutation and vec/dyad identities");
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t m = 1; m <= 6; ++m) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
          const Ket k = kron(basis_ket(n, j), basis_ket(m, i));
          bool exact = true;
          for (std::size_t p = 0; p < n * m; ++p) {
            exact = exact &&
                    k.coords[p] == Complex(p == j * m + i ? 1.0 : 0.0);
          }
          crit.check(exact, "basis Kronecker identity must be exact");
        }
      }
    }
  }

  std::mt19937_64 rng(49);
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const CommutationMatrix k = commutation_matrix(m, n);
      crit.check(is_unitary(k.matrix, 0.0), "K_{m,n} unitary exactly");
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const Ket swapped = apply_matrix(
              k.matrix, kron(basis_ket(m, i), basis_ket(n, j)));
          crit.check(
              norm(swapped - kron(basis_ket(n, j), basis_ket(m, i))) == 0.0,
              "K swap identity must be exact on basis pairs");
        }
      }
    }
  }

  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t m = 1 + rng() % 6;
    const Ket x = random_ket(rng, n);
    const Ket z = random_ket(rng, m);
    crit.check_le(norm(to_kron_vector(dyad(x, z)) - kron(x, z)),
                  1e-12 * (1.0 + norm(x) * norm(z)), "vec(dyad) vs kron");
  }
  crit.finish();
}

TEST(Acceptance, Criterion10ConjugateSpaceSuite) {
  Criterion crit(10, "conjugate-space norm split, involution and Riesz map");
  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 15;  // dims up to 16

    // random unitary basis from the SVD of a generic matrix
    const SvdResult f = svd(random_matrix(rng, n, n));
    if (f.rank < n) continue;
    const ComplexMatrix basis = f.left;

    const Ket x = random_ket(rng, n);
    const double nx = norm(x);

    const ReImParts parts = re_im_parts(x, basis);
    const double split =
        norm(parts.re) * norm(parts.re) + norm(parts.im) * norm(parts.im);
    crit.check_le(std::abs(split - nx * nx), 1e-10 * (1.0 + nx * nx),
                  "norm splits across re/im parts");

    const Ket xs = star_element(x, basis);
    crit.check_le(norm(semilinear_conjugation(xs, basis) - x),
                  1e-10 * (1.0 + nx), "J(J(x)) = x");
    crit.check_le(std::abs(norm(xs) - nx), 1e-10 * (1.0 + nx),
                  "involution is isometric");

    const Ket k = random_ket(rng, n);
    const Ket y = random_ket(rng, n);
    const Complex a(0.7, -0.2);
    const Bra fx = riesz_map(x);
    crit.check_le(std::abs(apply(fx, to_conjugate(k)) - inner_product(x, k)),
                  1e-10 * (1.0 + nx * norm(k)), "Riesz functional value");
    crit.check_le(std::abs(norm(fx) - nx), 1e-10 * (1.0 + nx),
                  "Riesz map is isometric");
    const Bra combo = riesz_map(scale(a, x) + y);
    const Complex lhs = apply(combo, to_conjugate(k));
    const Complex rhs =
        a * apply(fx, to_conjugate(k)) + apply(riesz_map(y), to_conjugate(k));
    crit.check_le(std::abs(lhs - rhs),
                  1e-10 * (1.0 + std::abs(lhs) + std::abs(rhs)),
                  "Riesz map is linear");
  }
  crit.finish();
}

TEST(Acceptance, Criterion11FullVerifySuite) {
  Criterion crit(11, "full verify suite at seed 42 via the CLI");
  const auto start = std::chrono::steady_clock::now();
  const std::string cmd =
      std::string("\"") + HILBERTKIT_CLI_PATH + "\" verify --seed 42 --quiet" +
      " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  crit.check(WIFEXITED(status) && WEXITSTATUS(status) == 0,
             "verify exits with zero failures");
  crit.check_le(elapsed, 60.0, "verify runtime in seconds");
  crit.finish();
}

}  // namespace
}  // namespace hilbertkit
