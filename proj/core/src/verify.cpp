#include "hilbertkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string_view>
#include <tuple>

#include "hilbertkit/conjspace.hpp"
#include "hilbertkit/decompositions.hpp"
#include "hilbertkit/norms.hpp"
#include "hilbertkit/psumming.hpp"
#include "hilbertkit/states.hpp"
#include "hilbertkit/teleport.hpp"
#include "hilbertkit/tensor.hpp"

namespace hilbertkit {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t m,
                            std::size_t n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = Complex(gauss(rng), gauss(rng));
  return a;
}

Ket random_ket(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> v(n);
  for (Complex& z : v) z = Complex(gauss(rng), gauss(rng));
  return make_ket(std::move(v));
}

Ket random_unit_ket(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Ket x = random_ket(rng, n);
    const double s = norm(x);
    if (s < 1e-6) continue;
    for (Complex& z : x.coords) z /= s;
    return x;
  }
}

ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    const SvdResult f = svd(random_matrix(rng, n, n));
    if (f.rank == n) return f.left;
  }
}

std::size_t dim_between(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

Ket basis_ket(std::size_t n, std::size_t i) {
  std::vector<Complex> v(n);
  v[i] = 1.0;
  return make_ket(std::move(v));
}

ComplexMatrix as_column(const Ket& x) {
  return ComplexMatrix(x.dim(), 1, x.coords);
}

Ket apply_matrix(const ComplexMatrix& a, const Ket& x) {
  return make_ket(matmul(a, as_column(x)).column(0));
}

DensityOperator random_density(std::mt19937_64& rng, std::size_t d) {
  const ComplexMatrix a = random_matrix(rng, d, d);
  const ComplexMatrix m = matmul(a, adjoint(a));
  return DensityOperator::from_matrix((1.0 / std::real(trace(m))) * m);
}

Complex trace_of_product(const ComplexMatrix& b, const ComplexMatrix& a) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) t += b(i, j) * a(j, i);
  return t;
}

ComplexMatrix schmidt_rep(const SchmidtForm& s, std::size_t m, std::size_t n) {
  ComplexMatrix rep(m, n);
  for (std::size_t k = 0; k < s.coeffs.size(); ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        rep(i, j) += s.coeffs[k] * s.right[k].coords[i] * s.left[k].coords[j];
  return rep;
}

double check_teleport_unitary(std::mt19937_64&) {
  const Gate t = teleport_matrix();
  return frobenius_norm(matmul(adjoint(t.matrix), t.matrix) -
                        ComplexMatrix::identity(8));
}

double check_teleport_factorization(std::mt19937_64&) {
  const auto gates = standard_gates();
  const ComplexMatrix factored =
      matmul(kron(gates.at("H1").matrix, ComplexMatrix::identity(4)),
             kron(gates.at("U_CNOT").matrix, ComplexMatrix::identity(2)));
  return max_abs_diff(teleport_matrix().matrix, factored);
}

double check_teleport_equation(std::mt19937_64& rng) {
  const auto gates = standard_gates();
  const char* names[4] = {"T1", "T2", "T3", "T4"};
  const Gate t = teleport_matrix();
  const Ket phi = bell_phi_plus();
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Ket xi = random_unit_ket(rng, 2);
    const Ket w = apply_matrix(t.matrix, kron(xi, phi));
    for (int b = 0; b < 4; ++b) {
      const Ket txi = apply_matrix(gates.at(names[b]).matrix, xi);
      worst = std::max(worst, std::abs(w.coords[2 * b] - 0.5 * txi.coords[0]));
      worst =
          std::max(worst, std::abs(w.coords[2 * b + 1] - 0.5 * txi.coords[1]));
    }
  }
  return worst;
}

double check_teleport_corrections(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Ket xi = random_unit_ket(rng, 2);
    double total = 0.0;
    for (const TeleportOutcome& out : teleport(xi)) {
      worst = std::max(worst, norm(out.corrected - xi));
      worst = std::max(worst, std::abs(out.probability - 0.25));
      total += out.probability;
    }
    worst = std::max(worst, std::abs(total - 1.0));
  }
  return worst;
}

double check_projection_gap(std::mt19937_64& rng) {
  SvdResult f = svd(random_matrix(rng, 4, 2));
  while (f.rank != 2) f = svd(random_matrix(rng, 4, 2));
  const ComplexMatrix p = matmul(f.left, adjoint(f.left));
  const NormReport r = norm_report(p);
  return std::max({std::abs(r.nuclear_norm - 2.0),
                   std::abs(r.hs_norm - std::sqrt(2.0)),
                   std::abs(r.operator_norm - 1.0)});
}

double check_nuclear_composition(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n1 = dim_between(rng, 1, 8);
    const std::size_t n2 = dim_between(rng, 1, 8);
    const std::size_t n3 = dim_between(rng, 1, 8);
    const CompositionBound b = composition_nuclear_bound(
        random_matrix(rng, n1, n2), random_matrix(rng, n2, n3));
    worst = std::max(worst, std::max(0.0, b.n_st - b.bound));
  }
  return worst;
}

double check_schmidt_bell(std::mt19937_64&) {
  std::vector<std::pair<Ket, Ket>> terms;
  for (std::size_t i = 0; i < 2; ++i) {
    terms.emplace_back(scale(kInvSqrt2, basis_ket(2, i)), basis_ket(2, i));
  }
  const TensorElement bell(2, 2, std::move(terms));
  const SchmidtForm s = schmidt(bell);
  if (s.coeffs.size() != 2) return 1.0;
  double sum_sq = 0.0;
  for (const double c : s.coeffs) sum_sq += c * c;
  double res = std::max({std::abs(s.coeffs[0] - kInvSqrt2),
                         std::abs(s.coeffs[1] - kInvSqrt2),
                         std::abs(sum_sq - 1.0)});
  res = std::max(res, max_abs_diff(schmidt_rep(s, 2, 2), bell.matrix_rep()));
  if (!is_entangled(bell, 1e-6)) res = std::max(res, 1.0);
  return res;
}

double check_schmidt_reconstruction(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = dim_between(rng, 1, 8);
    const std::size_t n = dim_between(rng, 1, 8);
    const ComplexMatrix rep = random_matrix(rng, m, n);
    const TensorElement z = TensorElement::from_matrix(rep);
    const SchmidtForm s = schmidt(z);
    ComplexMatrix diff = schmidt_rep(s, m, n) - rep;
    worst = std::max(worst, frobenius_norm(diff));
    double sum_sq = 0.0;
    for (const double c : s.coeffs) sum_sq += c * c;
    const double fro = frobenius_norm(rep);
    worst = std::max(worst, std::abs(sum_sq - fro * fro));
  }
  return worst;
}

double check_pi2_matches_hs(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = dim_between(rng, 1, 8);
    const std::size_t n = dim_between(rng, 1, 8);
    const ComplexMatrix t = random_matrix(rng, m, n);
    worst = std::max(worst,
                     std::abs(pi2_certify(t).lower_bound - hs_norm(t)));
  }
  return worst;
}

double check_pi1_id_bracket(std::mt19937_64& rng, std::uint64_t budget) {
  const SummingEstimate est =
      pi1_lower_bound(ComplexMatrix::identity(2), budget, rng());
  double res = std::max(0.0, 1.0 - est.lower_bound);
  res = std::max(res, est.lower_bound - (std::sqrt(2.0) + 1e-6));
  double num = 0.0;
  for (const Ket& x : est.witness_family) num += norm(x);
  const double den = p1_denominator_upper_bound(est.witness_family);
  res = std::max(res, std::abs(num / den - est.lower_bound));
  return res;
}

double check_duality_value(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = dim_between(rng, 1, 8);
    const std::size_t n = dim_between(rng, 1, 6);
    const ComplexMatrix a = random_matrix(rng, m, n);
    const TraceDualityResult r = trace_duality_max(a);
    worst = std::max(worst, std::abs(r.value - frobenius_norm(a)));
    worst = std::max(worst,
                     std::abs(trace_of_product(r.maximizer, a) - r.value));
  }
  return worst;
}

double check_duality_dominates(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = dim_between(rng, 1, 8);
    const std::size_t n = dim_between(rng, 1, 6);
    const ComplexMatrix a = random_matrix(rng, m, n);
    const TraceDualityResult r = trace_duality_max(a);
    for (int k = 0; k < 100; ++k) {
      ComplexMatrix b = random_matrix(rng, n, m);
      const double fro = frobenius_norm(b);
      if (fro == 0.0) continue;
      b = (1.0 / fro) * b;
      const double paired = std::abs(trace_of_product(b, a));
      worst = std::max(worst, std::max(0.0, paired - r.value));
    }
  }
  return worst;
}

double check_gleason_roundtrip(std::mt19937_64& rng) {
  double worst = 0.0;
  for (std::size_t d = 3; d <= 6; ++d) {
    for (int trial = 0; trial < 20; ++trial) {
      const DensityOperator density = random_density(rng, d);
      const ProjectionMeasure mu = [&density](const ComplexMatrix& p) {
        return std::real(trace(matmul(p, density.matrix())));
      };
      const DensityOperator rec = gleason_reconstruct(mu, d);
      ComplexMatrix diff = rec.matrix() - density.matrix();
      worst = std::max(worst, frobenius_norm(diff));
    }
  }
  return worst;
}

double check_gleason_heldout(std::mt19937_64& rng) {
  double worst = 0.0;
  for (std::size_t d = 3; d <= 6; ++d) {
    const DensityOperator density = random_density(rng, d);
    const ProjectionMeasure mu = [&density](const ComplexMatrix& p) {
      return std::real(trace(matmul(p, density.matrix())));
    };
    const DensityOperator rec = gleason_reconstruct(mu, d);
    for (int k = 0; k < 50; ++k) {
      const ComplexMatrix p = rank_one_projection(random_unit_ket(rng, d));
      const double expected = std::real(trace(matmul(p, density.matrix())));
      const double got = std::real(trace(matmul(p, rec.matrix())));
      worst = std::max(worst, std::abs(got - expected));
    }
  }
  return worst;
}

std::pair<Ket, Ket> random_generic_pair(std::mt19937_64& rng, std::size_t d) {
  const Ket x = random_unit_ket(rng, d);
  for (;;) {
    const Ket y = random_unit_ket(rng, d);
    const double c = std::abs(inner_product(x, y));
    if (c > 0.05 && c < 0.95) return {x, y};
  }
}

double check_nocloning_formula(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = dim_between(rng, 2, 6);
    const auto [x, y] = random_generic_pair(rng, d);
    const Ket e = random_unit_ket(rng, d);
    const NoCloningCertificate cert = no_cloning_certificate(x, y, e);
    const Complex c = inner_product(x, y);
    worst = std::max(worst,
                     std::abs(cert.gap - std::sqrt(2.0) * std::abs(c - c * c)));
  }
  return worst;
}

double check_nocloning_positive(std::mt19937_64& rng) {
  double min_gap = 1.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = dim_between(rng, 2, 6);
    const auto [x, y] = random_generic_pair(rng, d);
    const Ket e = random_unit_ket(rng, d);
    min_gap = std::min(min_gap, no_cloning_certificate(x, y, e).gap);
  }
  return std::max(0.0, 2e-12 - min_gap);
}

double check_nocloning_controls(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = dim_between(rng, 2, 6);
    const ComplexMatrix u = random_unitary(rng, d);
    const Ket x = make_ket(u.column(0));
    const Ket y = make_ket(u.column(1));
    const Ket e = random_unit_ket(rng, d);
    worst = std::max(worst, no_cloning_certificate(x, y, e).gap);
    worst = std::max(worst, no_cloning_certificate(x, x, e).gap);
  }
  return worst;
}

double check_kron_basis(std::mt19937_64&) {
  double worst = 0.0;
  for (std::size_t m = 1; m <= 6; ++m) {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const Ket k = kron(basis_ket(n, j), basis_ket(m, i));
          for (std::size_t idx = 0; idx < n * m; ++idx) {
            const double expected = idx == j * m + i ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(k.coords[idx] - expected));
          }
        }
      }
    }
  }
  return worst;
}

double check_kron_commutation(std::mt19937_64&) {
  double worst = 0.0;
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const CommutationMatrix k = commutation_matrix(m, n);
      worst = std::max(worst,
                       max_abs_diff(matmul(adjoint(k.matrix), k.matrix),
                                    ComplexMatrix::identity(m * n)));
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          const Ket y = basis_ket(m, a);
          const Ket x = basis_ket(n, b);
          const Ket swapped = apply_matrix(k.matrix, kron(y, x));
          const Ket expected = kron(x, y);
          for (std::size_t idx = 0; idx < m * n; ++idx) {
            worst = std::max(
                worst, std::abs(swapped.coords[idx] - expected.coords[idx]));
          }
        }
      }
    }
  }
  return worst;
}

double check_kron_vec_dyad(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = dim_between(rng, 1, 6);
    const std::size_t m = dim_between(rng, 1, 6);
    const Ket x = random_ket(rng, n);
    const Ket z = random_ket(rng, m);
    const Ket v = to_kron_vector(dyad(x, z));
    const Ket k = kron(x, z);
    for (std::size_t idx = 0; idx < n * m; ++idx) {
      worst = std::max(worst, std::abs(v.coords[idx] - k.coords[idx]));
    }
  }
  return worst;
}

double check_kron_mixed_product(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m1 = dim_between(rng, 1, 4);
    const std::size_t n1 = dim_between(rng, 1, 4);
    const std::size_t p1 = dim_between(rng, 1, 4);
    const std::size_t m2 = dim_between(rng, 1, 4);
    const std::size_t n2 = dim_between(rng, 1, 4);
    const std::size_t p2 = dim_between(rng, 1, 4);
    const ComplexMatrix a = random_matrix(rng, m1, n1);
    const ComplexMatrix c = random_matrix(rng, n1, p1);
    const ComplexMatrix b = random_matrix(rng, m2, n2);
    const ComplexMatrix d = random_matrix(rng, n2, p2);
    worst = std::max(worst, max_abs_diff(matmul(kron(a, b), kron(c, d)),
                                         kron(matmul(a, c), matmul(b, d))));
  }
  return worst;
}

double check_conjspace_norm_split(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = dim_between(rng, 1, 16);
    const ComplexMatrix basis = random_unitary(rng, d);
    const Ket x = random_ket(rng, d);
    const ReImParts parts = re_im_parts(x, basis);
    const double lhs = norm(x) * norm(x);
    const double rhs = norm(parts.re) * norm(parts.re) +
                       norm(parts.im) * norm(parts.im);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double check_conjspace_involution(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = dim_between(rng, 1, 16);
    const ComplexMatrix basis = random_unitary(rng, d);
    const Ket x = random_ket(rng, d);
    const Ket twice = star_element(star_element(x, basis), basis);
    worst = std::max(worst, norm(twice - x));
  }
  return worst;
}

double check_conjspace_riesz(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = dim_between(rng, 1, 16);
    const Ket x = random_ket(rng, d);
    const Ket y = random_ket(rng, d);
    const Ket k = random_unit_ket(rng, d);
    const Complex alpha(gauss(rng), gauss(rng));
    const Ket comb = x + scale(alpha, y);
    const Ket kc = to_conjugate(k);  // the functional lives on the conjugate space
    const Complex lhs = apply(riesz_map(comb), kc);
    const Complex rhs =
        apply(riesz_map(x), kc) + alpha * apply(riesz_map(y), kc);
    worst = std::max(worst, std::abs(lhs - rhs));
    worst = std::max(worst, std::abs(norm(riesz_map(x)) - norm(x)));
    worst = std::max(worst,
                     std::abs(apply(riesz_map(x), kc) - inner_product(x, k)));
  }
  return worst;
}

}  // namespace

VerifyReport verify_suite(std::uint64_t seed, double tol_factor,
                          std::uint64_t budget) {
  using CheckFn = std::function<double(std::mt19937_64&)>;
  std::vector<std::tuple<std::string, double, CheckFn>> checks;
  checks.emplace_back("conjspace.involution", 1e-10, check_conjspace_involution);
  checks.emplace_back("conjspace.norm_split", 1e-10, check_conjspace_norm_split);
  checks.emplace_back("conjspace.riesz", 1e-10, check_conjspace_riesz);
  checks.emplace_back("duality.dominates", 1e-12, check_duality_dominates);
  checks.emplace_back("duality.value_equals_hs", 1e-12, check_duality_value);
  checks.emplace_back("gleason.heldout", 1e-8, check_gleason_heldout);
  checks.emplace_back("gleason.roundtrip", 1e-9, check_gleason_roundtrip);
  checks.emplace_back("kron.basis_identity", 0.0, check_kron_basis);
  checks.emplace_back("kron.commutation", 0.0, check_kron_commutation);
  checks.emplace_back("kron.mixed_product", 1e-12, check_kron_mixed_product);
  checks.emplace_back("kron.vec_dyad", 1e-12, check_kron_vec_dyad);
  checks.emplace_back("nocloning.controls", 1e-12, check_nocloning_controls);
  checks.emplace_back("nocloning.gap_formula", 1e-10, check_nocloning_formula);
  checks.emplace_back("nocloning.gap_positive", 1e-12,
                      check_nocloning_positive);
  checks.emplace_back("norms.nuclear_composition", 1e-10,
                      check_nuclear_composition);
  checks.emplace_back("norms.projection_gap", 1e-12, check_projection_gap);
  checks.emplace_back("psum.pi1_id_bracket", 1e-9,
                      [budget](std::mt19937_64& rng) {
                        return check_pi1_id_bracket(rng, budget);
                      });
  checks.emplace_back("psum.pi2_matches_hs", 1e-10, check_pi2_matches_hs);
  checks.emplace_back("schmidt.bell", 1e-12, check_schmidt_bell);
  checks.emplace_back("schmidt.reconstruction", 1e-9,
                      check_schmidt_reconstruction);
  checks.emplace_back("teleport.corrections", 1e-10,
                      check_teleport_corrections);
  checks.emplace_back("teleport.equation", 1e-12, check_teleport_equation);
  checks.emplace_back("teleport.factorization", 0.0,
                      check_teleport_factorization);
  checks.emplace_back("teleport.unitary", 1e-14, check_teleport_unitary);

  VerifyReport report;
  report.version = kVersion;
  for (const auto& [id, tol, fn] : checks) {
    std::mt19937_64 rng((seed * 0x9E3779B97F4A7C15ULL) ^ fnv1a(id));
    VerifyEntry entry;
    entry.id = id;
    entry.tolerance = tol * tol_factor;
    entry.residual = fn(rng);
    entry.seed = seed;
    entry.passed = entry.residual <= entry.tolerance;
    report.suite.push_back(std::move(entry));
  }
  std::sort(report.suite.begin(), report.suite.end(),
            [](const VerifyEntry& a, const VerifyEntry& b) {
              return a.id < b.id;
            });
  report.total = report.suite.size();
  for (const VerifyEntry& e : report.suite) {
    if (e.passed) {
      ++report.passed;
    } else {
      ++report.failed;
    }
  }
  return report;
}

}  // namespace hilbertkit
