#include "hilbertkit/psumming.hpp"

#include <cmath>
#include <random>

namespace hilbertkit {

namespace {

constexpr int kAscentStarts = 32;
constexpr int kAscentSteps = 200;
constexpr double kAscentStep0 = 0.1;

void check_family(const ComplexMatrix& t, const std::vector<Ket>& family) {
  if (family.empty()) {
    throw EmptyFamily("family_ratio needs a nonempty family");
  }
  for (const Ket& x : family) {
    if (x.space != Space::plain || x.dim() != t.cols()) {
      throw DimensionMismatch("family vectors must be plain kets of dim t.cols");
    }
  }
}

// matrix with rows x_i^dagger, so that ||X a|| stacks the pairings <x_i,a>
ComplexMatrix pairing_matrix(const std::vector<Ket>& family) {
  ComplexMatrix x(family.size(), family.front().dim());
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.front().dim(); ++j)
      x(i, j) = std::conj(family[i].coords[j]);
  return x;
}

double ket_norm_after(const ComplexMatrix& t, const Ket& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    Complex v = 0.0;
    for (std::size_t j = 0; j < t.cols(); ++j) v += t(i, j) * x.coords[j];
    s += std::norm(v);
  }
  return std::sqrt(s);
}

double p1_sum(const std::vector<Ket>& family, const std::vector<Complex>& a) {
  double s = 0.0;
  for (const Ket& x : family) {
    Complex z = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) z += x.coords[j] * std::conj(a[j]);
    s += std::abs(z);
  }
  return s;
}

void normalize(std::vector<Complex>& a) {
  double s = 0.0;
  for (const Complex& z : a) s += std::norm(z);
  s = std::sqrt(s);
  if (s > 0.0) {
    for (Complex& z : a) z /= s;
  }
}

// one projected-gradient ascent run for sup_a sum |<x_i,a>|
double ascend(const std::vector<Ket>& family, std::vector<Complex> a) {
  normalize(a);
  const std::size_t n = a.size();
  double step = kAscentStep0;
  double value = p1_sum(family, a);
  for (int it = 0; it < kAscentSteps && step > 1e-12; ++it) {
    std::vector<Complex> g(n);
    for (const Ket& x : family) {
      Complex z = 0.0;
      for (std::size_t j = 0; j < n; ++j) z += x.coords[j] * std::conj(a[j]);
      const double az = std::abs(z);
      if (az < 1e-300) continue;
      const Complex phase = std::conj(z) / az;
      for (std::size_t j = 0; j < n; ++j) g[j] += phase * x.coords[j];
    }
    std::vector<Complex> cand = a;
    for (std::size_t j = 0; j < n; ++j) cand[j] += step * g[j];
    normalize(cand);
    const double cv = p1_sum(family, cand);
    if (cv > value) {
      a = std::move(cand);
      value = cv;
    } else {
      step *= 0.5;
    }
  }
  return value;
}

double p1_denominator_ascent(const std::vector<Ket>& family) {
  const std::size_t n = family.front().dim();
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double best = 0.0;
  for (int start = 0; start < kAscentStarts; ++start) {
    std::vector<Complex> a(n);
    if (static_cast<std::size_t>(start) < family.size() && start < 16) {
      a = family[start].coords;
    } else {
      for (Complex& z : a) z = Complex(gauss(rng), gauss(rng));
    }
    double s = 0.0;
    for (const Complex& z : a) s += std::norm(z);
    if (s == 0.0) continue;
    best = std::max(best, ascend(family, std::move(a)));
  }
  return best;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) {
  return seed ^ (0x9E3779B97F4A7C15ULL * (k + 1));
}

Ket random_unit_ket(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> v(n);
  for (Complex& z : v) z = Complex(gauss(rng), gauss(rng));
  normalize(v);
  return make_ket(std::move(v));
}

std::vector<Ket> standard_basis(std::size_t n) {
  std::vector<Ket> basis;
  basis.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Complex> e(n);
    e[i] = 1.0;
    basis.push_back(make_ket(std::move(e)));
  }
  return basis;
}

}  // namespace

double family_ratio(const ComplexMatrix& t, const std::vector<Ket>& family,
                    double p) {
  check_family(t, family);
  if (p != 1.0 && p != 2.0) {
    throw UnsupportedP("family_ratio supports only p in {1, 2}");
  }

  double numerator = 0.0;
  if (p == 2.0) {
    for (const Ket& x : family) {
      const double nx = ket_norm_after(t, x);
      numerator += nx * nx;
    }
    numerator = std::sqrt(numerator);
  } else {
    for (const Ket& x : family) numerator += ket_norm_after(t, x);
  }

  const double denominator = p == 2.0
                                 ? operator_norm(pairing_matrix(family))
                                 : p1_denominator_ascent(family);
  if (denominator == 0.0) return 0.0;
  return numerator / denominator;
}

double p1_denominator_upper_bound(const std::vector<Ket>& family) {
  if (family.empty()) {
    throw EmptyFamily("denominator bound needs a nonempty family");
  }
  double row_sum = 0.0;
  for (const Ket& x : family) row_sum += norm(x);
  const double spectral =
      std::sqrt(static_cast<double>(family.size())) *
      operator_norm(pairing_matrix(family));
  return std::min(row_sum, spectral);
}

SummingEstimate pi2_certify(const ComplexMatrix& t) {
  std::vector<Ket> basis = standard_basis(t.cols());
  const double value = family_ratio(t, basis, 2.0);
  return SummingEstimate{2.0, value, std::move(basis), 1, true};
}

SummingEstimate pi1_lower_bound(const ComplexMatrix& t, std::uint64_t budget,
                                std::uint64_t seed) {
  if (budget < 1) {
    throw InvalidArgument("pi1_lower_bound needs budget >= 1");
  }
  const std::size_t n = t.cols();

  auto certified = [&](const std::vector<Ket>& family) {
    double num = 0.0;
    for (const Ket& x : family) num += ket_norm_after(t, x);
    const double den = p1_denominator_upper_bound(family);
    return den == 0.0 ? 0.0 : num / den;
  };

  std::vector<std::vector<Ket>> deterministic;
  deterministic.push_back(standard_basis(n));
  const SvdResult f = svd(t);
  if (f.rank > 0) {
    deterministic.push_back({make_ket(f.right.column(0))});
  }

  double best = 0.0;
  std::vector<Ket> witness = deterministic.front();
  std::uint64_t evaluated = 0;
  for (const auto& family : deterministic) {
    const double v = certified(family);
    ++evaluated;
    if (v > best) {
      best = v;
      witness = family;
    }
  }

  for (std::uint64_t c = 0; c < budget; ++c) {
    std::mt19937_64 rng(mix_seed(seed, c));
    const std::size_t k = 1 + static_cast<std::size_t>(rng() % (2 * n));
    std::vector<Ket> family;
    family.reserve(k);
    for (std::size_t i = 0; i < k; ++i) family.push_back(random_unit_ket(rng, n));
    const double v = certified(family);
    ++evaluated;
    if (v > best) {
      best = v;
      witness = std::move(family);
    }
  }
  return SummingEstimate{1.0, best, std::move(witness), evaluated, false};
}

}  // namespace hilbertkit
