#include "hilbertkit/states.hpp"

#include <cmath>
#include <utility>

namespace hilbertkit {

namespace {

constexpr double kDensityTol = 1e-10;

std::vector<Complex> basis_vector(std::size_t n, std::size_t i) {
  std::vector<Complex> v(n);
  v[i] = 1.0;
  return v;
}

}  // namespace

DensityOperator::DensityOperator(ComplexMatrix m, std::vector<double> spectrum,
                                 ComplexMatrix eigvecs)
    : matrix_(std::move(m)),
      spectrum_(std::move(spectrum)),
      eigvecs_(std::move(eigvecs)) {}

DensityOperator DensityOperator::from_matrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw NotSquare("density operator must be square");
  }
  const double scale = 1.0 + frobenius_norm(m);
  if (frobenius_norm(m - adjoint(m)) > kDensityTol * scale) {
    throw NotHermitian("density operator must be Hermitian");
  }
  if (std::abs(trace(m).real() - 1.0) > kDensityTol ||
      std::abs(trace(m).imag()) > kDensityTol) {
    throw InvalidArgument("density operator must have trace one");
  }
  HermitianEig e = hermitian_eig(Complex(0.5) * (m + adjoint(m)));
  double sum = 0.0;
  for (double p : e.eigenvalues) {
    if (p < -kDensityTol || p > 1.0 + kDensityTol) {
      throw InvalidArgument("density spectrum must lie in [0, 1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InvalidArgument("density spectrum must sum to one");
  }
  return DensityOperator(m, std::move(e.eigenvalues), std::move(e.eigenvectors));
}

SchmidtForm schmidt(const TensorElement& z) {
  if (z.norm() == 0.0) {
    throw ZeroElement("schmidt of the zero element");
  }
  // rep = sum_k s_k L_k R_k^dagger translates to
  // z = sum_k s_k conj(R_k) (x) L_k.
  const SvdResult f = svd(z.matrix_rep());
  SchmidtForm out;
  out.coeffs = f.singulars;
  out.left.reserve(f.rank);
  out.right.reserve(f.rank);
  for (std::size_t k = 0; k < f.rank; ++k) {
    std::vector<Complex> u(z.left_dim());
    for (std::size_t i = 0; i < z.left_dim(); ++i) u[i] = std::conj(f.right(i, k));
    out.left.push_back(make_ket(std::move(u)));
    out.right.push_back(make_ket(f.left.column(k)));
  }
  return out;
}

bool is_entangled(const TensorElement& z, double tol) {
  if (z.norm() == 0.0) {
    throw ZeroElement("is_entangled of the zero element");
  }
  const SvdResult f = svd(z.matrix_rep());
  if (f.rank < 2) return false;
  return f.singulars[1] > tol * f.singulars[0];
}

DensityOperator density_from_mixture(const std::vector<double>& weights,
                                     const std::vector<Ket>& vectors) {
  if (weights.empty() || weights.size() != vectors.size()) {
    throw InvalidArgument("mixture needs matching nonempty weights/vectors");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) {
      throw WeightsNotNormalized("mixture weights must be nonnegative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw WeightsNotNormalized("mixture weights must sum to one");
  }
  const std::size_t n = vectors.front().dim();
  ComplexMatrix d(n, n);
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    const Ket& x = vectors[k];
    if (x.space != Space::plain || x.dim() != n) {
      throw DimensionMismatch("mixture vectors must be plain kets of equal dim");
    }
    if (std::abs(norm(x) - 1.0) > 1e-10) {
      throw NotUnit("mixture vectors must be unit vectors");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d(i, j) += weights[k] * x.coords[i] * std::conj(x.coords[j]);
      }
    }
  }
  return DensityOperator::from_matrix(d);
}

ComplexMatrix rank_one_projection(const Ket& v) {
  const double nv = norm(v);
  if (nv == 0.0) {
    throw ZeroElement("projection onto the zero vector");
  }
  const std::size_t n = v.dim();
  ComplexMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      p(i, j) = v.coords[i] * std::conj(v.coords[j]) / (nv * nv);
    }
  }
  return p;
}

DensityOperator gleason_reconstruct(const ProjectionMeasure& measure,
                                    std::size_t dim) {
  if (dim < 3) {
    throw DimensionTooSmall("gleason reconstruction needs dim >= 3");
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  std::vector<ComplexMatrix> probes;
  probes.reserve(dim * dim);
  std::vector<double> values;
  values.reserve(dim * dim);
  auto probe = [&](const Ket& v) {
    probes.push_back(rank_one_projection(v));
    values.push_back(measure(probes.back()));
    return values.back();
  };

  ComplexMatrix d(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    d(i, i) = probe(make_ket(basis_vector(dim, i)));
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      std::vector<Complex> plus = basis_vector(dim, i);
      plus[j] = 1.0;
      for (Complex& c : plus) c *= inv_sqrt2;
      std::vector<Complex> imag = basis_vector(dim, i);
      imag[j] = Complex(0.0, 1.0);
      for (Complex& c : imag) c *= inv_sqrt2;

      const double half_diag = 0.5 * (d(i, i).real() + d(j, j).real());
      const double re = probe(make_ket(std::move(plus))) - half_diag;
      const double im = half_diag - probe(make_ket(std::move(imag)));
      d(i, j) = Complex(re, im);
      d(j, i) = Complex(re, -im);
    }
  }

  DensityOperator out = [&] {
    try {
      return DensityOperator::from_matrix(d);
    } catch (const Error& e) {
      throw InconsistentMeasure(
          std::string("reconstruction is not a density operator: ") + e.what());
    }
  }();

  for (std::size_t k = 0; k < probes.size(); ++k) {
    const double predicted = frobenius_inner(out.matrix(), probes[k]).real();
    if (std::abs(predicted - values[k]) > 1e-9) {
      throw InconsistentMeasure("measure disagrees with its reconstruction");
    }
  }
  return out;
}

}  // namespace hilbertkit
