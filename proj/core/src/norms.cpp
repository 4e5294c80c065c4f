#include "hilbertkit/norms.hpp"

#include <cmath>
#include <numeric>

namespace hilbertkit {

double hs_norm(const ComplexMatrix& a) { return frobenius_norm(a); }

double nuclear_norm(const ComplexMatrix& a) {
  const SvdResult f = svd(a);
  double s = 0.0;
  for (double v : f.singulars) s += v;
  return s;
}

NormReport norm_report(const ComplexMatrix& a) {
  const SvdResult f = svd(a);
  NormReport out{0.0, 0.0, 0.0, f.singulars};
  double sq = 0.0;
  for (double v : f.singulars) {
    out.nuclear_norm += v;
    sq += v * v;
  }
  out.hs_norm = std::sqrt(sq);
  out.operator_norm = f.singulars.empty() ? 0.0 : f.singulars.front();
  return out;
}

TraceDualityResult trace_duality_max(const ComplexMatrix& a) {
  const double fro = frobenius_norm(a);
  if (fro == 0.0) {
    throw ZeroMatrix("trace_duality_max of the zero matrix");
  }
  return TraceDualityResult{fro, Complex(1.0 / fro) * adjoint(a)};
}

CompositionBound composition_nuclear_bound(const ComplexMatrix& s,
                                           const ComplexMatrix& t) {
  if (s.cols() != t.rows()) {
    throw DimensionMismatch("composition_nuclear_bound: s.cols != t.rows");
  }
  return CompositionBound{nuclear_norm(s * t), hs_norm(s) * hs_norm(t)};
}

Complex vector_state(const ComplexMatrix& a, const Ket& x) {
  if (a.rows() != a.cols()) {
    throw NotSquare("vector_state: matrix not square");
  }
  if (x.space != Space::plain || x.dim() != a.rows()) {
    throw DimensionMismatch("vector_state: ket does not match matrix");
  }
  if (std::abs(norm(x) - 1.0) > 1e-10) {
    throw NotUnit("vector_state: ket is not a unit vector");
  }
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex axi = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) axi += a(i, j) * x.coords[j];
    s += axi * std::conj(x.coords[i]);
  }
  return s;
}

}  // namespace hilbertkit
