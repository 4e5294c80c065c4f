#include "hilbertkit/conjspace.hpp"

#include <cmath>
#include <utility>

namespace hilbertkit {

namespace {

void check_finite(const std::vector<Complex>& v) {
  for (const Complex& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NonFinite("ket coordinate is not finite");
    }
  }
}

void check_same_space(const Ket& x, const Ket& y) {
  if (x.space != y.space) {
    throw WrongSpaceTag("pairing plain with conjugate requires to_conjugate");
  }
  if (x.dim() != y.dim()) {
    throw DimensionMismatch("ket dimension mismatch");
  }
}

// columns of `basis` as kets; unitarity enforced at 1e-10
void check_basis(const ComplexMatrix& basis, std::size_t dim) {
  if (basis.rows() != dim || basis.cols() != dim) {
    throw NotUnitaryBasis("basis shape does not match ket dimension");
  }
  if (!is_unitary(basis, 1e-10)) {
    throw NotUnitaryBasis("basis columns are not orthonormal");
  }
}

Complex coordinate_inner(const std::vector<Complex>& x,
                         const std::vector<Complex>& y) {
  Complex s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * std::conj(y[k]);
  return s;
}

}  // namespace

Ket make_ket(std::vector<Complex> coords, Space space) {
  check_finite(coords);
  return Ket{std::move(coords), space};
}

Complex inner_product(const Ket& x, const Ket& y) {
  check_same_space(x, y);
  const Complex plain = coordinate_inner(x.coords, y.coords);
  return x.space == Space::plain ? plain : std::conj(plain);
}

double norm(const Ket& x) {
  double s = 0.0;
  for (const Complex& z : x.coords) s += std::norm(z);
  return std::sqrt(s);
}

Ket operator+(const Ket& x, const Ket& y) {
  check_same_space(x, y);
  Ket out = x;
  for (std::size_t k = 0; k < out.coords.size(); ++k) out.coords[k] += y.coords[k];
  return out;
}

Ket operator-(const Ket& x, const Ket& y) {
  check_same_space(x, y);
  Ket out = x;
  for (std::size_t k = 0; k < out.coords.size(); ++k) out.coords[k] -= y.coords[k];
  return out;
}

Ket scale(const Complex& s, const Ket& x) {
  const Complex factor = x.space == Space::plain ? s : std::conj(s);
  Ket out = x;
  for (Complex& z : out.coords) z *= factor;
  return out;
}

Ket to_conjugate(const Ket& x) {
  if (x.space != Space::plain) {
    throw WrongSpaceTag("to_conjugate expects a plain ket");
  }
  return Ket{x.coords, Space::conjugate};
}

Ket from_conjugate(const Ket& x) {
  if (x.space != Space::conjugate) {
    throw WrongSpaceTag("from_conjugate expects a conjugate ket");
  }
  return Ket{x.coords, Space::plain};
}

Bra dirac_bra(const Ket& y) {
  if (y.space != Space::plain) {
    throw WrongSpaceTag("dirac_bra expects a plain ket");
  }
  Bra out{y.coords, Space::plain};
  for (Complex& c : out.coeffs) c = std::conj(c);
  return out;
}

Bra riesz_map(const Ket& x) {
  if (x.space != Space::plain) {
    throw WrongSpaceTag("riesz_map expects a plain ket");
  }
  return Bra{x.coords, Space::conjugate};
}

Complex apply(const Bra& f, const Ket& x) {
  if ((f.domain == Space::plain) != (x.space == Space::plain)) {
    throw WrongSpaceTag("functional domain does not match ket space");
  }
  if (f.dim() != x.dim()) {
    throw DimensionMismatch("functional/ket dimension mismatch");
  }
  Complex s = 0.0;
  if (f.domain == Space::plain) {
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) s += f.coeffs[k] * x.coords[k];
  } else {
    for (std::size_t k = 0; k < f.coeffs.size(); ++k)
      s += f.coeffs[k] * std::conj(x.coords[k]);
  }
  return s;
}

double norm(const Bra& f) {
  double s = 0.0;
  for (const Complex& z : f.coeffs) s += std::norm(z);
  return std::sqrt(s);
}

ReImParts re_im_parts(const Ket& x, const ComplexMatrix& basis) {
  if (x.space != Space::plain) {
    throw WrongSpaceTag("re_im_parts expects a plain ket");
  }
  check_basis(basis, x.dim());
  const std::size_t n = x.dim();
  Ket re{std::vector<Complex>(n), Space::plain};
  Ket im{std::vector<Complex>(n), Space::plain};
  for (std::size_t j = 0; j < n; ++j) {
    const std::vector<Complex> b = basis.column(j);
    const Complex c = coordinate_inner(x.coords, b);  // <x, b_j>
    for (std::size_t k = 0; k < n; ++k) {
      re.coords[k] += c.real() * b[k];
      im.coords[k] += c.imag() * b[k];
    }
  }
  return ReImParts{re, im};
}

Ket star_element(const Ket& x, const ComplexMatrix& basis) {
  if (x.space != Space::plain) {
    throw WrongSpaceTag("star_element expects a plain ket");
  }
  check_basis(basis, x.dim());
  const std::size_t n = x.dim();
  Ket out{std::vector<Complex>(n), Space::plain};
  for (std::size_t j = 0; j < n; ++j) {
    const std::vector<Complex> b = basis.column(j);
    const Complex c = std::conj(coordinate_inner(x.coords, b));
    for (std::size_t k = 0; k < n; ++k) out.coords[k] += c * b[k];
  }
  return out;
}

Ket semilinear_conjugation(const Ket& x, const ComplexMatrix& basis) {
  return star_element(x, basis);
}

}  // namespace hilbertkit
