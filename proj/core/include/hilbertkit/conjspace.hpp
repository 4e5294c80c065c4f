#pragma once

#include <vector>

#include "hilbertkit/complex_matrix.hpp"

namespace hilbertkit {

// Which Hilbert space a coordinate vector lives in: H itself, or the
// conjugate space (same point set, conjugated scalar action and inner
// product). Pairing vectors with mismatched tags is a type error.
enum class Space { plain, conjugate };

struct Ket {
  std::vector<Complex> coords;
  Space space = Space::plain;

  std::size_t dim() const { return coords.size(); }
};

Ket make_ket(std::vector<Complex> coords, Space space = Space::plain);

// Linear functional with coefficient row acting on coordinates. A plain
// domain pairs without conjugation; a conjugate domain conjugates the
// argument's coordinates first.
struct Bra {
  std::vector<Complex> coeffs;
  Space domain = Space::plain;

  std::size_t dim() const { return coeffs.size(); }
};

// <x,y>, linear in the FIRST argument; requires equal tags. On the conjugate
// space the value is the conjugate of the plain one.
Complex inner_product(const Ket& x, const Ket& y);
double norm(const Ket& x);

Ket operator+(const Ket& x, const Ket& y);
Ket operator-(const Ket& x, const Ket& y);
// Scalar action of the space: plain kets scale by s, conjugate kets by conj(s).
Ket scale(const Complex& s, const Ket& x);

// The canonical antiunitary J_H: identical coordinates, conjugate tag.
Ket to_conjugate(const Ket& x);
Ket from_conjugate(const Ket& x);

// Dirac bra <y| = <.,y>_H of a plain ket.
Bra dirac_bra(const Ket& y);
// The linear Riesz isomorphism: x maps to the functional on the conjugate
// space with coefficient row x, so apply(riesz_map(x), to_conjugate(y))
// equals <x,y>_H.
Bra riesz_map(const Ket& x);
Complex apply(const Bra& f, const Ket& x);
double norm(const Bra& f);

// Components with respect to the orthonormal basis given by the columns of a
// unitary matrix: x = re + i*im with re = sum Re<x,b_j> b_j.
struct ReImParts {
  Ket re;
  Ket im;
};
ReImParts re_im_parts(const Ket& x, const ComplexMatrix& basis);

// x*_B = sum conj(<x,b_j>) b_j: the basis-dependent conjugate element.
Ket star_element(const Ket& x, const ComplexMatrix& basis);
// The involution J_H^B; coincides with star_element pointwise.
Ket semilinear_conjugation(const Ket& x, const ComplexMatrix& basis);

}  // namespace hilbertkit
