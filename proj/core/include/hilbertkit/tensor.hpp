#pragma once

#include <utility>
#include <vector>

#include "hilbertkit/complex_matrix.hpp"
#include "hilbertkit/conjspace.hpp"

namespace hilbertkit {

// Element of C^n (x) C^m, stored as a finite sum of elementary tensors
// x_k (x) y_k together with its canonical matrix representative
// sum_k y_k * x_k^T in M_{m,n}(C). Two term lists with the same
// representative are the same element; the Frobenius norm of the
// representative is the tensor norm.
class TensorElement {
 public:
  TensorElement(std::size_t left_dim, std::size_t right_dim,
                std::vector<std::pair<Ket, Ket>> terms);

  static TensorElement from_matrix(const ComplexMatrix& rep);

  std::size_t left_dim() const { return left_dim_; }
  std::size_t right_dim() const { return right_dim_; }
  const std::vector<std::pair<Ket, Ket>>& terms() const { return terms_; }
  const ComplexMatrix& matrix_rep() const { return rep_; }

  double norm() const { return frobenius_norm(rep_); }

 private:
  std::size_t left_dim_;
  std::size_t right_dim_;
  std::vector<std::pair<Ket, Ket>> terms_;
  ComplexMatrix rep_;
};

// Permutation matrix with K * (y kron x) = x kron y for x in C^n, y in C^m.
struct CommutationMatrix {
  std::size_t m;
  std::size_t n;
  ComplexMatrix matrix;  // mn x mn, entries 0/1
};

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y);
Ket kron(const Ket& x, const Ket& y);

// Column stacking; vec(y x^T) = x kron y and ||vec(a)|| = ||a||_F.
Ket vec(const ComplexMatrix& a);

CommutationMatrix commutation_matrix(std::size_t m, std::size_t n);

// Single elementary tensor x (x) z with representative z * x^T.
TensorElement dyad(const Ket& x, const Ket& z);

// tr(rep(z2)^dagger rep(z1)): linear in the first slot; on elementary
// tensors it factorizes as <x1,x2> * <z1,z2>.
Complex tensor_inner(const TensorElement& z1, const TensorElement& z2);

// The isometry onto C^{nm}: vec of the representative.
Ket to_kron_vector(const TensorElement& z);

ComplexMatrix nfold_kron(const std::vector<ComplexMatrix>& factors);
Ket nfold_kron(const std::vector<Ket>& factors);

}  // namespace hilbertkit
