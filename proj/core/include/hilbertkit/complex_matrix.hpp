#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hilbertkit/errors.hpp"

namespace hilbertkit {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. Immutable-by-convention carrier for
// operators, states and gates; all operations on it are pure functions.
//
// A zero row or column count is allowed only for one side (factorizations of
// the zero matrix produce m x 0 blocks); 0 x 0 is rejected.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Complex& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }

  const std::vector<Complex>& data() const { return data_; }

  std::vector<Complex> column(std::size_t j) const;
  void set_column(std::size_t j, const std::vector<Complex>& v);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const Complex& s, const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);
// tr(b^dagger a): the Frobenius pairing, linear in the first argument.
Complex frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_unitary(const ComplexMatrix& a, double tol);

}  // namespace hilbertkit
