#include "hilbertkit/tensor.hpp"

namespace hilbertkit {

namespace {

ComplexMatrix representative(std::size_t left_dim, std::size_t right_dim,
                             const std::vector<std::pair<Ket, Ket>>& terms) {
  ComplexMatrix rep(right_dim, left_dim);
  for (const auto& [x, y] : terms) {
    for (std::size_t i = 0; i < right_dim; ++i) {
      if (y.coords[i] == Complex{}) continue;
      for (std::size_t j = 0; j < left_dim; ++j) {
        rep(i, j) += y.coords[i] * x.coords[j];
      }
    }
  }
  return rep;
}

}  // namespace

TensorElement::TensorElement(std::size_t left_dim, std::size_t right_dim,
                             std::vector<std::pair<Ket, Ket>> terms)
    : left_dim_(left_dim),
      right_dim_(right_dim),
      terms_(std::move(terms)),
      rep_(1, 1) {
  if (left_dim_ == 0 || right_dim_ == 0) {
    throw InvalidDimension("tensor factor dimensions must be positive");
  }
  for (const auto& [x, y] : terms_) {
    if (x.space != Space::plain || y.space != Space::plain) {
      throw WrongSpaceTag("tensor terms must be plain kets");
    }
    if (x.dim() != left_dim_ || y.dim() != right_dim_) {
      throw DimensionMismatch("tensor term dimension mismatch");
    }
  }
  rep_ = representative(left_dim_, right_dim_, terms_);
}

TensorElement TensorElement::from_matrix(const ComplexMatrix& rep) {
  // rep = sum_j col_j e_j^T, so the columns give one term per basis vector
  const std::size_t n = rep.cols();
  const std::size_t m = rep.rows();
  std::vector<std::pair<Ket, Ket>> terms;
  terms.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Complex> e(n);
    e[j] = 1.0;
    terms.emplace_back(make_ket(std::move(e)), make_ket(rep.column(j)));
  }
  return TensorElement(n, m, std::move(terms));
}

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
  ComplexMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const Complex f = x(i, j);
      if (f == Complex{}) continue;
      for (std::size_t k = 0; k < y.rows(); ++k) {
        for (std::size_t l = 0; l < y.cols(); ++l) {
          out(i * y.rows() + k, j * y.cols() + l) = f * y(k, l);
        }
      }
    }
  }
  return out;
}

Ket kron(const Ket& x, const Ket& y) {
  if (x.space != Space::plain || y.space != Space::plain) {
    throw WrongSpaceTag("kron expects plain kets");
  }
  std::vector<Complex> out(x.dim() * y.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    for (std::size_t k = 0; k < y.dim(); ++k) {
      out[i * y.dim() + k] = x.coords[i] * y.coords[k];
    }
  }
  return make_ket(std::move(out));
}

Ket vec(const ComplexMatrix& a) {
  std::vector<Complex> out;
  out.reserve(a.rows() * a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(a(i, j));
  }
  return make_ket(std::move(out));
}

CommutationMatrix commutation_matrix(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) {
    throw InvalidDimension("commutation matrix needs m, n >= 1");
  }
  // K = sum_{i<m, j<n} (e_j^(n) e_i^(m)T) kron (e_i^(m) e_j^(n)T): entry
  // blocks place a single 1 at block (j,i), inner position (i,j).
  ComplexMatrix k(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      k(j * m + i, i * n + j) = 1.0;
    }
  }
  return CommutationMatrix{m, n, std::move(k)};
}

TensorElement dyad(const Ket& x, const Ket& z) {
  return TensorElement(x.dim(), z.dim(), {{x, z}});
}

Complex tensor_inner(const TensorElement& z1, const TensorElement& z2) {
  if (z1.left_dim() != z2.left_dim() || z1.right_dim() != z2.right_dim()) {
    throw DimensionMismatch("tensor_inner dimension mismatch");
  }
  return frobenius_inner(z1.matrix_rep(), z2.matrix_rep());
}

Ket to_kron_vector(const TensorElement& z) { return vec(z.matrix_rep()); }

ComplexMatrix nfold_kron(const std::vector<ComplexMatrix>& factors) {
  if (factors.empty()) {
    throw EmptyFactorList("nfold_kron of an empty list");
  }
  ComplexMatrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

Ket nfold_kron(const std::vector<Ket>& factors) {
  if (factors.empty()) {
    throw EmptyFactorList("nfold_kron of an empty list");
  }
  Ket out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

}  // namespace hilbertkit
