#include "hilbertkit/decompositions.hpp"

#include <gtest/gtest.h>

#include <random>

#include "hilbertkit/errors.hpp"
#include "test_support.hpp"

namespace hilbertkit {
namespace {

using hktest::expect_matrix_near;
using hktest::random_matrix;

const ComplexMatrix kFixedA{
    {Complex(1.0, 2.0), Complex(-0.5, 0.0), Complex(3.0, -1.0)},
    {Complex(0.0, 0.0), Complex(2.5, -2.0), Complex(1.0, 1.0)},
    {Complex(-1.0, 1.0), Complex(0.5, 0.5), Complex(-2.0, 0.0)},
    {Complex(2.0, -3.0), Complex(1.5, 1.0), Complex(0.0, 4.0)}};

void expect_orthonormal_columns(const ComplexMatrix& u, double tol) {
  if (u.cols() == 0) return;
  const ComplexMatrix g = matmul(adjoint(u), u);
  EXPECT_LE(frobenius_norm(g - ComplexMatrix::identity(u.cols())), tol);
}

ComplexMatrix svd_product(const SvdResult& f) {
  ComplexMatrix mid = f.left;
  for (std::size_t j = 0; j < f.singulars.size(); ++j) {
    std::vector<Complex> c = mid.column(j);
    for (Complex& z : c) z *= f.singulars[j];
    mid.set_column(j, c);
  }
  return matmul(mid, adjoint(f.right));
}

TEST(Svd, FixedComplexSingularValues) {
  const SvdResult f = svd(kFixedA);
  ASSERT_EQ(f.rank, 3u);
  ASSERT_EQ(f.singulars.size(), 3u);
  EXPECT_NEAR(f.singulars[0], 6.607178234606245, 1e-10);
  EXPECT_NEAR(f.singulars[1], 3.8697769959631962, 1e-10);
  EXPECT_NEAR(f.singulars[2], 2.7604386929724707, 1e-10);

  expect_orthonormal_columns(f.left, 1e-10);
  expect_orthonormal_columns(f.right, 1e-10);
  const double fro = frobenius_norm(kFixedA);
  EXPECT_LE(frobenius_norm(svd_product(f) - kFixedA), 1e-9 * fro);

  double sq = 0.0;
  for (double s : f.singulars) sq += s * s;
  EXPECT_NEAR(std::sqrt(sq), fro, 1e-10 * fro);
}

TEST(Svd, ZeroMatrixHasRankZero) {
  const SvdResult f = svd(ComplexMatrix(3, 2));
  EXPECT_EQ(f.rank, 0u);
  EXPECT_TRUE(f.singulars.empty());
  EXPECT_EQ(f.left.rows(), 3u);
  EXPECT_EQ(f.left.cols(), 0u);
  EXPECT_EQ(f.right.rows(), 2u);
  EXPECT_EQ(f.right.cols(), 0u);
}

TEST(Svd, RankDeficientTruncates) {
  const ComplexMatrix a{{1.0, 2.0}, {2.0, 4.0}};
  const SvdResult f = svd(a);
  ASSERT_EQ(f.rank, 1u);
  EXPECT_NEAR(f.singulars[0], 5.0, 1e-12);
  EXPECT_LE(frobenius_norm(svd_product(f) - a), 1e-12);
}

TEST(Svd, RandomReconstructionAndOrdering) {
  std::mt19937_64 rng(101);
  const std::pair<std::size_t, std::size_t> shapes[] = {
      {1, 1}, {2, 5}, {5, 2}, {8, 8}, {16, 12}, {32, 32}};
  for (const auto& [m, n] : shapes) {
    const ComplexMatrix a = random_matrix(rng, m, n);
    const SvdResult f = svd(a);
    const double fro = frobenius_norm(a);
    EXPECT_LE(frobenius_norm(svd_product(f) - a), 1e-9 * fro);
    expect_orthonormal_columns(f.left, 1e-10);
    expect_orthonormal_columns(f.right, 1e-10);
    for (std::size_t k = 1; k < f.singulars.size(); ++k) {
      EXPECT_LE(f.singulars[k], f.singulars[k - 1]);
    }
    EXPECT_GT(f.singulars.back(), 0.0);
  }
}

TEST(Svd, ScaleInvariantConvergence) {
  std::mt19937_64 rng(102);
  const ComplexMatrix a = random_matrix(rng, 6, 6);
  const SvdResult base = svd(a);
  for (double scale : {1e-6, 1e6}) {
    const SvdResult f = svd(Complex(scale) * a);
    ASSERT_EQ(f.rank, base.rank);
    for (std::size_t k = 0; k < f.singulars.size(); ++k) {
      EXPECT_NEAR(f.singulars[k], scale * base.singulars[k],
                  1e-9 * scale * base.singulars[0]);
    }
  }
}

TEST(Svd, DuplicatedColumnsConverge) {
  std::mt19937_64 rng(103);
  ComplexMatrix a = random_matrix(rng, 5, 4);
  a.set_column(2, a.column(1));
  a.set_column(3, a.column(1));
  const SvdResult f = svd(a);
  EXPECT_EQ(f.rank, 2u);
  EXPECT_LE(frobenius_norm(svd_product(f) - a), 1e-9 * frobenius_norm(a));
}

TEST(HermitianEig, FixedMatrix) {
  const ComplexMatrix b{
      {Complex(2.0, 0.0), Complex(1.0, -1.0), Complex(0.0, 0.5),
       Complex(-1.0, 0.0)},
      {Complex(1.0, 1.0), Complex(-1.0, 0.0), Complex(2.0, 0.0),
       Complex(0.0, -2.0)},
      {Complex(0.0, -0.5), Complex(2.0, 0.0), Complex(0.5, 0.0),
       Complex(1.0, 1.0)},
      {Complex(-1.0, 0.0), Complex(0.0, 2.0), Complex(1.0, -1.0),
       Complex(3.0, 0.0)}};
  const HermitianEig e = hermitian_eig(b);
  ASSERT_EQ(e.eigenvalues.size(), 4u);
  EXPECT_NEAR(e.eigenvalues[0], 4.724524736056354, 1e-10);
  EXPECT_NEAR(e.eigenvalues[1], 2.4867234465700623, 1e-10);
  EXPECT_NEAR(e.eigenvalues[2], 0.7143564840513069, 1e-10);
  EXPECT_NEAR(e.eigenvalues[3], -3.4256046666777253, 1e-10);

  EXPECT_TRUE(is_unitary(e.eigenvectors, 1e-10));
  ComplexMatrix vd = e.eigenvectors;
  for (std::size_t j = 0; j < 4; ++j) {
    std::vector<Complex> c = vd.column(j);
    for (Complex& z : c) z *= e.eigenvalues[j];
    vd.set_column(j, c);
  }
  EXPECT_LE(frobenius_norm(matmul(b, e.eigenvectors) - vd),
            1e-10 * frobenius_norm(b));
}

TEST(HermitianEig, RejectsNonHermitian) {
  EXPECT_THROW(hermitian_eig(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}),
               NotHermitian);
  EXPECT_THROW(hermitian_eig(ComplexMatrix(2, 3)), NotSquare);
}

TEST(HermitianEig, TraceAndRayleighConsistency) {
  std::mt19937_64 rng(104);
  const ComplexMatrix g = random_matrix(rng, 6, 6);
  const ComplexMatrix h = Complex(0.5) * (g + adjoint(g));
  const HermitianEig e = hermitian_eig(h);
  double sum = 0.0;
  for (double v : e.eigenvalues) sum += v;
  EXPECT_NEAR(sum, trace(h).real(), 1e-10 * (1.0 + frobenius_norm(h)));
}

TEST(Polar, FixedRealMatrix) {
  const PolarDecomposition p = polar(ComplexMatrix{{0.0, -2.0}, {1.0, 0.0}});
  expect_matrix_near(p.w, ComplexMatrix{{0.0, -1.0}, {1.0, 0.0}}, 1e-12);
  expect_matrix_near(p.abs, ComplexMatrix{{1.0, 0.0}, {0.0, 2.0}}, 1e-12);
}

TEST(Polar, FixedComplexRectangular) {
  const ComplexMatrix d{{Complex(1.0, 1.0), 0.0},
                        {0.0, Complex(2.0, -1.0)},
                        {1.0, Complex(0.0, 1.0)}};
  const PolarDecomposition p = polar(d);
  ASSERT_EQ(p.w.rows(), 3u);
  ASSERT_EQ(p.w.cols(), 2u);
  ASSERT_EQ(p.abs.rows(), 2u);
  const ComplexMatrix expected_abs{
      {Complex(1.7152306696462212, 0.0), Complex(0.0, 0.24079815178895203)},
      {Complex(0.0, -0.24079815178895203), Complex(2.437625125013078, 0.0)}};
  expect_matrix_near(p.abs, expected_abs, 1e-10);
  EXPECT_LE(frobenius_norm(matmul(p.w, p.abs) - d), 1e-10);
  expect_orthonormal_columns(p.w, 1e-10);
}

TEST(Polar, RandomFactorsAreConsistent) {
  std::mt19937_64 rng(105);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + rng() % 5;
    const std::size_t m = n + rng() % 3;
    const ComplexMatrix a = random_matrix(rng, m, n);
    const PolarDecomposition p = polar(a);
    const double fro = frobenius_norm(a);
    EXPECT_LE(frobenius_norm(matmul(p.w, p.abs) - a), 1e-9 * fro);
    EXPECT_TRUE(is_psd(p.abs, 1e-9));
    // w acts isometrically on the range of |a|
    const ComplexMatrix g = matmul(adjoint(p.w), p.w);
    EXPECT_LE(frobenius_norm(matmul(g, p.abs) - p.abs), 1e-8 * (1.0 + fro));
  }
}

TEST(IsPsd, Classification) {
  EXPECT_TRUE(is_psd(ComplexMatrix::identity(3), 1e-12));
  EXPECT_TRUE(is_psd(ComplexMatrix(2, 2), 1e-12));
  EXPECT_FALSE(is_psd(ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}, 1e-12));
  EXPECT_FALSE(is_psd(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}, 1e-12));
  EXPECT_THROW(is_psd(ComplexMatrix(2, 3), 1e-12), NotSquare);
}

TEST(OperatorNorm, Values) {
  EXPECT_NEAR(operator_norm(ComplexMatrix{{3.0, 0.0}, {0.0, 4.0}}), 4.0, 1e-12);
  EXPECT_EQ(operator_norm(ComplexMatrix(3, 3)), 0.0);
  std::mt19937_64 rng(106);
  const ComplexMatrix a = random_matrix(rng, 5, 7);
  EXPECT_LE(operator_norm(a), frobenius_norm(a) + 1e-12);
}

}  // namespace
}  // namespace hilbertkit
