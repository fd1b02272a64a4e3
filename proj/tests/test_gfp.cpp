#include <gtest/gtest.h>

#include "verlinde/errors.hpp"
#include "verlinde/gfp.hpp"
#include "verlinde/random.hpp"

using namespace verlinde;
using gfp::Matrix;

namespace {

Matrix random_matrix(Rng& rng, int p, std::size_t rows, std::size_t cols, int zero_bias = 0) {
  Matrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rng.below(static_cast<std::uint64_t>(zero_bias + 1)) == 0
                    ? static_cast<gfp::Element>(rng.below(static_cast<std::uint64_t>(p)))
                    : 0;
  return m;
}

}  // namespace

TEST(Field, Arithmetic) {
  for (int p : {2, 3, 5, 7, 251}) {
    const auto& f = gfp::Field::get(p);
    for (int a = 0; a < std::min(p, 40); ++a) {
      EXPECT_EQ(f.add(static_cast<gfp::Element>(a), f.neg(static_cast<gfp::Element>(a))), 0);
      if (a != 0) EXPECT_EQ(f.mul(static_cast<gfp::Element>(a), f.inv(static_cast<gfp::Element>(a))), 1);
    }
    EXPECT_EQ(f.from_int(-1), p - 1);
    EXPECT_EQ(f.from_int(p * 7 + 2), 2 % p);
  }
  EXPECT_THROW(gfp::Field::get(3).inv(0), InvalidArgument);
  EXPECT_THROW(gfp::Field::get(4), InvalidArgument);
}

TEST(GfpMatrix, SmallProducts) {
  const Matrix a(3, 2, 2, {1, 2, 0, 1});
  const Matrix b(3, 2, 2, {1, 1, 1, 0});
  EXPECT_EQ(a * b, Matrix(3, 2, 2, {0, 1, 1, 0}));
  EXPECT_EQ(a + b, Matrix(3, 2, 2, {2, 0, 1, 1}));
  EXPECT_EQ(gfp::power(a, 3), Matrix::identity(3, 2));  // (1 2; 0 1)^3 = (1 6; 0 1)
  EXPECT_EQ(gfp::power(a, 0), Matrix::identity(3, 2));
}

TEST(GfpMatrix, PackedRankAgreesWithGenericRank) {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng.below(130);
    const std::size_t cols = 1 + rng.below(130);
    const Matrix m = random_matrix(rng, 2, rows, cols, static_cast<int>(rng.below(4)));
    EXPECT_EQ(gfp::rank(m), gfp::rank_generic(m)) << rows << "x" << cols;
  }
}

TEST(GfpMatrix, RankNullity) {
  Rng rng(43);
  for (int p : {2, 3, 5, 7}) {
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t rows = 1 + rng.below(12);
      const std::size_t cols = 1 + rng.below(12);
      const Matrix m = random_matrix(rng, p, rows, cols, 1);
      const Matrix k = gfp::kernel(m);
      EXPECT_EQ(gfp::rank(m) + k.rows(), cols);
      EXPECT_TRUE((m * k.transpose()).is_zero());
      const Matrix lk = gfp::left_kernel(m);
      EXPECT_EQ(gfp::rank(m) + lk.rows(), rows);
      EXPECT_TRUE((lk * m).is_zero());
      EXPECT_EQ(gfp::rank(m), gfp::rank(m.transpose()));
    }
  }
}

TEST(GfpMatrix, RrefIsReduced) {
  Rng rng(47);
  for (int p : {3, 5}) {
    Matrix m = random_matrix(rng, p, 6, 9, 1);
    const std::size_t r = gfp::rank(m);
    const auto pivots = gfp::rref(m);
    ASSERT_EQ(pivots.size(), r);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      EXPECT_EQ(m(i, pivots[i]), 1);
      for (std::size_t other = 0; other < m.rows(); ++other)
        if (other != i) EXPECT_EQ(m(other, pivots[i]), 0);
    }
  }
}

TEST(GfpMatrix, Inverse) {
  Rng rng(53);
  for (int p : {2, 3, 7}) {
    for (std::size_t n : {0u, 1u, 4u, 9u}) {
      const Matrix m = random_invertible(rng, p, n);
      EXPECT_EQ(m * gfp::inverse(m), Matrix::identity(p, n));
      EXPECT_EQ(gfp::inverse(m) * m, Matrix::identity(p, n));
    }
  }
  EXPECT_THROW(gfp::inverse(Matrix(3, 2, 2)), InvalidArgument);
}

TEST(GfpMatrix, KroneckerIsMultiplicative) {
  Rng rng(59);
  const Matrix a = random_matrix(rng, 5, 2, 3);
  const Matrix b = random_matrix(rng, 5, 3, 2);
  const Matrix c = random_matrix(rng, 5, 3, 2);
  const Matrix d = random_matrix(rng, 5, 2, 3);
  EXPECT_EQ(gfp::kronecker(a, b) * gfp::kronecker(c, d), gfp::kronecker(a * c, b * d));
  EXPECT_EQ(gfp::kronecker(a, b).rows(), 6u);
  EXPECT_EQ(gfp::kronecker(a, b).cols(), 6u);
}

TEST(GfpMatrix, SparseRowsApply) {
  Rng rng(61);
  const Matrix m = random_matrix(rng, 7, 10, 8, 2);
  const gfp::SparseRows s(m);
  const auto& f = gfp::Field::get(7);
  gfp::Vector x(8);
  for (auto& e : x) e = static_cast<gfp::Element>(rng.below(7));
  gfp::Vector y(10, 0);
  s.apply(f, x, y);
  EXPECT_EQ(y, m * std::span<const gfp::Element>(x));
}

TEST(EchelonBasis, CoordinatesReconstructVectors) {
  Rng rng(67);
  for (int p : {2, 3, 5}) {
    gfp::EchelonBasis basis(p, 10);
    std::vector<gfp::Vector> inserted;
    for (int k = 0; k < 6; ++k) {
      gfp::Vector v(10);
      for (auto& e : v) e = static_cast<gfp::Element>(rng.below(static_cast<std::uint64_t>(p)));
      basis.insert(v);
      inserted.push_back(v);
    }
    EXPECT_EQ(basis.rank(), gfp::rank(Matrix::from_rows(p, inserted, 10)));
    EXPECT_EQ(basis.free_columns().size() + basis.rank(), 10u);
    const auto& f = gfp::Field::get(p);
    for (const auto& v : inserted) {
      ASSERT_TRUE(basis.contains(v));
      const auto c = basis.coordinates(v);
      gfp::Vector back(10, 0);
      for (std::size_t k = 0; k < c.size(); ++k) gfp::axpy(f, c[k], basis.rows()[k], back);
      EXPECT_EQ(back, v);
    }
    EXPECT_FALSE(basis.insert(inserted.front()));
  }
}

TEST(EchelonBasis, RejectsOutsideVectors) {
  gfp::EchelonBasis basis(3, 3);
  basis.insert({1, 0, 0});
  basis.insert({0, 1, 0});
  EXPECT_FALSE(basis.contains({0, 0, 1}));
  EXPECT_TRUE(basis.contains({2, 1, 0}));
  EXPECT_EQ(basis.free_columns(), std::vector<std::size_t>{2});
}
