#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "verlinde/dimensions.hpp"
#include "verlinde/errors.hpp"
#include "verlinde/random.hpp"

using namespace verlinde;

namespace {

VerObject L(int p, int i) { return VerObject::simple(p, i); }
JordanType J(int p, std::vector<std::uint64_t> blocks) { return JordanType(p, std::move(blocks)); }
CyclicRep rep(const JordanType& t) { return CyclicRep::from_jordan_type(t); }

double value(const CycNum& x) { return numeric_eval(x).midpoint_double(); }

double sine_ratio(int p, double k) { return std::sin(k * std::numbers::pi / p) / std::sin(std::numbers::pi / p); }

// Polynomial product mod p, used to build series from digits independently.
std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b, int p) {
  std::vector<long long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

std::vector<long long> series_oracle(int p, const std::vector<int>& digits) {
  std::vector<long long> s{1};
  long long step = 1;
  for (int t : digits) {
    std::vector<long long> factor(static_cast<std::size_t>(step) + 1, 0);
    factor.front() = 1;
    factor.back() = 1;
    for (int k = 0; k < t; ++k) s = poly_mul(s, factor, p);
    step *= p;
  }
  return s;
}

}  // namespace

TEST(Ad, Examples) {
  for (int p : {3, 5})
    for (int i = 1; i < p; ++i) EXPECT_EQ(ad(L(p, i)), std::optional<std::uint64_t>(static_cast<std::uint64_t>(i)));
  EXPECT_EQ(ad(L(3, 1) + L(3, 2)), std::optional<std::uint64_t>(3));
  EXPECT_EQ(ad(VerObject(5)), std::nullopt);
  EXPECT_EQ(ad(L(7, 1)), std::optional<std::uint64_t>(1));
}

TEST(Ad, EqualsLiftDimension) {
  Rng rng(151);
  for (int p : {3, 5}) {
    for (int trial = 0; trial < 10; ++trial) {
      const VerObject x = random_ver_object(rng, p, 1);
      if (x.is_zero() || x.lift_dim() > 6) continue;
      EXPECT_EQ(ad(x), std::optional<std::uint64_t>(x.lift_dim())) << x.to_string();
    }
  }
}

TEST(Ad, ConcreteModules) {
  EXPECT_EQ(ad_rep(CyclicRep::trivial(3, 3)), std::optional<std::uint64_t>(3));
  EXPECT_EQ(ad_rep(rep(J(3, {0, 1, 0}))), std::optional<std::uint64_t>(2));
  EXPECT_EQ(ad_rep(rep(J(2, {0, 1}))), std::optional<std::uint64_t>(2));
  EXPECT_EQ(ad_rep(CyclicRep::trivial(3, 0)), std::nullopt);
}

TEST(Gd, IsFpdim) {
  EXPECT_EQ(gd(L(5, 2)), qint(5, 2));
  EXPECT_NEAR(value(gd(L(5, 2))), (1 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_EQ(gd(L(7, 1)), qint(7, 1));
}

TEST(Gd, EmpiricalConvergence) {
  const auto seq = gd_empirical(L(5, 2), 25);
  ASSERT_EQ(seq.size(), 25u);
  EXPECT_NEAR(seq.back(), (1 + std::sqrt(5.0)) / 2, 0.05);
  const auto unit = gd_empirical(L(5, 1), 10);
  for (double d : unit) EXPECT_DOUBLE_EQ(d, 1.0);
}

TEST(Sd, TrivialModules) {
  for (int p : {2, 3}) {
    for (std::size_t m = 1; m <= 3; ++m) {
      const CyclicRep v = CyclicRep::trivial(p, m);
      for (unsigned n = 1; n <= 4; ++n) EXPECT_EQ(sd_at_least(v, n), n <= m) << p << " " << m << " " << n;
    }
  }
  EXPECT_THROW(sd_at_least(CyclicRep::trivial(2, 1), 6), InvalidArgument);
}

TEST(Sd, BoundedByAd) {
  for (int p : {2, 3}) {
    for (std::uint64_t d = 1; d <= 3; ++d) {
      for (const auto& t : jordan_types_of_dim(p, d)) {
        const CyclicRep v = rep(t);
        const auto a = ad_rep(v);
        ASSERT_TRUE(a.has_value());
        for (unsigned n = 1; n <= 3; ++n)
          if (sd_at_least(v, n)) EXPECT_LE(n, *a) << t.to_string();
      }
    }
  }
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta(J(5, {0, 1, 0, 0, 0})), qint(5, 2));
  EXPECT_NEAR(value(delta(J(5, {0, 1, 0, 0, 0}))), (1 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_EQ(delta(J(3, {0, 1, 0})), CycNum::integer(3, 1));
  EXPECT_TRUE(delta(J(5, {0, 0, 0, 0, 4})).is_zero());
  EXPECT_EQ(delta_content(J(5, {1, 2, 0, 3, 9})), (JordanContent{5, {1, 2, 0, 3}}));
}

TEST(Delta, Multiplicative) {
  Rng rng(157);
  for (int p : {3, 5, 7}) {
    for (int trial = 0; trial < 10; ++trial) {
      const CyclicRep v = random_realization(rng, random_jordan_type(rng, p, 8));
      const CyclicRep w = random_realization(rng, random_jordan_type(rng, p, 8));
      EXPECT_EQ(delta(jordan_type_of(tensor(v, w))), delta(jordan_type_of(v)) * delta(jordan_type_of(w)));
    }
  }
}

TEST(Delta, SecondIdentity) {
  // S^2 J_2 = J_3 and wedge^2 J_2 = J_1, so the left side is [3] - 1 = [2] - 1 at p = 5
  const CycNum lhs = delta_second_oracle(rep(J(5, {0, 1, 0, 0, 0})));
  EXPECT_EQ(lhs, qint(5, 2) - qint(5, 1));
  EXPECT_EQ(lhs, delta_square_twist(JordanContent{5, {0, 1, 0, 0}}));
  Rng rng(163);
  for (int p : {3, 5}) {
    for (int trial = 0; trial < 8; ++trial) {
      const JordanType t = random_jordan_type(rng, p, 6);
      EXPECT_EQ(delta_second_oracle(random_realization(rng, t)), delta_square_twist(delta_content(t))) << t.to_string();
    }
  }
}

TEST(QintAtSquare, MatchesSineOracle) {
  for (int p : {3, 5, 7, 11})
    for (long long k = 0; k < 2 * p; ++k)
      EXPECT_NEAR(value(qint_at_square(p, k)), sine_ratio(p, 2.0 * k) / sine_ratio(p, 2.0), 1e-9) << p << " " << k;
}

TEST(Recover, Examples) {
  EXPECT_EQ(recover_jordan_content(5, qint(5, 2), qint(5, 2) - qint(5, 1)), (JordanContent{5, {0, 1, 0, 0}}));
  EXPECT_EQ(recover_jordan_content(3, CycNum::integer(3, 1), CycNum::integer(3, 1)), (JordanContent{3, {1, 0}}));
  EXPECT_EQ(recover_jordan_content(5, CycNum(5), CycNum(5)), (JordanContent{5, {0, 0, 0, 0}}));
  EXPECT_THROW(recover_jordan_content(2, CycNum(2), CycNum(2)), InvalidArgument);
  EXPECT_THROW(recover_jordan_content(5, qint(5, 2), CycNum(5)), InconsistentInput);
  EXPECT_THROW(recover_jordan_content(5, CycNum::integer(5, -1), CycNum::integer(5, -1)), InconsistentInput);
}

TEST(Recover, RoundTrip) {
  Rng rng(167);
  for (int p : {3, 5, 7, 11}) {
    for (int trial = 0; trial < 20; ++trial) {
      JordanContent c{p, std::vector<std::uint64_t>(static_cast<std::size_t>(p - 1))};
      for (auto& m : c.m) m = rng.below(4);
      JordanType t(p);
      for (int k = 1; k < p; ++k) t[k] = c.m[static_cast<std::size_t>(k - 1)];
      EXPECT_EQ(recover_jordan_content(p, delta(t), delta_square_twist(c)), c);
    }
  }
}

TEST(Padic, Examples) {
  const PadicDim a = padic_dimension(3, {1, 2, 1});
  EXPECT_EQ(a.digits, std::vector<int>{2});
  EXPECT_EQ(a.value, 2);
  const PadicDim b = padic_dimension(3, {1, 0, 0, 1});
  EXPECT_EQ(b.digits, (std::vector<int>{0, 1}));
  EXPECT_EQ(b.value, 3);
  EXPECT_EQ(padic_dimension(5, {1}).value, 0);
  EXPECT_THROW(padic_dimension(3, {0, 1}), InvalidArgument);
  EXPECT_THROW(padic_dimension(3, {1, 0, 1}), InvalidArgument);
}

TEST(Padic, OfObjects) {
  EXPECT_EQ(alt_dimension_series(L(3, 2)), (std::vector<long long>{1, 2, 1}));
  EXPECT_EQ(padic_dimension_of(L(3, 2)).value, 2);
  EXPECT_EQ(padic_dimension_of(L(5, 1)).value, 1);
  EXPECT_EQ(padic_dimension_of(L(3, 1) + L(3, 2)).value, 3);
  EXPECT_EQ(padic_dimension_of(L(5, 3) + L(5, 2)).value, 5);
}

TEST(Padic, RoundTrip) {
  Rng rng(173);
  for (int p : {2, 3, 5, 7}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<int> digits(1 + rng.below(3));
      for (auto& d : digits) d = static_cast<int>(rng.below(static_cast<std::uint64_t>(p)));
      const auto series = series_oracle(p, digits);
      EXPECT_EQ(series_from_digits(p, digits), series);
      while (!digits.empty() && digits.back() == 0) digits.pop_back();
      const PadicDim d = padic_dimension(p, series);
      EXPECT_EQ(d.digits, digits);
      mpz_class v = 0, pk = 1;
      for (int t : digits) {
        v += pk * t;
        pk *= p;
      }
      EXPECT_EQ(d.value, v);
    }
  }
}
