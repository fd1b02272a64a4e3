#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "verlinde/cyclotomic.hpp"
#include "verlinde/errors.hpp"
#include "verlinde/random.hpp"

using namespace verlinde;

namespace {

// sin(k pi / p) / sin(pi / p), straight from the definition.
long double sine_ratio(int p, long long k) {
  const long double pi = std::numbers::pi_v<long double>;
  return std::sin(static_cast<long double>(k) * pi / p) / std::sin(pi / p);
}

long double oracle_value(const CycNum& x) {
  long double s = 0;
  for (std::size_t m = 1; m <= x.coeffs().size(); ++m) s += static_cast<long double>(x.coeff(m).get_si()) * sine_ratio(x.p(), static_cast<long long>(m));
  return s;
}

CycNum random_cycnum(Rng& rng, int p, long long bound) {
  std::vector<mpz_class> c;
  for (std::size_t m = 0; m < CycNum::basis_size(p); ++m) c.emplace_back(static_cast<long>(rng.between(-bound, bound)));
  return CycNum(p, c);
}

CycNum basis(int p, std::size_t m) { return qint(p, static_cast<long long>(m)); }

const int kPrimes[] = {2, 3, 5, 7, 11, 13};

}  // namespace

TEST(Cyclotomic, BasisSize) {
  EXPECT_EQ(CycNum::basis_size(2), 1u);
  EXPECT_EQ(CycNum::basis_size(3), 1u);
  EXPECT_EQ(CycNum::basis_size(5), 2u);
  EXPECT_EQ(CycNum::basis_size(7), 3u);
  EXPECT_EQ(CycNum::basis_size(13), 6u);
}

TEST(Cyclotomic, QintExamples) {
  EXPECT_EQ(qint(5, 2), CycNum(5, {0, 1}));
  EXPECT_NEAR(static_cast<double>(oracle_value(qint(5, 2))), (1 + std::sqrt(5.0)) / 2, 1e-15);
  EXPECT_TRUE(qint(7, 7).is_zero());
  EXPECT_EQ(qint(5, 4), CycNum(5, {1, 0}));
  EXPECT_EQ(qint(5, 0), CycNum(5));
  EXPECT_EQ(qint(5, -2), -qint(5, 2));
  EXPECT_EQ(qint(5, 6), -qint(5, 1));
}

TEST(Cyclotomic, QintMatchesSineRatio) {
  for (int p : kPrimes) {
    for (long long k = -40; k <= 40; ++k) {
      EXPECT_NEAR(static_cast<double>(oracle_value(qint(p, k))), static_cast<double>(sine_ratio(p, k)), 1e-12) << "p=" << p << " k=" << k;
    }
  }
}

TEST(Cyclotomic, ProductExamples) {
  EXPECT_EQ(basis(7, 2) * basis(7, 2), basis(7, 1) + basis(7, 3));
  EXPECT_EQ(qint(5, 4) * qint(5, 4), basis(5, 1));
  Rng rng(3);
  for (int p : kPrimes) {
    const CycNum x = random_cycnum(rng, p, 9);
    EXPECT_EQ(basis(p, 1) * x, x);
    EXPECT_EQ(mul(x, basis(p, 1)), x);
  }
}

// Frozen products checked once against the sine oracle.
TEST(Cyclotomic, FrozenProducts) {
  EXPECT_EQ(basis(7, 3) * basis(7, 3), CycNum(7, {1, 1, 1}));
  EXPECT_EQ(basis(11, 4) * basis(11, 5), CycNum(11, {0, 1, 1, 1, 1}));
  EXPECT_EQ(basis(13, 6) * basis(13, 6), CycNum(13, {1, 1, 1, 1, 1, 1}));
  EXPECT_NEAR(static_cast<double>(oracle_value(basis(11, 4) * basis(11, 5))), static_cast<double>(sine_ratio(11, 4) * sine_ratio(11, 5)), 1e-12);
}

TEST(Cyclotomic, RingAxioms) {
  Rng rng(11);
  for (int p : kPrimes) {
    for (int trial = 0; trial < 20; ++trial) {
      const CycNum a = random_cycnum(rng, p, 6);
      const CycNum b = random_cycnum(rng, p, 6);
      const CycNum c = random_cycnum(rng, p, 6);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a - a, CycNum(p));
      EXPECT_NEAR(static_cast<double>(oracle_value(a * b)), static_cast<double>(oracle_value(a) * oracle_value(b)), 1e-9);
    }
  }
}

TEST(Cyclotomic, ExactDivision) {
  const CycNum four_over_two = exact_div(qint(7, 4), qint(7, 2));
  EXPECT_EQ(four_over_two * qint(7, 2), qint(7, 4));
  EXPECT_NEAR(static_cast<double>(oracle_value(four_over_two)), static_cast<double>(sine_ratio(7, 4) / sine_ratio(7, 2)), 1e-12);
  // frozen from the oracle above
  EXPECT_EQ(four_over_two, CycNum(7, {-1, 0, 1}));

  EXPECT_EQ(exact_div(basis(5, 2), basis(5, 2)), basis(5, 1));
  Rng rng(5);
  for (int p : kPrimes) {
    const CycNum x = random_cycnum(rng, p, 20);
    EXPECT_EQ(exact_div(x, basis(p, 1)), x);
  }
}

TEST(Cyclotomic, ExactDivisionRoundTrip) {
  Rng rng(17);
  for (int p : kPrimes) {
    for (int trial = 0; trial < 15; ++trial) {
      const CycNum a = random_cycnum(rng, p, 5);
      const CycNum b = random_cycnum(rng, p, 5);
      if (b.is_zero()) continue;
      EXPECT_EQ(exact_div(a * b, b), a) << "p=" << p;
    }
  }
}

TEST(Cyclotomic, ExactDivisionErrors) {
  EXPECT_THROW(exact_div(basis(5, 1), CycNum(5)), InvalidArgument);
  EXPECT_THROW(exact_div(basis(5, 1), CycNum::integer(5, 2)), NotDivisible);
  EXPECT_THROW(exact_div(basis(5, 1), basis(7, 1)), InvalidArgument);
}

TEST(Cyclotomic, QintAtPower) {
  const CycNum a = qint_at_power(5, 2, 2);
  EXPECT_NEAR(static_cast<double>(oracle_value(a)), static_cast<double>(sine_ratio(5, 4) / sine_ratio(5, 2)), 1e-12);
  EXPECT_NEAR(static_cast<double>(oracle_value(a)), 0.6180339887498949, 1e-12);
  EXPECT_EQ(a, CycNum(5, {-1, 1}));

  const CycNum b = qint_at_power(5, 3, 3);
  EXPECT_NEAR(static_cast<double>(oracle_value(b)), static_cast<double>(sine_ratio(5, 9) / sine_ratio(5, 3)), 1e-12);

  for (int p : {3, 5, 7, 11}) {
    for (long long e : {1LL, 3LL, 5LL, 7LL}) {
      if (std::gcd(e, 2LL * p) != 1) continue;
      EXPECT_EQ(qint_at_power(p, 1, e), basis(p, 1));
    }
  }
  EXPECT_NEAR(static_cast<double>(oracle_value(qint_at_power(7, 3, 4))), static_cast<double>(sine_ratio(7, 12) / sine_ratio(7, 4)), 1e-12);
  EXPECT_THROW(qint_at_power(5, 2, 5), InvalidArgument);
  EXPECT_THROW(qint_at_power(5, 2, 0), InvalidArgument);
}

TEST(Cyclotomic, GaloisTwistIsRingHomomorphism) {
  Rng rng(23);
  for (int p : {5, 7, 11, 13}) {
    for (long long e = 1; e < 4 * p; e += 2) {
      if (std::gcd(e, 2LL * p) != 1) continue;
      const CycNum a = random_cycnum(rng, p, 4);
      const CycNum b = random_cycnum(rng, p, 4);
      EXPECT_EQ(galois_twist(a * b, e), galois_twist(a, e) * galois_twist(b, e));
      EXPECT_EQ(galois_twist(a + b, e), galois_twist(a, e) + galois_twist(b, e));
      // q -> q^e sends [m]_q to [m]_{q^e} = [em]/[e]
      EXPECT_EQ(galois_twist(basis(p, 2), e), qint_at_power(p, 2, e));
    }
  }
}

TEST(Cyclotomic, NumericEnclosures) {
  EXPECT_NEAR(numeric_eval(basis(5, 2)).midpoint_double(), 1.6180339887498949, 1e-15);
  EXPECT_NEAR(numeric_eval(basis(7, 2)).midpoint_double(), 1.8019377358048383, 1e-15);
  EXPECT_NEAR(numeric_eval(basis(7, 3)).midpoint_double(), 2.2469796037174667, 1e-15);
  const RealInterval coarse = numeric_eval(basis(7, 3), 32);
  EXPECT_LE(coarse.lower_double(), coarse.upper_double());
  EXPECT_LE(coarse.width_double(), std::ldexp(1.0, -31) * 3.25);
  EXPECT_NEAR(coarse.midpoint_double(), 2.2469796037174667, 1e-9);
  EXPECT_THROW(numeric_eval(basis(7, 3), 8), InvalidArgument);
  const RealInterval zero = numeric_eval(CycNum(5));
  EXPECT_EQ(zero.lower_double(), 0.0);
  EXPECT_EQ(zero.upper_double(), 0.0);
  EXPECT_EQ(zero.sign(), std::optional<int>(0));

  Rng rng(29);
  for (int p : kPrimes) {
    for (int trial = 0; trial < 10; ++trial) {
      const CycNum x = random_cycnum(rng, p, 50);
      const RealInterval iv = numeric_eval(x, 128);
      EXPECT_LE(iv.lower_double(), iv.upper_double());
      EXPECT_NEAR(iv.midpoint_double(), static_cast<double>(oracle_value(x)), 1e-9);
      EXPECT_LT(iv.width_double(), 1e-30);
    }
  }
}

TEST(Cyclotomic, CompareIsExact) {
  EXPECT_GT(compare(basis(5, 2), basis(5, 1)), 0);
  EXPECT_EQ(compare(qint(5, 4), basis(5, 1)), 0);
  EXPECT_LT(compare(CycNum(7), basis(7, 3)), 0);
  // [2]^2 = [1] + [2] at p=5 (golden ratio identity)
  EXPECT_EQ(compare(basis(5, 2) * basis(5, 2), basis(5, 1) + basis(5, 2)), 0);

  Rng rng(31);
  for (int p : kPrimes) {
    for (int trial = 0; trial < 20; ++trial) {
      const CycNum a = random_cycnum(rng, p, 8);
      const CycNum b = random_cycnum(rng, p, 8);
      const long double diff = oracle_value(a) - oracle_value(b);
      if (std::fabs(static_cast<double>(diff)) < 1e-9) continue;
      EXPECT_EQ(compare(a, b), diff > 0 ? 1 : -1);
      EXPECT_EQ(compare(b, a), -compare(a, b));
    }
  }
}

TEST(Cyclotomic, TextRoundTrip) {
  EXPECT_EQ(basis(5, 1).to_string(), "1");
  EXPECT_EQ(basis(5, 2).to_string(), "[2]");
  EXPECT_EQ(CycNum(7, {2, 0, -3}).to_string(), "2*[1] - 3*[3]");
  EXPECT_EQ(CycNum(7).to_string(), "0");
  EXPECT_EQ(parse_cycnum(5, "-3*[1]"), CycNum::integer(5, -3));
  EXPECT_EQ(parse_cycnum(5, "[2]"), basis(5, 2));
  Rng rng(37);
  for (int p : kPrimes) {
    for (int trial = 0; trial < 10; ++trial) {
      const CycNum x = random_cycnum(rng, p, 100);
      EXPECT_EQ(parse_cycnum(p, x.to_string()), x) << x.to_string();
    }
  }
  // indices outside 1..p-1 are reduced by the symmetries of [k]
  EXPECT_EQ(parse_cycnum(5, "[9]"), CycNum::integer(5, -1));
  EXPECT_THROW(parse_cycnum(5, "[x]"), InvalidArgument);
  EXPECT_THROW(parse_cycnum(5, "2*"), InvalidArgument);
}

TEST(Cyclotomic, RejectsMismatchedPrimes) {
  EXPECT_THROW(basis(5, 1) + basis(7, 1), InvalidArgument);
  EXPECT_THROW(CycNum(5, {1}), InvalidArgument);
  EXPECT_THROW(CycNum(4), InvalidArgument);
}
