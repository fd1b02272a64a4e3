#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in O_p = Z[2cos(pi/p)].
 *
 * Elements are stored in the quantum-integer basis [1]_q, ..., [r]_q with
 * r = (p-1)/2 (r = 1 for p = 2, 3), where q = exp(i*pi/p) and
 *
 *     [m]_q = (q^m - q^-m) / (q - q^-1) = sin(m*pi/p) / sin(pi/p).
 *
 * Any [k]_q reduces to +-[m]_q or 0 using 2p-periodicity, [p+m] = -[m] and
 * [p-m] = [m]. Products follow the Clebsch-Gordan rule
 *
 *     [a]_q [b]_q = sum_{k = |a-b|+1, step 2}^{a+b-1} [k]_q
 *
 * followed by reduction. Coefficients are arbitrary-precision integers.
 * Equality is exact; ordering goes through rigorous MPFR intervals.
 */

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>
#include <vector>

namespace verlinde {

class CycNum {
 public:
  /// The zero element of O_p.
  explicit CycNum(int p);
  /// coeffs[m-1] is the coefficient of [m]_q; length must equal basis_size(p).
  CycNum(int p, std::vector<mpz_class> coeffs);

  static CycNum integer(int p, const mpz_class& n);
  static std::size_t basis_size(int p);

  int p() const { return p_; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& coeff(std::size_t m) const { return coeffs_.at(m - 1); }

  bool is_zero() const;
  /// All coefficients except the one of [1]_q vanish.
  bool is_integer() const;
  /// Every coefficient is non-negative.
  bool is_nonneg_combination() const;

  CycNum& operator+=(const CycNum& rhs);
  CycNum& operator-=(const CycNum& rhs);
  CycNum& operator*=(const mpz_class& k);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator-(CycNum a) { return a *= -1; }
  friend CycNum operator*(CycNum a, const mpz_class& k) { return a *= k; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend bool operator==(const CycNum& a, const CycNum& b) = default;

  /// "a1*[1] + a2*[2] + ..." with zero terms and unit coefficients omitted; plain integers print as "n".
  std::string to_string() const;

 private:
  void require_same_p(const CycNum& other) const;

  int p_;
  std::vector<mpz_class> coeffs_;
};

/// [k]_q reduced to the basis.
CycNum qint(int p, long long k);

CycNum mul(const CycNum& a, const CycNum& b);

/// c with mul(b, c) == a. Throws NotDivisible when no element of O_p works,
/// InvalidArgument when b == 0.
CycNum exact_div(const CycNum& a, const CycNum& b);

/// [k]_{q^a} = [a*k]_q / [a]_q. Requires p not dividing a.
CycNum qint_at_power(int p, long long k, long long a);

/// The Galois automorphism q -> q^a applied to x (gcd(a, 2p) = 1).
CycNum galois_twist(const CycNum& x, long long a);

/// Parses the textual rendering produced by CycNum::to_string (also "[2]", "-3*[1]").
CycNum parse_cycnum(int p, const std::string& text);

/// Closed real interval with MPFR endpoints.
class RealInterval {
 public:
  explicit RealInterval(mpfr_prec_t precision);
  RealInterval(const RealInterval& other);
  RealInterval(RealInterval&& other) noexcept;
  RealInterval& operator=(RealInterval other) noexcept;
  ~RealInterval();

  mpfr_srcptr lower() const { return lo_; }
  mpfr_srcptr upper() const { return hi_; }
  mpfr_ptr lower() { return lo_; }
  mpfr_ptr upper() { return hi_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

  double lower_double() const;
  double upper_double() const;
  double midpoint_double() const;
  bool contains(double x) const;
  /// Width hi - lo, rounded up.
  double width_double() const;
  /// -1 or +1 when the interval excludes 0, 0 when it is exactly [0, 0], nullopt otherwise.
  std::optional<int> sign() const;

  friend void swap(RealInterval& a, RealInterval& b) noexcept;

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

/// Encloses the value of `a` at q = exp(i*pi/p). Width <= 2^(1-precision) * (1 + |a|).
RealInterval numeric_eval(const CycNum& a, unsigned precision = 128);

/// Exact sign of a - b: equality via coefficients, otherwise intervals refined until decisive.
int compare(const CycNum& a, const CycNum& b, unsigned precision = 128);

}  // namespace verlinde
