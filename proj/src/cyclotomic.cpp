#include "verlinde/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "verlinde/config.hpp"
#include "verlinde/errors.hpp"

namespace verlinde {

namespace {

void require_prime(int p) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime, got " + std::to_string(p));
}

// Reduces [k]_q to sign * [m]_q with 1 <= m <= basis_size, or sign 0.
std::pair<int, std::size_t> reduce_index(int p, long long k) {
  const long long period = 2LL * p;
  long long r = ((k % period) + period) % period;
  int sign = 1;
  if (r == 0 || r == p) return {0, 0};
  if (r > p) {
    r -= p;
    sign = -1;
  }
  const auto basis = static_cast<long long>(CycNum::basis_size(p));
  if (r > basis) r = p - r;
  return {sign, static_cast<std::size_t>(r)};
}

}  // namespace

std::size_t CycNum::basis_size(int p) { return p <= 3 ? 1 : static_cast<std::size_t>((p - 1) / 2); }

CycNum::CycNum(int p) : p_(p) {
  require_prime(p);
  coeffs_.assign(basis_size(p), mpz_class(0));
}

CycNum::CycNum(int p, std::vector<mpz_class> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  require_prime(p);
  if (coeffs_.size() != basis_size(p)) {
    throw InvalidArgument("CycNum for p=" + std::to_string(p) + " needs " + std::to_string(basis_size(p)) +
                          " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

CycNum CycNum::integer(int p, const mpz_class& n) {
  CycNum x(p);
  x.coeffs_[0] = n;
  return x;
}

bool CycNum::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c == 0; });
}

bool CycNum::is_integer() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const mpz_class& c) { return c == 0; });
}

bool CycNum::is_nonneg_combination() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c >= 0; });
}

void CycNum::require_same_p(const CycNum& other) const {
  if (p_ != other.p_) {
    throw InvalidArgument("mismatched primes " + std::to_string(p_) + " and " + std::to_string(other.p_));
  }
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
  require_same_p(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
  require_same_p(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator*=(const mpz_class& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) { return mul(a, b); }

std::string CycNum::to_string() const {
  if (is_integer()) return coeffs_[0].get_str();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (magnitude != 1) out << magnitude.get_str() << '*';
    out << '[' << (i + 1) << ']';
    first = false;
  }
  return out.str();
}

CycNum qint(int p, long long k) {
  CycNum x(p);
  auto [sign, m] = reduce_index(p, k);
  if (sign == 0) return x;
  std::vector<mpz_class> coeffs(CycNum::basis_size(p), mpz_class(0));
  coeffs[m - 1] = sign;
  return CycNum(p, std::move(coeffs));
}

CycNum mul(const CycNum& a, const CycNum& b) {
  if (a.p() != b.p()) {
    throw InvalidArgument("mismatched primes " + std::to_string(a.p()) + " and " + std::to_string(b.p()));
  }
  const int p = a.p();
  const std::size_t r = CycNum::basis_size(p);
  std::vector<mpz_class> out(r, mpz_class(0));
  mpz_class term;
  for (std::size_t i = 1; i <= r; ++i) {
    if (a.coeff(i) == 0) continue;
    for (std::size_t j = 1; j <= r; ++j) {
      if (b.coeff(j) == 0) continue;
      term = a.coeff(i) * b.coeff(j);
      const long long lo = std::llabs(static_cast<long long>(i) - static_cast<long long>(j)) + 1;
      const long long hi = static_cast<long long>(i + j) - 1;
      for (long long k = lo; k <= hi; k += 2) {
        auto [sign, m] = reduce_index(p, k);
        if (sign > 0) out[m - 1] += term;
        if (sign < 0) out[m - 1] -= term;
      }
    }
  }
  return CycNum(p, std::move(out));
}

CycNum exact_div(const CycNum& a, const CycNum& b) {
  if (a.p() != b.p()) {
    throw InvalidArgument("mismatched primes " + std::to_string(a.p()) + " and " + std::to_string(b.p()));
  }
  if (b.is_zero()) throw InvalidArgument("exact_div: division by zero");
  const int p = a.p();
  const std::size_t r = CycNum::basis_size(p);

  // Column m of the system is b * [m]_q; solve over Q and demand an integral solution.
  std::vector<std::vector<mpq_class>> rows(r, std::vector<mpq_class>(r + 1));
  for (std::size_t m = 1; m <= r; ++m) {
    CycNum column = mul(b, qint(p, static_cast<long long>(m)));
    for (std::size_t i = 0; i < r; ++i) rows[i][m - 1] = column.coeffs()[i];
  }
  for (std::size_t i = 0; i < r; ++i) rows[i][r] = a.coeffs()[i];

  for (std::size_t col = 0; col < r; ++col) {
    std::size_t pivot = col;
    while (pivot < r && rows[pivot][col] == 0) ++pivot;
    if (pivot == r) throw InconsistentInput("exact_div: singular multiplication matrix");
    std::swap(rows[col], rows[pivot]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == col || rows[i][col] == 0) continue;
      mpq_class factor = rows[i][col] / rows[col][col];
      for (std::size_t k = col; k <= r; ++k) rows[i][k] -= factor * rows[col][k];
    }
  }
  std::vector<mpz_class> quotient(r);
  for (std::size_t i = 0; i < r; ++i) {
    mpq_class value = rows[i][r] / rows[i][i];
    value.canonicalize();
    if (value.get_den() != 1) {
      throw NotDivisible("exact_div: " + a.to_string() + " is not divisible by " + b.to_string() + " in O_" +
                         std::to_string(p));
    }
    quotient[i] = value.get_num();
  }
  return CycNum(p, std::move(quotient));
}

CycNum qint_at_power(int p, long long k, long long a) {
  require_prime(p);
  if (a % p == 0) throw InvalidArgument("qint_at_power: exponent " + std::to_string(a) + " is divisible by p");
  return exact_div(qint(p, a * k), qint(p, a));
}

CycNum galois_twist(const CycNum& x, long long a) {
  const int p = x.p();
  CycNum result(p);
  for (std::size_t m = 1; m <= x.coeffs().size(); ++m) {
    if (x.coeff(m) == 0) continue;
    result += qint_at_power(p, static_cast<long long>(m), a) * x.coeff(m);
  }
  return result;
}

CycNum parse_cycnum(int p, const std::string& text) {
  CycNum result(p);
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw InvalidArgument("empty quantum-integer expression");
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    mpz_class coefficient = 1;
    bool has_coefficient = pos > start;
    if (has_coefficient) coefficient = mpz_class(s.substr(start, pos - start));
    long long index = 1;
    if (pos < s.size() && (s[pos] == '*' || s[pos] == '[')) {
      if (s[pos] == '*') ++pos;
      if (pos >= s.size() || s[pos] != '[') throw InvalidArgument("malformed term in '" + text + "'");
      ++pos;
      std::size_t idx_start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == idx_start || pos >= s.size() || s[pos] != ']') {
        throw InvalidArgument("malformed basis index in '" + text + "'");
      }
      index = std::stoll(s.substr(idx_start, pos - idx_start));
      ++pos;
    } else if (!has_coefficient) {
      throw InvalidArgument("malformed term in '" + text + "'");
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      throw InvalidArgument("unexpected character in '" + text + "'");
    }
    result += qint(p, index) * (coefficient * sign);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Intervals

RealInterval::RealInterval(mpfr_prec_t precision) {
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const RealInterval& other) {
  mpfr_init2(lo_, mpfr_get_prec(other.lo_));
  mpfr_init2(hi_, mpfr_get_prec(other.hi_));
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& other) noexcept : RealInterval(mpfr_get_prec(other.lo_)) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

RealInterval& RealInterval::operator=(RealInterval other) noexcept {
  swap(*this, other);
  return *this;
}

RealInterval::~RealInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void swap(RealInterval& a, RealInterval& b) noexcept {
  mpfr_swap(a.lo_, b.lo_);
  mpfr_swap(a.hi_, b.hi_);
}

double RealInterval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RealInterval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double RealInterval::midpoint_double() const { return 0.5 * (lower_double() + upper_double()); }

bool RealInterval::contains(double x) const { return mpfr_cmp_d(lo_, x) <= 0 && mpfr_cmp_d(hi_, x) >= 0; }

double RealInterval::width_double() const {
  mpfr_t w;
  mpfr_init2(w, mpfr_get_prec(hi_) + 2);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double result = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return result;
}

std::optional<int> RealInterval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return 0;
  return std::nullopt;
}

namespace {

// Encloses [m]_q = sin(m pi/p)/sin(pi/p) for 2 <= m <= (p-1)/2, where both
// arguments lie in (0, pi/2) and sin is increasing.
RealInterval basis_value(int p, std::size_t m, mpfr_prec_t w) {
  RealInterval result(w);
  if (m == 1) {
    mpfr_set_ui(result.lower(), 1, MPFR_RNDD);
    mpfr_set_ui(result.upper(), 1, MPFR_RNDU);
    return result;
  }
  mpfr_t pi_lo, pi_hi, x_lo, x_hi, y_lo, y_hi;
  for (mpfr_ptr v : {pi_lo, pi_hi, x_lo, x_hi, y_lo, y_hi}) mpfr_init2(v, w);
  mpfr_const_pi(pi_lo, MPFR_RNDD);
  mpfr_const_pi(pi_hi, MPFR_RNDU);

  mpfr_mul_ui(x_lo, pi_lo, m, MPFR_RNDD);
  mpfr_div_ui(x_lo, x_lo, p, MPFR_RNDD);
  mpfr_mul_ui(x_hi, pi_hi, m, MPFR_RNDU);
  mpfr_div_ui(x_hi, x_hi, p, MPFR_RNDU);
  mpfr_div_ui(y_lo, pi_lo, p, MPFR_RNDD);
  mpfr_div_ui(y_hi, pi_hi, p, MPFR_RNDU);

  mpfr_sin(x_lo, x_lo, MPFR_RNDD);
  mpfr_sin(x_hi, x_hi, MPFR_RNDU);
  mpfr_sin(y_lo, y_lo, MPFR_RNDD);
  mpfr_sin(y_hi, y_hi, MPFR_RNDU);

  mpfr_div(result.lower(), x_lo, y_hi, MPFR_RNDD);
  mpfr_div(result.upper(), x_hi, y_lo, MPFR_RNDU);
  for (mpfr_ptr v : {pi_lo, pi_hi, x_lo, x_hi, y_lo, y_hi}) mpfr_clear(v);
  return result;
}

RealInterval evaluate_at(const CycNum& a, mpfr_prec_t w) {
  RealInterval sum(w);
  mpfr_t term;
  mpfr_init2(term, w);
  for (std::size_t m = 1; m <= a.coeffs().size(); ++m) {
    const mpz_class& c = a.coeff(m);
    if (c == 0) continue;
    RealInterval v = basis_value(a.p(), m, w);
    mpfr_srcptr for_lower = c > 0 ? v.lower() : v.upper();
    mpfr_srcptr for_upper = c > 0 ? v.upper() : v.lower();
    mpfr_mul_z(term, for_lower, c.get_mpz_t(), MPFR_RNDD);
    mpfr_add(sum.lower(), sum.lower(), term, MPFR_RNDD);
    mpfr_mul_z(term, for_upper, c.get_mpz_t(), MPFR_RNDU);
    mpfr_add(sum.upper(), sum.upper(), term, MPFR_RNDU);
  }
  mpfr_clear(term);
  return sum;
}

}  // namespace

RealInterval numeric_eval(const CycNum& a, unsigned precision) {
  if (precision < 32) throw InvalidArgument("numeric_eval: precision must be at least 32 bits");
  if (a.is_zero()) return RealInterval(static_cast<mpfr_prec_t>(precision));

  std::size_t coefficient_bits = 1;
  for (const auto& c : a.coeffs()) coefficient_bits = std::max(coefficient_bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  auto w = static_cast<mpfr_prec_t>(precision + 16 + coefficient_bits + 8);

  for (;;) {
    RealInterval enclosure = evaluate_at(a, w);
    // Required bound 2^(1-precision) * (1 + |a|), using the lower magnitude estimate.
    mpfr_t magnitude, bound, width;
    mpfr_inits2(w, magnitude, bound, width, static_cast<mpfr_ptr>(nullptr));
    if (mpfr_sgn(enclosure.lower()) >= 0) {
      mpfr_set(magnitude, enclosure.lower(), MPFR_RNDD);
    } else if (mpfr_sgn(enclosure.upper()) <= 0) {
      mpfr_neg(magnitude, enclosure.upper(), MPFR_RNDD);
    } else {
      mpfr_set_zero(magnitude, 1);
    }
    mpfr_add_ui(bound, magnitude, 1, MPFR_RNDD);
    mpfr_mul_2si(bound, bound, 1 - static_cast<long>(precision), MPFR_RNDD);
    mpfr_sub(width, enclosure.upper(), enclosure.lower(), MPFR_RNDU);
    const bool tight = mpfr_cmp(width, bound) <= 0;
    mpfr_clears(magnitude, bound, width, static_cast<mpfr_ptr>(nullptr));
    if (tight) return enclosure;
    w *= 2;
  }
}

int compare(const CycNum& a, const CycNum& b, unsigned precision) {
  CycNum diff = a - b;
  if (diff.is_zero()) return 0;
  for (unsigned prec = std::max(precision, 32U);; prec *= 2) {
    RealInterval enclosure = numeric_eval(diff, prec);
    if (auto s = enclosure.sign(); s.has_value() && *s != 0) return *s;
    if (prec > (1U << 20)) throw InconsistentInput("compare: interval refinement did not terminate");
  }
}

}  // namespace verlinde
