#include "verlinde/dimensions.hpp"

#include <cmath>
#include <numeric>

#include "verlinde/errors.hpp"

namespace verlinde {

std::optional<std::uint64_t> ad(const VerObject& x, std::size_t cap) {
  if (x.is_zero()) return std::nullopt;
  std::uint64_t n = 0;
  while (!alt_power_ver(x, static_cast<unsigned>(n + 1), cap).is_zero()) ++n;
  return n;
}

std::optional<std::uint64_t> ad_rep(const CyclicRep& v, std::size_t cap) {
  if (v.dim() == 0) return std::nullopt;
  std::uint64_t n = 0;
  while (skew_image(v, static_cast<unsigned>(n + 1), cap).dim() > 0) ++n;
  return n;
}

CycNum gd(const VerObject& x) { return fpdim(x); }

std::vector<double> gd_empirical(const VerObject& x, unsigned max_n) {
  std::vector<double> out;
  VerObject power = VerObject::simple(x.p(), 1);
  for (unsigned n = 1; n <= max_n; ++n) {
    power = fuse(power, x);
    // log of the length avoids overflow of the double itself
    const mpz_class len = power.length();
    if (len == 0) {
      out.push_back(0.0);
      continue;
    }
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, len.get_mpz_t());
    out.push_back(std::exp((std::log(mant) + static_cast<double>(exp) * std::log(2.0)) / n));
  }
  return out;
}

bool sd_at_least(const CyclicRep& v, unsigned n, std::size_t cap) {
  if (n < 1 || n > 5) throw InvalidArgument("sd_at_least: n must lie in 1..5");
  const std::size_t d = saturating_pow(v.dim(), n);
  check_cap(saturating_pow(v.dim(), 2 * n), cap, "sd_at_least");
  if (v.dim() == 0) return false;
  PowerSpace space(v, n, cap);
  gfp::EchelonBasis span(v.p(), d * d);
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::size_t count = 0;
  do {
    const auto map = space.permutation_action(perm);
    gfp::Vector flat(d * d, 0);
    for (std::size_t j = 0; j < d; ++j) flat[map[j] * d + j] = 1;
    span.insert(std::move(flat));
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return span.rank() == count;
}

CycNum delta(const JordanType& type) {
  CycNum d(type.p());
  for (int k = 1; k < type.p(); ++k) {
    if (type[k] != 0) d += qint(type.p(), k) * mpz_class(static_cast<unsigned long>(type[k]));
  }
  return d;
}

JordanContent delta_content(const JordanType& type) {
  JordanContent c{type.p(), {}};
  for (int k = 1; k < type.p(); ++k) c.m.push_back(type[k]);
  return c;
}

CycNum qint_at_square(int p, long long k) { return qint_at_power(p, k, 2); }

CycNum delta_square_twist(const JordanContent& content) {
  CycNum d(content.p);
  for (std::size_t k = 1; k <= content.m.size(); ++k) {
    if (content.m[k - 1] != 0)
      d += qint_at_square(content.p, static_cast<long long>(k)) * mpz_class(static_cast<unsigned long>(content.m[k - 1]));
  }
  return d;
}

CycNum delta_second_oracle(const CyclicRep& v, std::size_t cap) {
  return delta(jordan_type_of(symmetric_power(v, 2, cap))) - delta(jordan_type_of(exterior_coinvariants(v, 2, cap)));
}

JordanContent recover_jordan_content(int p, const CycNum& d1, const CycNum& d2) {
  if (p == 2) throw InvalidArgument("recover_jordan_content: requires p > 2");
  if (d1.p() != p || d2.p() != p) throw InvalidArgument("recover_jordan_content: mismatched p");
  // sigma_a with 2a = 1 mod p and a odd sends q^2 to -q, so [k]_{q^2} to (-1)^{k-1} [k]_q.
  long long a = (p + 1) / 2;
  if (a % 2 == 0) a += p;
  const CycNum e = galois_twist(d2, a);
  JordanContent content{p, std::vector<std::uint64_t>(static_cast<std::size_t>(p - 1), 0)};
  const std::size_t r = CycNum::basis_size(p);
  for (std::size_t j = 1; j <= r; ++j) {
    // [j] and [p-j] share the basis vector [j]
    const mpz_class sum = d1.coeff(j);
    const mpz_class diff = (j % 2 == 1) ? mpz_class(e.coeff(j)) : mpz_class(-e.coeff(j));
    const mpz_class twice_low = sum + diff;
    const mpz_class twice_high = sum - diff;
    if (twice_low < 0 || twice_high < 0 || twice_low % 2 != 0 || twice_high % 2 != 0)
      throw InconsistentInput("recover_jordan_content: no non-negative integral solution");
    if (!twice_low.fits_ulong_p() || !twice_high.fits_ulong_p())
      throw InconsistentInput("recover_jordan_content: multiplicity too large");
    content.m[j - 1] = mpz_class(twice_low / 2).get_ui();
    content.m[p - j - 1] = mpz_class(twice_high / 2).get_ui();
  }
  JordanType t(p);
  for (int k = 1; k < p; ++k) t[k] = content.m[k - 1];
  if (!(delta(t) == d1) || !(delta_square_twist(content) == d2))
    throw InconsistentInput("recover_jordan_content: inputs do not come from a module");
  return content;
}

namespace {

std::vector<long long> reduce_series(int p, const std::vector<long long>& s) {
  std::vector<long long> out;
  out.reserve(s.size());
  for (long long c : s) out.push_back(((c % p) + p) % p);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

PadicDim padic_dimension(int p, const std::vector<long long>& series) {
  require_small_prime(p);
  std::vector<long long> f = reduce_series(p, series);
  if (f.empty() || f[0] != 1) throw InvalidArgument("padic_dimension: series must have constant term 1");
  PadicDim result{p, {}, 0};
  mpz_class place = 1;
  while (f.size() > 1) {
    const int t = static_cast<int>(f[1]);
    // divide by (1+z) t times; each division must be exact
    for (int step = 0; step < t; ++step) {
      std::vector<long long> q(f.size() - 1);
      long long carry = 0;
      for (std::size_t k = 0; k + 1 < f.size(); ++k) {
        q[k] = ((f[k] - carry) % p + p) % p;
        carry = q[k];
      }
      if (((f.back() - carry) % p + p) % p != 0)
        throw InvalidArgument("padic_dimension: series is not a product of (1 + z^{p^k}) powers");
      f = std::move(q);
    }
    std::vector<long long> g;
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (k % static_cast<std::size_t>(p) == 0) {
        g.push_back(f[k]);
      } else if (f[k] != 0) {
        throw InvalidArgument("padic_dimension: series is not a product of (1 + z^{p^k}) powers");
      }
    }
    result.digits.push_back(t);
    result.value += place * t;
    place *= p;
    f = reduce_series(p, g);
  }
  while (!result.digits.empty() && result.digits.back() == 0) result.digits.pop_back();
  return result;
}

std::vector<long long> series_from_digits(int p, const std::vector<int>& digits) {
  require_small_prime(p);
  std::vector<long long> f{1};
  std::size_t stride = 1;
  for (int t : digits) {
    if (t < 0 || t >= p) throw InvalidArgument("series_from_digits: digit out of range");
    for (int step = 0; step < t; ++step) {
      std::vector<long long> g(f.size() + stride, 0);
      for (std::size_t k = 0; k < f.size(); ++k) {
        g[k] = (g[k] + f[k]) % p;
        g[k + stride] = (g[k + stride] + f[k]) % p;
      }
      f = std::move(g);
    }
    stride *= static_cast<std::size_t>(p);
  }
  return reduce_series(p, f);
}

std::vector<long long> alt_dimension_series(const VerObject& x, std::size_t cap) {
  std::vector<long long> s;
  for (std::uint64_t j = 0; j <= x.lift_dim(); ++j) s.push_back(cat_dim_mod_p(alt_power_ver(x, static_cast<unsigned>(j), cap)));
  return s;
}

PadicDim padic_dimension_of(const VerObject& x, std::size_t cap) { return padic_dimension(x.p(), alt_dimension_series(x, cap)); }

}  // namespace verlinde
