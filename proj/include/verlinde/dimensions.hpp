#pragma once

/**
 * @file dimensions.hpp
 * @brief Dimension invariants: alternating (ad), growth (gd), symmetric-group (sd),
 * the growth rate delta of a C_p-module and the p-adic dimension.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "verlinde/cyclotomic.hpp"
#include "verlinde/fusion.hpp"
#include "verlinde/modrep.hpp"

namespace verlinde {

struct PadicDim {
  int p;
  std::vector<int> digits;  // t_0, t_1, ...
  mpz_class value;
};

/// Multiplicities m_1..m_{p-1} of the non-projective Jordan blocks.
struct JordanContent {
  int p;
  std::vector<std::uint64_t> m;
  friend bool operator==(const JordanContent&, const JordanContent&) = default;
};

/// Largest n with A^n X != 0; nullopt for the zero object.
std::optional<std::uint64_t> ad(const VerObject& x, std::size_t cap = default_cap());
/// Same for a concrete module, via vanishing of skew_image.
std::optional<std::uint64_t> ad_rep(const CyclicRep& v, std::size_t cap = default_cap());

CycNum gd(const VerObject& x);
/// length(X^{(x)n})^{1/n} for n = 1..max_n.
std::vector<double> gd_empirical(const VerObject& x, unsigned max_n = 25);

/// True iff k S_n -> End(V^{(x)n}) is injective. Requires 1 <= n <= 5.
bool sd_at_least(const CyclicRep& v, unsigned n, std::size_t cap = default_cap());

CycNum delta(const JordanType& type);
JordanContent delta_content(const JordanType& type);
/// sum m_k [k]_{q^2}.
CycNum delta_square_twist(const JordanContent& content);
/// delta(S^2 V) - delta(wedge^2 V), from the brute-force quotients.
CycNum delta_second_oracle(const CyclicRep& v, std::size_t cap = default_cap());

/// [k]_{q^2} = [2k]_q / [2]_q.
CycNum qint_at_square(int p, long long k);

/// Recovers m from d1 = delta(V) and d2 = sum m_k [k]_{q^2}. Requires p > 2.
JordanContent recover_jordan_content(int p, const CycNum& d1, const CycNum& d2);

/// Digits t_k with series = prod (1 + z^{p^k})^{t_k} over F_p.
PadicDim padic_dimension(int p, const std::vector<long long>& series);
/// prod (1 + z^{p^k})^{t_k} mod p, trailing zeros trimmed.
std::vector<long long> series_from_digits(int p, const std::vector<int>& digits);
/// dim(A^j X) mod p for j = 0..lift_dim.
std::vector<long long> alt_dimension_series(const VerObject& x, std::size_t cap = default_cap());
PadicDim padic_dimension_of(const VerObject& x, std::size_t cap = default_cap());

}  // namespace verlinde
