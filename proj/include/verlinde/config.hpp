#pragma once

#include <cstddef>
#include <string>

namespace verlinde {

/// Default column cap for brute-force tensor constructions.
inline constexpr std::size_t kDefaultCap = 20000;

/// The cap in effect when none is passed explicitly: VERLINDE_LAB_CAP if set, else kDefaultCap.
std::size_t default_cap();

/// Throws CapExceeded when `dim` exceeds `cap`.
void check_cap(std::size_t dim, std::size_t cap, const std::string& what);

/// base^exp, saturating at SIZE_MAX.
std::size_t saturating_pow(std::size_t base, std::size_t exp);

/// True iff n is prime (trial division).
bool is_prime(long long n);

/// Throws InvalidArgument unless p is a prime below 256 (the GF(p) storage limit).
void require_small_prime(int p);

}  // namespace verlinde
