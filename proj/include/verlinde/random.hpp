#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "verlinde/fusion.hpp"
#include "verlinde/modrep.hpp"

namespace verlinde {

/**
 * Seeded generator for test instances.
 *
 * Raw words come from std::mt19937_64 (the standard MT19937-64 with the
 * reference seeding), so streams are reproducible in any language. below(n)
 * rejects words >= 2^64 - (2^64 mod n) and returns the word mod n.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform on [lo, hi].
  long long between(long long lo, long long hi);

 private:
  std::mt19937_64 engine_;
};

/// Random object of Ver_p: each multiplicity uniform in [0, max_mult].
VerObject random_ver_object(Rng& rng, int p, std::uint64_t max_mult);
/// Random Jordan type with dim <= max_dim: blocks drawn one at a time with uniform sizes.
JordanType random_jordan_type(Rng& rng, int p, std::uint64_t max_dim);
/// Random invertible matrix over GF(p).
gfp::Matrix random_invertible(Rng& rng, int p, std::size_t n);
/// A realization of the type in a random basis.
CyclicRep random_realization(Rng& rng, const JordanType& type);

}  // namespace verlinde
