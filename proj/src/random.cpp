#include "verlinde/random.hpp"

#include "verlinde/errors.hpp"

namespace verlinde {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("Rng::below: empty range");
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n + 1) % n;  // largest multiple of n, minus one
  while (true) {
    const std::uint64_t x = next();
    if (x <= limit) return x % n;
  }
}

long long Rng::between(long long lo, long long hi) {
  if (hi < lo) throw InvalidArgument("Rng::between: empty range");
  return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

VerObject random_ver_object(Rng& rng, int p, std::uint64_t max_mult) {
  VerObject x(p);
  for (int i = 1; i < p; ++i) x[i] = rng.below(max_mult + 1);
  return x;
}

JordanType random_jordan_type(Rng& rng, int p, std::uint64_t max_dim) {
  JordanType t(p);
  const std::uint64_t target = rng.below(max_dim + 1);
  std::uint64_t dim = 0;
  while (dim < target) {
    const std::uint64_t room = std::min<std::uint64_t>(static_cast<std::uint64_t>(p), target - dim);
    const int size = static_cast<int>(1 + rng.below(room));
    ++t[size];
    dim += static_cast<std::uint64_t>(size);
  }
  return t;
}

gfp::Matrix random_invertible(Rng& rng, int p, std::size_t n) {
  while (true) {
    gfp::Matrix m(p, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<gfp::Element>(rng.below(static_cast<std::uint64_t>(p)));
    if (gfp::rank(m) == n) return m;
  }
}

CyclicRep random_realization(Rng& rng, const JordanType& type) {
  CyclicRep v = CyclicRep::from_jordan_type(type);
  return conjugate(v, random_invertible(rng, type.p(), v.dim()));
}

}  // namespace verlinde
