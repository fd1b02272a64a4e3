#include "verlinde/config.hpp"

#include <cstdlib>
#include <limits>

#include "verlinde/errors.hpp"

namespace verlinde {

std::size_t default_cap() {
  static const std::size_t cap = [] {
    const char* env = std::getenv("VERLINDE_LAB_CAP");
    if (env == nullptr || *env == '\0') return kDefaultCap;
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0) return kDefaultCap;
    return static_cast<std::size_t>(value);
  }();
  return cap;
}

void check_cap(std::size_t dim, std::size_t cap, const std::string& what) {
  if (dim > cap) {
    throw CapExceeded(what + ": dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
  }
}

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::size_t>::max() / base) {
      return std::numeric_limits<std::size_t>::max();
    }
    result *= base;
  }
  return result;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_small_prime(int p) {
  if (!is_prime(p) || p > 251) {
    throw InvalidArgument("p must be a prime below 256, got " + std::to_string(p));
  }
}

}  // namespace verlinde
