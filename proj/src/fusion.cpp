#include "verlinde/fusion.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "verlinde/config.hpp"
#include "verlinde/errors.hpp"

namespace verlinde {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InvalidArgument("multiplicity overflow");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvalidArgument("multiplicity overflow");
  return r;
}

void require_prime(int p) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime, got " + std::to_string(p));
}

void require_index(int p, int i) {
  if (i < 1 || i > p - 1) {
    throw InvalidArgument("simple index " + std::to_string(i) + " out of range 1.." + std::to_string(p - 1));
  }
}

void require_same_p(int a, int b) {
  if (a != b) throw InvalidArgument("mismatched primes " + std::to_string(a) + " and " + std::to_string(b));
}

// Fusion channel bounds: k runs from lo to hi in steps of 2.
std::pair<int, int> channel(int p, int i, int j) { return {std::abs(i - j) + 1, std::min(i + j - 1, 2 * p - 1 - i - j)}; }

}  // namespace

// ---------------------------------------------------------------------------
// VerObject

VerObject::VerObject(int p) : p_(p) {
  require_prime(p);
  mult_.assign(static_cast<std::size_t>(p - 1), 0);
}

VerObject::VerObject(int p, std::vector<std::uint64_t> mult) : p_(p), mult_(std::move(mult)) {
  require_prime(p);
  if (mult_.size() != static_cast<std::size_t>(p - 1)) {
    throw InvalidArgument("VerObject for p=" + std::to_string(p) + " needs " + std::to_string(p - 1) +
                          " multiplicities, got " + std::to_string(mult_.size()));
  }
}

VerObject VerObject::simple(int p, int i) {
  VerObject x(p);
  require_index(p, i);
  x[i] = 1;
  return x;
}

bool VerObject::is_zero() const {
  return std::all_of(mult_.begin(), mult_.end(), [](std::uint64_t m) { return m == 0; });
}

std::uint64_t VerObject::length() const {
  std::uint64_t total = 0;
  for (auto m : mult_) total = checked_add(total, m);
  return total;
}

std::uint64_t VerObject::lift_dim() const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < mult_.size(); ++i) total = checked_add(total, checked_mul(i + 1, mult_[i]));
  return total;
}

VerObject& VerObject::operator+=(const VerObject& rhs) {
  require_same_p(p_, rhs.p_);
  for (std::size_t i = 0; i < mult_.size(); ++i) mult_[i] = checked_add(mult_[i], rhs.mult_[i]);
  return *this;
}

VerObject& VerObject::operator*=(std::uint64_t k) {
  for (auto& m : mult_) m = checked_mul(m, k);
  return *this;
}

std::string VerObject::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    if (mult_[i] == 0) continue;
    if (!first) out << " + ";
    if (mult_[i] != 1) out << mult_[i] << '*';
    out << 'L' << (i + 1);
    first = false;
  }
  return first ? "0" : out.str();
}

// ---------------------------------------------------------------------------
// VerPair

VerPair::VerPair(int p) : p_(p), n_(static_cast<std::size_t>(p - 1)) {
  require_prime(p);
  mult_.assign(n_ * n_, 0);
}

std::size_t VerPair::index(int i, int j) const {
  require_index(p_, i);
  require_index(p_, j);
  return static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1);
}

std::vector<std::vector<std::uint64_t>> VerPair::as_rows() const {
  std::vector<std::vector<std::uint64_t>> rows(n_, std::vector<std::uint64_t>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = mult_[i * n_ + j];
  }
  return rows;
}

VerPair& VerPair::operator+=(const VerPair& rhs) {
  require_same_p(p_, rhs.p_);
  for (std::size_t k = 0; k < mult_.size(); ++k) mult_[k] = checked_add(mult_[k], rhs.mult_[k]);
  return *this;
}

VerObject VerPair::second_component() const {
  VerObject x(p_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      x[static_cast<int>(j + 1)] = checked_add(x[static_cast<int>(j + 1)], mult_[i * n_ + j]);
    }
  }
  return x;
}

VerObject VerPair::first_component() const {
  VerObject x(p_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      x[static_cast<int>(i + 1)] = checked_add(x[static_cast<int>(i + 1)], mult_[i * n_ + j]);
    }
  }
  return x;
}

// ---------------------------------------------------------------------------
// EnhancedObject

EnhancedObject::EnhancedObject(int p) : p_(p) { require_prime(p); }

void EnhancedObject::add(int i, int j, int character, std::uint64_t multiplicity) {
  require_index(p_, i);
  require_index(p_, j);
  if (p_ > 2 && j % 2 == 0) throw InvalidArgument("Ver_p^+ simples have odd index, got " + std::to_string(j));
  const int order = p_ == 2 ? 1 : 2 * (p_ - 1);
  const int a = ((character % order) + order) % order;
  if (multiplicity == 0) return;
  auto& slot = terms_[{i, j, a}];
  slot = checked_add(slot, multiplicity);
}

std::map<std::pair<int, int>, std::uint64_t> EnhancedObject::enhanced_part() const {
  std::map<std::pair<int, int>, std::uint64_t> part;
  for (const auto& [key, m] : terms_) {
    auto& slot = part[{std::get<1>(key), std::get<2>(key)}];
    slot = checked_add(slot, m);
  }
  return part;
}

int sign_character(int p) {
  require_prime(p);
  return p == 2 ? 0 : p - 1;
}

// ---------------------------------------------------------------------------
// Fusion

VerObject fuse_simples(int p, int i, int j) {
  require_prime(p);
  require_index(p, i);
  require_index(p, j);
  VerObject out(p);
  auto [lo, hi] = channel(p, i, j);
  for (int k = lo; k <= hi; k += 2) out[k] = 1;
  return out;
}

VerObject fuse(const VerObject& x, const VerObject& y) {
  require_same_p(x.p(), y.p());
  const int p = x.p();
  VerObject out(p);
  for (int i = 1; i < p; ++i) {
    if (x[i] == 0) continue;
    for (int j = 1; j < p; ++j) {
      if (y[j] == 0) continue;
      const std::uint64_t weight = checked_mul(x[i], y[j]);
      auto [lo, hi] = channel(p, i, j);
      for (int k = lo; k <= hi; k += 2) out[k] = checked_add(out[k], weight);
    }
  }
  return out;
}

CycNum fpdim(const VerObject& x) {
  CycNum d(x.p());
  for (int r = 1; r < x.p(); ++r) {
    if (x[r] != 0) d += qint(x.p(), r) * mpz_class(std::to_string(x[r]));
  }
  return d;
}

int cat_dim_mod_p(const VerObject& x) {
  const int p = x.p();
  std::uint64_t total = 0;
  for (int i = 1; i < p; ++i) total = (total + static_cast<std::uint64_t>(i) * (x[i] % p)) % p;
  return static_cast<int>(total);
}

// ---------------------------------------------------------------------------
// Frobenius functors

VerPair frobenius(const VerObject& x) {
  const int p = x.p();
  VerPair out(p);
  for (int i = 1; i < p; ++i) {
    if (x[i] == 0) continue;
    if (i % 2 == 1) {
      out(1, i) = checked_add(out(1, i), x[i]);
    } else {
      out(p - 1, p - i) = checked_add(out(p - 1, p - i), x[i]);
    }
  }
  return out;
}

VerPair fuse_pairs(const VerPair& a, const VerPair& b) {
  require_same_p(a.p(), b.p());
  const int p = a.p();
  VerPair out(p);
  for (int i = 1; i < p; ++i) {
    for (int j = 1; j < p; ++j) {
      if (a(i, j) == 0) continue;
      for (int k = 1; k < p; ++k) {
        for (int l = 1; l < p; ++l) {
          if (b(k, l) == 0) continue;
          const std::uint64_t weight = checked_mul(a(i, j), b(k, l));
          auto [lo1, hi1] = channel(p, i, k);
          auto [lo2, hi2] = channel(p, j, l);
          for (int u = lo1; u <= hi1; u += 2) {
            for (int v = lo2; v <= hi2; v += 2) out(u, v) = checked_add(out(u, v), weight);
          }
        }
      }
    }
  }
  return out;
}

VerObject frobenius_collapse(const VerObject& x) {
  const int p = x.p();
  VerPair fr = frobenius(x);
  VerObject out(p);
  for (int i = 1; i < p; ++i) {
    for (int j = 1; j < p; ++j) {
      if (fr(i, j) != 0) out += fuse_simples(p, i, j) * fr(i, j);
    }
  }
  return out;
}

EnhancedObject frobenius_enhanced(const VerObject& x) {
  const int p = x.p();
  EnhancedObject out(p);
  for (int i = 1; i < p; ++i) {
    if (x[i] == 0) continue;
    if (i % 2 == 1) {
      out.add(1, i, 0, x[i]);
    } else {
      out.add(p - 1, p - i, sign_character(p), x[i]);
    }
  }
  return out;
}

VerObject restrict_R(int p, int j, int character) {
  require_prime(p);
  require_index(p, j);
  if (character % 2 == 0) return VerObject::simple(p, j);
  return fuse_simples(p, j, p - 1);
}

VerPair restrict_R(const EnhancedObject& e) {
  const int p = e.p();
  VerPair out(p);
  for (const auto& [key, m] : e.terms()) {
    auto [i, j, a] = key;
    VerObject image = restrict_R(p, j, a);
    for (int k = 1; k < p; ++k) {
      if (image[k] != 0) out(i, k) = checked_add(out(i, k), checked_mul(image[k], m));
    }
  }
  return out;
}

std::string to_string(FrobeniusType t) {
  switch (t) {
    case FrobeniusType::Vec:
      return "Vec";
    case FrobeniusType::sVec:
      return "sVec";
    case FrobeniusType::VerPlus:
      return "VerPlus";
    case FrobeniusType::VerP:
      return "VerP";
  }
  return "?";
}

FrobeniusType join(FrobeniusType a, FrobeniusType b) {
  if (a == b) return a;
  if (a == FrobeniusType::Vec) return b;
  if (b == FrobeniusType::Vec) return a;
  return FrobeniusType::VerP;
}

std::vector<int> fusion_closure(int p, const std::vector<int>& support) {
  require_prime(p);
  std::set<int> closure{1};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> current(closure.begin(), closure.end());
    for (int i : current) {
      for (int s : support) {
        auto [lo, hi] = channel(p, i, s);
        for (int k = lo; k <= hi; k += 2) grew |= closure.insert(k).second;
      }
    }
  }
  return {closure.begin(), closure.end()};
}

FrobeniusType frobenius_type(const VerObject& x) {
  const int p = x.p();
  VerObject legs = frobenius(x).second_component();
  std::vector<int> support;
  for (int i = 1; i < p; ++i) {
    if (legs[i] != 0) support.push_back(i);
  }
  std::vector<int> closure = fusion_closure(p, support);
  if (closure == std::vector<int>{1}) return FrobeniusType::Vec;
  if (std::all_of(closure.begin(), closure.end(), [p](int i) { return i == 1 || i == p - 1; })) {
    return FrobeniusType::sVec;
  }
  if (std::all_of(closure.begin(), closure.end(), [](int i) { return i % 2 == 1; })) return FrobeniusType::VerPlus;
  return FrobeniusType::VerP;
}

bool is_integral(const VerObject& x) { return fpdim(x).is_integer(); }

McKayGraph mckay_graph(const VerObject& x) {
  if (x.is_zero()) throw InvalidArgument("mckay_graph: zero object");
  const int p = x.p();
  std::vector<int> support;
  for (int i = 1; i < p; ++i) {
    if (x[i] != 0) support.push_back(i);
  }
  McKayGraph g{p, fusion_closure(p, support), {}};
  for (int i : g.vertices) {
    VerObject row = fuse(VerObject::simple(p, i), x);
    for (int j = 1; j < p; ++j) {
      if (row[j] != 0) g.edges.push_back({i, j, row[j]});
    }
  }
  return g;
}

bool is_dynkin_path(const McKayGraph& g, std::size_t length) {
  std::vector<int> expected(length);
  std::iota(expected.begin(), expected.end(), 1);
  if (g.vertices != expected) return false;
  std::vector<McKayEdge> want;
  for (int i = 1; i <= static_cast<int>(length); ++i) {
    if (i > 1) want.push_back({i, i - 1, 1});
    if (i < static_cast<int>(length)) want.push_back({i, i + 1, 1});
  }
  auto key = [](const McKayEdge& e) { return std::pair{e.from, e.to}; };
  auto got = g.edges;
  std::sort(got.begin(), got.end(), [&](const McKayEdge& a, const McKayEdge& b) { return key(a) < key(b); });
  std::sort(want.begin(), want.end(), [&](const McKayEdge& a, const McKayEdge& b) { return key(a) < key(b); });
  return got == want;
}

mpz_class tensor_power_length(const VerObject& x, unsigned n) {
  const int p = x.p();
  std::vector<mpz_class> current(static_cast<std::size_t>(p - 1), 0);
  current[0] = 1;
  std::vector<mpz_class> weights(static_cast<std::size_t>(p - 1));
  for (int j = 1; j < p; ++j) weights[j - 1] = mpz_class(std::to_string(x[j]));
  for (unsigned step = 0; step < n; ++step) {
    std::vector<mpz_class> next(static_cast<std::size_t>(p - 1), 0);
    for (int i = 1; i < p; ++i) {
      if (current[i - 1] == 0) continue;
      for (int j = 1; j < p; ++j) {
        if (weights[j - 1] == 0) continue;
        mpz_class w = current[i - 1] * weights[j - 1];
        auto [lo, hi] = channel(p, i, j);
        for (int k = lo; k <= hi; k += 2) next[k - 1] += w;
      }
    }
    current = std::move(next);
  }
  return std::accumulate(current.begin(), current.end(), mpz_class(0));
}

}  // namespace verlinde
