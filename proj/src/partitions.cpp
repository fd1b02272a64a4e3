#include "verlinde/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "verlinde/config.hpp"
#include "verlinde/errors.hpp"

namespace verlinde {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("Partition: parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.length(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

Partition Partition::with_box_added(std::size_t row) const {
  std::vector<int> next = parts_;
  if (row == next.size() + 1) {
    next.push_back(1);
  } else if (row >= 1 && row <= next.size()) {
    ++next[row - 1];
  } else {
    throw InvalidArgument("Partition: row out of range for adding a box");
  }
  return Partition(std::move(next));
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
  out << ')';
  return out.str();
}

BoxPos make_box(std::size_t row, std::size_t col, int p) {
  const long long diff = static_cast<long long>(col) - static_cast<long long>(row);
  return {row, col, static_cast<int>(((diff % p) + p) % p)};
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

// Beta numbers lambda_i + (len - i) for a fixed length len >= length(lambda).
std::vector<int> beta_numbers(const Partition& lambda, std::size_t len) {
  std::vector<int> beta(len);
  for (std::size_t i = 1; i <= len; ++i) beta[i - 1] = lambda.part(i) + static_cast<int>(len - i);
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  std::vector<int> parts;
  const std::size_t len = beta.size();
  for (std::size_t i = 1; i <= len; ++i) {
    const int part = beta[i - 1] - static_cast<int>(len - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

// Positions in beta that can slide down p places on the abacus.
std::vector<std::size_t> movable_beads(const std::vector<int>& beta, int p) {
  std::set<int> occupied(beta.begin(), beta.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (beta[i] - p >= 0 && !occupied.count(beta[i] - p)) out.push_back(i);
  return out;
}

template <typename Choose>
Partition core_with(const Partition& lambda, int p, Choose&& choose) {
  require_small_prime(p);
  std::vector<int> beta = beta_numbers(lambda, lambda.length());
  while (true) {
    auto movable = movable_beads(beta, p);
    if (movable.empty()) break;
    beta[movable[choose(movable.size())]] -= p;
  }
  return from_beta(beta);
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n >= 0) partitions_rec(n, n, cur, out);
  return out;
}

bool is_p_regular(const Partition& lambda, int p) {
  const auto& parts = lambda.parts();
  std::size_t run = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    run = (i > 0 && parts[i] == parts[i - 1]) ? run + 1 : 1;
    if (run >= static_cast<std::size_t>(p)) return false;
  }
  return true;
}

std::vector<BoxPos> addable_boxes(const Partition& lambda, int p) {
  std::vector<BoxPos> out;
  for (std::size_t row = lambda.length() + 1; row >= 1; --row) {
    if (row == 1 || lambda.part(row - 1) > lambda.part(row))
      out.push_back(make_box(row, static_cast<std::size_t>(lambda.part(row)) + 1, p));
  }
  return out;
}

std::vector<BoxPos> removable_boxes(const Partition& lambda, int p) {
  std::vector<BoxPos> out;
  for (std::size_t row = lambda.length(); row >= 1; --row) {
    if (lambda.part(row) > lambda.part(row + 1))
      out.push_back(make_box(row, static_cast<std::size_t>(lambda.part(row)), p));
  }
  return out;
}

Partition p_core(const Partition& lambda, int p) {
  return core_with(lambda, p, [](std::size_t) { return std::size_t{0}; });
}

Partition p_core_random_order(const Partition& lambda, int p, Rng& rng) {
  return core_with(lambda, p, [&rng](std::size_t n) {
    return static_cast<std::size_t>(rng.below(n));
  });
}

std::size_t removable_rim_hooks(const Partition& lambda, int p) {
  return movable_beads(beta_numbers(lambda, lambda.length()), p).size();
}

Partition rho(int p, int k) {
  if (k < 0) throw InvalidArgument("rho: k must be non-negative");
  require_small_prime(p);
  std::vector<int> parts;
  for (int v = k; v >= 1; --v)
    for (int c = 0; c < p - 1; ++c) parts.push_back(v);
  return Partition(std::move(parts));
}

std::vector<BoxPos> conormal_boxes(const Partition& lambda, int p, int residue, SignatureRule rule) {
  if (!is_p_regular(lambda, p)) throw InvalidArgument("conormal_boxes: partition is not p-regular");
  if (residue < 0 || residue >= p) throw InvalidArgument("conormal_boxes: residue out of range");
  struct Sign {
    BoxPos box;
    bool addable;
  };
  std::vector<Sign> word;
  for (const auto& b : addable_boxes(lambda, p))
    if (b.residue == residue) word.push_back({b, true});
  for (const auto& b : removable_boxes(lambda, p))
    if (b.residue == residue) word.push_back({b, false});
  std::sort(word.begin(), word.end(), [](const Sign& a, const Sign& b) { return a.box.col < b.box.col; });

  // Stack reduction removes every cancelling adjacency, repeatedly.
  std::vector<Sign> stack;
  for (const auto& s : word) {
    const bool cancels = !stack.empty() && (rule == SignatureRule::CancelMinusPlus ? (!stack.back().addable && s.addable)
                                                                                   : (stack.back().addable && !s.addable));
    if (cancels) {
      stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  std::vector<BoxPos> out;
  for (const auto& s : stack)
    if (s.addable) out.push_back(s.box);
  return out;
}

std::optional<BoxPos> cogood_box(const Partition& lambda, int p, int residue, SignatureRule rule) {
  auto boxes = conormal_boxes(lambda, p, residue, rule);
  if (boxes.empty()) return std::nullopt;
  return boxes.back();
}

std::vector<Partition> greedy_to_rho(const Partition& lambda, int p) {
  if (lambda.empty()) throw InvalidArgument("greedy_to_rho: partition must be non-empty");
  if (!is_p_regular(lambda, p)) throw InvalidArgument("greedy_to_rho: partition is not p-regular");
  const Partition target = rho(p, lambda.part(1));
  std::vector<Partition> chain;
  Partition cur = lambda;
  const int guard = target.size() + 1;
  while (!(cur == target)) {
    if (cur.size() >= guard) throw Error("greedy_to_rho: chain does not reach rho (step guard hit)");
    bool moved = false;
    for (const auto& b : addable_boxes(cur, p)) {  // increasing column
      Partition next = cur.with_box_added(b.row);
      if (is_p_regular(next, p)) {
        cur = std::move(next);
        moved = true;
        break;
      }
    }
    if (!moved) throw Error("greedy_to_rho: no p-regular addition available");
    chain.push_back(cur);
  }
  return chain;
}

BoxPos added_box(const Partition& before, const Partition& after, int p) {
  if (after.size() != before.size() + 1 || !after.contains(before))
    throw InvalidArgument("added_box: partitions do not differ by one box");
  for (std::size_t row = 1; row <= after.length(); ++row) {
    if (after.part(row) != before.part(row)) return make_box(row, static_cast<std::size_t>(after.part(row)), p);
  }
  throw InvalidArgument("added_box: partitions do not differ by one box");
}

int ell_p(int p, std::uint64_t a) {
  if (p < 2) throw InvalidArgument("ell_p: p must be at least 2");
  int l = 0;
  std::uint64_t power = 1;
  // a < p^l; stop before power overflows
  while (a >= power) {
    ++l;
    if (power > UINT64_MAX / static_cast<std::uint64_t>(p)) break;
    power *= static_cast<std::uint64_t>(p);
  }
  return l;
}

namespace {

std::uint64_t checked_pow(int p, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > UINT64_MAX / static_cast<std::uint64_t>(p)) throw InvalidArgument("power of p overflows 64 bits");
    r *= static_cast<std::uint64_t>(p);
  }
  return r;
}

}  // namespace

bool james_condition(const Partition& mu, int p) {
  for (std::size_t i = 1; i < mu.length(); ++i) {
    const std::uint64_t modulus = checked_pow(p, ell_p(p, static_cast<std::uint64_t>(mu.part(i + 1))));
    if ((static_cast<std::uint64_t>(mu.part(i)) + 1) % modulus != 0) return false;
  }
  return true;
}

Partition james_envelope(const Partition& lambda, int p) {
  if (lambda.empty()) throw InvalidArgument("james_envelope: partition must be non-empty");
  std::vector<int> mu(lambda.length());
  mu.back() = lambda.part(1);
  for (std::size_t i = mu.size() - 1; i-- > 0;) {
    const std::uint64_t next = checked_pow(p, ell_p(p, static_cast<std::uint64_t>(mu[i + 1]))) - 1;
    if (next > static_cast<std::uint64_t>(INT32_MAX)) throw InvalidArgument("james_envelope: part overflows");
    mu[i] = static_cast<int>(next);
  }
  return Partition(std::move(mu));
}

std::uint64_t sasha_bound(int p, std::uint64_t n) {
  if (n < 1) throw InvalidArgument("sasha_bound: n must be positive");
  const std::uint64_t factor = checked_pow(p, ell_p(p, n)) - 1;
  const std::uint64_t a = n * static_cast<std::uint64_t>(p - 1);
  if (a / static_cast<std::uint64_t>(p - 1) != n || (factor != 0 && a > UINT64_MAX / factor))
    throw InvalidArgument("sasha_bound: result overflows 64 bits");
  return a * factor;
}

}  // namespace verlinde
