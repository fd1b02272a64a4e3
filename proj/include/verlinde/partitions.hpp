#pragma once

/**
 * @file partitions.hpp
 * @brief Partition combinatorics for symmetric groups in characteristic p:
 * p-regularity, p-cores, conormal boxes, the greedy chain to rho_k, James'
 * divisibility condition and the faithfulness bound.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "verlinde/random.hpp"

namespace verlinde {

class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const;
  /// Part in 1-based row, 0 beyond the length.
  int part(std::size_t row) const { return row >= 1 && row <= parts_.size() ? parts_[row - 1] : 0; }
  /// Componentwise containment of Young diagrams.
  bool contains(const Partition& other) const;

  Partition with_box_added(std::size_t row) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  /// "(3,2,1)"; "()" for the empty partition.
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

struct BoxPos {
  std::size_t row;
  std::size_t col;
  int residue;  // (col - row) mod p
  friend bool operator==(const BoxPos&, const BoxPos&) = default;
};

BoxPos make_box(std::size_t row, std::size_t col, int p);

/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

bool is_p_regular(const Partition& lambda, int p);

/// Addable and removable boxes in increasing column order.
std::vector<BoxPos> addable_boxes(const Partition& lambda, int p);
std::vector<BoxPos> removable_boxes(const Partition& lambda, int p);

/// Removes rim p-hooks (on the abacus) in a fixed order until none remain.
Partition p_core(const Partition& lambda, int p);
/// Same with the hook to remove chosen uniformly at random at every step.
Partition p_core_random_order(const Partition& lambda, int p, Rng& rng);
/// Number of removable rim p-hooks.
std::size_t removable_rim_hooks(const Partition& lambda, int p);

/// (k^{p-1}, (k-1)^{p-1}, ..., 1^{p-1}).
Partition rho(int p, int k);

/**
 * Reading order and cancellation for the residue-r signature. Both read the
 * addable (+) and removable (-) boxes by increasing column.
 */
enum class SignatureRule {
  CancelMinusPlus,  // delete adjacent "-+" pairs (the default)
  CancelPlusMinus,  // delete adjacent "+-" pairs
};

std::vector<BoxPos> conormal_boxes(const Partition& lambda, int p, int residue,
                                   SignatureRule rule = SignatureRule::CancelMinusPlus);

/// The cogood box: the conormal box of largest column, if any.
std::optional<BoxPos> cogood_box(const Partition& lambda, int p, int residue,
                                 SignatureRule rule = SignatureRule::CancelMinusPlus);

/// Partitions obtained by adding, one at a time, the left-most box that keeps the partition p-regular,
/// until rho_{lambda_1} is reached. The start is not included.
std::vector<Partition> greedy_to_rho(const Partition& lambda, int p);
/// Box of `after` that is not in `before` (after = before plus one box).
BoxPos added_box(const Partition& before, const Partition& after, int p);

bool james_condition(const Partition& mu, int p);
Partition james_envelope(const Partition& lambda, int p);

/// Minimal l with a < p^l.
int ell_p(int p, std::uint64_t a);
std::uint64_t sasha_bound(int p, std::uint64_t n);

}  // namespace verlinde
