#pragma once

/**
 * @file fusion.hpp
 * @brief The Verlinde category Ver_p as a based fusion ring.
 *
 * Simples are L_1 = 1, ..., L_{p-1}. Fusion follows the truncated
 * Clebsch-Gordan rule
 *
 *     L_i (x) L_j = sum of L_k, k = |i-j|+1, |i-j|+3, ..., min(i+j-1, 2p-1-i-j).
 *
 * The Frobenius functor Fr : Ver_p -> Ver_p [x] Ver_p and its enhanced version
 * are modelled on multiplicity data only.
 */

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "verlinde/cyclotomic.hpp"

namespace verlinde {

/// An object of Ver_p as multiplicities of L_1..L_{p-1}.
class VerObject {
 public:
  explicit VerObject(int p);
  VerObject(int p, std::vector<std::uint64_t> mult);

  static VerObject simple(int p, int i);

  int p() const { return p_; }
  const std::vector<std::uint64_t>& mult() const { return mult_; }
  /// Multiplicity of L_i, 1-based.
  std::uint64_t operator[](int i) const { return mult_.at(static_cast<std::size_t>(i - 1)); }
  std::uint64_t& operator[](int i) { return mult_.at(static_cast<std::size_t>(i - 1)); }

  bool is_zero() const;
  /// Total multiplicity.
  std::uint64_t length() const;
  /// Dimension of the projective-free lift to Rep C_p: sum of i * mult[i].
  std::uint64_t lift_dim() const;
  /// Each simple is self-dual.
  VerObject dual() const { return *this; }

  VerObject& operator+=(const VerObject& rhs);
  friend VerObject operator+(VerObject a, const VerObject& b) { return a += b; }
  VerObject& operator*=(std::uint64_t k);
  friend VerObject operator*(VerObject a, std::uint64_t k) { return a *= k; }
  friend bool operator==(const VerObject& a, const VerObject& b) = default;

  /// Shorthand rendering such as "L1 + 2*L3"; "0" for the zero object.
  std::string to_string() const;

 private:
  int p_;
  std::vector<std::uint64_t> mult_;
};

/// An object of Ver_p [x] Ver_p; entry (i, j) is the multiplicity of L_i [x] L_j (1-based).
class VerPair {
 public:
  explicit VerPair(int p);

  int p() const { return p_; }
  std::size_t size() const { return n_; }
  std::uint64_t operator()(int i, int j) const { return mult_.at(index(i, j)); }
  std::uint64_t& operator()(int i, int j) { return mult_.at(index(i, j)); }
  std::vector<std::vector<std::uint64_t>> as_rows() const;

  VerPair& operator+=(const VerPair& rhs);
  friend bool operator==(const VerPair& a, const VerPair& b) = default;

  /// The object collecting the second legs: sum over i of (i, j) entries.
  VerObject second_component() const;
  VerObject first_component() const;

 private:
  std::size_t index(int i, int j) const;

  int p_;
  std::size_t n_;
  std::vector<std::uint64_t> mult_;
};

/**
 * An object of Ver_p [x] Ver_p^en with Ver_p^en = Ver_p^+ [x] Rep(Z/2(p-1), z).
 *
 * Keys are (i, j, a): the first leg L_i in Ver_p, then the odd-index simple L_j of
 * Ver_p^+ and the character a mod 2(p-1). The sign object S-bar is a = p - 1.
 */
class EnhancedObject {
 public:
  using Key = std::tuple<int, int, int>;

  explicit EnhancedObject(int p);

  int p() const { return p_; }
  const std::map<Key, std::uint64_t>& terms() const { return terms_; }
  void add(int i, int j, int character, std::uint64_t multiplicity);
  /// The Ver_p^en part only, forgetting the first leg.
  std::map<std::pair<int, int>, std::uint64_t> enhanced_part() const;

  friend bool operator==(const EnhancedObject& a, const EnhancedObject& b) = default;

 private:
  int p_;
  std::map<Key, std::uint64_t> terms_;
};

/// Character label of the sign object S-bar in Rep(Z/2(p-1), z).
int sign_character(int p);

VerObject fuse_simples(int p, int i, int j);
VerObject fuse(const VerObject& x, const VerObject& y);

CycNum fpdim(const VerObject& x);
/// Categorical dimension sum i * mult[i] reduced mod p.
int cat_dim_mod_p(const VerObject& x);

VerPair frobenius(const VerObject& x);
/// Componentwise fusion (A [x] B)(C [x] D) = (A C) [x] (B D).
VerPair fuse_pairs(const VerPair& a, const VerPair& b);
/// Applies frobenius, then fuses the two legs inside Ver_p.
VerObject frobenius_collapse(const VerObject& x);

EnhancedObject frobenius_enhanced(const VerObject& x);
/// R on a single Ver_p^en simple (L_j, chi_a): L_j for even a, L_j (x) L_{p-1} for odd a.
VerObject restrict_R(int p, int j, int character);
/// (id [x] R) applied to an enhanced object.
VerPair restrict_R(const EnhancedObject& e);

enum class FrobeniusType { Vec, sVec, VerPlus, VerP };

std::string to_string(FrobeniusType t);
FrobeniusType join(FrobeniusType a, FrobeniusType b);
/// Indices of simples in the fusion closure of the given support (always contains 1).
std::vector<int> fusion_closure(int p, const std::vector<int>& support);
FrobeniusType frobenius_type(const VerObject& x);

/// fpdim(x) lies in Z, i.e. x is supported on L_1 and L_{p-1}.
bool is_integral(const VerObject& x);

struct McKayEdge {
  int from;
  int to;
  std::uint64_t weight;
  friend bool operator==(const McKayEdge&, const McKayEdge&) = default;
};

struct McKayGraph {
  int p;
  std::vector<int> vertices;
  std::vector<McKayEdge> edges;
};

/// Vertices: simples of the fusion closure of x. Edge i -> j with weight [L_i (x) x : L_j].
McKayGraph mckay_graph(const VerObject& x);
/// True when the graph is the undirected path A_{p-1} on L_1 - L_2 - ... - L_{p-1} with unit weights.
bool is_dynkin_path(const McKayGraph& g, std::size_t length);

/// Length of x^{(x)n}.
mpz_class tensor_power_length(const VerObject& x, unsigned n);

}  // namespace verlinde
