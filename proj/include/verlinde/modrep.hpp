#pragma once

/**
 * @file modrep.hpp
 * @brief Brute-force GF(p) realizations of C_p-modules.
 *
 * A module is a nilpotent matrix N with N^p = 0; the generator of C_p acts as
 * 1 + N. Tensor powers carry the symmetric-group action by permuting tensor
 * factors. Everything in this header is computed by explicit linear algebra
 * and serves as the oracle for the closed formulas in fusion.hpp.
 */

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "verlinde/config.hpp"
#include "verlinde/fusion.hpp"
#include "verlinde/gfp.hpp"

namespace verlinde {

/// Isomorphism class of a k[x]/x^p-module: blocks[s-1] = multiplicity of J_s, s = 1..p.
class JordanType {
 public:
  explicit JordanType(int p);
  JordanType(int p, std::vector<std::uint64_t> blocks);

  static JordanType block(int p, int size, std::uint64_t multiplicity = 1);

  int p() const { return p_; }
  const std::vector<std::uint64_t>& blocks() const { return blocks_; }
  std::uint64_t operator[](int size) const { return blocks_.at(static_cast<std::size_t>(size - 1)); }
  std::uint64_t& operator[](int size) { return blocks_.at(static_cast<std::size_t>(size - 1)); }

  std::uint64_t dim() const;
  std::uint64_t block_count() const;

  JordanType& operator+=(const JordanType& rhs);
  friend JordanType operator+(JordanType a, const JordanType& b) { return a += b; }
  friend bool operator==(const JordanType& a, const JordanType& b) = default;

  /// "J1 + 2*J3"; "0" when empty.
  std::string to_string() const;

 private:
  int p_;
  std::vector<std::uint64_t> blocks_;
};

/// Concrete C_p-module over GF(p) given by its nilpotent part.
class CyclicRep {
 public:
  /// Throws InvalidArgument unless N is square with N^p = 0.
  explicit CyclicRep(gfp::Matrix nilpotent);

  /// Standard upper-triangular realization: N e_1 = 0, N e_k = e_{k-1} within each block.
  static CyclicRep from_jordan_type(const JordanType& type);
  static CyclicRep trivial(int p, std::size_t dim);

  int p() const { return n_.p(); }
  std::size_t dim() const { return n_.rows(); }
  const gfp::Matrix& nilpotent() const { return n_; }
  gfp::Matrix generator() const;

 private:
  gfp::Matrix n_;
};

JordanType jordan_type_of(const CyclicRep& v);

/// Jordan type of an implicitly given nilpotent operator, from the ranks of its powers.
JordanType jordan_type_from_operator(int p, std::size_t dim,
                                     const std::function<void(std::span<const gfp::Element>, std::span<gfp::Element>)>& apply);

CyclicRep direct_sum(const CyclicRep& v, const CyclicRep& w);
/// Realizes V (x) W with nilpotent part (1+N_V)(x)(1+N_W) - 1.
CyclicRep tensor(const CyclicRep& v, const CyclicRep& w, std::size_t cap = default_cap());
/// The module P N P^{-1}.
CyclicRep conjugate(const CyclicRep& v, const gfp::Matrix& change_of_basis);

/// V^{(x)n} with its C_p-action (implicit) and S_n-action by permuting tensor factors.
class PowerSpace {
 public:
  PowerSpace(CyclicRep base, unsigned degree, std::size_t cap = default_cap());

  const CyclicRep& base() const { return base_; }
  unsigned degree() const { return degree_; }
  std::size_t dim() const { return dim_; }
  int p() const { return base_.p(); }

  /// Digits of a basis index, most significant factor first.
  std::vector<std::size_t> digits(std::size_t index) const;
  std::size_t index(std::span<const std::size_t> digits) const;

  /// y = g^{(x)n} x with g = 1 + N.
  void apply_generator(std::span<const gfp::Element> x, std::span<gfp::Element> y) const;
  /// y = (g^{(x)n} - 1) x.
  void apply_nilpotent(std::span<const gfp::Element> x, std::span<gfp::Element> y) const;

  /// Basis index map of the permutation: factor i of e_J moves to position perm[i].
  std::vector<std::size_t> permutation_action(std::span<const unsigned> perm) const;
  gfp::Matrix permutation_matrix(std::span<const unsigned> perm) const;
  /// Matrix of the adjacent transposition exchanging factors k and k+1 (0-based).
  gfp::Matrix transposition_matrix(unsigned k) const;

  /// Dense realization of the C_p-action on V^{(x)n}.
  CyclicRep as_rep() const;

 private:
  CyclicRep base_;
  unsigned degree_;
  std::size_t dim_;
  gfp::Matrix generator_;
};

PowerSpace power_space(const CyclicRep& v, unsigned n, std::size_t cap = default_cap());

/// Image of the skew-symmetrizer a_n on V^{(x)n} with its induced action (A^n V).
CyclicRep skew_image(const CyclicRep& v, unsigned n, std::size_t cap = default_cap());

/// Gamma^n V: joint fixed space of the transpositions.
CyclicRep divided_power(const CyclicRep& v, unsigned n, std::size_t cap = default_cap());
/// S^n V: coinvariants, the quotient by the images of s - 1.
CyclicRep symmetric_power(const CyclicRep& v, unsigned n, std::size_t cap = default_cap());
/// Lambda^n V: joint sign eigenspace of the transpositions.
CyclicRep exterior_invariants(const CyclicRep& v, unsigned n, std::size_t cap = default_cap());
/// wedge^n V: quotient by the images of s - sgn(s).
CyclicRep exterior_coinvariants(const CyclicRep& v, unsigned n, std::size_t cap = default_cap());

/// Fr_+^{(j)} V: image of Gamma^{p^j} V -> V^{(x)p^j} -> S^{p^j} V.
CyclicRep fr_plus(const CyclicRep& v, unsigned j, std::size_t cap = default_cap());

/// Drops J_p blocks; J_i maps to L_i.
VerObject semisimplify(const JordanType& type);
VerObject semisimplify(const CyclicRep& v);

/// A C_p-equivariant endomorphism of a concrete module.
class EndoClass {
 public:
  /// Throws InvalidArgument unless matrix commutes with the action of base.
  EndoClass(CyclicRep base, gfp::Matrix matrix);

  const CyclicRep& base() const { return base_; }
  const gfp::Matrix& matrix() const { return matrix_; }

 private:
  CyclicRep base_;
  gfp::Matrix matrix_;
};

/**
 * Image of f in the semisimplification, as an object of Ver_p.
 *
 * For each i < p, Hom(J_i, V) is identified with ker N^i (image of the top
 * vector of J_i) and Hom(V, J_i) with the left kernel of N^i (first coordinate
 * functional). The multiplicity of L_i in the image is the rank of the trace
 * pairing tr(pi o f o iota), which equals i * phi N^{i-1} f v.
 */
VerObject image_in_semisimplification(const EndoClass& f);

/// Pairing matrix for one simple, entries tr(pi_a o f o iota_b).
gfp::Matrix negligible_pairing(const EndoClass& f, int i);

/// Matrix of a_n = sum sgn(s) s on V^{(x)n}.
gfp::Matrix skew_symmetrizer(const PowerSpace& space);

/// Projective-free lift X^# of an object of Ver_p.
CyclicRep lift(const VerObject& x);

/// A^n X in Ver_p computed on the full lift: image of a_n on (X^#)^{(x)n}.
VerObject alt_power_ver_direct(const VerObject& x, unsigned n, std::size_t cap = default_cap());

/**
 * A^n X in Ver_p. Alternating powers of simples come from alt_power_ver_direct;
 * sums are assembled with A^n(X + Y) = sum_i A^i X (x) A^{n-i} Y.
 */
VerObject alt_power_ver(const VerObject& x, unsigned n, std::size_t cap = default_cap());

/// Number of non-projective Jordan blocks of V^{(x)n}.
std::uint64_t delta_n(const CyclicRep& v, unsigned n, std::size_t cap = default_cap());
/// Jordan type with the J_p multiplicity erased.
JordanType stable_jordan_type(const JordanType& type);
JordanType tensor_power_type(const CyclicRep& v, unsigned n, std::size_t cap = default_cap());

/// Jordan type of alpha, for a nilpotent alpha (alpha^p = 0) commuting with the supplied matrix m.
JordanType jordan_type_at(const gfp::Matrix& m, const gfp::Matrix& alpha);

/// Every Jordan type of the given dimension.
std::vector<JordanType> jordan_types_of_dim(int p, std::uint64_t dim);

/// Sign of a permutation given as an image list.
int permutation_sign(std::span<const unsigned> perm);

}  // namespace verlinde
