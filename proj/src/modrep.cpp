#include "verlinde/modrep.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "verlinde/errors.hpp"

namespace verlinde {

using gfp::Element;
using gfp::Matrix;
using gfp::Vector;

namespace {

using Operator = std::function<void(std::span<const Element>, std::span<Element>)>;

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

// Matrix (in column convention) of the operator restricted to an invariant subspace.
Matrix induced_on_subspace(int p, const gfp::EchelonBasis& sub, const Operator& op) {
  const std::size_t r = sub.rank();
  Matrix m(p, r, r);
  Vector w(sub.ambient_dim());
  for (std::size_t k = 0; k < r; ++k) {
    op(sub.rows()[k], w);
    if (!sub.contains(w)) throw InvalidArgument("subspace is not invariant under the action");
    Vector c = sub.coordinates(w);
    for (std::size_t i = 0; i < r; ++i) m(i, k) = c[i];
  }
  return m;
}

// Action on V / sub in the complement spanned by the non-pivot standard vectors.
Matrix induced_on_quotient(int p, const gfp::EchelonBasis& sub, const Operator& op) {
  const auto free = sub.free_columns();
  const std::size_t n = sub.ambient_dim();
  Matrix m(p, free.size(), free.size());
  Vector w(n);
  for (std::size_t k = 0; k < free.size(); ++k) {
    op(unit_vector(n, free[k]), w);
    sub.reduce(w);
    for (std::size_t i = 0; i < free.size(); ++i) m(i, k) = w[free[i]];
  }
  return m;
}

// Kernel of any matrix whose row space is `rows`.
gfp::EchelonBasis kernel_of_row_space(const gfp::EchelonBasis& rows) {
  const gfp::Field& f = gfp::Field::get(rows.p());
  const std::size_t n = rows.ambient_dim();
  gfp::EchelonBasis ker(rows.p(), n);
  for (std::size_t c : rows.free_columns()) {
    Vector x(n, 0);
    x[c] = 1;
    for (std::size_t k = 0; k < rows.rank(); ++k) x[rows.pivots()[k]] = f.neg(rows.rows()[k][c]);
    ker.insert(std::move(x));
  }
  return ker;
}

// Span of (s_k + sign) e_J over adjacent transpositions s_k and all basis indices J.
gfp::EchelonBasis transposition_span(const PowerSpace& space, int sign) {
  const gfp::Field& f = gfp::Field::get(space.p());
  const Element s = f.from_int(sign);
  gfp::EchelonBasis span(space.p(), space.dim());
  for (unsigned k = 0; k + 1 < space.degree(); ++k) {
    std::vector<unsigned> perm(space.degree());
    std::iota(perm.begin(), perm.end(), 0u);
    std::swap(perm[k], perm[k + 1]);
    const auto map = space.permutation_action(perm);
    for (std::size_t j = 0; j < space.dim(); ++j) {
      if (map[j] < j) continue;  // the pair {J, sJ} gives the same vector up to scalar
      Vector v(space.dim(), 0);
      v[map[j]] = f.add(v[map[j]], 1);
      v[j] = f.add(v[j], s);
      span.insert(std::move(v));
    }
  }
  return span;
}

Operator nilpotent_of(const PowerSpace& space) {
  return [&space](std::span<const Element> x, std::span<Element> y) { space.apply_nilpotent(x, y); };
}

template <typename F>
void for_each_permutation(unsigned n, F&& visit) {
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    visit(std::span<const unsigned>(perm), permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

// ---------------------------------------------------------------------------
// JordanType

JordanType::JordanType(int p) : p_(p), blocks_(static_cast<std::size_t>(p), 0) { require_small_prime(p); }

JordanType::JordanType(int p, std::vector<std::uint64_t> blocks) : p_(p), blocks_(std::move(blocks)) {
  require_small_prime(p);
  if (blocks_.size() != static_cast<std::size_t>(p))
    throw InvalidArgument("JordanType: expected " + std::to_string(p) + " block multiplicities");
}

JordanType JordanType::block(int p, int size, std::uint64_t multiplicity) {
  JordanType t(p);
  if (size < 1 || size > p) throw InvalidArgument("JordanType: block size out of range 1..p");
  t[size] = multiplicity;
  return t;
}

std::uint64_t JordanType::dim() const {
  std::uint64_t d = 0;
  for (std::size_t s = 0; s < blocks_.size(); ++s) d += (s + 1) * blocks_[s];
  return d;
}

std::uint64_t JordanType::block_count() const { return std::accumulate(blocks_.begin(), blocks_.end(), std::uint64_t{0}); }

JordanType& JordanType::operator+=(const JordanType& rhs) {
  if (rhs.p_ != p_) throw InvalidArgument("JordanType: mismatched p");
  for (std::size_t s = 0; s < blocks_.size(); ++s) blocks_[s] += rhs.blocks_[s];
  return *this;
}

std::string JordanType::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t s = 0; s < blocks_.size(); ++s) {
    if (blocks_[s] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (blocks_[s] != 1) out << blocks_[s] << '*';
    out << 'J' << s + 1;
  }
  return first ? "0" : out.str();
}

// ---------------------------------------------------------------------------
// CyclicRep

CyclicRep::CyclicRep(Matrix nilpotent) : n_(std::move(nilpotent)) {
  if (!n_.is_square()) throw InvalidArgument("CyclicRep: nilpotent part must be square");
  if (n_.rows() > 0 && !gfp::power(n_, static_cast<std::size_t>(n_.p())).is_zero())
    throw InvalidArgument("CyclicRep: N^p must vanish");
}

CyclicRep CyclicRep::from_jordan_type(const JordanType& type) {
  const int p = type.p();
  Matrix n(p, type.dim(), type.dim());
  std::size_t offset = 0;
  for (int s = 1; s <= p; ++s) {
    for (std::uint64_t b = 0; b < type[s]; ++b) {
      for (int k = 1; k < s; ++k) n(offset + k - 1, offset + k) = 1;
      offset += s;
    }
  }
  return CyclicRep(std::move(n));
}

CyclicRep CyclicRep::trivial(int p, std::size_t dim) { return CyclicRep(Matrix(p, dim, dim)); }

Matrix CyclicRep::generator() const { return Matrix::identity(p(), dim()) + n_; }

JordanType jordan_type_of(const CyclicRep& v) {
  const int p = v.p();
  std::vector<std::size_t> ranks{v.dim()};
  Matrix power = v.nilpotent();
  for (int s = 1; s <= p; ++s) {
    ranks.push_back(v.dim() == 0 ? 0 : gfp::rank(power));
    if (s < p) power = power * v.nilpotent();
  }
  ranks.push_back(0);
  JordanType t(p);
  for (int s = 1; s <= p; ++s) t[s] = ranks[s - 1] - 2 * ranks[s] + ranks[s + 1];
  return t;
}

JordanType jordan_type_from_operator(int p, std::size_t dim, const Operator& apply) {
  // W_r = N^r V is spanned by N applied to a basis of W_{r-1}.
  std::vector<std::size_t> ranks{dim};
  std::vector<Vector> basis;
  basis.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(unit_vector(dim, i));
  Vector w(dim);
  for (int s = 1; s <= p + 1 && !basis.empty(); ++s) {
    gfp::EchelonBasis next(p, dim);
    for (const auto& b : basis) {
      apply(b, w);
      next.insert(w);
    }
    basis = next.rows();
    ranks.push_back(next.rank());
  }
  ranks.resize(static_cast<std::size_t>(p) + 2, 0);
  if (ranks[static_cast<std::size_t>(p)] != 0) throw InvalidArgument("operator is not nilpotent of order p");
  JordanType t(p);
  for (int s = 1; s <= p; ++s) t[s] = ranks[s - 1] - 2 * ranks[s] + ranks[s + 1];
  return t;
}

CyclicRep direct_sum(const CyclicRep& v, const CyclicRep& w) {
  if (v.p() != w.p()) throw InvalidArgument("direct_sum: mismatched p");
  return CyclicRep(gfp::direct_sum(v.nilpotent(), w.nilpotent()));
}

CyclicRep tensor(const CyclicRep& v, const CyclicRep& w, std::size_t cap) {
  if (v.p() != w.p()) throw InvalidArgument("tensor: mismatched p");
  check_cap(v.dim() * w.dim(), cap, "tensor");
  Matrix g = gfp::kronecker(v.generator(), w.generator());
  return CyclicRep(g - Matrix::identity(v.p(), g.rows()));
}

CyclicRep conjugate(const CyclicRep& v, const Matrix& change_of_basis) {
  return CyclicRep(change_of_basis * v.nilpotent() * gfp::inverse(change_of_basis));
}

// ---------------------------------------------------------------------------
// PowerSpace

PowerSpace::PowerSpace(CyclicRep base, unsigned degree, std::size_t cap)
    : base_(std::move(base)), degree_(degree), generator_(base_.generator()) {
  dim_ = saturating_pow(base_.dim(), degree);
  check_cap(dim_, cap, "tensor power");
}

PowerSpace power_space(const CyclicRep& v, unsigned n, std::size_t cap) { return PowerSpace(v, n, cap); }

std::vector<std::size_t> PowerSpace::digits(std::size_t index) const {
  const std::size_t d = base_.dim();
  std::vector<std::size_t> out(degree_);
  for (std::size_t t = degree_; t-- > 0;) {
    out[t] = index % d;
    index /= d;
  }
  return out;
}

std::size_t PowerSpace::index(std::span<const std::size_t> digits) const {
  std::size_t i = 0;
  for (std::size_t dgt : digits) i = i * base_.dim() + dgt;
  return i;
}

void PowerSpace::apply_generator(std::span<const Element> x, std::span<Element> y) const {
  const gfp::Field& f = gfp::Field::get(p());
  const std::size_t d = base_.dim();
  Vector cur(x.begin(), x.end());
  Vector next(dim_);
  std::size_t stride = dim_;
  for (unsigned t = 0; t < degree_; ++t) {
    stride /= d;
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t outer = 0; outer < dim_; outer += d * stride) {
      for (std::size_t a = 0; a < d; ++a) {
        std::span<Element> dst(next.data() + outer + a * stride, stride);
        for (std::size_t b = 0; b < d; ++b) {
          gfp::axpy(f, generator_(a, b), std::span<const Element>(cur.data() + outer + b * stride, stride), dst);
        }
      }
    }
    cur.swap(next);
  }
  std::copy(cur.begin(), cur.end(), y.begin());
}

void PowerSpace::apply_nilpotent(std::span<const Element> x, std::span<Element> y) const {
  apply_generator(x, y);
  const gfp::Field& f = gfp::Field::get(p());
  for (std::size_t i = 0; i < dim_; ++i) y[i] = f.sub(y[i], x[i]);
}

std::vector<std::size_t> PowerSpace::permutation_action(std::span<const unsigned> perm) const {
  if (perm.size() != degree_) throw InvalidArgument("permutation has wrong length");
  std::vector<std::size_t> map(dim_);
  std::vector<std::size_t> moved(degree_);
  for (std::size_t j = 0; j < dim_; ++j) {
    auto dg = digits(j);
    for (unsigned i = 0; i < degree_; ++i) moved[perm[i]] = dg[i];
    map[j] = index(moved);
  }
  return map;
}

Matrix PowerSpace::permutation_matrix(std::span<const unsigned> perm) const {
  const auto map = permutation_action(perm);
  Matrix m(p(), dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m(map[j], j) = 1;
  return m;
}

Matrix PowerSpace::transposition_matrix(unsigned k) const {
  if (k + 1 >= degree_) throw InvalidArgument("transposition index out of range");
  std::vector<unsigned> perm(degree_);
  std::iota(perm.begin(), perm.end(), 0u);
  std::swap(perm[k], perm[k + 1]);
  return permutation_matrix(perm);
}

CyclicRep PowerSpace::as_rep() const {
  Matrix n(p(), dim_, dim_);
  Vector y(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    apply_nilpotent(unit_vector(dim_, j), y);
    for (std::size_t i = 0; i < dim_; ++i) n(i, j) = y[i];
  }
  return CyclicRep(std::move(n));
}

// ---------------------------------------------------------------------------
// Powers

int permutation_sign(std::span<const unsigned> perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  return inversions % 2 == 0 ? 1 : -1;
}

CyclicRep skew_image(const CyclicRep& v, unsigned n, std::size_t cap) {
  const int p = v.p();
  if (n > v.dim()) return CyclicRep(Matrix(p, 0, 0));
  PowerSpace space(v, n, cap);
  const gfp::Field& f = gfp::Field::get(p);

  // a_n e_J for strictly increasing J spans the image.
  std::vector<std::vector<std::size_t>> perm_maps;
  std::vector<Element> signs;
  for_each_permutation(n, [&](std::span<const unsigned> perm, int sign) {
    perm_maps.push_back(space.permutation_action(perm));
    signs.push_back(f.from_int(sign));
  });
  gfp::EchelonBasis image(p, space.dim());
  std::vector<std::size_t> j(n);
  std::iota(j.begin(), j.end(), std::size_t{0});
  while (true) {
    const std::size_t idx = space.index(j);
    Vector col(space.dim(), 0);
    for (std::size_t s = 0; s < perm_maps.size(); ++s) col[perm_maps[s][idx]] = f.add(col[perm_maps[s][idx]], signs[s]);
    image.insert(std::move(col));
    // next strictly increasing tuple
    int t = static_cast<int>(n) - 1;
    while (t >= 0 && j[t] == v.dim() - n + t) --t;
    if (t < 0) break;
    ++j[t];
    for (std::size_t u = t + 1; u < n; ++u) j[u] = j[u - 1] + 1;
  }
  return CyclicRep(induced_on_subspace(p, image, nilpotent_of(space)));
}

CyclicRep divided_power(const CyclicRep& v, unsigned n, std::size_t cap) {
  PowerSpace space(v, n, cap);
  auto fixed = kernel_of_row_space(transposition_span(space, -1));
  return CyclicRep(induced_on_subspace(v.p(), fixed, nilpotent_of(space)));
}

CyclicRep symmetric_power(const CyclicRep& v, unsigned n, std::size_t cap) {
  PowerSpace space(v, n, cap);
  return CyclicRep(induced_on_quotient(v.p(), transposition_span(space, -1), nilpotent_of(space)));
}

CyclicRep exterior_invariants(const CyclicRep& v, unsigned n, std::size_t cap) {
  PowerSpace space(v, n, cap);
  auto sign_space = kernel_of_row_space(transposition_span(space, 1));
  return CyclicRep(induced_on_subspace(v.p(), sign_space, nilpotent_of(space)));
}

CyclicRep exterior_coinvariants(const CyclicRep& v, unsigned n, std::size_t cap) {
  PowerSpace space(v, n, cap);
  return CyclicRep(induced_on_quotient(v.p(), transposition_span(space, 1), nilpotent_of(space)));
}

CyclicRep fr_plus(const CyclicRep& v, unsigned j, std::size_t cap) {
  const int p = v.p();
  const std::size_t n = saturating_pow(static_cast<std::size_t>(p), j);
  if (n > 64) throw CapExceeded("fr_plus: p^j too large");
  PowerSpace space(v, static_cast<unsigned>(n), cap);

  // (s - 1) images span the kernel of V^{(x)n} -> S^n; their orthogonal complement is Gamma^n.
  auto relations = transposition_span(space, -1);
  auto gamma = kernel_of_row_space(relations);
  gfp::EchelonBasis image(p, space.dim());
  for (Vector g : gamma.rows()) {
    relations.reduce(g);
    image.insert(std::move(g));
  }
  const auto op = nilpotent_of(space);
  const std::size_t r = image.rank();
  Matrix action(p, r, r);
  Vector w(space.dim());
  for (std::size_t k = 0; k < r; ++k) {
    op(image.rows()[k], w);
    relations.reduce(w);
    if (!image.contains(w)) throw InvalidArgument("fr_plus: image is not invariant");
    Vector c = image.coordinates(w);
    for (std::size_t i = 0; i < r; ++i) action(i, k) = c[i];
  }
  return CyclicRep(std::move(action));
}

// ---------------------------------------------------------------------------
// Semisimplification

VerObject semisimplify(const JordanType& type) {
  VerObject x(type.p());
  for (int i = 1; i < type.p(); ++i) x[i] = type[i];
  return x;
}

VerObject semisimplify(const CyclicRep& v) { return semisimplify(jordan_type_of(v)); }

EndoClass::EndoClass(CyclicRep base, Matrix matrix) : base_(std::move(base)), matrix_(std::move(matrix)) {
  if (matrix_.p() != base_.p() || matrix_.rows() != base_.dim() || matrix_.cols() != base_.dim())
    throw InvalidArgument("EndoClass: matrix shape does not match the module");
  if (!(matrix_ * base_.nilpotent() == base_.nilpotent() * matrix_))
    throw InvalidArgument("EndoClass: matrix does not commute with the group action");
}

Matrix negligible_pairing(const EndoClass& f, int i) {
  const CyclicRep& v = f.base();
  const int p = v.p();
  if (i < 1 || i >= p) throw InvalidArgument("negligible_pairing: index out of range 1..p-1");
  if (v.dim() == 0) return Matrix(p, 0, 0);
  const Matrix& n = v.nilpotent();
  const Matrix top = gfp::power(n, static_cast<std::size_t>(i - 1));
  const Matrix ni = top * n;
  const Matrix homs_in = gfp::kernel(ni);        // rows v: iota(top of J_i) = v
  const Matrix homs_out = gfp::left_kernel(ni);  // rows phi: first coordinate of pi
  Matrix pairing = homs_out * (top * f.matrix()) * homs_in.transpose();
  const Element scale = gfp::Field::get(p).from_int(i);
  const gfp::Field& fld = gfp::Field::get(p);
  for (std::size_t r = 0; r < pairing.rows(); ++r)
    for (std::size_t c = 0; c < pairing.cols(); ++c) pairing(r, c) = fld.mul(pairing(r, c), scale);
  return pairing;
}

VerObject image_in_semisimplification(const EndoClass& f) {
  const int p = f.base().p();
  VerObject x(p);
  for (int i = 1; i < p; ++i) {
    Matrix m = negligible_pairing(f, i);
    x[i] = (m.rows() == 0 || m.cols() == 0) ? 0 : gfp::rank(m);
  }
  return x;
}

Matrix skew_symmetrizer(const PowerSpace& space) {
  const gfp::Field& f = gfp::Field::get(space.p());
  Matrix a(space.p(), space.dim(), space.dim());
  for_each_permutation(space.degree(), [&](std::span<const unsigned> perm, int sign) {
    const auto map = space.permutation_action(perm);
    const Element s = f.from_int(sign);
    for (std::size_t j = 0; j < space.dim(); ++j) a(map[j], j) = f.add(a(map[j], j), s);
  });
  return a;
}

CyclicRep lift(const VerObject& x) {
  JordanType t(x.p());
  for (int i = 1; i < x.p(); ++i) t[i] = x[i];
  return CyclicRep::from_jordan_type(t);
}

VerObject alt_power_ver_direct(const VerObject& x, unsigned n, std::size_t cap) {
  const int p = x.p();
  if (n == 0) return VerObject::simple(p, 1);
  if (n > x.lift_dim()) return VerObject(p);
  PowerSpace space(lift(x), n, cap);
  return image_in_semisimplification(EndoClass(space.as_rep(), skew_symmetrizer(space)));
}

namespace {

// A^k L_i for k = 0..degree, grown on demand.
const std::vector<VerObject>& simple_alt_series(int p, int i, unsigned degree, std::size_t cap) {
  static std::map<std::pair<int, int>, std::vector<VerObject>> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto& series = cache[{p, i}];
  const unsigned top = std::min<unsigned>(degree, static_cast<unsigned>(i));
  while (series.size() <= top) {
    series.push_back(alt_power_ver_direct(VerObject::simple(p, i), static_cast<unsigned>(series.size()), cap));
  }
  return series;
}

}  // namespace

VerObject alt_power_ver(const VerObject& x, unsigned n, std::size_t cap) {
  const int p = x.p();
  if (n == 0) return VerObject::simple(p, 1);
  if (n > x.lift_dim()) return VerObject(p);
  std::vector<VerObject> total(n + 1, VerObject(p));
  total[0] = VerObject::simple(p, 1);
  for (int i = 1; i < p; ++i) {
    if (x[i] == 0) continue;
    const auto& s = simple_alt_series(p, i, n, cap);
    for (std::uint64_t copy = 0; copy < x[i]; ++copy) {
      std::vector<VerObject> next(n + 1, VerObject(p));
      for (unsigned a = 0; a <= n; ++a) {
        if (total[a].is_zero()) continue;
        for (unsigned b = 0; b < s.size() && a + b <= n; ++b) next[a + b] += fuse(total[a], s[b]);
      }
      total = std::move(next);
    }
  }
  return total[n];
}

JordanType tensor_power_type(const CyclicRep& v, unsigned n, std::size_t cap) {
  PowerSpace space(v, n, cap);
  return jordan_type_from_operator(v.p(), space.dim(), nilpotent_of(space));
}

std::uint64_t delta_n(const CyclicRep& v, unsigned n, std::size_t cap) {
  const JordanType t = tensor_power_type(v, n, cap);
  return t.block_count() - t[t.p()];
}

JordanType stable_jordan_type(const JordanType& type) {
  JordanType t = type;
  t[t.p()] = 0;
  return t;
}

std::vector<JordanType> jordan_types_of_dim(int p, std::uint64_t dim) {
  std::vector<JordanType> out;
  std::function<void(int, std::uint64_t, JordanType&)> rec = [&](int size, std::uint64_t rest, JordanType& t) {
    if (rest == 0) {
      out.push_back(t);
      return;
    }
    if (size > p) return;
    for (std::uint64_t m = 0; m * static_cast<std::uint64_t>(size) <= rest; ++m) {
      t[size] = m;
      rec(size + 1, rest - m * static_cast<std::uint64_t>(size), t);
    }
    t[size] = 0;
  };
  JordanType t(p);
  rec(1, dim, t);
  return out;
}

JordanType jordan_type_at(const Matrix& m, const Matrix& alpha) {
  if (!m.is_square() || !alpha.is_square() || m.rows() != alpha.rows() || m.p() != alpha.p())
    throw InvalidArgument("jordan_type_at: shapes do not match");
  if (alpha.rows() > 0 && !gfp::power(alpha, static_cast<std::size_t>(alpha.p())).is_zero())
    throw InvalidArgument("jordan_type_at: alpha^p must vanish");
  if (!(m * alpha == alpha * m)) throw InvalidArgument("jordan_type_at: alpha does not commute with the module matrix");
  return jordan_type_of(CyclicRep(alpha));
}

}  // namespace verlinde
