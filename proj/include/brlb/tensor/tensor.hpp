// Dense order-3 tensors T in A (x) B (x) C and the basic operations on them.
//
// Coordinates: entry (i,j,k) is stored at (i*b + j)*c + k. Flattenings and
// slice spaces list the two remaining indices lexicographically, and the
// Kronecker product pairs (i,i') to i*a' + i' in every factor.
#pragma once

#include <brlb/linalg/field.hpp>
#include <brlb/linalg/linalg.hpp>
#include <brlb/linalg/matrix.hpp>
#include <brlb/linalg/random.hpp>

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace brlb {

enum class Factor { A = 0, B = 1, C = 2 };

inline const char* factor_name(Factor f) {
  switch (f) {
    case Factor::A: return "A";
    case Factor::B: return "B";
    case Factor::C: return "C";
  }
  return "?";
}

inline Factor parse_factor(const std::string& s) {
  if (s == "A" || s == "a") return Factor::A;
  if (s == "B" || s == "b") return Factor::B;
  if (s == "C" || s == "c") return Factor::C;
  throw std::invalid_argument("unknown factor: " + s);
}

using Dims = std::array<std::size_t, 3>;

template <typename S>
class Tensor3 {
 public:
  using Scalar = S;

  Tensor3() = default;
  Tensor3(std::size_t a, std::size_t b, std::size_t c) : dims_{a, b, c}, data_(a * b * c, from_int<S>(0)) {}
  explicit Tensor3(Dims d) : Tensor3(d[0], d[1], d[2]) {}

  const Dims& dims() const { return dims_; }
  std::size_t a() const { return dims_[0]; }
  std::size_t b() const { return dims_[1]; }
  std::size_t c() const { return dims_[2]; }
  std::size_t dim(Factor f) const { return dims_[static_cast<int>(f)]; }
  bool is_cubic() const { return dims_[0] == dims_[1] && dims_[1] == dims_[2]; }

  S& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dims_[1] + j) * dims_[2] + k]; }
  const S& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dims_[1] + j) * dims_[2] + k];
  }

  const std::vector<S>& data() const { return data_; }

  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& x : data_) n += is_zero(x) ? 0 : 1;
    return n;
  }

  Tensor3& operator+=(const Tensor3& o) {
    if (dims_ != o.dims_) throw std::invalid_argument("tensor sum: dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Tensor3& operator-=(const Tensor3& o) {
    if (dims_ != o.dims_) throw std::invalid_argument("tensor difference: dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Tensor3& operator*=(const S& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Tensor3 operator+(Tensor3 x, const Tensor3& y) { return x += y; }
  friend Tensor3 operator-(Tensor3 x, const Tensor3& y) { return x -= y; }
  friend bool operator==(const Tensor3& x, const Tensor3& y) { return x.dims_ == y.dims_ && x.data_ == y.data_; }

  static Tensor3 outer(const std::vector<S>& u, const std::vector<S>& v, const std::vector<S>& w) {
    Tensor3 t(u.size(), v.size(), w.size());
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j)
        for (std::size_t k = 0; k < w.size(); ++k) t(i, j, k) = u[i] * v[j] * w[k];
    return t;
  }

  static Tensor3 random(Dims d, SeededRng& rng) {
    Tensor3 t(d);
    for (auto& x : t.data_) x = rng.scalar<S>();
    return t;
  }

 private:
  Dims dims_{0, 0, 0};
  std::vector<S> data_;
};

/// T(alpha) in B (x) C as a b x c matrix: sum_i alpha_i T^{ijk}.
template <typename S>
Matrix<S> contract_A(const Tensor3<S>& t, const std::vector<S>& alpha) {
  if (alpha.size() != t.a()) throw std::invalid_argument("contract_A: covector length != a");
  Matrix<S> m(t.b(), t.c(), "B", "C");
  for (std::size_t i = 0; i < t.a(); ++i) {
    if (is_zero(alpha[i])) continue;
    for (std::size_t j = 0; j < t.b(); ++j)
      for (std::size_t k = 0; k < t.c(); ++k) m(j, k) += alpha[i] * t(i, j, k);
  }
  return m;
}

/// T(beta) in A (x) C as an a x c matrix.
template <typename S>
Matrix<S> contract_B(const Tensor3<S>& t, const std::vector<S>& beta) {
  if (beta.size() != t.b()) throw std::invalid_argument("contract_B: covector length != b");
  Matrix<S> m(t.a(), t.c(), "A", "C");
  for (std::size_t i = 0; i < t.a(); ++i)
    for (std::size_t j = 0; j < t.b(); ++j) {
      if (is_zero(beta[j])) continue;
      for (std::size_t k = 0; k < t.c(); ++k) m(i, k) += beta[j] * t(i, j, k);
    }
  return m;
}

/// T(gamma) in A (x) B as an a x b matrix.
template <typename S>
Matrix<S> contract_C(const Tensor3<S>& t, const std::vector<S>& gamma) {
  if (gamma.size() != t.c()) throw std::invalid_argument("contract_C: covector length != c");
  Matrix<S> m(t.a(), t.b(), "A", "B");
  for (std::size_t i = 0; i < t.a(); ++i)
    for (std::size_t j = 0; j < t.b(); ++j)
      for (std::size_t k = 0; k < t.c(); ++k) m(i, j) += gamma[k] * t(i, j, k);
  return m;
}

template <typename S>
Matrix<S> contract(const Tensor3<S>& t, Factor f, const std::vector<S>& x) {
  switch (f) {
    case Factor::A: return contract_A(t, x);
    case Factor::B: return contract_B(t, x);
    case Factor::C: return contract_C(t, x);
  }
  throw std::invalid_argument("contract: bad factor");
}

/// The flattening with rows indexed by the basis of `f` and columns by the
/// remaining two factors in lexicographic order: row r is T(e_r*).
template <typename S>
Matrix<S> flattening(const Tensor3<S>& t, Factor f) {
  const auto [a, b, c] = t.dims();
  switch (f) {
    case Factor::A: {
      Matrix<S> m(a, b * c, "A*", "B(x)C");
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
          for (std::size_t k = 0; k < c; ++k) m(i, j * c + k) = t(i, j, k);
      return m;
    }
    case Factor::B: {
      Matrix<S> m(b, a * c, "B*", "A(x)C");
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
          for (std::size_t k = 0; k < c; ++k) m(j, i * c + k) = t(i, j, k);
      return m;
    }
    case Factor::C: {
      Matrix<S> m(c, a * b, "C*", "A(x)B");
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
          for (std::size_t k = 0; k < c; ++k) m(k, i * b + j) = t(i, j, k);
      return m;
    }
  }
  throw std::invalid_argument("flattening: bad factor");
}

/// T(A*) inside B (x) C (and symmetrically).
template <typename S>
Subspace<S> slice_space(const Tensor3<S>& t, Factor f) {
  return Subspace<S>::span(flattening(t, f), std::string("T(") + factor_name(f) + "*)");
}

struct Conciseness {
  bool concise = false;
  Dims slice_dims{0, 0, 0};
};

template <typename S>
Conciseness is_concise(const Tensor3<S>& t) {
  Conciseness r;
  for (int f = 0; f < 3; ++f) r.slice_dims[f] = rank(flattening(t, static_cast<Factor>(f)));
  r.concise = r.slice_dims == t.dims();
  return r;
}

template <typename S>
struct Genericity {
  std::size_t max_rank = 0;
  std::vector<S> witness;
  bool generic = false;   // max_rank == full slice rank
  bool sampled = true;    // false when the witness was supplied by the caller
};

/// Rank of T(x) for a caller-supplied covector x.
template <typename S>
Genericity<S> genericity_with_witness(const Tensor3<S>& t, Factor f, std::vector<S> witness) {
  Genericity<S> g;
  const auto m = contract(t, f, witness);
  g.max_rank = rank(m);
  g.witness = std::move(witness);
  g.generic = g.max_rank == std::min(m.rows(), m.cols());
  g.sampled = false;
  return g;
}

/// Maximum slice rank over `trials` seeded random covectors; a tensor is
/// reported 1_f-generic when the maximum reaches min of the slice dimensions.
template <typename S>
Genericity<S> genericity_rank(const Tensor3<S>& t, Factor f, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("genericity_rank: trials must be positive");
  SeededRng rng(seed);
  Genericity<S> best;
  const std::size_t n = t.dim(f);
  std::size_t full = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    auto x = rng.vector<S>(n);
    const auto m = contract(t, f, x);
    full = std::min(m.rows(), m.cols());
    const auto r = rank(m);
    if (trial == 0 || r > best.max_rank) {
      best.max_rank = r;
      best.witness = std::move(x);
    }
    if (best.max_rank == full) break;
  }
  best.generic = best.max_rank == full;
  return best;
}

/// T (x) T' with factor indices paired lexicographically.
template <typename S>
Tensor3<S> kronecker(const Tensor3<S>& t, const Tensor3<S>& u) {
  const auto [a, b, c] = t.dims();
  const auto [a2, b2, c2] = u.dims();
  Tensor3<S> out(a * a2, b * b2, c * c2);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < c; ++k) {
        const S& x = t(i, j, k);
        if (is_zero(x)) continue;
        for (std::size_t i2 = 0; i2 < a2; ++i2)
          for (std::size_t j2 = 0; j2 < b2; ++j2)
            for (std::size_t k2 = 0; k2 < c2; ++k2) out(i * a2 + i2, j * b2 + j2, k * c2 + k2) = x * u(i2, j2, k2);
      }
  return out;
}

template <typename S>
Tensor3<S> kronecker_power(const Tensor3<S>& t, std::size_t k) {
  if (k == 0) throw std::invalid_argument("kronecker_power: exponent must be positive");
  Tensor3<S> out = t;
  for (std::size_t i = 1; i < k; ++i) out = kronecker(out, t);
  return out;
}

/// Block-diagonal T (+) T'.
template <typename S>
Tensor3<S> direct_sum(const Tensor3<S>& t, const Tensor3<S>& u) {
  const auto [a, b, c] = t.dims();
  Tensor3<S> out(a + u.a(), b + u.b(), c + u.c());
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < c; ++k) out(i, j, k) = t(i, j, k);
  for (std::size_t i = 0; i < u.a(); ++i)
    for (std::size_t j = 0; j < u.b(); ++j)
      for (std::size_t k = 0; k < u.c(); ++k) out(a + i, b + j, c + k) = u(i, j, k);
  return out;
}

namespace detail {
/// out^{i..} = sum_s g_{i s} t^{s..} in factor f; g may be rectangular.
template <typename S>
Tensor3<S> act_on_factor(const Tensor3<S>& t, Factor f, const Matrix<S>& g) {
  if (g.cols() != t.dim(f)) throw std::invalid_argument("act_on_factor: matrix does not match factor dimension");
  Dims d = t.dims();
  d[static_cast<int>(f)] = g.rows();
  Tensor3<S> out(d);
  const auto [a, b, c] = t.dims();
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < c; ++k) {
        const S& x = t(i, j, k);
        if (is_zero(x)) continue;
        for (std::size_t r = 0; r < g.rows(); ++r) {
          switch (f) {
            case Factor::A: out(r, j, k) += g(r, i) * x; break;
            case Factor::B: out(i, r, k) += g(r, j) * x; break;
            case Factor::C: out(i, j, r) += g(r, k) * x; break;
          }
        }
      }
  return out;
}
}  // namespace detail

/// (g, h, k) . T, a left action of GL(A) x GL(B) x GL(C).
template <typename S>
Tensor3<S> apply_gl(const Tensor3<S>& t, const Matrix<S>& g, const Matrix<S>& h, const Matrix<S>& k) {
  const Matrix<S>* ms[3] = {&g, &h, &k};
  for (int f = 0; f < 3; ++f) {
    const auto& m = *ms[f];
    if (!m.is_square() || m.rows() != t.dims()[f])
      throw std::invalid_argument(std::string("apply_gl: matrix for factor ") + factor_name(static_cast<Factor>(f)) +
                                  " has the wrong shape");
    if (rank(m) != m.rows())
      throw std::domain_error(std::string("apply_gl: singular matrix for factor ") + factor_name(static_cast<Factor>(f)));
  }
  auto out = detail::act_on_factor(t, Factor::A, g);
  out = detail::act_on_factor(out, Factor::B, h);
  return detail::act_on_factor(out, Factor::C, k);
}

/// Output factor q is input factor perm[q].
template <typename S>
Tensor3<S> permute_factors(const Tensor3<S>& t, std::array<int, 3> perm) {
  std::array<bool, 3> seen{};
  for (int p : perm) {
    if (p < 0 || p > 2 || seen[p]) throw std::invalid_argument("permute_factors: not a permutation");
    seen[p] = true;
  }
  Tensor3<S> out(t.dims()[perm[0]], t.dims()[perm[1]], t.dims()[perm[2]]);
  std::array<std::size_t, 3> idx{};
  for (idx[0] = 0; idx[0] < t.a(); ++idx[0])
    for (idx[1] = 0; idx[1] < t.b(); ++idx[1])
      for (idx[2] = 0; idx[2] < t.c(); ++idx[2]) out(idx[perm[0]], idx[perm[1]], idx[perm[2]]) = t(idx[0], idx[1], idx[2]);
  return out;
}

/// Permutation that moves `side` into the A position (a transposition, or identity).
inline std::array<int, 3> move_to_front(Factor side) {
  switch (side) {
    case Factor::A: return {0, 1, 2};
    case Factor::B: return {1, 0, 2};
    case Factor::C: return {2, 1, 0};
  }
  return {0, 1, 2};
}

template <typename S>
bool is_symmetric_in_first_two(const Tensor3<S>& t) {
  if (t.a() != t.b()) return false;
  for (std::size_t i = 0; i < t.a(); ++i)
    for (std::size_t j = i + 1; j < t.b(); ++j)
      for (std::size_t k = 0; k < t.c(); ++k)
        if (!(t(i, j, k) == t(j, i, k))) return false;
  return true;
}

template <typename S>
bool is_fully_symmetric(const Tensor3<S>& t) {
  if (!t.is_cubic()) return false;
  for (const auto& p : {std::array<int, 3>{1, 0, 2}, std::array<int, 3>{2, 1, 0}, std::array<int, 3>{0, 2, 1}}) {
    if (!(permute_factors(t, p) == t)) return false;
  }
  return true;
}

/// Converts an exact rational tensor into the working field.
template <typename S>
Tensor3<S> convert(const Tensor3<Rational>& t) {
  Tensor3<S> out(t.dims());
  for (std::size_t i = 0; i < t.a(); ++i)
    for (std::size_t j = 0; j < t.b(); ++j)
      for (std::size_t k = 0; k < t.c(); ++k) out(i, j, k) = scalar_traits<S>::from_rational(t(i, j, k));
  return out;
}

/// Seeded matrix with independent entries; invertible with overwhelming probability.
template <typename S>
Matrix<S> random_matrix(std::size_t rows, std::size_t cols, SeededRng& rng) {
  Matrix<S> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.scalar<S>();
  return m;
}

template <typename S>
Matrix<S> random_invertible(std::size_t n, SeededRng& rng) {
  for (;;) {
    auto m = random_matrix<S>(n, n, rng);
    if (rank(m) == n) return m;
  }
}

}  // namespace brlb
