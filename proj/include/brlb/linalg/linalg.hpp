// Exact linear algebra: rank, determinant, adjugate, kernels and subspaces.
//
// Over the prime field everything is ordinary Gaussian elimination. Over the
// rationals, rank and determinant use fraction-free (Bareiss) elimination on
// the matrix with each row scaled to integers; kernels and row reduction use
// Gauss-Jordan on rationals.
#pragma once

#include <brlb/linalg/field.hpp>
#include <brlb/linalg/matrix.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brlb {

namespace detail {

/// Integer matrix whose rows are the rows of `m` times the lcm of their denominators.
/// `scale` receives the product of the row multipliers.
inline std::vector<std::vector<mpz_class>> clear_denominators(const Matrix<Rational>& m, mpz_class* scale = nullptr) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  if (scale) *scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_divexact(out[i][j].get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
      out[i][j] *= m(i, j).get_num();
    }
    if (scale) *scale *= l;
  }
  return out;
}

struct BareissResult {
  std::size_t rank = 0;
  mpz_class det;  // meaningful for square input
};

/// Fraction-free elimination in place. Every intermediate entry is a minor of
/// the input, so each division is exact.
inline BareissResult bareiss(std::vector<std::vector<mpz_class>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  mpz_class prev = 1, t;
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][col]) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    const mpz_class& piv = a[r][col];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class lead = a[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_mul(t.get_mpz_t(), piv.get_mpz_t(), a[i][j].get_mpz_t());
        mpz_submul(t.get_mpz_t(), lead.get_mpz_t(), a[r][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = piv;
    ++r;
  }
  BareissResult res;
  res.rank = r;
  res.det = (rows == cols && r == rows) ? mpz_class(sign * prev) : mpz_class(0);
  if (rows == 0) res.det = 1;
  return res;
}

/// Forward elimination over the prime field; returns rank and determinant.
inline std::pair<std::size_t, Fp> gauss_fp(Matrix<Fp> a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  Fp det = Fp(1);
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && a(p, col).is_zero()) ++p;
    if (p == rows) {
      det = Fp(0);
      continue;
    }
    if (p != r) {
      for (std::size_t j = col; j < cols; ++j) std::swap(a(p, j), a(r, j));
      det = -det;
    }
    det *= a(r, col);
    const Fp inv = a(r, col).inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, col).is_zero()) continue;
      const Fp f = a(i, col) * inv;
      auto dst = a.row(i);
      auto src = a.row(r);
      for (std::size_t j = col; j < cols; ++j) dst[j] -= f * src[j];
    }
    ++r;
  }
  if (rows != cols || r != rows) det = Fp(0);
  return {r, det};
}

}  // namespace detail

/// Exact rank.
template <typename S>
std::size_t rank(const Matrix<S>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if constexpr (scalar_traits<S>::is_prime_field) {
    return detail::gauss_fp(m).first;
  } else {
    // Bareiss prefers the short side as rows.
    if (m.rows() > m.cols()) return rank(m.transpose());
    return detail::bareiss(detail::clear_denominators(m), m.cols()).rank;
  }
}

template <typename S>
S determinant(const Matrix<S>& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: non-square matrix");
  if (m.rows() == 0) return from_int<S>(1);
  if constexpr (scalar_traits<S>::is_prime_field) {
    return detail::gauss_fp(m).second;
  } else {
    mpz_class scale;
    auto ints = detail::clear_denominators(m, &scale);
    const auto res = detail::bareiss(std::move(ints), m.cols());
    Rational d(res.det, scale);
    d.canonicalize();
    return d;
  }
}

/// Reduced row echelon form together with its pivot columns.
template <typename S>
struct RowEchelon {
  Matrix<S> reduced;  // rank rows, each with a unit pivot
  std::vector<std::size_t> pivots;
};

template <typename S>
RowEchelon<S> rref(Matrix<S> a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && is_zero(a(p, col))) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    const S inv = scalar_traits<S>::inverse(a(r, col));
    for (std::size_t j = col; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, col))) continue;
      const S f = a(i, col);
      for (std::size_t j = col; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  Matrix<S> reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = a(i, j);
  return {std::move(reduced), std::move(pivots)};
}

/// Inverse; throws std::domain_error for singular input.
template <typename S>
Matrix<S> inverse(const Matrix<S>& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: non-square matrix");
  const std::size_t n = m.rows();
  Matrix<S> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = from_int<S>(1);
  }
  auto e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  Matrix<S> inv(n, n, m.col_label(), m.row_label());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Cofactor matrix transpose: m * adjugate(m) == det(m) * Id.
template <typename S>
Matrix<S> adjugate(const Matrix<S>& m) {
  if (!m.is_square()) throw std::invalid_argument("adjugate: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  if (n == 1) return Matrix<S>::identity(1);
  const S det = determinant(m);
  if (!is_zero(det)) return inverse(m) * det;
  Matrix<S> adj(n, n, m.col_label(), m.row_label());
  // adj(m) has rank <= 1 when rank(m) == n-1 and vanishes below that.
  if (rank(m) < n - 1) return adj;
  Matrix<S> minor(n - 1, n - 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t i = 0, mi = 0; i < n; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, mj = 0; j < n; ++j) {
          if (j == c) continue;
          minor(mi, mj++) = m(i, j);
        }
        ++mi;
      }
      S cof = determinant(minor);
      if ((r + c) % 2 == 1) cof = -cof;
      adj(c, r) = cof;
    }
  }
  return adj;
}

/// Linearly independent basis of a subspace of S^ambient_dim, stored in
/// reduced row echelon form.
template <typename S>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim, std::string label = {}) : ambient_(ambient_dim), basis_(0, ambient_dim), label_(std::move(label)) {}

  /// Span of the rows of `generators`.
  static Subspace span(const Matrix<S>& generators, std::string label = {}) {
    Subspace s(generators.cols(), std::move(label));
    auto e = rref(generators);
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  static Subspace span(const std::vector<std::vector<S>>& vectors, std::size_t ambient_dim, std::string label = {}) {
    return span(Matrix<S>::from_rows(vectors, ambient_dim), std::move(label));
  }

  static Subspace whole(std::size_t ambient_dim, std::string label = {}) {
    return span(Matrix<S>::identity(ambient_dim), std::move(label));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<S>& basis() const { return basis_; }
  std::vector<S> basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  const std::string& label() const { return label_; }
  Subspace& set_label(std::string l) {
    label_ = std::move(l);
    return *this;
  }

  /// v minus its projection along the echelon basis; zero iff v is in the span.
  std::vector<S> reduce(std::vector<S> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: ambient mismatch");
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const S f = v[pivots_[r]];
      if (is_zero(f)) continue;
      for (std::size_t j = pivots_[r]; j < ambient_; ++j) v[j] -= f * basis_(r, j);
    }
    return v;
  }

  bool contains(const std::vector<S>& v) const {
    for (const auto& x : reduce(v)) {
      if (!is_zero(x)) return false;
    }
    return true;
  }

  bool contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i) {
      if (!contains(other.basis_vector(i))) return false;
    }
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix<S> basis_;
  std::vector<std::size_t> pivots_;
  std::string label_;
};

/// Basis of {x : m x = 0}.
template <typename S>
Subspace<S> kernel_basis(const Matrix<S>& m) {
  const std::size_t n = m.cols();
  auto e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<S>> vectors;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<S> x(n, from_int<S>(0));
    x[f] = from_int<S>(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.reduced(r, f);
    vectors.push_back(std::move(x));
  }
  return Subspace<S>::span(vectors, n, "ker(" + m.row_label() + "<-" + m.col_label() + ")");
}

template <typename S>
Subspace<S> subspace_sum(const Subspace<S>& u, const Subspace<S>& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
  return Subspace<S>::span(u.basis().vstack(v.basis()), "<" + u.label() + "," + v.label() + ">");
}

/// Intersection of two or more subspaces. Each step solves the stacked system
/// sum x_i u_i - sum y_j v_j = 0 and maps the kernel back through the u_i.
template <typename S>
Subspace<S> subspace_intersect(const std::vector<Subspace<S>>& spaces) {
  if (spaces.size() < 2) throw std::invalid_argument("subspace_intersect: need at least two subspaces");
  const std::size_t n = spaces.front().ambient_dim();
  for (const auto& s : spaces) {
    if (s.ambient_dim() != n) throw std::invalid_argument("subspace_intersect: ambient dimension mismatch");
  }
  Subspace<S> acc = spaces.front();
  for (std::size_t s = 1; s < spaces.size() && acc.dim() > 0; ++s) {
    const auto& v = spaces[s];
    const std::size_t du = acc.dim(), dv = v.dim();
    Matrix<S> system(n, du + dv);
    for (std::size_t i = 0; i < du; ++i)
      for (std::size_t r = 0; r < n; ++r) system(r, i) = acc.basis()(i, r);
    for (std::size_t j = 0; j < dv; ++j)
      for (std::size_t r = 0; r < n; ++r) system(r, du + j) = -v.basis()(j, r);
    const auto ker = kernel_basis(system);
    Matrix<S> gens(ker.dim(), n);
    for (std::size_t k = 0; k < ker.dim(); ++k)
      for (std::size_t i = 0; i < du; ++i) {
        const S& c = ker.basis()(k, i);
        if (is_zero(c)) continue;
        for (std::size_t r = 0; r < n; ++r) gens(k, r) += c * acc.basis()(i, r);
      }
    acc = Subspace<S>::span(gens);
  }
  if (acc.dim() == 0) acc = Subspace<S>(n);
  std::string label;
  for (const auto& s : spaces) label += (label.empty() ? "" : " & ") + s.label();
  return acc.set_label(label);
}

}  // namespace brlb
