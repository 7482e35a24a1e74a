// Benchmark tensors and structure tensors of finite-dimensional algebras.
#pragma once

#include <brlb/tensor/polarize.hpp>
#include <brlb/tensor/tensor.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace brlb {

/// Multiplication table of an m-dimensional algebra: product(I, J) is the
/// coefficient vector of p_I p_J in the basis.
template <typename S>
struct AlgebraTable {
  std::size_t m = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<S>> products;  // m*m entries, row-major in (I, J)
  std::optional<std::size_t> unit;

  AlgebraTable() = default;
  explicit AlgebraTable(std::size_t dim) : m(dim), labels(dim), products(dim * dim, std::vector<S>(dim, from_int<S>(0))) {}

  std::vector<S>& product(std::size_t i, std::size_t j) { return products[i * m + j]; }
  const std::vector<S>& product(std::size_t i, std::size_t j) const { return products[i * m + j]; }

  /// Throws std::invalid_argument on a malformed table or a unit that is not one.
  void validate() const {
    if (m == 0) throw std::invalid_argument("AlgebraTable: dimension must be positive");
    if (labels.size() != m) throw std::invalid_argument("AlgebraTable: label count != m");
    if (products.size() != m * m) throw std::invalid_argument("AlgebraTable: product table must be m x m");
    for (const auto& v : products) {
      if (v.size() != m) throw std::invalid_argument("AlgebraTable: product vectors must have length m");
    }
    if (unit) {
      if (*unit >= m) throw std::invalid_argument("AlgebraTable: unit index out of range");
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<S> e(m, from_int<S>(0));
        e[i] = from_int<S>(1);
        if (product(*unit, i) != e || product(i, *unit) != e)
          throw std::invalid_argument("AlgebraTable: unit does not act as the identity on " + labels[i]);
      }
    }
  }

  bool is_commutative() const {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (product(i, j) != product(j, i)) return false;
    return true;
  }
};

/// sum_{I,J} p_I* (x) p_J* (x) (p_I p_J).
template <typename S>
Tensor3<S> structure_tensor(const AlgebraTable<S>& alg) {
  alg.validate();
  Tensor3<S> t(alg.m, alg.m, alg.m);
  for (std::size_t i = 0; i < alg.m; ++i)
    for (std::size_t j = 0; j < alg.m; ++j)
      for (std::size_t k = 0; k < alg.m; ++k) t(i, j, k) = alg.product(i, j)[k];
  return t;
}

/// C[x]/(x^k) with basis 1, x, ..., x^{k-1}.
template <typename S>
AlgebraTable<S> truncated_polynomial_algebra(std::size_t k) {
  if (k == 0) throw std::invalid_argument("truncated_polynomial_algebra: k must be positive");
  AlgebraTable<S> alg(k);
  for (std::size_t i = 0; i < k; ++i) alg.labels[i] = i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; i + j < k; ++j) alg.product(i, j)[i + j] = from_int<S>(1);
  alg.unit = 0;
  return alg;
}

/// C^m with pointwise product (the algebra of m distinct points).
template <typename S>
AlgebraTable<S> split_algebra(std::size_t m) {
  if (m == 0) throw std::invalid_argument("split_algebra: m must be positive");
  AlgebraTable<S> alg(m);
  for (std::size_t i = 0; i < m; ++i) {
    alg.labels[i] = "e" + std::to_string(i);
    alg.product(i, i)[i] = from_int<S>(1);
  }
  // the unit is sum e_i, which is not a basis element
  return alg;
}

/// C[x_1..x_q]/(x_i x_j, x_i^2 - x_j^2, x_i^3) with basis 1, x_1..x_q, [x_1^2].
template <typename S>
AlgebraTable<S> cw_algebra(std::size_t q) {
  if (q == 0) throw std::invalid_argument("cw_algebra: q must be positive");
  const std::size_t m = q + 2, top = q + 1;
  AlgebraTable<S> alg(m);
  alg.labels[0] = "1";
  for (std::size_t i = 1; i <= q; ++i) alg.labels[i] = "x" + std::to_string(i);
  alg.labels[top] = "[x1^2]";
  for (std::size_t i = 0; i < m; ++i) {
    alg.product(0, i)[i] = from_int<S>(1);
    alg.product(i, 0)[i] = from_int<S>(1);
  }
  for (std::size_t i = 1; i <= q; ++i) alg.product(i, i)[top] = from_int<S>(1);
  alg.unit = 0;
  return alg;
}

/// M<l,m,n> in C^{lm} (x) C^{mn} (x) C^{nl}: ones at ((i,j),(j,k),(k,i)),
/// with (i,j) -> i*m + j, (j,k) -> j*n + k, (k,i) -> k*l + i.
template <typename S>
Tensor3<S> matmul(std::size_t l, std::size_t m, std::size_t n) {
  if (l == 0 || m == 0 || n == 0) throw std::invalid_argument("matmul: dimensions must be positive");
  Tensor3<S> t(l * m, m * n, n * l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k) t(i * m + j, j * n + k, k * l + i) = from_int<S>(1);
  return t;
}

/// sum_i e_i (x) e_i (x) e_i.
template <typename S>
Tensor3<S> unit_tensor(std::size_t m) {
  if (m == 0) throw std::invalid_argument("unit_tensor: m must be positive");
  Tensor3<S> t(m, m, m);
  for (std::size_t i = 0; i < m; ++i) t(i, i, i) = from_int<S>(1);
  return t;
}

/// e0 (x) e0 (x) e1 + e1 (x) e0 (x) e0 + e0 (x) e1 (x) e0.
template <typename S>
Tensor3<S> w_state() {
  Tensor3<S> t(2, 2, 2);
  t(0, 0, 1) = t(1, 0, 0) = t(0, 1, 0) = from_int<S>(1);
  return t;
}

/// Big Coppersmith-Winograd tensor in (C^{q+2})^{(x)3}.
template <typename S>
Tensor3<S> big_cw(std::size_t q) {
  if (q == 0) throw std::invalid_argument("big_cw: q must be positive");
  const std::size_t top = q + 1;
  Tensor3<S> t(q + 2, q + 2, q + 2);
  const S one = from_int<S>(1);
  t(0, 0, top) = t(0, top, 0) = t(top, 0, 0) = one;
  for (std::size_t i = 1; i <= q; ++i) t(0, i, i) = t(i, 0, i) = t(i, i, 0) = one;
  return t;
}

/// Small Coppersmith-Winograd tensor sum_i (e0 e_i e_i + e_i e0 e_i + e_i e_i e0)
/// in (C^{q+1})^{(x)3}.
template <typename S>
Tensor3<S> small_cw(std::size_t q) {
  if (q == 0) throw std::invalid_argument("small_cw: q must be positive");
  Tensor3<S> t(q + 1, q + 1, q + 1);
  const S one = from_int<S>(1);
  for (std::size_t i = 1; i <= q; ++i) t(0, i, i) = t(i, 0, i) = t(i, i, 0) = one;
  return t;
}

namespace detail {
/// Sum over permutations sigma of sign^odd * prod_r x_{r, sigma(r)} for a 3x3
/// matrix of variables x_{rc} = variable 3r + c.
template <typename S>
CubicForm<S> three_by_three_form(bool signed_terms) {
  CubicForm<S> f;
  f.num_vars = 9;
  std::array<std::size_t, 3> sigma{0, 1, 2};
  do {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) inversions += sigma[i] > sigma[j];
    const long long sign = (signed_terms && inversions % 2) ? -1 : 1;
    f.terms.push_back({{0 * 3 + sigma[0], 1 * 3 + sigma[1], 2 * 3 + sigma[2]}, from_int<S>(sign)});
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return f;
}
}  // namespace detail

template <typename S>
CubicForm<S> det3_form() {
  return detail::three_by_three_form<S>(true);
}

template <typename S>
CubicForm<S> perm3_form() {
  return detail::three_by_three_form<S>(false);
}

/// The 3x3 determinant as a symmetric 9 x 9 x 9 tensor.
template <typename S>
Tensor3<S> det3_tensor() {
  return polarize_cubic(det3_form<S>());
}

/// The 3x3 permanent as a symmetric 9 x 9 x 9 tensor.
template <typename S>
Tensor3<S> perm3_tensor() {
  return polarize_cubic(perm3_form<S>());
}

}  // namespace brlb
