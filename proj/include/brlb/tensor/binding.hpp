// Normalizing a binding tensor into C* (x) C* (x) C.
#pragma once

#include <brlb/tensor/tensor.hpp>

#include <stdexcept>
#include <vector>

namespace brlb {

/// Given full-rank witnesses T_A(alpha0): B* -> C and T_B(beta0): A* -> C,
/// returns Tt(c1, c2) = T(T_B(beta0)^{-1} c1, T_A(alpha0)^{-1} c2), a tensor
/// isomorphic to T. When T satisfies the A-Strassen equations the result is
/// symmetric in its first two factors.
template <typename S>
Tensor3<S> symmetrize_binding(const Tensor3<S>& t, const std::vector<S>& alpha0, const std::vector<S>& beta0) {
  if (!t.is_cubic()) throw std::invalid_argument("symmetrize_binding: tensor must be m x m x m");
  // contract_A gives the b x c matrix of T_A(alpha0); as a map B* -> C it is the transpose.
  const auto ta = contract_A(t, alpha0).transpose();
  const auto tb = contract_B(t, beta0).transpose();
  const std::size_t m = t.c();
  if (rank(ta) != m) throw std::domain_error("symmetrize_binding: T_A(alpha0) is singular");
  if (rank(tb) != m) throw std::domain_error("symmetrize_binding: T_B(beta0) is singular");
  // Tt_{pqk} = sum_{ij} G_{ip} H_{jq} T_{ijk} with G = T_B(beta0)^{-1}, H = T_A(alpha0)^{-1}.
  const auto g = inverse(tb).transpose();
  const auto h = inverse(ta).transpose();
  return apply_gl(t, g, h, Matrix<S>::identity(m));
}

}  // namespace brlb
