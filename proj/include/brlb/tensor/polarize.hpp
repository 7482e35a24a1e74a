// Homogeneous cubic forms and their polarization to symmetric tensors.
#pragma once

#include <brlb/tensor/tensor.hpp>

#include <array>
#include <stdexcept>
#include <vector>

namespace brlb {

template <typename S>
struct CubicTerm {
  std::array<std::size_t, 3> vars;  // x_{vars[0]} x_{vars[1]} x_{vars[2]}, repeats allowed
  S coeff;
};

template <typename S>
struct CubicForm {
  std::size_t num_vars = 0;
  std::vector<CubicTerm<S>> terms;

  S evaluate(const std::vector<S>& x) const {
    if (x.size() != num_vars) throw std::invalid_argument("CubicForm::evaluate: wrong number of variables");
    S sum = from_int<S>(0);
    for (const auto& t : terms) sum += t.coeff * x[t.vars[0]] * x[t.vars[1]] * x[t.vars[2]];
    return sum;
  }
};

/// The symmetric tensor with T(x,x,x) = f(x):
///   T(u,v,w) = 1/6 [f(u+v+w) - f(u+v) - f(u+w) - f(v+w) + f(u) + f(v) + f(w)].
template <typename S>
Tensor3<S> polarize_cubic(const CubicForm<S>& f) {
  const std::uint64_t ch = scalar_traits<S>::characteristic();
  if (ch == 2 || ch == 3) throw std::domain_error("polarize_cubic: 1/6 does not exist in characteristic 2 or 3");
  for (const auto& t : f.terms) {
    for (auto v : t.vars) {
      if (v >= f.num_vars) throw std::invalid_argument("polarize_cubic: variable index out of range");
    }
  }
  const std::size_t n = f.num_vars;
  const S sixth = scalar_traits<S>::inverse(from_int<S>(6));
  auto at = [&](std::initializer_list<std::size_t> idx) {
    std::vector<S> x(n, from_int<S>(0));
    for (auto i : idx) x[i] += from_int<S>(1);
    return f.evaluate(x);
  };
  Tensor3<S> t(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const S v = at({i, j, k}) - at({i, j}) - at({i, k}) - at({j, k}) + at({i}) + at({j}) + at({k});
        t(i, j, k) = v * sixth;
      }
  return t;
}

}  // namespace brlb
