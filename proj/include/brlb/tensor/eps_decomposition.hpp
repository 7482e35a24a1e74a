// Border-rank upper-bound certificates: rank-one families over a formal
// parameter eps whose sum is eps^h T + O(eps^{h+1}).
#pragma once

#include <brlb/tensor/tensor.hpp>

#include <stdexcept>
#include <vector>

namespace brlb {

/// Polynomial in eps, coefficient of eps^d at index d.
template <typename S>
using EpsPoly = std::vector<S>;

template <typename S>
struct EpsRankOne {
  std::vector<EpsPoly<S>> a, b, c;
};

template <typename S>
struct EpsDecomposition {
  std::size_t h = 0;
  std::vector<EpsRankOne<S>> terms;

  std::size_t r() const { return terms.size(); }
};

namespace detail {
/// Coefficients of a polynomial vector, truncated to degrees <= max_deg:
/// result[d][i] is the eps^d coefficient of component i.
template <typename S>
std::vector<std::vector<S>> by_degree(const std::vector<EpsPoly<S>>& v, std::size_t max_deg) {
  std::vector<std::vector<S>> out(max_deg + 1, std::vector<S>(v.size(), from_int<S>(0)));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t d = 0; d < v[i].size() && d <= max_deg; ++d) out[d][i] = v[i][d];
  return out;
}
}  // namespace detail

/// True iff sum_t a_t(eps) (x) b_t(eps) (x) c_t(eps) = eps^h T + O(eps^{h+1}).
/// Products are truncated at degree h, which is all the check needs.
template <typename S>
bool verify_eps_decomposition(const Tensor3<S>& t, const EpsDecomposition<S>& dec) {
  const std::size_t h = dec.h;
  std::vector<Tensor3<S>> coeff(h + 1, Tensor3<S>(t.dims()));
  for (const auto& term : dec.terms) {
    if (term.a.size() != t.a() || term.b.size() != t.b() || term.c.size() != t.c())
      throw std::invalid_argument("verify_eps_decomposition: term vector lengths do not match the tensor");
    const auto a = detail::by_degree(term.a, h), b = detail::by_degree(term.b, h), c = detail::by_degree(term.c, h);
    for (std::size_t da = 0; da <= h; ++da)
      for (std::size_t db = 0; da + db <= h; ++db)
        for (std::size_t dc = 0; da + db + dc <= h; ++dc) {
          auto& out = coeff[da + db + dc];
          for (std::size_t i = 0; i < t.a(); ++i) {
            if (is_zero(a[da][i])) continue;
            for (std::size_t j = 0; j < t.b(); ++j) {
              if (is_zero(b[db][j])) continue;
              const S ab = a[da][i] * b[db][j];
              for (std::size_t k = 0; k < t.c(); ++k) out(i, j, k) += ab * c[dc][k];
            }
          }
        }
  }
  const Tensor3<S> zero(t.dims());
  for (std::size_t d = 0; d < h; ++d) {
    if (!(coeff[d] == zero)) return false;
  }
  return coeff[h] == t;
}

/// Constant (eps-free) rank decomposition sum_t a_t (x) b_t (x) c_t.
template <typename S>
EpsDecomposition<S> constant_decomposition(const std::vector<std::array<std::vector<S>, 3>>& rank_one_terms) {
  EpsDecomposition<S> dec;
  for (const auto& [a, b, c] : rank_one_terms) {
    EpsRankOne<S> term;
    for (const auto& x : a) term.a.push_back({x});
    for (const auto& x : b) term.b.push_back({x});
    for (const auto& x : c) term.c.push_back({x});
    dec.terms.push_back(std::move(term));
  }
  return dec;
}

}  // namespace brlb
