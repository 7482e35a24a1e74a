// Exterior powers and the p-Koszul flattening
//   T^{wedge p}_A : Lambda^p A (x) B*  ->  Lambda^{p+1} A (x) C,
//   a_S (x) beta  |->  sum_{ijk} T^{ijk} beta(b_j) a_S ^ a_i (x) c_k,
// whose rank divided by the rank of the same map for a rank-one tensor
// bounds border rank from below.
#pragma once

#include <brlb/linalg/linalg.hpp>
#include <brlb/linalg/random.hpp>
#include <brlb/tensor/tensor.hpp>

#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace brlb {

/// Size-p subsets of {0..n-1} in lexicographic order, stored as bitmasks.
class WedgeBasis {
 public:
  WedgeBasis(std::size_t n, std::size_t p) : n_(n), p_(p) {
    if (n > 30) throw std::invalid_argument("WedgeBasis: ambient dimension too large");
    if (p <= n) enumerate(0, 0, 0);
    for (std::size_t i = 0; i < subsets_.size(); ++i) index_.emplace(subsets_[i], i);
  }

  std::size_t n() const { return n_; }
  std::size_t p() const { return p_; }
  std::size_t size() const { return subsets_.size(); }
  std::uint32_t subset(std::size_t idx) const { return subsets_[idx]; }
  std::size_t index_of(std::uint32_t mask) const { return index_.at(mask); }

  /// a_S ^ a_i expressed in the sorted basis: the result mask and the sign
  /// (-1)^{#{s in S : s > i}} from moving a_i into sorted position.
  /// Empty when i is already in S.
  static std::optional<std::pair<int, std::uint32_t>> wedge_right(std::uint32_t mask, std::size_t i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    if (mask & bit) return std::nullopt;
    const int larger = std::popcount(mask & ~((bit << 1) - 1));
    return std::make_pair(larger % 2 ? -1 : 1, mask | bit);
  }

 private:
  void enumerate(std::size_t start, std::size_t depth, std::uint32_t mask) {
    if (depth == p_) {
      subsets_.push_back(mask);
      return;
    }
    for (std::size_t i = start; i + (p_ - depth) <= n_; ++i) enumerate(i + 1, depth + 1, mask | (std::uint32_t{1} << i));
  }

  std::size_t n_, p_;
  std::vector<std::uint32_t> subsets_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

/// Matrix of omega |-> omega ^ v from Lambda^p to Lambda^{p+1} of S^n.
template <typename S>
Matrix<S> wedge_map(std::size_t p, const std::vector<S>& v) {
  const std::size_t n = v.size();
  const WedgeBasis src(n, p), dst(n, p + 1);
  Matrix<S> m(dst.size(), src.size(), "L^" + std::to_string(p + 1), "L^" + std::to_string(p));
  for (std::size_t s = 0; s < src.size(); ++s)
    for (std::size_t i = 0; i < n; ++i) {
      if (is_zero(v[i])) continue;
      if (auto w = WedgeBasis::wedge_right(src.subset(s), i)) {
        const S term = w->first > 0 ? v[i] : -v[i];
        m(dst.index_of(w->second), s) += term;
      }
    }
  return m;
}

/// T^{wedge p}_A for a tensor with a = 2p+1. Rows are (S', k) with S' a
/// (p+1)-subset, columns (S, j) with S a p-subset, both S-major.
template <typename S>
Matrix<S> build_koszul(const Tensor3<S>& t, std::size_t p) {
  const auto [a, b, c] = t.dims();
  if (a != 2 * p + 1) throw std::invalid_argument("build_koszul: requires a == 2p+1 (restrict A first)");
  const WedgeBasis src(a, p), dst(a, p + 1);
  Matrix<S> m(dst.size() * c, src.size() * b, "L^" + std::to_string(p + 1) + "A(x)C", "L^" + std::to_string(p) + "A(x)B*");
  for (std::size_t s = 0; s < src.size(); ++s)
    for (std::size_t i = 0; i < a; ++i) {
      const auto w = WedgeBasis::wedge_right(src.subset(s), i);
      if (!w) continue;
      const std::size_t row0 = dst.index_of(w->second) * c;
      for (std::size_t j = 0; j < b; ++j)
        for (std::size_t k = 0; k < c; ++k) {
          const S& x = t(i, j, k);
          if (is_zero(x)) continue;
          if (w->first > 0)
            m(row0 + k, s * b + j) += x;
          else
            m(row0 + k, s * b + j) -= x;
        }
    }
  return m;
}

/// T composed with a seeded random linear map A -> A' of dimension target_dim
/// (equivalently, T restricted to a random target_dim-dimensional subspace of A*).
template <typename S>
Tensor3<S> restrict_A(const Tensor3<S>& t, std::size_t target_dim, std::uint64_t seed) {
  if (target_dim == 0 || target_dim > t.a()) throw std::invalid_argument("restrict_A: target_dim must be in [1, a]");
  SeededRng rng(seed);
  const auto r = random_matrix<S>(target_dim, t.a(), rng);
  return detail::act_on_factor(t, Factor::A, r);
}

/// Rank of T^{wedge p}_A for a rank-one tensor in C^{2p+1} (x) C^2 (x) C^2,
/// obtained by building the map and computing its rank over Q. Memoized.
inline std::size_t koszul_rank_one_constant(std::size_t p) {
  static std::mutex mu;
  static std::map<std::size_t, std::size_t> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(p); it != memo.end()) return it->second;
  }
  const std::size_t n = 2 * p + 1;
  std::vector<Rational> u(n), v{Rational(1), Rational(2)}, w{Rational(3), Rational(-1)};
  for (std::size_t i = 0; i < n; ++i) u[i] = Rational(static_cast<long>(i + 1));
  const auto value = rank(build_koszul(Tensor3<Rational>::outer(u, v, w), p));
  std::lock_guard lock(mu);
  memo.emplace(p, value);
  return value;
}

struct KoszulBound {
  std::size_t bound = 0;            // ceil(rank / constant)
  std::size_t rank = 0;             // best rank over the restrictions tried
  std::size_t constant = 0;         // rank-one normalization
  std::size_t p = 0;
  Factor side = Factor::A;
  bool restricted = false;
  std::size_t restrictions_tried = 0;
  std::uint64_t seed = 0;
};

/// Border-rank lower bound from the p-Koszul flattening on `side`. When the
/// side is larger than 2p+1 it is restricted `retries` times at random and
/// the best rank is kept; a poor draw can only weaken the bound.
template <typename S>
KoszulBound koszul_bound(const Tensor3<S>& t, std::size_t p, Factor side, std::uint64_t seed, std::size_t retries = 3) {
  const auto tt = permute_factors(t, move_to_front(side));
  const std::size_t n = 2 * p + 1;
  if (n > tt.a()) {
    throw std::invalid_argument("koszul_bound: 2p+1 = " + std::to_string(n) + " exceeds dim " + factor_name(side) +
                                " = " + std::to_string(tt.a()));
  }
  KoszulBound res;
  res.p = p;
  res.side = side;
  res.seed = seed;
  res.constant = koszul_rank_one_constant(p);
  if (n == tt.a()) {
    res.rank = rank(build_koszul(tt, p));
    res.restrictions_tried = 0;
  } else {
    res.restricted = true;
    SeededRng rng(seed);
    for (std::size_t r = 0; r < std::max<std::size_t>(retries, 1); ++r) {
      const auto restricted = restrict_A(tt, n, rng.fork());
      res.rank = std::max(res.rank, rank(build_koszul(restricted, p)));
      ++res.restrictions_tried;
    }
  }
  res.bound = (res.rank + res.constant - 1) / res.constant;
  return res;
}

}  // namespace brlb
