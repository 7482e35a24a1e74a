// Seeded, platform-independent sampling of field elements.
#pragma once

#include <brlb/linalg/field.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace brlb {

/// Rational samples are integers in [-kRationalSampleHalfRange, kRationalSampleHalfRange].
inline constexpr std::int64_t kRationalSampleHalfRange = std::int64_t{1} << 30;

/// mt19937_64 has a fully specified output sequence; the std distributions do
/// not, so reductions to a range are done here by rejection.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty sampling range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <typename S>
  S scalar() {
    if constexpr (scalar_traits<S>::is_prime_field) {
      return Fp::from_raw(below(Fp::modulus()));
    } else {
      const auto span = static_cast<std::uint64_t>(2 * kRationalSampleHalfRange + 1);
      return from_int<S>(static_cast<std::int64_t>(below(span)) - kRationalSampleHalfRange);
    }
  }

  /// Small integer entries in [lo, hi]; used for sparse and structured test tensors.
  template <typename S>
  S small_scalar(int lo, int hi) {
    return from_int<S>(lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1))));
  }

  template <typename S>
  std::vector<S> vector(std::size_t dim) {
    std::vector<S> v;
    v.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) v.push_back(scalar<S>());
    return v;
  }

  /// Derives an independent stream seed, e.g. one per retry or per method.
  std::uint64_t fork() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Deterministic vector of length dim for (seed, field).
template <typename S>
std::vector<S> seeded_random_vector(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw std::invalid_argument("seeded_random_vector: dim must be positive");
  SeededRng rng(seed);
  return rng.vector<S>(dim);
}

}  // namespace brlb
