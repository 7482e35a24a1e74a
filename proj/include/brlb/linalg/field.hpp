// Exact scalar types: arbitrary-precision rationals and a word-sized prime field.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace brlb {

using Rational = mpq_class;

/// 2^61 - 1, the default modulus.
inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

namespace detail {
inline std::uint64_t& current_modulus() {
  thread_local std::uint64_t p = kMersenne61;
  return p;
}
}  // namespace detail

/// Deterministic primality test for 64-bit integers (Miller-Rabin with the
/// bases that are known to be sufficient below 2^64).
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// RAII guard selecting the prime modulus used by Fp on the current thread.
/// Elements created under one modulus must not be mixed with another.
class PrimeFieldScope {
 public:
  explicit PrimeFieldScope(std::uint64_t p) : saved_(detail::current_modulus()) {
    if (p >= (std::uint64_t{1} << 62) || !is_prime_u64(p)) {
      throw std::invalid_argument("modulus must be a prime below 2^62: " + std::to_string(p));
    }
    detail::current_modulus() = p;
  }
  ~PrimeFieldScope() { detail::current_modulus() = saved_; }
  PrimeFieldScope(const PrimeFieldScope&) = delete;
  PrimeFieldScope& operator=(const PrimeFieldScope&) = delete;

 private:
  std::uint64_t saved_;
};

/// Element of Z/pZ for the thread's current prime p.
class Fp {
 public:
  Fp() = default;
  Fp(long long x) {  // NOLINT(google-explicit-constructor)
    const std::uint64_t p = modulus();
    long long r = x % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    v_ = static_cast<std::uint64_t>(r);
  }

  static std::uint64_t modulus() { return detail::current_modulus(); }
  static Fp from_raw(std::uint64_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp& operator+=(Fp o) {
    const std::uint64_t p = modulus();
    v_ += o.v_;
    if (v_ >= p) v_ -= p;
    return *this;
  }
  Fp& operator-=(Fp o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + modulus() - o.v_;
    return *this;
  }
  Fp& operator*=(Fp o) {
    v_ = mulmod(v_, o.v_);
    return *this;
  }
  Fp& operator/=(Fp o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, Fp b) { return a += b; }
  friend Fp operator-(Fp a, Fp b) { return a -= b; }
  friend Fp operator*(Fp a, Fp b) { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  Fp operator-() const { return v_ == 0 ? *this : from_raw(modulus() - v_); }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

  Fp pow(std::uint64_t e) const {
    Fp r = from_raw(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in prime field");
    return pow(modulus() - 2);
  }

 private:
  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t p = modulus();
    const unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
    if (p == kMersenne61) {
      std::uint64_t r = static_cast<std::uint64_t>(t & kMersenne61) + static_cast<std::uint64_t>(t >> 61);
      if (r >= kMersenne61) r -= kMersenne61;
      return r;
    }
    return static_cast<std::uint64_t>(t % p);
  }

  std::uint64_t v_ = 0;
};

/// Uniform interface over the two scalar types.
template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool is_prime_field = false;
  static_assert(sizeof(long) == sizeof(long long));
  static Rational from_int(long long x) { return Rational(static_cast<long>(x)); }
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational inverse(const Rational& x) {
    if (sgn(x) == 0) throw std::domain_error("division by zero in rational field");
    return Rational(1) / x;
  }
  static std::string to_string(const Rational& x) { return x.get_str(); }
  static std::string field_tag() { return "rational"; }
  static std::uint64_t characteristic() { return 0; }
};

template <>
struct scalar_traits<Fp> {
  static constexpr bool is_prime_field = true;
  static Fp from_int(long long x) { return Fp(x); }
  static Fp from_rational(const Rational& q) {
    const mpz_class p(std::to_string(Fp::modulus()));
    mpz_class n = q.get_num() % p, d = q.get_den() % p;
    if (n < 0) n += p;
    if (d == 0) throw std::domain_error("denominator divisible by the field modulus");
    return Fp::from_raw(std::stoull(n.get_str())) / Fp::from_raw(std::stoull(d.get_str()));
  }
  static bool is_zero(const Fp& x) { return x.is_zero(); }
  static Fp inverse(const Fp& x) { return x.inverse(); }
  static std::string to_string(const Fp& x) { return std::to_string(x.value()); }
  static std::string field_tag() { return "prime:" + std::to_string(Fp::modulus()); }
  static std::uint64_t characteristic() { return Fp::modulus(); }
};

template <typename S>
inline bool is_zero(const S& x) {
  return scalar_traits<S>::is_zero(x);
}

template <typename S>
inline S from_int(long long x) {
  return scalar_traits<S>::from_int(x);
}

/// Parses "n" or "n/d" (decimal integers, optional sign) into an exact rational.
inline Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  auto strip_plus = [](std::string_view s) { return std::string(s[0] == '+' ? s.substr(1) : s); };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_int(text)) throw std::invalid_argument("not an integer: " + std::string(text));
    return Rational(mpz_class(strip_plus(text)));
  }
  const auto num = text.substr(0, slash), den = text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("not a rational: " + std::string(text));
  mpz_class d(strip_plus(den));
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  Rational q(mpz_class(strip_plus(num)), d);
  q.canonicalize();
  return q;
}

}  // namespace brlb
