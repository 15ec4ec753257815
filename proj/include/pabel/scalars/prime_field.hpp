#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "pabel/errors.hpp"
#include "pabel/scalars/rational.hpp"

namespace pabel {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

/// Miller-Rabin with the first twelve prime bases; exact for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kBases) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Uniform draw in [lo, hi) by rejection, independent of the standard library's distributions.
inline std::uint64_t uniform_u64(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return lo + r % span;
}

inline constexpr std::uint64_t kPrimeLow = std::uint64_t{1} << 40;
inline constexpr std::uint64_t kPrimeHigh = std::uint64_t{1} << 62;

/// Random prime in [2^40, 2^62).
inline std::uint64_t random_prime(std::mt19937_64& rng) {
  for (;;) {
    std::uint64_t c = uniform_u64(rng, kPrimeLow, kPrimeHigh) | 1;
    if (is_prime_u64(c)) return c;
  }
}

/// Residue modulo a prime p < 2^62. Elements remember their modulus so that
/// mixing two prime fields is caught at run time.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

  [[nodiscard]] std::uint64_t value() const { return v_; }
  [[nodiscard]] std::uint64_t modulus() const { return p_; }
  [[nodiscard]] bool is_zero() const { return v_ == 0; }

  [[nodiscard]] Fp inv() const {
    if (v_ == 0) throw DomainError("inverse of zero in prime field");
    return {detail::powmod(v_, p_ - 2, p_), p_};
  }

  Fp& operator+=(Fp o) {
    check(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  Fp& operator-=(Fp o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Fp& operator*=(Fp o) {
    check(o);
    v_ = detail::mulmod(v_, o.v_, p_);
    return *this;
  }
  Fp& operator/=(Fp o) {
    check(o);
    return *this *= o.inv();
  }

  friend Fp operator+(Fp a, Fp b) { return a += b; }
  friend Fp operator-(Fp a, Fp b) { return a -= b; }
  friend Fp operator*(Fp a, Fp b) { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  friend Fp operator-(Fp a) { return {a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_}; }
  friend bool operator==(Fp a, Fp b) {
    a.check(b);
    return a.v_ == b.v_;
  }

 private:
  void check(Fp o) const {
    if (p_ != o.p_) {
      throw UsageError("mixed prime fields: " + std::to_string(p_) + " vs " + std::to_string(o.p_));
    }
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

inline bool is_zero(Fp a) { return a.is_zero(); }
inline Fp inv(Fp a) { return a.inv(); }
inline std::string to_string(Fp a) { return std::to_string(a.value()); }

class PrimeField {
 public:
  using value_type = Fp;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= kPrimeHigh) throw UsageError("prime modulus must be below 2^62");
    if (!is_prime_u64(p)) throw UsageError("modulus " + std::to_string(p) + " is not prime");
  }

  [[nodiscard]] std::uint64_t modulus() const { return p_; }
  [[nodiscard]] std::uint64_t characteristic() const { return p_; }
  [[nodiscard]] Fp zero() const { return {0, p_}; }
  [[nodiscard]] Fp one() const { return {1, p_}; }
  [[nodiscard]] Fp from_int(std::int64_t n) const {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = n % p;
    if (r < 0) r += p;
    return {static_cast<std::uint64_t>(r), p_};
  }
  [[nodiscard]] Fp from_mpz(const mpz_class& z) const {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return {mpz_fdiv_ui(z.get_mpz_t(), p_), p_};
  }
  /// Reduction of q; throws PoleError when p divides the denominator.
  [[nodiscard]] Fp from_rational(const Rational& q) const {
    Fp d = from_mpz(q.den());
    if (d.is_zero()) throw PoleError("denominator vanishes modulo " + std::to_string(p_));
    return from_mpz(q.num()) / d;
  }
  [[nodiscard]] std::string name() const { return "prime:" + std::to_string(p_); }
  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

}  // namespace pabel
