#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "pabel/errors.hpp"

namespace pabel {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    v_.canonicalize();
  }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "n", "-n" or "n/d".
  static Rational parse(std::string_view s) {
    std::string str(s);
    auto slash = str.find('/');
    try {
      if (slash == std::string::npos) return Rational(mpz_class(str), mpz_class(1));
      return Rational(mpz_class(str.substr(0, slash)), mpz_class(str.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw UsageError("cannot parse rational '" + str + "'");
    }
  }

  [[nodiscard]] const mpq_class& raw() const { return v_; }
  [[nodiscard]] mpz_class num() const { return v_.get_num(); }
  [[nodiscard]] mpz_class den() const { return v_.get_den(); }
  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] double to_double() const { return v_.get_d(); }

  [[nodiscard]] Rational inv() const {
    if (is_zero()) throw DomainError("inverse of zero rational");
    return Rational(mpq_class(1) / v_);
  }

  [[nodiscard]] std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_{0};
};

inline bool is_zero(const Rational& a) { return a.is_zero(); }
inline Rational inv(const Rational& a) { return a.inv(); }
inline std::string to_string(const Rational& a) { return a.str(); }

/// The field of rationals as a scalar domain.
struct RationalField {
  using value_type = Rational;
  [[nodiscard]] Rational zero() const { return Rational(0); }
  [[nodiscard]] Rational one() const { return Rational(1); }
  [[nodiscard]] Rational from_int(std::int64_t n) const { return Rational(n); }
  [[nodiscard]] Rational from_rational(const Rational& q) const { return q; }
  [[nodiscard]] std::string name() const { return "rational"; }
  [[nodiscard]] std::uint64_t characteristic() const { return 0; }
  friend bool operator==(const RationalField&, const RationalField&) = default;
};

}  // namespace pabel
