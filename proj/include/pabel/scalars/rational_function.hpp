#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "pabel/errors.hpp"
#include "pabel/scalars/field.hpp"
#include "pabel/scalars/multivariate.hpp"
#include "pabel/scalars/rational.hpp"

namespace pabel {

/// Q[y1, y2, y3].
using Poly3 = MPoly<RationalField, 3>;

namespace detail {

inline const std::array<std::string, 3>& y_names() {
  static const std::array<std::string, 3> names{"y1", "y2", "y3"};
  return names;
}

inline int top_variable(const Poly3& a) {
  for (int v = 2; v >= 0; --v) {
    if (a.degree_in(static_cast<std::size_t>(v)) > 0) return v;
  }
  return -1;
}

inline Poly3 make_monic(const Poly3& a) {
  if (a.is_zero()) return a;
  return a.leading_term().second.inv() * a;
}

Poly3 poly_gcd(const Poly3& a, const Poly3& b);

inline Poly3 content_in(const Poly3& a, std::size_t v) {
  Poly3 g(RationalField{});
  for (const auto& c : a.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? make_monic(c) : poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

inline Poly3 primitive_in(const Poly3& a, std::size_t v) {
  if (a.is_zero()) return a;
  return *exact_divide(a, content_in(a, v));
}

/// Pseudo-remainder of a by b with respect to variable v.
inline Poly3 pseudo_remainder(Poly3 a, const Poly3& b, std::size_t v) {
  const int db = b.degree_in(v);
  const Poly3 lb = b.coefficients_in(v).back();
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const int da = a.degree_in(v);
    const Poly3 la = a.coefficients_in(v).back();
    Exponents<3> s{};
    s[v] = static_cast<std::uint16_t>(da - db);
    a = lb * a - la * b.shift(s);
  }
  return a;
}

/// Recursive primitive-PRS gcd over Q[y1, y2, y3]; result is monic under grlex.
inline Poly3 poly_gcd(const Poly3& a, const Poly3& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Poly3::constant(RationalField{}, Rational(1));
  const int va = top_variable(a), vb = top_variable(b);
  const auto v = static_cast<std::size_t>(std::max(va, vb));
  if (a.degree_in(v) == 0) return poly_gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return poly_gcd(content_in(a, v), b);
  const Poly3 c = poly_gcd(content_in(a, v), content_in(b, v));
  Poly3 p = primitive_in(a, v), q = primitive_in(b, v);
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  while (!q.is_zero() && q.degree_in(v) > 0) {
    Poly3 r = pseudo_remainder(p, q, v);
    p = std::move(q);
    q = r.is_zero() ? r : primitive_in(r, v);
  }
  Poly3 g = q.is_zero() ? primitive_in(p, v) : Poly3::constant(RationalField{}, Rational(1));
  return make_monic(c * g);
}

inline thread_local bool full_gcd_enabled = false;

}  // namespace detail

/// RAII switch enabling full multivariate gcd reduction of rational functions
/// created on the current thread.
class ScopedFullGcd {
 public:
  ScopedFullGcd() : prev_(detail::full_gcd_enabled) { detail::full_gcd_enabled = true; }
  ~ScopedFullGcd() { detail::full_gcd_enabled = prev_; }
  ScopedFullGcd(const ScopedFullGcd&) = delete;
  ScopedFullGcd& operator=(const ScopedFullGcd&) = delete;

 private:
  bool prev_;
};

inline Poly3 gcd(const Poly3& a, const Poly3& b) { return detail::poly_gcd(a, b); }

/// Element of Q(y1, y2, y3). Normalized on construction: common monomial
/// factors removed, trivial divisibility cancelled, denominator monic.
/// Equality is decided by cross-multiplication, so full gcd reduction is optional.
class RationalFunction {
 public:
  RationalFunction() : num_(RationalField{}), den_(Poly3::constant(RationalField{}, Rational(1))) {}
  RationalFunction(const Rational& c)  // NOLINT(google-explicit-constructor)
      : num_(Poly3::constant(RationalField{}, c)), den_(Poly3::constant(RationalField{}, Rational(1))) {}
  explicit RationalFunction(Poly3 num) : num_(std::move(num)), den_(Poly3::constant(RationalField{}, Rational(1))) {
    normalize();
  }
  RationalFunction(Poly3 num, Poly3 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
  }

  /// y_{i+1}
  static RationalFunction variable(std::size_t i) { return RationalFunction(Poly3::variable(RationalField{}, i)); }

  [[nodiscard]] const Poly3& num() const { return num_; }
  [[nodiscard]] const Poly3& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  [[nodiscard]] RationalFunction inv() const {
    if (is_zero()) throw DomainError("inverse of zero rational function");
    return {den_, num_};
  }

  /// Fully reduced copy (multivariate gcd of numerator and denominator cancelled).
  [[nodiscard]] RationalFunction reduced() const {
    if (is_zero()) return *this;
    Poly3 g = gcd(num_, den_);
    RationalFunction r = *this;
    r.num_ = *exact_divide(num_, g);
    r.den_ = *exact_divide(den_, g);
    r.make_den_monic();
    return r;
  }

  /// Value at a point of a field F, through F's embedding of Q.
  template <Field F>
  [[nodiscard]] value_t<F> evaluate(const F& dom, const std::array<value_t<F>, 3>& pt) const {
    auto conv = [&](const Rational& c) { return dom.from_rational(c); };
    value_t<F> d = den_.evaluate(pt, dom.zero(), dom.one(), conv);
    if (scalar_is_zero(d)) throw PoleError("denominator vanishes at specialization point");
    return num_.evaluate(pt, dom.zero(), dom.one(), conv) / d;
  }

  /// Composition with a substitution y_i -> images[i].
  [[nodiscard]] RationalFunction compose(const std::array<RationalFunction, 3>& images) const;

  [[nodiscard]] std::string str() const {
    const auto& n = detail::y_names();
    if (den_.is_constant()) return num_.str(n);
    return "(" + num_.str(n) + ")/(" + den_.str(n) + ")";
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("rational function division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly3::constant(RationalField{}, Rational(1));
      return;
    }
    cancel_monomial();
    if (auto q = exact_divide(num_, den_)) {
      num_ = std::move(*q);
      den_ = Poly3::constant(RationalField{}, Rational(1));
    } else if (auto q2 = exact_divide(den_, num_)) {
      den_ = std::move(*q2);
      num_ = Poly3::constant(RationalField{}, Rational(1));
    } else if (detail::full_gcd_enabled) {
      Poly3 g = gcd(num_, den_);
      num_ = *exact_divide(num_, g);
      den_ = *exact_divide(den_, g);
    }
    make_den_monic();
  }

  void cancel_monomial() {
    Exponents<3> m{UINT16_MAX, UINT16_MAX, UINT16_MAX};
    for (const auto* p : {&num_, &den_}) {
      for (const auto& [e, c] : p->terms()) {
        for (std::size_t i = 0; i < 3; ++i) m[i] = std::min(m[i], e[i]);
      }
    }
    if (total_degree(m) == 0) return;
    auto strip = [&](const Poly3& p) {
      Poly3 r(RationalField{});
      for (const auto& [e, c] : p.terms()) {
        Exponents<3> f;
        for (std::size_t i = 0; i < 3; ++i) f[i] = static_cast<std::uint16_t>(e[i] - m[i]);
        r.add_term(f, c);
      }
      return r;
    };
    num_ = strip(num_);
    den_ = strip(den_);
  }

  void make_den_monic() {
    const Rational lc = den_.leading_term().second;
    if (lc == Rational(1)) return;
    const Rational s = lc.inv();
    num_ = s * num_;
    den_ = s * den_;
  }

  Poly3 num_;
  Poly3 den_;
};

inline bool is_zero(const RationalFunction& a) { return a.is_zero(); }
inline RationalFunction inv(const RationalFunction& a) { return a.inv(); }
inline std::string to_string(const RationalFunction& a) { return a.str(); }

inline RationalFunction RationalFunction::compose(const std::array<RationalFunction, 3>& images) const {
  auto conv = [](const Rational& c) { return RationalFunction(c); };
  const RationalFunction one(Rational(1)), zero(Rational(0));
  RationalFunction n = num_.evaluate(images, zero, one, conv);
  RationalFunction d = den_.evaluate(images, zero, one, conv);
  return n / d;
}

/// The field Q(y1, y2, y3) as a scalar domain.
struct RationalFunctionField {
  using value_type = RationalFunction;
  [[nodiscard]] RationalFunction zero() const { return {}; }
  [[nodiscard]] RationalFunction one() const { return {Rational(1)}; }
  [[nodiscard]] RationalFunction from_int(std::int64_t n) const { return {Rational(n)}; }
  [[nodiscard]] RationalFunction from_rational(const Rational& q) const { return {q}; }
  [[nodiscard]] RationalFunction y(std::size_t i) const { return RationalFunction::variable(i - 1); }
  [[nodiscard]] std::string name() const { return "symbolic"; }
  [[nodiscard]] std::uint64_t characteristic() const { return 0; }
  friend bool operator==(const RationalFunctionField&, const RationalFunctionField&) = default;
};

/// Evaluates rf at a triple of rationals or prime-field elements.
template <Field F>
value_t<F> specialize(const RationalFunction& rf, const F& dom, const std::array<value_t<F>, 3>& pt) {
  return rf.evaluate(dom, pt);
}

}  // namespace pabel
