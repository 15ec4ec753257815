#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "pabel/errors.hpp"
#include "pabel/scalars/field.hpp"
#include "pabel/scalars/univariate.hpp"

namespace pabel {

/// Thrown when an element of base[t]/(f) turns out to be a zero divisor;
/// `factor` is a proper monic factor of f, which lets callers split the modulus.
template <Field Base>
struct ZeroDivisorError : DomainError {
  ZeroDivisorError(UPoly<Base> g, const std::string& what) : DomainError(what), factor(std::move(g)) {}
  UPoly<Base> factor;
};

template <Field Base>
struct ExtModulus {
  UPoly<Base> f;  // monic, degree >= 1
  std::string var;
};

/// Element of base[t]/(f). Arithmetic is exact; an inverse exists whenever the
/// residue is coprime to f, which is every nonzero element when f is irreducible.
template <Field Base>
class ExtElement {
 public:
  using base_value = value_t<Base>;
  using Mod = ExtModulus<Base>;

  ExtElement() = default;
  ExtElement(std::shared_ptr<const Mod> m, UPoly<Base> r) : m_(std::move(m)), r_(std::move(r) % m_->f) {}

  [[nodiscard]] const UPoly<Base>& residue() const { return r_.value(); }
  [[nodiscard]] const std::shared_ptr<const Mod>& modulus() const { return m_; }
  [[nodiscard]] bool is_zero() const { return !r_ || r_->is_zero(); }
  /// True for elements of the base field.
  [[nodiscard]] bool in_base() const { return r_->degree() <= 0; }

  [[nodiscard]] ExtElement inv() const {
    auto eg = ext_gcd(*r_, m_->f);
    if (eg.g.is_zero() || eg.g.degree() > 0) {
      if (r_->is_zero()) throw DomainError("inverse of zero in extension field");
      throw ZeroDivisorError<Base>(eg.g, "zero divisor in extension: modulus factors");
    }
    return {m_, eg.s};
  }

  friend ExtElement operator+(const ExtElement& a, const ExtElement& b) {
    a.check(b);
    return {a.m_, *a.r_ + *b.r_};
  }
  friend ExtElement operator-(const ExtElement& a, const ExtElement& b) {
    a.check(b);
    return {a.m_, *a.r_ - *b.r_};
  }
  friend ExtElement operator*(const ExtElement& a, const ExtElement& b) {
    a.check(b);
    return {a.m_, *a.r_ * *b.r_};
  }
  friend ExtElement operator/(const ExtElement& a, const ExtElement& b) { return a * b.inv(); }
  friend ExtElement operator-(const ExtElement& a) { return {a.m_, -*a.r_}; }
  friend bool operator==(const ExtElement& a, const ExtElement& b) {
    a.check(b);
    return *a.r_ == *b.r_;
  }

 private:
  void check(const ExtElement& o) const {
    if (!m_ || !o.m_) throw UsageError("unbound extension element");
    if (m_ != o.m_ && !(m_->f == o.m_->f)) throw UsageError("mixed extension fields");
  }

  std::shared_ptr<const Mod> m_;
  std::optional<UPoly<Base>> r_;
};

template <Field Base>
bool is_zero(const ExtElement<Base>& a) {
  return a.is_zero();
}
template <Field Base>
ExtElement<Base> inv(const ExtElement<Base>& a) {
  return a.inv();
}
template <Field Base>
std::string to_string(const ExtElement<Base>& a) {
  return a.residue().str(a.modulus()->var);
}

/// The domain base[t]/(f) for monic f of positive degree.
template <Field Base>
class ExtensionField {
 public:
  using value_type = ExtElement<Base>;
  using Mod = ExtModulus<Base>;

  ExtensionField(const UPoly<Base>& f, std::string var = "t") {
    if (f.degree() < 1) throw UsageError("extension modulus must have positive degree");
    m_ = std::make_shared<const Mod>(Mod{f.monic(), std::move(var)});
  }

  [[nodiscard]] const Base& base() const { return m_->f.domain(); }
  [[nodiscard]] const UPoly<Base>& modulus() const { return m_->f; }
  [[nodiscard]] int degree() const { return m_->f.degree(); }

  [[nodiscard]] value_type embed(const value_t<Base>& c) const { return {m_, UPoly<Base>(base(), {c})}; }
  [[nodiscard]] value_type make(const UPoly<Base>& r) const { return {m_, r}; }
  [[nodiscard]] value_type generator() const { return {m_, UPoly<Base>::variable(base())}; }
  [[nodiscard]] value_type zero() const { return embed(base().zero()); }
  [[nodiscard]] value_type one() const { return embed(base().one()); }
  [[nodiscard]] value_type from_int(std::int64_t n) const { return embed(base().from_int(n)); }
  [[nodiscard]] value_type from_rational(const Rational& q) const { return embed(base().from_rational(q)); }
  [[nodiscard]] std::string name() const { return "extension[" + base().name() + "](" + m_->f.str(m_->var) + ")"; }
  [[nodiscard]] std::uint64_t characteristic() const { return base().characteristic(); }

  /// Multiplication-by-x matrix in the power basis 1, t, ..., t^(n-1).
  [[nodiscard]] Matrix<Base> multiplication_matrix(const value_type& x) const {
    const auto n = static_cast<std::size_t>(degree());
    Matrix<Base> m(base(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
      value_type e = make(UPoly<Base>::monomial(base(), base().one(), j)) * x;
      for (std::size_t i = 0; i < n; ++i) m(i, j) = e.residue().coeff(i);
    }
    return m;
  }
  [[nodiscard]] value_t<Base> trace(const value_type& x) const { return multiplication_matrix(x).trace(); }
  [[nodiscard]] value_t<Base> norm(const value_type& x) const { return multiplication_matrix(x).determinant(); }

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) { return a.m_->f == b.m_->f; }

 private:
  std::shared_ptr<const Mod> m_;
};

}  // namespace pabel
