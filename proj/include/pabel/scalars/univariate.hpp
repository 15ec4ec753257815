#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pabel/errors.hpp"
#include "pabel/linalg/dense.hpp"
#include "pabel/scalars/field.hpp"

namespace pabel {

/// Dense univariate polynomial over a field; coefficients stored low degree first
/// and trimmed so that the leading coefficient is nonzero.
template <Field D>
class UPoly {
 public:
  using value_type = value_t<D>;

  explicit UPoly(D dom) : dom_(std::move(dom)) {}
  UPoly(D dom, std::vector<value_type> coeffs) : dom_(std::move(dom)), c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const D& dom, const value_type& c) { return UPoly(dom, {c}); }
  /// c * z^k
  static UPoly monomial(const D& dom, const value_type& c, std::size_t k) {
    std::vector<value_type> v(k + 1, dom.zero());
    v[k] = c;
    return UPoly(dom, std::move(v));
  }
  static UPoly variable(const D& dom) { return monomial(dom, dom.one(), 1); }
  /// Builds from rational coefficients, low degree first.
  static UPoly from_rationals(const D& dom, const std::vector<Rational>& q) {
    std::vector<value_type> v;
    v.reserve(q.size());
    for (const auto& x : q) v.push_back(dom.from_rational(x));
    return UPoly(dom, std::move(v));
  }

  [[nodiscard]] const D& domain() const { return dom_; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<value_type>& coeffs() const { return c_; }
  [[nodiscard]] value_type coeff(std::size_t k) const { return k < c_.size() ? c_[k] : dom_.zero(); }
  [[nodiscard]] value_type leading() const { return c_.empty() ? dom_.zero() : c_.back(); }

  [[nodiscard]] value_type eval(const value_type& x) const {
    value_type r = dom_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  [[nodiscard]] UPoly derivative() const {
    std::vector<value_type> v;
    for (std::size_t k = 1; k < c_.size(); ++k) v.push_back(dom_.from_int(static_cast<std::int64_t>(k)) * c_[k]);
    return UPoly(dom_, std::move(v));
  }

  [[nodiscard]] UPoly monic() const {
    if (is_zero()) return *this;
    const value_type s = dom_.one() / leading();
    UPoly r = *this;
    for (auto& x : r.c_) x = x * s;
    return r;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<value_type> v(std::max(a.c_.size(), b.c_.size()), a.dom_.zero());
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] = v[k] + a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] = v[k] + b.c_[k];
    return UPoly(a.dom_, std::move(v));
  }
  friend UPoly operator-(const UPoly& a) {
    UPoly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.dom_);
    std::vector<value_type> v(a.c_.size() + b.c_.size() - 1, a.dom_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (scalar_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(a.dom_, std::move(v));
  }
  friend UPoly operator*(const value_type& s, const UPoly& a) {
    UPoly r = a;
    for (auto& x : r.c_) x = s * x;
    r.trim();
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k) {
      if (!(a.c_[k] == b.c_[k])) return false;
    }
    return true;
  }

  /// Euclidean division: returns (q, r) with a = q b + r, deg r < deg b.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    UPoly r = a;
    UPoly q(a.dom_);
    if (a.degree() < b.degree()) return {q, r};
    std::vector<value_type> qc(static_cast<std::size_t>(a.degree() - b.degree() + 1), a.dom_.zero());
    const value_type lead_inv = a.dom_.one() / b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
      const value_type f = r.leading() * lead_inv;
      qc[shift] = f;
      for (std::size_t k = 0; k < b.c_.size(); ++k) r.c_[k + shift] = r.c_[k + shift] - f * b.c_[k];
      r.c_.pop_back();
      r.trim();
    }
    return {UPoly(a.dom_, std::move(qc)), r};
  }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

  [[nodiscard]] std::string str(const std::string& var = "z") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const auto& x = c_[static_cast<std::size_t>(k)];
      if (scalar_is_zero(x)) continue;
      if (!out.empty()) out += " + ";
      std::string cs = to_string(x);
      if (k == 0) {
        out += cs;
      } else {
        out += "(" + cs + ")*" + var + (k > 1 ? "^" + std::to_string(k) : "");
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
  }

  D dom_;
  std::vector<value_type> c_;
};

template <Field D>
bool is_zero(const UPoly<D>& p) {
  return p.is_zero();
}

/// Monic gcd by Euclid's algorithm; gcd(0, 0) = 0.
template <Field D>
UPoly<D> gcd(UPoly<D> a, UPoly<D> b) {
  while (!b.is_zero()) {
    UPoly<D> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <Field D>
struct ExtGcd {
  UPoly<D> g, s, t;  // s a + t b = g, g monic
};

template <Field D>
ExtGcd<D> ext_gcd(const UPoly<D>& a, const UPoly<D>& b) {
  const D& dom = a.domain();
  UPoly<D> r0 = a, r1 = b;
  UPoly<D> s0 = UPoly<D>::constant(dom, dom.one()), s1(dom);
  UPoly<D> t0(dom), t1 = UPoly<D>::constant(dom, dom.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<D> s2 = s0 - q * s1;
    UPoly<D> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const auto li = dom.one() / r0.leading();
  return {li * r0, li * s0, li * t0};
}

/// Sylvester matrix of (f, g) with the deg(g) rows of f first, coefficients from the top degree.
template <Field D>
Matrix<D> sylvester_matrix(const UPoly<D>& f, const UPoly<D>& g) {
  const int m = f.degree();
  const int n = g.degree();
  const auto size = static_cast<std::size_t>(m + n);
  Matrix<D> s(f.domain(), size, size);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) s(static_cast<std::size_t>(i), static_cast<std::size_t>(i + k)) = f.coeff(static_cast<std::size_t>(m - k));
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) s(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + k)) = g.coeff(static_cast<std::size_t>(n - k));
  }
  return s;
}

/// Resultant as the Sylvester determinant (f-rows first). Constants: Res(c, g) = c^deg g.
template <Field D>
value_t<D> resultant(const UPoly<D>& f, const UPoly<D>& g) {
  const D& dom = f.domain();
  if (f.is_zero() && g.is_zero()) throw DomainError("resultant of two zero polynomials");
  if (f.is_zero() || g.is_zero()) return dom.zero();
  if (f.degree() == 0 && g.degree() == 0) return dom.one();
  return sylvester_matrix(f, g).determinant();
}

/// Squarefree part: f / gcd(f, f').
template <Field D>
UPoly<D> squarefree_part(const UPoly<D>& f) {
  if (f.degree() <= 0) return f.monic();
  return (f / gcd(f, f.derivative())).monic();
}

}  // namespace pabel
