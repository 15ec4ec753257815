#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pabel/errors.hpp"
#include "pabel/scalars/field.hpp"

namespace pabel {

template <std::size_t N>
using Exponents = std::array<std::uint16_t, N>;

template <std::size_t N>
unsigned total_degree(const Exponents<N>& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

/// Graded lexicographic order: total degree first, then exponent of the first variable, ...
template <std::size_t N>
struct GrLexLess {
  bool operator()(const Exponents<N>& a, const Exponents<N>& b) const {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Sparse polynomial in N commuting variables over a field. No zero coefficient is stored.
template <Field D, std::size_t N>
class MPoly {
 public:
  using value_type = value_t<D>;
  using Exp = Exponents<N>;
  using Terms = std::map<Exp, value_type, GrLexLess<N>>;

  explicit MPoly(D dom) : dom_(std::move(dom)) {}
  MPoly(D dom, Terms terms) : dom_(std::move(dom)), t_(std::move(terms)) { prune(); }

  static MPoly constant(const D& dom, const value_type& c) {
    MPoly p(dom);
    if (!scalar_is_zero(c)) p.t_.emplace(Exp{}, c);
    return p;
  }
  static MPoly variable(const D& dom, std::size_t i) {
    if (i >= N) throw UsageError("variable index out of range");
    Exp e{};
    e[i] = 1;
    MPoly p(dom);
    p.t_.emplace(e, dom.one());
    return p;
  }
  static MPoly monomial(const D& dom, const value_type& c, const Exp& e) {
    MPoly p(dom);
    if (!scalar_is_zero(c)) p.t_.emplace(e, c);
    return p;
  }

  [[nodiscard]] const D& domain() const { return dom_; }
  [[nodiscard]] const Terms& terms() const { return t_; }
  [[nodiscard]] bool is_zero() const { return t_.empty(); }
  [[nodiscard]] std::size_t size() const { return t_.size(); }
  [[nodiscard]] bool is_constant() const { return t_.empty() || (t_.size() == 1 && total_degree(t_.begin()->first) == 0); }
  [[nodiscard]] value_type coeff(const Exp& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? dom_.zero() : it->second;
  }
  [[nodiscard]] value_type constant_term() const { return coeff(Exp{}); }
  /// Greatest term under the graded order; requires a nonzero polynomial.
  [[nodiscard]] const std::pair<const Exp, value_type>& leading_term() const {
    if (t_.empty()) throw DomainError("leading term of zero polynomial");
    return *t_.rbegin();
  }
  [[nodiscard]] int total_deg() const {
    return t_.empty() ? -1 : static_cast<int>(total_degree(t_.rbegin()->first));
  }
  [[nodiscard]] int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, static_cast<int>(e[var]));
    return d;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) {
    for (const auto& [e, c] : b.t_) a.add_term(e, c);
    return a;
  }
  friend MPoly operator-(MPoly a, const MPoly& b) {
    for (const auto& [e, c] : b.t_) a.add_term(e, -c);
    return a;
  }
  friend MPoly operator-(MPoly a) {
    for (auto& [e, c] : a.t_) c = -c;
    return a;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.dom_);
    for (const auto& [ea, ca] : a.t_) {
      for (const auto& [eb, cb] : b.t_) {
        Exp e;
        for (std::size_t i = 0; i < N; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  friend MPoly operator*(const value_type& s, MPoly a) {
    if (scalar_is_zero(s)) return MPoly(a.dom_);
    for (auto& [e, c] : a.t_) c = s * c;
    a.prune();
    return a;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    auto ia = a.t_.begin();
    for (auto ib = b.t_.begin(); ib != b.t_.end(); ++ia, ++ib) {
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    }
    return true;
  }

  [[nodiscard]] MPoly pow(unsigned k) const {
    MPoly r = constant(dom_, dom_.one());
    MPoly b = *this;
    while (k) {
      if (k & 1) r = r * b;
      b = b * b;
      k >>= 1;
    }
    return r;
  }

  [[nodiscard]] MPoly partial(std::size_t var) const {
    MPoly r(dom_);
    for (const auto& [e, c] : t_) {
      if (e[var] == 0) continue;
      Exp f = e;
      f[var] = static_cast<std::uint16_t>(f[var] - 1);
      r.add_term(f, dom_.from_int(e[var]) * c);
    }
    return r;
  }

  /// Multiplies by the monomial y^e.
  [[nodiscard]] MPoly shift(const Exp& e) const {
    MPoly r(dom_);
    for (const auto& [f, c] : t_) {
      Exp g;
      for (std::size_t i = 0; i < N; ++i) g[i] = static_cast<std::uint16_t>(f[i] + e[i]);
      r.t_.emplace(g, c);
    }
    return r;
  }

  /// Evaluates at a point of any ring T; `conv` maps coefficients into T.
  template <class T, class Conv>
  [[nodiscard]] T evaluate(const std::array<T, N>& pt, const T& zero, const T& one, Conv conv) const {
    T acc = zero;
    std::array<std::vector<T>, N> powers;
    for (std::size_t i = 0; i < N; ++i) powers[i].push_back(one);
    for (const auto& [e, c] : t_) {
      T term = conv(c);
      for (std::size_t i = 0; i < N; ++i) {
        while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * pt[i]);
        if (e[i]) term = term * powers[i][e[i]];
      }
      acc = acc + term;
    }
    return acc;
  }

  /// Substitutes polynomials (possibly in another variable count) for the variables.
  template <std::size_t M>
  [[nodiscard]] MPoly<D, M> substitute(const std::array<MPoly<D, M>, N>& images) const {
    return evaluate<MPoly<D, M>>(images, MPoly<D, M>(dom_), MPoly<D, M>::constant(dom_, dom_.one()),
                                 [&](const value_type& c) { return MPoly<D, M>::constant(dom_, c); });
  }

  /// Coefficients with respect to `var`, index k holding the part multiplying var^k.
  [[nodiscard]] std::vector<MPoly> coefficients_in(std::size_t var) const {
    std::vector<MPoly> out(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1, MPoly(dom_));
    for (const auto& [e, c] : t_) {
      Exp f = e;
      f[var] = 0;
      out[e[var]].add_term(f, c);
    }
    return out;
  }

  /// Exact quotient a / b when b divides a, else nullopt (multivariate division under grlex).
  friend std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw DomainError("multivariate division by zero");
    MPoly r = a;
    MPoly q(a.dom_);
    const auto& [lb_e, lb_c] = b.leading_term();
    const value_type lb_inv = a.dom_.one() / lb_c;
    while (!r.is_zero()) {
      const auto [le, lc] = r.leading_term();
      Exp s;
      for (std::size_t i = 0; i < N; ++i) {
        if (le[i] < lb_e[i]) return std::nullopt;
        s[i] = static_cast<std::uint16_t>(le[i] - lb_e[i]);
      }
      const value_type f = lc * lb_inv;
      q.add_term(s, f);
      r = r - f * b.shift(s);
    }
    return q;
  }

  [[nodiscard]] std::string str(const std::array<std::string, N>& names) const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < N; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      std::string cs = to_string(c);
      if (!out.empty()) out += " + ";
      if (mono.empty()) {
        out += cs;
      } else if (c == dom_.one()) {
        out += mono;
      } else {
        out += "(" + cs + ")*" + mono;
      }
    }
    return out;
  }

  void add_term(const Exp& e, const value_type& c) {
    if (scalar_is_zero(c)) return;
    auto [it, inserted] = t_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (scalar_is_zero(it->second)) t_.erase(it);
    }
  }

 private:
  void prune() {
    for (auto it = t_.begin(); it != t_.end();) {
      it = scalar_is_zero(it->second) ? t_.erase(it) : std::next(it);
    }
  }

  D dom_;
  Terms t_;
};

template <Field D, std::size_t N>
bool is_zero(const MPoly<D, N>& p) {
  return p.is_zero();
}

}  // namespace pabel
