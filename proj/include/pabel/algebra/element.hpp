#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pabel/algebra/word.hpp"
#include "pabel/errors.hpp"
#include "pabel/scalars/field.hpp"

namespace pabel {

/// Sparse linear combination of reduced words in k^a * k^b over a scalar domain.
template <Field D>
class AlgebraElement {
 public:
  using value_type = value_t<D>;
  using Terms = std::map<Word, value_type>;

  AlgebraElement(AlgebraSignature sig, D dom) : sig_(sig), dom_(std::move(dom)) {}

  static AlgebraElement one(const AlgebraSignature& sig, const D& dom) { return from_word(sig, dom, Word{}); }
  static AlgebraElement from_word(const AlgebraSignature& sig, const D& dom, const Word& w,
                                  const std::optional<value_type>& c = std::nullopt) {
    if (!w.valid_for(sig)) throw UsageError("word " + w.str() + " invalid for signature");
    AlgebraElement e(sig, dom);
    e.add_term(w, c ? *c : dom.one());
    return e;
  }
  static AlgebraElement scalar(const AlgebraSignature& sig, const D& dom, const value_type& c) {
    AlgebraElement e(sig, dom);
    e.add_term(Word{}, c);
    return e;
  }

  [[nodiscard]] const AlgebraSignature& signature() const { return sig_; }
  [[nodiscard]] const D& domain() const { return dom_; }
  [[nodiscard]] const Terms& terms() const { return t_; }
  [[nodiscard]] bool is_zero() const { return t_.empty(); }
  [[nodiscard]] std::size_t size() const { return t_.size(); }
  /// Maximal word length in the support; -1 for zero.
  [[nodiscard]] int degree() const { return t_.empty() ? -1 : static_cast<int>(t_.rbegin()->first.length()); }
  [[nodiscard]] value_type coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? dom_.zero() : it->second;
  }

  void add_term(const Word& w, const value_type& c) {
    if (scalar_is_zero(c)) return;
    auto [it, inserted] = t_.try_emplace(w, c);
    if (!inserted) {
      it->second = it->second + c;
      if (scalar_is_zero(it->second)) t_.erase(it);
    }
  }

  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) {
    x.check(y);
    for (const auto& [w, c] : y.t_) x.add_term(w, c);
    return x;
  }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) {
    x.check(y);
    for (const auto& [w, c] : y.t_) x.add_term(w, -c);
    return x;
  }
  friend AlgebraElement operator-(AlgebraElement x) {
    for (auto& [w, c] : x.t_) c = -c;
    return x;
  }
  friend AlgebraElement operator*(const value_type& s, AlgebraElement x) {
    if (scalar_is_zero(s)) return AlgebraElement(x.sig_, x.dom_);
    for (auto& [w, c] : x.t_) c = s * c;
    return x;
  }
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    x.check(y);
    AlgebraElement r(x.sig_, x.dom_);
    for (const auto& [u, cu] : x.t_) {
      for (const auto& [v, cv] : y.t_) {
        if (auto w = multiply_words(u, v)) r.add_term(*w, cu * cv);
      }
    }
    return r;
  }
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    if (!(x.sig_ == y.sig_) || x.t_.size() != y.t_.size()) return false;
    auto iy = y.t_.begin();
    for (auto ix = x.t_.begin(); ix != x.t_.end(); ++ix, ++iy) {
      if (!(ix->first == iy->first) || !(ix->second == iy->second)) return false;
    }
    return true;
  }

  /// u * this * v for words u, v.
  [[nodiscard]] AlgebraElement sandwich(const Word& u, const Word& v) const {
    AlgebraElement r(sig_, dom_);
    for (const auto& [w, c] : t_) {
      auto left = multiply_words(u, w);
      if (!left) continue;
      if (auto full = multiply_words(*left, v)) r.add_term(*full, c);
    }
    return r;
  }

  /// Applies a coefficient map (e.g. a specialization) term by term.
  template <Field E, class F>
  [[nodiscard]] AlgebraElement<E> map_coefficients(const E& target, F&& f) const {
    AlgebraElement<E> r(sig_, target);
    for (const auto& [w, c] : t_) r.add_term(w, f(c));
    return r;
  }

  /// Canonical text, terms in descending graded order: "3/2*p1.q2.p1 + (-1)*q1".
  [[nodiscard]] std::string str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      std::string cs = to_string(it->second);
      const bool wrap = cs.find_first_of("-+ ") != std::string::npos;
      out += (wrap ? "(" + cs + ")" : cs) + "*" + it->first.str();
    }
    return out;
  }

  /// JSON term list [{"word": ..., "coeff": ...}] in descending graded order.
  [[nodiscard]] nlohmann::json to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      terms.push_back({{"word", it->first.str()}, {"coeff", to_string(it->second)}});
    }
    return {{"signature", {sig_.a, sig_.b}}, {"terms", terms}};
  }

  /// Inverse of str() for domains whose coefficients print as rationals.
  static AlgebraElement parse(const AlgebraSignature& sig, const D& dom, std::string_view text) {
    AlgebraElement e(sig, dom);
    if (text == "0") return e;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find(" + ", pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view term = text.substr(pos, end - pos);
      const std::size_t star = term.rfind('*');
      if (star == std::string_view::npos) throw UsageError("term without '*': " + std::string(term));
      std::string_view cs = term.substr(0, star);
      if (cs.size() >= 2 && cs.front() == '(' && cs.back() == ')') cs = cs.substr(1, cs.size() - 2);
      const Word w = Word::parse(term.substr(star + 1));
      if (!w.valid_for(sig)) throw UsageError("word " + w.str() + " invalid for signature");
      e.add_term(w, dom.from_rational(Rational::parse(cs)));
      pos = end + 3;
    }
    return e;
  }

  static AlgebraElement from_json(const D& dom, const nlohmann::json& j) {
    const AlgebraSignature sig(j.at("signature").at(0).get<int>(), j.at("signature").at(1).get<int>());
    AlgebraElement e(sig, dom);
    for (const auto& t : j.at("terms")) {
      const Word w = Word::parse(t.at("word").get<std::string>());
      if (!w.valid_for(sig)) throw UsageError("word " + w.str() + " invalid for signature");
      e.add_term(w, dom.from_rational(Rational::parse(t.at("coeff").get<std::string>())));
    }
    return e;
  }

 private:
  void check(const AlgebraElement& o) const {
    if (!(sig_ == o.sig_)) throw UsageError("algebra signature mismatch");
  }

  AlgebraSignature sig_;
  D dom_;
  Terms t_;
};

template <Field D>
bool is_zero(const AlgebraElement<D>& x) {
  return x.is_zero();
}

template <Field D>
AlgebraElement<D> commutator(const AlgebraElement<D>& u, const AlgebraElement<D>& v) {
  return u * v - v * u;
}

/// The idempotent p_i (tag P) or q_j (tag Q), full index range; the eliminated
/// index expands to 1 minus the others.
template <Field D>
AlgebraElement<D> idempotent(const AlgebraSignature& sig, const D& dom, Tag tag, int index) {
  const int n = tag == Tag::P ? sig.a : sig.b;
  if (index < 1 || index > n) throw UsageError("idempotent index out of range");
  if (index < n) return AlgebraElement<D>::from_word(sig, dom, Word{Letter{tag, index}});
  AlgebraElement<D> e = AlgebraElement<D>::one(sig, dom);
  for (int i = 1; i < n; ++i) e.add_term(Word{Letter{tag, i}}, -dom.one());
  return e;
}

template <Field D>
AlgebraElement<D> p(const AlgebraSignature& sig, const D& dom, int i) {
  return idempotent(sig, dom, Tag::P, i);
}
template <Field D>
AlgebraElement<D> q(const AlgebraSignature& sig, const D& dom, int j) {
  return idempotent(sig, dom, Tag::Q, j);
}

template <Field D>
struct CentralElementReport {
  AlgebraElement<D> z;
  AlgebraElement<D> z_p;   // [z, p]
  AlgebraElement<D> z_q;   // [z, q]
  AlgebraElement<D> z2_p;  // [z^2, p]
  [[nodiscard]] bool central() const { return z_p.is_zero() && z_q.is_zero() && z2_p.is_zero(); }
};

/// In k^2 * k^2 with idempotents p, q: z = -p - q + pq + qp commutes with both.
template <Field D>
CentralElementReport<D> central_element_check(const D& dom) {
  const AlgebraSignature sig(2, 2);
  const auto P = p(sig, dom, 1), Q = q(sig, dom, 1);
  const auto z = -P - Q + P * Q + Q * P;
  return {z, commutator(z, P), commutator(z, Q), commutator(z * z, P)};
}

}  // namespace pabel
