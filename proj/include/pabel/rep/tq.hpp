#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pabel/algebra/element.hpp"
#include "pabel/errors.hpp"
#include "pabel/linalg/dense.hpp"
#include "pabel/scalars/rational_function.hpp"

namespace pabel {

/// Words in t1, t2 (tokens 1, 2) and q1, q2 (tokens -1, -2); adjacent q tokens multiply in B.
template <Field D>
class TqExpr {
 public:
  using T = value_t<D>;
  using Key = std::vector<int>;

  explicit TqExpr(D dom) : dom_(std::move(dom)) {}
  static TqExpr token(const D& dom, int tok, const T& c) {
    TqExpr e(dom);
    e.add({tok}, c);
    return e;
  }
  static TqExpr scalar(const D& dom, const T& c) {
    TqExpr e(dom);
    e.add({}, c);
    return e;
  }

  [[nodiscard]] const std::map<Key, T>& terms() const { return t_; }
  [[nodiscard]] const D& domain() const { return dom_; }
  [[nodiscard]] bool is_zero() const { return t_.empty(); }
  [[nodiscard]] T coeff(const Key& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? dom_.zero() : it->second;
  }

  void add(Key k, const T& c) {
    Key s;
    for (int tok : k) {
      if (tok < 0 && !s.empty() && s.back() < 0) {
        if (s.back() != tok) return;
        continue;
      }
      s.push_back(tok);
    }
    if (scalar_is_zero(c)) return;
    auto [it, fresh] = t_.try_emplace(std::move(s), c);
    if (!fresh) {
      it->second = it->second + c;
      if (scalar_is_zero(it->second)) t_.erase(it);
    }
  }

  friend TqExpr operator+(TqExpr a, const TqExpr& b) {
    for (const auto& [k, c] : b.t_) a.add(k, c);
    return a;
  }
  friend TqExpr operator-(TqExpr a, const TqExpr& b) {
    for (const auto& [k, c] : b.t_) a.add(k, -c);
    return a;
  }
  friend TqExpr operator*(const T& s, TqExpr a) {
    TqExpr out(a.dom_);
    for (const auto& [k, c] : a.t_) out.add(k, s * c);
    return out;
  }
  friend TqExpr operator*(const TqExpr& a, const TqExpr& b) {
    TqExpr out(a.dom_);
    for (const auto& [ka, ca] : a.t_) {
      for (const auto& [kb, cb] : b.t_) {
        Key k = ka;
        k.insert(k.end(), kb.begin(), kb.end());
        out.add(std::move(k), ca * cb);
      }
    }
    return out;
  }

 private:
  D dom_;
  std::map<Key, T> t_;
};

inline std::string tq_word(const std::vector<int>& k) {
  if (k.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += '.';
    s += (k[i] > 0 ? "t" : "q") + std::to_string(k[i] > 0 ? k[i] : -k[i]);
  }
  return s;
}

template <Field D>
struct TGenerators {
  AlgebraElement<D> t1, t2;
  value_t<D> d;  // y3 - y1 y2
};

/// t1 = p1 - y2 q1 - y3 q2, t2 = p2 + q1 + y1 q2 in k^3 * k^3.
template <Field D>
TGenerators<D> t_generators(const D& dom, const value_t<D>& y1, const value_t<D>& y2, const value_t<D>& y3) {
  const AlgebraSignature sig(3, 3);
  auto P = [&](int i) { return p(sig, dom, i); };
  auto Q = [&](int j) { return q(sig, dom, j); };
  return {P(1) - y2 * Q(1) - y3 * Q(2), P(2) + Q(1) + y1 * Q(2), y3 - y1 * y2};
}

/// Substitutes t_i, q_j into an expression of the free product.
template <Field D>
AlgebraElement<D> to_algebra(const TqExpr<D>& e, const TGenerators<D>& tg) {
  const AlgebraSignature sig(3, 3);
  const D& dom = e.domain();
  AlgebraElement<D> out(sig, dom);
  for (const auto& [k, c] : e.terms()) {
    auto m = AlgebraElement<D>::one(sig, dom);
    for (int tok : k) {
      m = m * (tok == 1 ? tg.t1 : tok == 2 ? tg.t2 : q(sig, dom, -tok));
    }
    out = out + c * m;
  }
  return out;
}

template <Field D>
struct TqSolution {
  using T = value_t<D>;
  D dom;
  std::array<T, 3> y;
  T d;
  T system_det;
  std::array<TqExpr<D>, 4> tq;       // t1q1, t1q2, t2q1, t2q2 in words t t, q t, t, q, 1
  std::array<TqExpr<D>, 4> relations;  // p1^2 - p1, p2^2 - p2, p1 p2, p2 p1 rewritten in t, q
  [[nodiscard]] const TqExpr<D>& get(int i, int j) const { return tq[static_cast<std::size_t>(2 * (i - 1) + (j - 1))]; }
};

/// Solves the idempotent relations of p1 = t1 + y2 q1 + y3 q2, p2 = t2 - q1 - y1 q2 for the four t_i q_j.
template <Field D>
TqSolution<D> tq_rewrite(const D& dom, const value_t<D>& y1, const value_t<D>& y2, const value_t<D>& y3) {
  using T = value_t<D>;
  using E = TqExpr<D>;
  const T d = y3 - y1 * y2;
  if (scalar_is_zero(d)) throw DegenerateError("d = y3 - y1 y2 vanishes: point on the quadric");
  const E t1 = E::token(dom, 1, dom.one()), t2 = E::token(dom, 2, dom.one());
  const E q1 = E::token(dom, -1, dom.one()), q2 = E::token(dom, -2, dom.one());
  const E P1 = t1 + y2 * q1 + y3 * q2;
  const E P2 = t2 - q1 - y1 * q2;
  TqSolution<D> sol{dom, {y1, y2, y3}, d, dom.zero(), {E(dom), E(dom), E(dom), E(dom)},
                    {P1 * P1 - P1, P2 * P2 - P2, P1 * P2, P2 * P1}};
  const std::array<std::vector<int>, 4> unknowns{{{1, -1}, {1, -2}, {2, -1}, {2, -2}}};
  std::vector<std::vector<int>> rest;
  for (const auto& rel : sol.relations) {
    for (const auto& [k, c] : rel.terms()) {
      bool unknown = false;
      for (const auto& u : unknowns) unknown = unknown || k == u;
      if (!unknown && std::find(rest.begin(), rest.end(), k) == rest.end()) rest.push_back(k);
    }
  }
  std::sort(rest.begin(), rest.end());
  Matrix<D> A(dom, 4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) A(r, c) = sol.relations[r].coeff(unknowns[c]);
  sol.system_det = A.determinant();
  if (scalar_is_zero(sol.system_det)) throw DegenerateError("t q system is singular");
  // A u + B w = 0  =>  u = -A^{-1} B w, column by column over the remaining words
  for (const auto& w : rest) {
    std::vector<T> rhs(4, dom.zero());
    for (std::size_t r = 0; r < 4; ++r) rhs[r] = -sol.relations[r].coeff(w);
    auto u = A.solve(rhs);
    for (std::size_t c = 0; c < 4; ++c) sol.tq[c].add(w, (*u)[c]);
  }
  return sol;
}

/// The four formulas for t_i q_j as printed with the construction of the 3-dimensional module.
inline std::array<TqExpr<RationalFunctionField>, 4> printed_tq_formulas() {
  using E = TqExpr<RationalFunctionField>;
  const RationalFunctionField F;
  const auto y1 = F.y(1), y2 = F.y(2), y3 = F.y(3);
  const auto one = F.one();
  const auto d = y3 - y1 * y2;
  auto w = [&](std::vector<int> k, const RationalFunction& c) {
    E e(F);
    e.add(std::move(k), c);
    return e;
  };
  const std::vector<int> T1T1{1, 1}, T1T2{1, 2}, T2T1{2, 1}, T2T2{2, 2}, Q1T1{-1, 1}, Q1T2{-1, 2}, Q2T1{-2, 1},
      Q2T2{-2, 2}, T1{1}, T2{2}, Q1{-1}, Q2{-2};
  const E t1q1 = (one / d) * (w(T1T2, y3) + w(Q1T2, y2 * y3) + w(Q2T2, y3 * y3) + w(Q1, y2 * y2 * y1) -
                              w(Q1, y2 * y3) + w(T1T1, y1) + w(Q1T1, y1 * y2) + w(Q2T1, y1 * y3) - w(T1, y1) -
                              w(Q2, y1 * y3) - w(Q1, y1 * y2));
  const E t1q2 = (-one / d) * (w(T1T1, one) + w(Q1T1, y2) + w(Q2T1, y3) + w(T1T2, y2) + w(Q1T2, y2 * y2) +
                               w(Q2T2, y2 * y3) - w(T1, one) - w(Q2, y1 * y2 * y3) - w(Q2, y3) - w(Q1, y2));
  const E t2q1 = (-one / d) * (w(Q2, -(y1 * y3)) + w(Q1, y1 * y2) - w(T2T2, y3) + w(Q1T2, y3) + w(T2, y3) -
                               w(Q1, F.from_int(2) * y3) - w(T2T1, y1) + w(Q2T1, y1 * y1) + w(Q2T2, y1 * y3));
  const E t2q2 = (one / d) * (w(T2T1, -one) + w(Q1T1, one) + w(Q2T1, y1) - w(T2T2, y2) + w(Q1T2, y2) +
                              w(Q2T2, y1 * y2) + w(T2, y2) - w(Q1, y2) + w(Q2, y1 * y3) - w(Q2, y1 * y2) -
                              w(Q2, y1 * y2));
  return {t1q1, t1q2, t2q1, t2q2};
}

struct TqDiscrepancy {
  std::string lhs;   // e.g. "t1.q2"
  std::string word;  // e.g. "q2"
  std::string derived;
  std::string printed;
};

/// Compares the derived symbolic solution with the printed formulas, term by term.
inline std::vector<TqDiscrepancy> compare_with_printed(const TqSolution<RationalFunctionField>& sol) {
  static const std::array<const char*, 4> names{"t1.q1", "t1.q2", "t2.q1", "t2.q2"};
  const auto printed = printed_tq_formulas();
  std::vector<TqDiscrepancy> out;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<std::vector<int>> keys;
    for (const auto& [k, c] : sol.tq[i].terms()) keys.push_back(k);
    for (const auto& [k, c] : printed[i].terms()) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    }
    std::sort(keys.begin(), keys.end());
    for (const auto& k : keys) {
      const auto a = sol.tq[i].coeff(k), b = printed[i].coeff(k);
      if (!(a == b)) out.push_back({names[i], tq_word(k), a.reduced().str(), b.reduced().str()});
    }
  }
  return out;
}

}  // namespace pabel
