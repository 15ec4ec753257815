#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pabel/linalg/dense.hpp"
#include "pabel/rep/tq.hpp"
#include "pabel/scalars/multivariate.hpp"

namespace pabel {

/// Polynomial in (z1, z2) over the base field.
template <Field D>
using ZPoly = MPoly<D, 2>;

template <Field D>
using ZMatrix = std::array<std::array<ZPoly<D>, 3>, 3>;

template <Field D>
ZMatrix<D> zmatrix_zero(const D& dom) {
  return {{{ZPoly<D>(dom), ZPoly<D>(dom), ZPoly<D>(dom)},
           {ZPoly<D>(dom), ZPoly<D>(dom), ZPoly<D>(dom)},
           {ZPoly<D>(dom), ZPoly<D>(dom), ZPoly<D>(dom)}}};
}

template <Field D>
ZMatrix<D> operator*(const ZMatrix<D>& a, const ZMatrix<D>& b) {
  ZMatrix<D> c = zmatrix_zero(a[0][0].domain());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) c[i][j] = c[i][j] + a[i][k] * b[k][j];
  return c;
}

template <Field D>
ZMatrix<D> operator-(const ZMatrix<D>& a, const ZMatrix<D>& b) {
  ZMatrix<D> c = a;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c[i][j] = a[i][j] - b[i][j];
  return c;
}

/// rho(t1), rho(t2), rho(q1), rho(q2) with entries polynomial in the character values z1 = chi(t1),
/// z2 = chi(t2), in the basis 1 (x) v, q1 (x) v, q2 (x) v. Columns are images of basis vectors.
template <Field D>
struct PolyRep {
  std::array<ZMatrix<D>, 4> m;
};

template <Field D>
PolyRep<D> rho_polynomial(const TqSolution<D>& sol) {
  const D& dom = sol.dom;
  const auto z = [&](int a) { return ZPoly<D>::variable(dom, static_cast<std::size_t>(a - 1)); };
  PolyRep<D> rep{{zmatrix_zero(dom), zmatrix_zero(dom), zmatrix_zero(dom), zmatrix_zero(dom)}};
  for (int i = 1; i <= 2; ++i) {
    auto& M = rep.m[static_cast<std::size_t>(i - 1)];
    M[0][0] = z(i);
    for (int j = 1; j <= 2; ++j) {
      const auto col = static_cast<std::size_t>(j);
      for (const auto& [k, c] : sol.get(i, j).terms()) {
        const auto cc = ZPoly<D>::constant(dom, c);
        if (k.empty()) {
          M[0][col] = M[0][col] + cc;
        } else if (k.size() == 1 && k[0] > 0) {
          M[0][col] = M[0][col] + cc * z(k[0]);
        } else if (k.size() == 1) {
          M[static_cast<std::size_t>(-k[0])][col] = M[static_cast<std::size_t>(-k[0])][col] + cc;
        } else if (k.size() == 2 && k[0] > 0 && k[1] > 0) {
          M[0][col] = M[0][col] + cc * z(k[0]) * z(k[1]);
        } else if (k.size() == 2 && k[0] < 0 && k[1] > 0) {
          M[static_cast<std::size_t>(-k[0])][col] = M[static_cast<std::size_t>(-k[0])][col] + cc * z(k[1]);
        } else {
          throw DegenerateError("unexpected word " + tq_word(k) + " in t q rewriting");
        }
      }
    }
  }
  const auto one = ZPoly<D>::constant(dom, dom.one());
  rep.m[2][1][0] = one;
  rep.m[2][1][1] = one;
  rep.m[3][2][0] = one;
  rep.m[3][2][2] = one;
  return rep;
}

/// Concrete matrices over a field K containing the base.
template <Field K>
struct RepMatrices {
  Matrix<K> t1, t2, q1, q2, p1, p2;
  [[nodiscard]] std::vector<Matrix<K>> generators() const { return {p1, p2, q1, q2}; }
};

template <Field K, Field D>
RepMatrices<K> build_rho(const K& field, const PolyRep<D>& rep, const std::array<value_t<D>, 3>& y,
                         const std::function<value_t<K>(const value_t<D>&)>& embed, const value_t<K>& z1,
                         const value_t<K>& z2) {
  auto eval = [&](const ZMatrix<D>& zm) {
    Matrix<K> out(field, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) out(i, j) = zm[i][j].evaluate(std::array<value_t<K>, 2>{z1, z2}, field.zero(), field.one(), embed);
    return out;
  };
  RepMatrices<K> r{eval(rep.m[0]), eval(rep.m[1]), eval(rep.m[2]), eval(rep.m[3]), Matrix<K>(field, 3, 3), Matrix<K>(field, 3, 3)};
  r.p1 = r.t1 + embed(y[1]) * r.q1 + embed(y[2]) * r.q2;
  r.p2 = r.t2 - r.q1 - embed(y[0]) * r.q2;
  return r;
}

template <Field K>
struct RhoChecks {
  bool q_idempotent = false;
  bool q_orthogonal = false;
  bool p_idempotent = false;
  bool p_orthogonal = false;
  bool t_commute = false;  // rho(X) = 0
  [[nodiscard]] bool relations() const { return q_idempotent && q_orthogonal && p_idempotent && p_orthogonal; }
};

template <Field K>
RhoChecks<K> check_rho(const RepMatrices<K>& r) {
  RhoChecks<K> c;
  c.q_idempotent = r.q1 * r.q1 == r.q1 && r.q2 * r.q2 == r.q2;
  c.q_orthogonal = (r.q1 * r.q2).is_zero() && (r.q2 * r.q1).is_zero();
  c.p_idempotent = r.p1 * r.p1 == r.p1 && r.p2 * r.p2 == r.p2;
  c.p_orthogonal = (r.p1 * r.p2).is_zero() && (r.p2 * r.p1).is_zero();
  c.t_commute = r.t1 * r.t2 == r.t2 * r.t1;
  return c;
}

/// Matrix image of a word of the free product.
template <Field K>
Matrix<K> rho_of_word(const RepMatrices<K>& r, const Word& w, const K& field) {
  Matrix<K> m = Matrix<K>::identity(field, 3);
  for (std::size_t i = 0; i < w.length(); ++i) {
    const Letter l = w[i];
    const Matrix<K>& g = l.tag == Tag::P ? (l.index == 1 ? r.p1 : r.p2) : (l.index == 1 ? r.q1 : r.q2);
    m = m * g;
  }
  return m;
}

template <Field K>
Matrix<K> rho_of(const RepMatrices<K>& r, const AlgebraElement<K>& e, const K& field) {
  Matrix<K> out(field, 3, 3);
  for (const auto& [w, c] : e.terms()) out = out + c * rho_of_word(r, w, field);
  return out;
}

struct MatrixAlgebraSpan {
  std::size_t dim = 0;
  std::size_t size = 0;  // matrix size n
  std::size_t max_length = 0;
  [[nodiscard]] bool irreducible() const { return dim == size * size; }
};

/// Dimension of the span of all words of length <= cap in the generators (Burnside test).
template <Field K>
MatrixAlgebraSpan generated_algebra(const std::vector<Matrix<K>>& gens, const K& field, std::size_t cap = 4) {
  if (gens.empty()) throw UsageError("no generators");
  const std::size_t n = gens[0].rows();
  MatrixAlgebraSpan out;
  out.size = n;
  out.max_length = cap;
  std::vector<std::vector<value_t<K>>> basis;  // vectorized, kept in rref
  std::vector<std::size_t> pivots;
  auto add = [&](const Matrix<K>& m) {
    std::vector<value_t<K>> v(n * n, field.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = m(i, j);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto c = v[pivots[b]];
      if (scalar_is_zero(c)) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = v[k] - c * basis[b][k];
    }
    std::size_t p = 0;
    while (p < v.size() && scalar_is_zero(v[p])) ++p;
    if (p == v.size()) return false;
    const auto s = field.one() / v[p];
    for (auto& x : v) x = s * x;
    for (auto& row : basis) {
      const auto c = row[p];
      if (scalar_is_zero(c)) continue;
      for (std::size_t k = 0; k < row.size(); ++k) row[k] = row[k] - c * v[k];
    }
    basis.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  };
  std::vector<Matrix<K>> layer{Matrix<K>::identity(field, n)};
  add(layer[0]);
  for (std::size_t len = 1; len <= cap; ++len) {
    std::vector<Matrix<K>> next;
    for (const auto& m : layer) {
      for (const auto& g : gens) {
        Matrix<K> w = m * g;
        if (add(w)) next.push_back(std::move(w));
      }
    }
    layer = std::move(next);
    if (layer.empty()) break;
  }
  out.dim = basis.size();
  return out;
}

/// The three conics cut out by [rho(t1), rho(t2)] = 0.
template <Field D>
struct ConicTriple {
  std::array<ZPoly<D>, 3> c;
  std::array<Matrix<D>, 3> M;  // symmetric, in (z0 : z1 : z2)
};

template <Field D>
Matrix<D> conic_matrix(const ZPoly<D>& c, const D& dom) {
  using E = typename ZPoly<D>::Exp;
  const auto half = dom.one() / dom.from_int(2);
  Matrix<D> m(dom, 3, 3);
  m(0, 0) = c.coeff(E{0, 0});
  m(1, 1) = c.coeff(E{2, 0});
  m(2, 2) = c.coeff(E{0, 2});
  m(0, 1) = m(1, 0) = half * c.coeff(E{1, 0});
  m(0, 2) = m(2, 0) = half * c.coeff(E{0, 1});
  m(1, 2) = m(2, 1) = half * c.coeff(E{1, 1});
  return m;
}

/// z0^2 m00 + 2 z0 z1 m01 + ... evaluated at z0 = 1.
template <Field D>
ZPoly<D> dehomogenize(const Matrix<D>& m, const D& dom) {
  using E = typename ZPoly<D>::Exp;
  const auto two = dom.from_int(2);
  ZPoly<D> c(dom);
  c = c + ZPoly<D>::monomial(dom, m(0, 0), E{0, 0}) + ZPoly<D>::monomial(dom, m(1, 1), E{2, 0}) +
      ZPoly<D>::monomial(dom, m(2, 2), E{0, 2}) + ZPoly<D>::monomial(dom, two * m(0, 1), E{1, 0}) +
      ZPoly<D>::monomial(dom, two * m(0, 2), E{0, 1}) + ZPoly<D>::monomial(dom, two * m(1, 2), E{1, 1});
  return c;
}

template <Field D>
ConicTriple<D> conics(const D& dom, const value_t<D>& y1, const value_t<D>& y2, const value_t<D>& y3) {
  using E = typename ZPoly<D>::Exp;
  auto mono = [&](const value_t<D>& c, unsigned a, unsigned b) {
    return ZPoly<D>::monomial(dom, c, E{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)});
  };
  const auto one = dom.one(), two = dom.from_int(2);
  const ZPoly<D> c1 = mono(y1 * y2 + y3, 1, 1) + mono(y2 * y3, 0, 2) + mono(y1, 2, 0) - mono(y2 * y3, 0, 1) -
                      mono(y1, 1, 0);
  const ZPoly<D> c2 = mono(one, 2, 0) + mono(y2 * y2, 0, 2) + mono(two * y2, 1, 1) +
                      mono(-(y1 * y2) - one + y3, 1, 0) + mono(-(y1 * y2 * y2) - y2 * y2 + y2 * y3, 0, 1) +
                      mono(y2 * y2 + y1 * y2 - y2 - y2 * y3, 0, 0);
  const ZPoly<D> c3 = mono(y1 * y1, 2, 0) + mono(y3 * y3, 0, 2) + mono(two * y1 * y3, 1, 1) +
                      mono(y1 * y1 * y2 - y1 * y1 - y1 * y3, 1, 0) + mono(y1 * y2 * y3 - two * y3 * y3, 0, 1) +
                      mono(y1 * y3 - y1 * y1 * y3 - y1 * y2 * y3 + y1 * y3 * y3, 0, 0);
  return {{c1, c2, c3}, {conic_matrix(c1, dom), conic_matrix(c2, dom), conic_matrix(c3, dom)}};
}

/// If a = lambda * b for a constant lambda, returns lambda.
template <Field D, std::size_t N>
std::optional<value_t<D>> constant_ratio(const MPoly<D, N>& a, const MPoly<D, N>& b) {
  if (b.is_zero()) return std::nullopt;
  const auto [e, cb] = b.leading_term();
  const auto lambda = a.coeff(e) / cb;
  if (!(a == lambda * b)) return std::nullopt;
  return lambda;
}

struct CommutatorIdealReport {
  /// entry (i, j) of d^2 [rho(t1), rho(t2)]: 0, or "c1"/"c2"/"c3" with its constant factor
  std::array<std::array<std::string, 3>, 3> entries;
  bool all_unit_multiples = false;
  bool generates_all_three = false;
  [[nodiscard]] bool same_ideal() const { return all_unit_multiples && generates_all_three; }
};

/// Compares the entries of [rho(t1), rho(t2)] with the conics, as polynomials in z over the y-field.
template <Field D>
CommutatorIdealReport commutator_vs_conics(const PolyRep<D>& rep, const ConicTriple<D>& cs, const value_t<D>& d) {
  const ZMatrix<D> C = rep.m[0] * rep.m[1] - rep.m[1] * rep.m[0];
  CommutatorIdealReport out;
  out.all_unit_multiples = true;
  std::array<bool, 3> seen{false, false, false};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (C[i][j].is_zero()) {
        out.entries[i][j] = "0";
        continue;
      }
      const auto e = (d * d) * C[i][j];
      bool found = false;
      for (std::size_t k = 0; k < 3 && !found; ++k) {
        if (auto lam = constant_ratio(e, cs.c[k])) {
          out.entries[i][j] = "(" + to_string(*lam) + ")*c" + std::to_string(k + 1);
          seen[k] = true;
          found = true;
        }
      }
      if (!found) {
        out.entries[i][j] = "unmatched";
        out.all_unit_multiples = false;
      }
    }
  }
  out.generates_all_three = seen[0] && seen[1] && seen[2];
  return out;
}

/// det(a1 M1 + a2 M2 + a3 M3) as a ternary cubic form.
template <Field D>
MPoly<D, 3> determinantal_cubic(const std::array<Matrix<D>, 3>& M, const D& dom) {
  using P = MPoly<D, 3>;
  std::vector<std::vector<P>> m(3, std::vector<P>(3, P(dom)));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) m[i][j] = m[i][j] + M[k](i, j) * P::variable(dom, k);
  return determinant_cofactor(m, P(dom));
}

}  // namespace pabel
