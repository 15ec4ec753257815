#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "pabel/errors.hpp"
#include "pabel/linalg/dense.hpp"
#include "pabel/rep/numeric.hpp"
#include "pabel/rep/rho.hpp"
#include "pabel/scalars/extension.hpp"
#include "pabel/scalars/multivariate.hpp"
#include "pabel/scalars/rational.hpp"
#include "pabel/scalars/univariate.hpp"

namespace pabel {

/// Coefficients of a bivariate polynomial in variable `elim`, each a univariate polynomial in the other one.
template <Field D>
std::vector<UPoly<D>> coefficients_over(const MPoly<D, 2>& f, std::size_t elim) {
  const D& dom = f.domain();
  const std::size_t other = 1 - elim;
  std::vector<UPoly<D>> out(static_cast<std::size_t>(std::max(f.degree_in(elim), 0)) + 1, UPoly<D>(dom));
  for (const auto& [e, c] : f.terms()) {
    out[e[elim]] = out[e[elim]] + UPoly<D>::monomial(dom, c, e[other]);
  }
  return out;
}

/// Res_{elim}(f, g) as a polynomial in the remaining variable (Sylvester determinant over D[x]).
template <Field D>
UPoly<D> bivariate_resultant(const MPoly<D, 2>& f, const MPoly<D, 2>& g, std::size_t elim) {
  const D& dom = f.domain();
  if (f.is_zero() || g.is_zero()) return UPoly<D>(dom);
  const auto fc = coefficients_over(f, elim), gc = coefficients_over(g, elim);
  const std::size_t m = fc.size() - 1, n = gc.size() - 1;
  if (m + n == 0) return UPoly<D>::constant(dom, dom.one());
  std::vector<std::vector<UPoly<D>>> s(m + n, std::vector<UPoly<D>>(m + n, UPoly<D>(dom)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = fc[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = gc[n - k];
  return determinant_cofactor(s, UPoly<D>(dom));
}

/// f(x, .) (or f(., x)) as a univariate polynomial over K, for x in K.
template <Field K, Field D>
UPoly<K> specialize_other(const MPoly<D, 2>& f, std::size_t keep, const K& field, const value_t<K>& x) {
  const auto cs = coefficients_over(f, keep);
  std::vector<value_t<K>> out;
  out.reserve(cs.size());
  for (const auto& c : cs) {
    value_t<K> acc = field.zero();
    for (std::size_t i = c.coeffs().size(); i-- > 0;) acc = acc * x + field.embed(c.coeffs()[i]);
    out.push_back(acc);
  }
  return UPoly<K>(field, std::move(out));
}

template <Field D>
UPoly<D> lift_residue(const value_t<ExtensionField<D>>& v) {
  return v.residue();
}

/// One irreducible-enough piece of the intersection: z1 = t with modulus(t) = 0 and z2 = z2(t).
template <Field D>
struct IntersectionComponent {
  UPoly<D> modulus;
  UPoly<D> z2;
  bool verified = false;  // c1 = c2 = c3 = 0 exactly in base[t]/(modulus)
};

template <Field D>
struct ExtensionSpec {
  UPoly<D> r12, r13, f;
  std::vector<IntersectionComponent<D>> components;
  [[nodiscard]] bool irreducible_f() const { return components.size() == 1; }
  [[nodiscard]] std::size_t points() const {
    std::size_t n = 0;
    for (const auto& c : components) n += static_cast<std::size_t>(c.modulus.degree());
    return n;
  }
  [[nodiscard]] bool verified() const {
    bool ok = !components.empty();
    for (const auto& c : components) ok = ok && c.verified;
    return ok;
  }
};

namespace detail {

/// Runs `body(K)` over base[t]/(g), splitting g whenever a zero divisor turns up.
template <Field D, class Body>
void over_components(const UPoly<D>& g, Body&& body) {
  std::deque<UPoly<D>> work{g.monic()};
  while (!work.empty()) {
    const UPoly<D> h = work.front();
    work.pop_front();
    try {
      body(ExtensionField<D>(h, "t"));
    } catch (const ZeroDivisorError<D>& e) {
      const UPoly<D> a = e.factor.monic();
      if (a.degree() <= 0 || a.degree() >= h.degree()) throw;
      work.push_back(a);
      work.push_back((h / a).monic());
    }
  }
}

}  // namespace detail

/// Common zeros of the three conics: resultants in z2, gcd f, and z2 over base[t]/(f).
template <Field D>
ExtensionSpec<D> intersect_conics(const ConicTriple<D>& cs) {
  const D& dom = cs.c[0].domain();
  ExtensionSpec<D> out{bivariate_resultant(cs.c[0], cs.c[1], 1), bivariate_resultant(cs.c[0], cs.c[2], 1),
                       UPoly<D>(dom), {}};
  out.f = gcd(out.r12, out.r13);
  if (out.f.degree() != 3) {
    throw DegenerateError("gcd of the conic resultants has degree " + std::to_string(out.f.degree()) + ", expected 3");
  }
  detail::over_components(out.f, [&](const ExtensionField<D>& K) {
    const auto t = K.generator();
    const UPoly<ExtensionField<D>> a = specialize_other(cs.c[0], 1, K, t), b = specialize_other(cs.c[1], 1, K, t);
    const auto h = gcd(a, b);
    if (h.degree() != 1) throw DegenerateError("z2 is not determined linearly by z1 on C1 and C2");
    const auto z2 = -h.coeff(0);
    IntersectionComponent<D> comp{K.modulus(), z2.residue(), true};
    for (const auto& c : cs.c) {
      comp.verified = comp.verified && c.evaluate(std::array<value_t<ExtensionField<D>>, 2>{t, z2}, K.zero(), K.one(),
                                                  [&](const value_t<D>& v) { return K.embed(v); })
                                           .is_zero();
    }
    out.components.push_back(std::move(comp));
  });
  return out;
}

/// CRT: the residue congruent to r_i modulo g_i, modulo the product.
template <Field D>
UPoly<D> crt_pair(const UPoly<D>& g1, const UPoly<D>& r1, const UPoly<D>& g2, const UPoly<D>& r2) {
  const auto eg = ext_gcd(g1, g2);
  if (eg.g.degree() != 0) throw DomainError("CRT moduli are not coprime");
  const UPoly<D> mod = g1 * g2;
  return (r1 + (r2 - r1) * eg.s * g1) % mod;
}

struct NumericLines {
  std::array<std::array<std::complex<double>, 3>, 3> lines{};  // coefficients of a1, a2, a3, max entry scaled to 1
  double residual = 0;                                       // relative coefficient residual of cubic - lambda * product
};

template <Field D>
struct LineSplitting {
  bool splits = false;
  bool infinite_singular = false;  // non-reduced cubic
  std::size_t singular_points = 0;
  std::size_t attempts = 0;
  std::array<std::array<std::int64_t, 3>, 3> change{};  // a = M b
  std::optional<UPoly<D>> h;                            // u-coordinates of the singular points
  std::optional<UPoly<D>> phi;                          // v = phi(u) mod h
  bool non_collinear = false;
  bool concurrent = false;  // a triple point: three lines through one point
  bool norm_identity = false;  // norm of the tangent-cone form equals a constant times cubic^2
  std::optional<NumericLines> numeric;
  [[nodiscard]] std::string verdict() const { 
    if (!splits) return "does not split";
    return concurrent ? "three concurrent lines" : "three lines";
  }
};

namespace detail {

template <Field D>
MPoly<D, 3> linear_change(const MPoly<D, 3>& c, const std::array<std::array<std::int64_t, 3>, 3>& M) {
  const D& dom = c.domain();
  std::array<MPoly<D, 3>, 3> img{MPoly<D, 3>(dom), MPoly<D, 3>(dom), MPoly<D, 3>(dom)};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) img[i] = img[i] + dom.from_int(M[i][j]) * MPoly<D, 3>::variable(dom, j);
  return c.substitute(img);
}

template <Field D>
MPoly<D, 2> dehomogenize3(const MPoly<D, 3>& c) {
  const D& dom = c.domain();
  return c.substitute(std::array<MPoly<D, 2>, 3>{MPoly<D, 2>::variable(dom, 0), MPoly<D, 2>::variable(dom, 1),
                                                 MPoly<D, 2>::constant(dom, dom.one())});
}

template <Field D>
UPoly<D> at_infinity(const MPoly<D, 3>& c) {
  // c(u, 1, 0)
  const D& dom = c.domain();
  UPoly<D> out(dom);
  for (const auto& [e, v] : c.terms()) {
    if (e[2] == 0) out = out + UPoly<D>::monomial(dom, v, e[0]);
  }
  return out;
}

inline double to_double_value(const Rational& q) { return q.to_double(); }

}  // namespace detail

/// Decides whether a plane cubic is a union of three non-concurrent lines from its singular points,
/// after a random projective change that keeps them affine with distinct u-coordinates.
template <Field D>
LineSplitting<D> split_into_lines(const MPoly<D, 3>& cubic, std::uint64_t seed = 1, std::size_t max_attempts = 8) {
  using P3 = MPoly<D, 3>;
  const D& dom = cubic.domain();
  if (cubic.is_zero()) throw UsageError("cubic is zero");
  LineSplitting<D> out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-4, 4);
  // no singular point on the line at infinity b3 = 0
  auto infinity_clear = [&](const std::array<P3, 3>& grad) {
    using E = typename P3::Exp;
    UPoly<D> g(dom);
    bool at_100 = true;
    for (const auto& d : grad) {
      g = gcd(g, detail::at_infinity(d));
      at_100 = at_100 && scalar_is_zero(d.coeff(E{2, 0, 0}));
    }
    return !g.is_zero() && g.degree() == 0 && !at_100;
  };
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    out.attempts = attempt + 1;
    std::array<std::array<std::int64_t, 3>, 3> M{};
    if (attempt == 0) {
      M = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    } else {
      for (auto& r : M)
        for (auto& x : r) x = coef(rng);
    }
    const Rational detM = Matrix<RationalField>::from_rows(RationalField{}, {{M[0][0], M[0][1], M[0][2]},
                                                                              {M[1][0], M[1][1], M[1][2]},
                                                                              {M[2][0], M[2][1], M[2][2]}})
                              .determinant();
    if (detM.is_zero() || scalar_is_zero(dom.from_rational(detM))) continue;
    const P3 c = detail::linear_change(cubic, M);
    const std::array<P3, 3> grad{c.partial(0), c.partial(1), c.partial(2)};
    std::array<MPoly<D, 2>, 3> G{detail::dehomogenize3(grad[0]), detail::dehomogenize3(grad[1]),
                                 detail::dehomogenize3(grad[2])};
    UPoly<D> h(dom);
    h = gcd(h, bivariate_resultant(G[0], G[1], 1));
    h = gcd(h, bivariate_resultant(G[0], G[2], 1));
    h = gcd(h, bivariate_resultant(G[1], G[2], 1));
    if (h.is_zero()) {
      out.infinite_singular = true;
      return out;
    }
    h = squarefree_part(h);
    out.change = M;
    if (h.degree() == 0) {
      if (!infinity_clear(grad)) continue;
      out.singular_points = 0;
      out.h = h;
      return out;
    }
    // v-coordinate of each singular point as a function of u
    std::vector<std::pair<UPoly<D>, UPoly<D>>> parts;
    bool ok = true;
    detail::over_components(h, [&](const ExtensionField<D>& K) {
      if (!ok) return;
      const auto t = K.generator();
      UPoly<ExtensionField<D>> g(K);
      for (const auto& Gi : G) g = gcd(g, specialize_other(Gi, 1, K, t));
      if (g.is_zero()) {
        out.infinite_singular = true;
        ok = false;
        return;
      }
      if (g.degree() > 1) g = squarefree_part(g);
      if (g.degree() != 1) {
        ok = false;
        return;
      }
      const auto v = -g.coeff(0);
      parts.emplace_back(K.modulus(), v.residue());
    });
    if (out.infinite_singular) return out;
    if (!ok) continue;
    if (!infinity_clear(grad)) continue;
    UPoly<D> mod = parts[0].first, phi = parts[0].second;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      phi = crt_pair(mod, phi, parts[i].first, parts[i].second);
      mod = mod * parts[i].first;
    }
    out.singular_points = static_cast<std::size_t>(h.degree());
    out.h = h;
    out.phi = phi;
    out.non_collinear = h.degree() == 3 && phi.degree() == 2;
    out.splits = out.singular_points == 3 && out.non_collinear;
    if (out.singular_points == 1) {
      // a triple point makes the cubic a cone: three lines through it
      const value_t<D> u0 = -h.coeff(0), v0 = phi.coeff(0);
      const std::array<value_t<D>, 3> pt{u0, v0, dom.one()};
      auto id = [](const value_t<D>& v) { return v; };
      bool triple = true;
      for (const auto& gi : grad)
        for (std::size_t j = 0; j < 3; ++j) triple = triple && scalar_is_zero(gi.partial(j).evaluate(pt, dom.zero(), dom.one(), id));
      out.concurrent = triple;
      out.splits = triple;
    }
    if (out.splits && !out.concurrent) {
      // tangent cone at P = (t, phi(t), 1): q(w) = w^T Hess(P) w, a product of the two lines through P
      const ExtensionField<D> K(h, "u");
      const std::array<value_t<ExtensionField<D>>, 3> pt{K.generator(), K.make(phi), K.one()};
      auto conv = [&](const value_t<D>& v) { return K.embed(v); };
      std::array<P3, 3> qk{P3(dom), P3(dom), P3(dom)};  // q = q0 + q1 u + q2 u^2
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          const auto hij = grad[i].partial(j).evaluate(pt, K.zero(), K.one(), conv);
          const P3 mono = P3::variable(dom, i) * P3::variable(dom, j);
          for (std::size_t k = 0; k < 3; ++k) qk[k] = qk[k] + hij.residue().coeff(k) * mono;
        }
      }
      const Matrix<D> Cm = K.multiplication_matrix(K.generator());
      const Matrix<D> Cm2 = Cm * Cm;
      std::vector<std::vector<P3>> mm(3, std::vector<P3>(3, P3(dom)));
      for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t s = 0; s < 3; ++s) {
          if (r == s) mm[r][s] = qk[0];
          mm[r][s] = mm[r][s] + Cm(r, s) * qk[1] + Cm2(r, s) * qk[2];
        }
      }
      const P3 norm = determinant_cofactor(mm, P3(dom));
      out.norm_identity = constant_ratio(norm, c * c).has_value();
      if constexpr (std::is_same_v<value_t<D>, Rational>) {
        using numeric::cplx;
        std::vector<cplx> hc;
        for (const auto& x : h.coeffs()) hc.emplace_back(detail::to_double_value(x), 0.0);
        const auto us = numeric::polynomial_roots(hc);
        std::array<std::array<cplx, 3>, 3> verts{};
        for (std::size_t i = 0; i < 3; ++i) {
          cplx v = 0;
          for (std::size_t k = phi.coeffs().size(); k-- > 0;) v = v * us[i] + detail::to_double_value(phi.coeffs()[k]);
          const std::array<cplx, 3> b{us[i], v, 1.0};
          for (std::size_t r = 0; r < 3; ++r) {
            verts[i][r] = 0;
            for (std::size_t s = 0; s < 3; ++s) verts[i][r] += static_cast<double>(M[r][s]) * b[s];
          }
        }
        NumericLines nl;
        for (std::size_t i = 0; i < 3; ++i) nl.lines[i] = numeric::normalized(numeric::cross(verts[(i + 1) % 3], verts[(i + 2) % 3]));
        // compare coefficient vectors of the original cubic and the product of the lines
        using E = typename P3::Exp;
        std::vector<std::pair<E, cplx>> prod_terms{{E{0, 0, 0}, 1.0}};
        for (const auto& L : nl.lines) {
          std::vector<std::pair<E, cplx>> next;
          for (const auto& [e, v] : prod_terms) {
            for (std::size_t k = 0; k < 3; ++k) {
              E f = e;
              ++f[k];
              bool merged = false;
              for (auto& [e2, v2] : next) {
                if (e2 == f) {
                  v2 += v * L[k];
                  merged = true;
                }
              }
              if (!merged) next.emplace_back(f, v * L[k]);
            }
          }
          prod_terms = std::move(next);
        }
        double cmax = 0;
        E emax{};
        for (const auto& [e, v] : cubic.terms()) {
          const double a = std::abs(detail::to_double_value(v));
          if (a > cmax) {
            cmax = a;
            emax = e;
          }
        }
        auto prod_at = [&](const E& e) {
          for (const auto& [e2, v2] : prod_terms) {
            if (e2 == e) return v2;
          }
          return cplx(0);
        };
        const cplx lambda = detail::to_double_value(cubic.coeff(emax)) / prod_at(emax);
        double res = 0;
        for (const auto& [e, v] : prod_terms) {
          res = std::max(res, std::abs(detail::to_double_value(cubic.coeff(e)) - lambda * v) / cmax);
        }
        for (const auto& [e, v] : cubic.terms()) {
          res = std::max(res, std::abs(detail::to_double_value(v) - lambda * prod_at(e)) / cmax);
        }
        nl.residual = res;
        out.numeric = nl;
      }
    }
    return out;
  }
  throw DegenerateError("no admissible projective change found for the cubic");
}

}  // namespace pabel
