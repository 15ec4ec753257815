#pragma once

#include <array>
#include <functional>
#include <optional>
#include <cstddef>
#include <string>
#include <vector>

#include "pabel/errors.hpp"
#include "pabel/quotient/closure.hpp"
#include "pabel/rep/geometry.hpp"
#include "pabel/rep/rho.hpp"
#include "pabel/rep/tq.hpp"

namespace pabel {

/// One-dimensional module of k^3 * k^3: p_a -> 1, q_b -> 1, every other idempotent -> 0.
struct Character {
  int a = 1;
  int b = 1;
  [[nodiscard]] std::string str() const { return "p" + std::to_string(a) + ",q" + std::to_string(b); }
};

inline std::vector<Character> nine_characters() {
  std::vector<Character> out;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) out.push_back({a, b});
  return out;
}

template <Field D>
value_t<D> character_value(const D& dom, const Character& chi, const AlgebraElement<D>& e) {
  value_t<D> acc = dom.zero();
  for (const auto& [w, c] : e.terms()) {
    bool hit = true;
    for (std::size_t i = 0; i < w.length() && hit; ++i) hit = w[i].index == (w[i].tag == Tag::P ? chi.a : chi.b);
    if (hit) acc = acc + c;
  }
  return acc;
}

/// Rank of the basis evaluated under the nine characters: a lower bound for the commutative quotient.
template <Field D>
std::size_t character_rank(const ClosureCertificate<D>& cert, const D& dom) {
  const auto chars = nine_characters();
  Matrix<D> ev(dom, cert.dim(), chars.size());
  for (std::size_t i = 0; i < cert.dim(); ++i) {
    const auto w = AlgebraElement<D>::from_word(AlgebraSignature(3, 3), dom, cert.basis[i]);
    for (std::size_t c = 0; c < chars.size(); ++c) ev(i, c) = character_value(dom, chars[c], w);
  }
  return ev.rank();
}

/// Center of the algebra spanned by a closure certificate: z with z g = g z for every letter g.
template <Field D>
std::size_t center_dimension(const ClosureCertificate<D>& cert, const D& dom) {
  const std::size_t k = cert.dim();
  Matrix<D> m(dom, k * cert.letters.size(), k);
  for (std::size_t g = 0; g < cert.letters.size(); ++g) {
    const Matrix<D> diff = cert.right[g] - cert.left[g];
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) m(g * k + c, r) = diff(r, c);
  }
  return k - m.rank();
}

/// Rank of (i, j) -> tr(R(b_i) R(b_j)) for the right regular representation.
template <Field D>
std::size_t trace_form_rank(const ClosureCertificate<D>& cert, const D& dom) {
  const std::size_t k = cert.dim();
  std::vector<Matrix<D>> R;
  R.reserve(k);
  for (const auto& w : cert.basis) R.push_back(right_action(cert, AlgebraElement<D>::from_word(AlgebraSignature(3, 3), dom, w)));
  Matrix<D> t(dom, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      value_t<D> s = dom.zero();
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) s = s + R[i](r, c) * R[j](c, r);
      t(i, j) = s;
      t(j, i) = s;
    }
  }
  return t.rank();
}

template <Field D>
struct WedderburnMap {
  std::vector<Character> characters;
  bool characters_kill_relation = false;
  std::size_t target_dim = 18;
  std::size_t rank = 0;            // lower bound for dim S
  std::size_t upper_bound = 0;     // certificate dimension
  std::size_t center_dim = 0;
  std::size_t trace_rank = 0;
  std::size_t generated_dim = 0;   // span of rho words, 9 when irreducible
  bool rho_relations = false;      // idempotent laws over K
  bool rho_kills_relation = false; // rho(X) = 0 over K
  std::optional<UPoly<D>> modulus;  // K = base[t]/(modulus)
  std::vector<std::vector<std::string>> rho_entries;  // rho(p1), rho(p2), rho(q1), rho(q2) row-major, elements of K
  [[nodiscard]] bool exact() const { return rank == upper_bound && rank == target_dim; }
  [[nodiscard]] bool semisimple_type() const { return center_dim == 10 && trace_rank == 18; }
  [[nodiscard]] std::string verdict() const {
    if (exact() && semisimple_type() && rho_relations && rho_kills_relation && generated_dim == 9) {
      return "dim S_x = 18, type k^9 + M3";
    }
    return "not reproduced: lower " + std::to_string(rank) + ", upper " + std::to_string(upper_bound);
  }
};

/// Evaluates the certificate basis under the nine characters and the 3-dimensional module over K.
template <Field D>
WedderburnMap<D> wedderburn_verify(const ClosureCertificate<D>& cert, const AlgebraElement<D>& relation,
                                   const ExtensionSpec<D>& spec, const PolyRep<D>& rep,
                                   const std::array<value_t<D>, 3>& y) {
  if (!cert.closed) throw UsageError("wedderburn map needs a closed certificate");
  if (spec.components.empty() || !spec.verified()) throw DegenerateError("no verified intersection point");
  const D& dom = relation.domain();
  const AlgebraSignature sig(3, 3);
  WedderburnMap<D> out;
  out.characters = nine_characters();
  out.upper_bound = cert.dim();
  out.characters_kill_relation = true;
  for (const auto& chi : out.characters) out.characters_kill_relation = out.characters_kill_relation && scalar_is_zero(character_value(dom, chi, relation));

  const auto& comp = spec.components.front();
  out.modulus = comp.modulus;
  const ExtensionField<D> K(comp.modulus, "t");
  const std::function<value_t<ExtensionField<D>>(const value_t<D>&)> embed =
      [K](const value_t<D>& v) -> value_t<ExtensionField<D>> { return K.embed(v); };
  const auto r = build_rho(K, rep, y, embed, K.generator(), K.make(comp.z2));
  const auto checks = check_rho(r);
  out.rho_relations = checks.relations();
  const auto XK = relation.map_coefficients(K, embed);
  out.rho_kills_relation = rho_of(r, XK, K).is_zero();
  out.generated_dim = generated_algebra(r.generators(), K).dim;
  for (const auto* m : {&r.p1, &r.p2, &r.q1, &r.q2}) {
    std::vector<std::string> entries;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) entries.push_back(to_string((*m)(i, j)));
    out.rho_entries.push_back(std::move(entries));
  }

  Matrix<ExtensionField<D>> ev(K, cert.dim(), out.target_dim);
  for (std::size_t i = 0; i < cert.dim(); ++i) {
    const auto w = AlgebraElement<D>::from_word(sig, dom, cert.basis[i]);
    for (std::size_t c = 0; c < out.characters.size(); ++c) ev(i, c) = K.embed(character_value(dom, out.characters[c], w));
    const Matrix<ExtensionField<D>> m = rho_of_word(r, cert.basis[i], K);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) ev(i, 9 + 3 * a + b) = m(a, b);
  }
  out.rank = ev.rank();
  out.center_dim = center_dimension(cert, dom);
  out.trace_rank = trace_form_rank(cert, dom);
  return out;
}

}  // namespace pabel
