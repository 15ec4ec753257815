#pragma once

#include <array>
#include <string>
#include <vector>

#include "pabel/algebra/element.hpp"
#include "pabel/quotient/relation.hpp"
#include "pabel/scalars/rational_function.hpp"

namespace pabel {

/// One of the two generating transpositions of S_3 acting on k(y1,y2,y3) and on {p1, p2, 1-p1-p2}.
struct SigmaGenerator {
  std::string name;
  std::array<RationalFunction, 3> y_images;
  std::array<AlgebraElement<RationalFunctionField>, 2> p_images;  // images of p1, p2; q fixed
};

inline SigmaGenerator sigma1() {
  const RationalFunctionField F;
  const AlgebraSignature sig(3, 3);
  const auto y1 = F.y(1), y2 = F.y(2), y3 = F.y(3);
  return {"sigma1", {y3 / y2, F.one() / y2, y1 / y2}, {p(sig, F, 2), p(sig, F, 1)}};
}

inline SigmaGenerator sigma2() {
  const RationalFunctionField F;
  const AlgebraSignature sig(3, 3);
  const auto y1 = F.y(1), y2 = F.y(2), y3 = F.y(3);
  return {"sigma2", {y1, F.one() - y2, y1 - y3}, {p(sig, F, 3), p(sig, F, 2)}};
}

/// sigma applied to a field element: f(y) -> f(sigma(y)).
inline RationalFunction apply(const SigmaGenerator& s, const RationalFunction& f) { return f.compose(s.y_images); }

/// Semilinear extension to the free product: letters by p_images, coefficients by the field action.
inline AlgebraElement<RationalFunctionField> apply(const SigmaGenerator& s,
                                                   const AlgebraElement<RationalFunctionField>& e) {
  const RationalFunctionField F;
  const auto& sig = e.signature();
  AlgebraElement<RationalFunctionField> out(sig, F);
  for (const auto& [w, c] : e.terms()) {
    auto img = AlgebraElement<RationalFunctionField>::one(sig, F);
    for (std::size_t i = 0; i < w.length(); ++i) {
      const Letter l = w[i];
      img = img * (l.tag == Tag::P ? s.p_images[static_cast<std::size_t>(l.index - 1)]
                                   : AlgebraElement<RationalFunctionField>::from_word(sig, F, Word{l}));
    }
    out = out + apply(s, c) * img;
  }
  return out;
}

struct SigmaReport {
  bool sigma1_scales_by_inv_y2 = false;  // sigma1(X) = X / y2
  bool sigma2_negates = false;           // sigma2(X) = -X
  bool sigma1_involution = false;
  bool sigma2_involution = false;
  bool braid = false;                    // (sigma1 sigma2)^3 = id on y
  bool letters_consistent = false;       // same relations on the letter images
  std::array<std::string, 3> sigma1_y;
  std::array<std::string, 3> sigma2_y;
  [[nodiscard]] bool all() const {
    return sigma1_scales_by_inv_y2 && sigma2_negates && sigma1_involution && sigma2_involution && braid &&
           letters_consistent;
  }
};

inline SigmaReport sigma_check() {
  const RationalFunctionField F;
  const auto s1 = sigma1(), s2 = sigma2();
  const auto X = make_chart_relation(F, F.y(1), F.y(2), F.y(3)).X;
  SigmaReport r;
  r.sigma1_scales_by_inv_y2 = apply(s1, X) == (F.one() / F.y(2)) * X;
  r.sigma2_negates = apply(s2, X) == -X;
  auto word_ok = [&](const std::vector<const SigmaGenerator*>& seq) {
    bool ok = true;
    for (std::size_t i = 1; i <= 3; ++i) {
      RationalFunction f = F.y(i);
      // (s_1 s_2 ... s_k)(f) = s_1(s_2(...s_k(f)))
      for (auto it = seq.rbegin(); it != seq.rend(); ++it) f = apply(**it, f);
      ok = ok && f == F.y(i);
    }
    const AlgebraSignature sig(3, 3);
    for (int i = 1; i <= 3; ++i) {
      auto e = p(sig, F, i);
      for (auto it = seq.rbegin(); it != seq.rend(); ++it) e = apply(**it, e);
      r.letters_consistent = r.letters_consistent && e == p(sig, F, i);
    }
    return ok;
  };
  r.letters_consistent = true;
  r.sigma1_involution = word_ok({&s1, &s1});
  r.sigma2_involution = word_ok({&s2, &s2});
  r.braid = word_ok({&s1, &s2, &s1, &s2, &s1, &s2});
  for (std::size_t i = 0; i < 3; ++i) {
    r.sigma1_y[i] = s1.y_images[i].str();
    r.sigma2_y[i] = s2.y_images[i].str();
  }
  return r;
}

}  // namespace pabel
