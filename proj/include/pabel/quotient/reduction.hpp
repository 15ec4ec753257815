#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pabel/linalg/dense.hpp"
#include "pabel/quotient/closure.hpp"
#include "pabel/quotient/listed_generators.hpp"

namespace pabel {

template <Field D>
AlgebraElement<D> homogeneous_part(const AlgebraElement<D>& e, std::size_t len) {
  AlgebraElement<D> out(e.signature(), e.domain());
  for (const auto& [w, c] : e.terms()) {
    if (w.length() == len) out.add_term(w, c);
  }
  return out;
}

/// If a = lambda * b (b nonzero), returns lambda.
template <Field D>
std::optional<value_t<D>> proportionality(const AlgebraElement<D>& a, const AlgebraElement<D>& b) {
  if (b.is_zero()) return std::nullopt;
  const auto& [w0, c0] = *b.terms().rbegin();
  const value_t<D> lambda = a.coeff(w0) / c0;
  if (!(a == lambda * b)) return std::nullopt;
  return lambda;
}

template <Field D>
struct ReductionEntry {
  std::array<int, 4> idx{};
  value_t<D> coeff;
  AlgebraElement<D> tail;  // in F^3 S, written in basis words
  bool verified = false;   // lhs - coeff*pivot - tail reduces to zero
};

template <Field D>
struct ReductionTable {
  bool ok = false;
  std::string failure;
  std::vector<ReductionEntry<D>> alpha;  // p_i q_j p_k q_l against p2 q1 p1 q1
  std::vector<ReductionEntry<D>> beta;   // q_i p_j q_k p_l against q2 p1 q1 p1

  [[nodiscard]] const ReductionEntry<D>& a(int i, int j, int k, int l) const { return alpha[flat(i, j, k, l)]; }
  [[nodiscard]] const ReductionEntry<D>& b(int i, int j, int k, int l) const { return beta[flat(i, j, k, l)]; }
  static std::size_t flat(int i, int j, int k, int l) {
    return static_cast<std::size_t>(8 * (i - 1) + 4 * (j - 1) + 2 * (k - 1) + (l - 1));
  }
};

/// alpha, beta and the F^3 tails, computed modulo a span whose degree-4 part is complete
/// (the certificate span).
template <Field D>
ReductionTable<D> reduction_coefficients(const IdealSpan<D>& span) {
  ReductionTable<D> tab;
  const D& dom = span.domain();
  const AlgebraSignature& sig = span.signature();
  if (!(sig == AlgebraSignature(3, 3))) throw UsageError("reduction coefficients need signature (3,3)");
  if (span.stage() < 4) throw UsageError("span window below degree 4");
  auto word = [&](Tag first, int i, int j, int k, int l) {
    const Tag second = first == Tag::P ? Tag::Q : Tag::P;
    return AlgebraElement<D>::from_word(sig, dom, Word{Letter{first, i}, Letter{second, j}, Letter{first, k},
                                                       Letter{second, l}});
  };
  for (Tag first : {Tag::P, Tag::Q}) {
    const auto pivot = word(first, 2, 1, 1, 1);
    const auto pivot_nf = span.normal_form(pivot);
    const auto pivot_top = homogeneous_part(pivot_nf, 4);
    if (pivot_top.is_zero()) {
      tab.failure = pivot.str() + " lies in F^3 S at this point; resample";
      return tab;
    }
    auto& dst = first == Tag::P ? tab.alpha : tab.beta;
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (int k = 1; k <= 2; ++k)
          for (int l = 1; l <= 2; ++l) {
            const auto lhs = word(first, i, j, k, l);
            const auto nf = span.normal_form(lhs);
            auto lambda = proportionality(homogeneous_part(nf, 4), pivot_top);
            if (!lambda) {
              if (!homogeneous_part(nf, 4).is_zero()) {
                tab.failure = lhs.str() + " is not a multiple of " + pivot.str() + " modulo F^3 S";
                return tab;
              }
              lambda = dom.zero();
            }
            ReductionEntry<D> e{{i, j, k, l}, *lambda, nf - *lambda * pivot_nf, false};
            e.verified = e.tail.degree() <= 3 && span.contains(lhs - *lambda * pivot - e.tail);
            dst.push_back(std::move(e));
          }
  }
  tab.ok = true;
  return tab;
}

/// Rank of a list of words in the quotient; the 19 listed monomials give 18 at generic points.
template <Field D>
std::size_t monomial_rank(const IdealSpan<D>& span, const ClosureCertificate<D>& cert, const std::vector<Word>& words) {
  const D& dom = span.domain();
  Matrix<D> m(dom, words.size(), cert.dim());
  for (std::size_t r = 0; r < words.size(); ++r) {
    const auto nf = span.normal_form(AlgebraElement<D>::from_word(span.signature(), dom, words[r]));
    auto coords = basis_coords(nf, cert.basis, dom);
    if (!coords) throw DegenerateError("monomial " + words[r].str() + " leaves the certified basis");
    for (std::size_t c = 0; c < cert.dim(); ++c) m(r, c) = (*coords)[c];
  }
  return m.rank();
}

/// dim(e S) for e = p1, p2, ..., p_a (full range), as ranks of left multiplication.
template <Field D>
std::vector<std::size_t> idempotent_slices(const ClosureCertificate<D>& cert, const AlgebraSignature& sig, const D& dom) {
  std::vector<std::size_t> out;
  for (int i = 1; i <= sig.a; ++i) out.push_back(right_action(cert, p(sig, dom, i), true).rank());
  return out;
}

}  // namespace pabel
