#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pabel/linalg/sparse.hpp"
#include "pabel/quotient/ideal_span.hpp"

namespace pabel {

/// The 13 elements of length <= 3 and 40 of length 4 spanning N in F^4 I(X), for k^3 * k^3.
template <Field D>
std::vector<AlgebraElement<D>> listed_generators(const AlgebraElement<D>& X) {
  const AlgebraSignature sig(3, 3);
  if (!(X.signature() == sig)) throw UsageError("listed generators need signature (3,3)");
  const D& dom = X.domain();
  auto P = [&](int i) { return p(sig, dom, i); };
  auto Q = [&](int j) { return q(sig, dom, j); };
  std::vector<AlgebraElement<D>> out{X};
  for (int i = 1; i <= 2; ++i) {
    out.push_back(P(i) * X);
    out.push_back(X * P(i));
    out.push_back(Q(i) * X);
    out.push_back(X * Q(i));
  }
  for (int i = 1; i <= 2; ++i) {
    const int j = 3 - i;
    out.push_back(P(i) * X * P(j));
    out.push_back(Q(i) * X * Q(j));
  }
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      out.push_back(P(i) * Q(j) * X);
      out.push_back(P(i) * X * Q(j));
      out.push_back(X * P(i) * Q(j));
      out.push_back(Q(i) * P(j) * X);
      out.push_back(Q(i) * X * P(j));
      out.push_back(X * Q(i) * P(j));
    }
  }
  for (int i = 1; i <= 2; ++i) {
    const int j = 3 - i;
    for (int k = 1; k <= 2; ++k) {
      out.push_back(P(i) * X * P(j) * Q(k));
      out.push_back(Q(k) * P(i) * X * P(j));
      out.push_back(Q(i) * X * Q(j) * P(k));
      out.push_back(P(k) * Q(i) * X * Q(j));
    }
  }
  return out;
}

/// p_i X p_i and q_i X q_i, left out of the listed family.
template <Field D>
std::vector<AlgebraElement<D>> omitted_generators(const AlgebraElement<D>& X) {
  const AlgebraSignature sig(3, 3);
  const D& dom = X.domain();
  std::vector<AlgebraElement<D>> out;
  for (int i = 1; i <= 2; ++i) {
    out.push_back(p(sig, dom, i) * X * p(sig, dom, i));
    out.push_back(q(sig, dom, i) * X * q(sig, dom, i));
  }
  return out;
}

struct GeneratorRankReport {
  std::size_t generators = 0;
  std::size_t max_length = 0;
  std::size_t rank = 0;
  std::size_t dim_f4 = 0;
  std::size_t bound = 0;              // dim F^4 R - rank
  std::size_t rank_with_omitted = 0;  // rank after adding p_iXp_i, q_iXq_i
  [[nodiscard]] bool omitted_dependent() const { return rank_with_omitted == rank; }
};

template <Field D>
std::size_t element_rank(const std::vector<AlgebraElement<D>>& elems, const WordIndex& index, const D& dom) {
  SparseEchelon<D> ech(dom, index.size());
  for (const auto& e : elems) ech.insert(to_row(e, index));
  return ech.rank();
}

template <Field D>
GeneratorRankReport listed_generator_rank(const AlgebraElement<D>& X) {
  const auto gens = listed_generators(X);
  const D& dom = X.domain();
  GeneratorRankReport rep;
  rep.generators = gens.size();
  for (const auto& g : gens) rep.max_length = std::max(rep.max_length, static_cast<std::size_t>(g.degree()));
  const WordIndex index(X.signature(), std::max<std::size_t>(rep.max_length, 4));
  rep.rank = element_rank(gens, index, dom);
  rep.dim_f4 = index.count_up_to(4);
  rep.bound = rep.dim_f4 - rep.rank;
  auto all = gens;
  for (auto& e : omitted_generators(X)) all.push_back(std::move(e));
  rep.rank_with_omitted = element_rank(all, index, dom);
  return rep;
}

/// The 19 monomials listed as linear generators of F^4 S.
inline std::vector<Word> listed_f4_monomials() {
  std::vector<Word> out;
  for (const char* w : {"1", "p1", "p2", "q1", "q2", "p1.q2", "p2.q1", "p2.q2", "q1.p1", "q1.p2", "q2.p1", "q2.p2",
                        "p2.q1.p2", "p2.q2.p1", "q1.p1.q1", "q1.p2.q2", "q2.p2.q2", "p2.q1.p1.q1", "q2.p1.q1.p1"}) {
    out.push_back(Word::parse(w));
  }
  return out;
}

}  // namespace pabel
