#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pabel/algebra/element.hpp"
#include "pabel/linalg/dense.hpp"

namespace pabel {

/// V inside Abar + Bbar, by basis vectors in coordinates (p_1..p_{a-1} | q_1..q_{b-1}).
template <Field D>
struct SubspacePresentation {
  using T = value_t<D>;
  AlgebraSignature sig;
  D dom;
  std::vector<std::vector<T>> basis;

  SubspacePresentation(AlgebraSignature s, D d, std::vector<std::vector<T>> vecs)
      : sig(s), dom(std::move(d)), basis(std::move(vecs)) {
    const auto width = static_cast<std::size_t>(sig.a - 1 + sig.b - 1);
    for (const auto& v : basis) {
      if (v.size() != width) throw UsageError("subspace vector has wrong length");
    }
    if (!basis.empty() && Matrix<D>::from_rows(dom, basis).rank() != basis.size()) {
      throw UsageError("subspace basis is linearly dependent");
    }
  }

  [[nodiscard]] std::size_t dim() const { return basis.size(); }
  [[nodiscard]] std::size_t a_width() const { return static_cast<std::size_t>(sig.a - 1); }
  [[nodiscard]] std::size_t b_width() const { return static_cast<std::size_t>(sig.b - 1); }

  [[nodiscard]] AlgebraElement<D> element(const std::vector<T>& v) const {
    AlgebraElement<D> e(sig, dom);
    for (std::size_t i = 0; i < a_width(); ++i) e.add_term(Word{Letter{Tag::P, static_cast<int>(i + 1)}}, v[i]);
    for (std::size_t j = 0; j < b_width(); ++j) {
      e.add_term(Word{Letter{Tag::Q, static_cast<int>(j + 1)}}, v[a_width() + j]);
    }
    return e;
  }
  [[nodiscard]] AlgebraElement<D> generator(std::size_t k) const { return element(basis.at(k)); }

  /// Rows of the projection of the basis to one factor.
  [[nodiscard]] Matrix<D> projection(Tag tag) const {
    const std::size_t off = tag == Tag::P ? 0 : a_width();
    const std::size_t w = tag == Tag::P ? a_width() : b_width();
    Matrix<D> m(dom, std::max<std::size_t>(dim(), 1), w);
    for (std::size_t r = 0; r < dim(); ++r)
      for (std::size_t c = 0; c < w; ++c) m(r, c) = basis[r][off + c];
    return m;
  }

  /// Basis of V intersected with the factor tag, in the same coordinates.
  [[nodiscard]] std::vector<std::vector<T>> intersection(Tag tag) const {
    if (basis.empty()) return {};
    const Matrix<D> other = projection(tag == Tag::P ? Tag::Q : Tag::P);
    // combinations c with c * other = 0
    const auto kernel = other.transpose().nullspace();
    std::vector<std::vector<T>> out;
    for (const auto& c : kernel) {
      std::vector<T> v(basis[0].size(), dom.zero());
      for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = v[k] + c[r] * basis[r][k];
      out.push_back(std::move(v));
    }
    return out;
  }
};

struct GenericityReport {
  bool pi_a_surjective = false;
  bool pi_b_surjective = false;
  std::size_t rank_a = 0;
  std::size_t rank_b = 0;
  std::optional<int> mid_bound;  // min(a, b) when both projections are onto
};

template <Field D>
GenericityReport genericity_check(const SubspacePresentation<D>& V) {
  GenericityReport r;
  r.rank_a = V.dim() == 0 ? 0 : V.projection(Tag::P).rank();
  r.rank_b = V.dim() == 0 ? 0 : V.projection(Tag::Q).rank();
  r.pi_a_surjective = r.rank_a == V.a_width();
  r.pi_b_surjective = r.rank_b == V.b_width();
  if (r.pi_a_surjective && r.pi_b_surjective) r.mid_bound = std::min(V.sig.a, V.sig.b);
  return r;
}

/// V = span{p1 - y2 q1 - y3 q2, p2 + q1 + y1 q2} and its image (1:y1:y2:y3) in P^3.
template <Field D>
struct ChartImage {
  SubspacePresentation<D> V;
  std::array<value_t<D>, 4> point;
};

template <Field D>
ChartImage<D> grassmann_chart(const D& dom, const value_t<D>& y1, const value_t<D>& y2, const value_t<D>& y3) {
  const auto one = dom.one(), zero = dom.zero();
  SubspacePresentation<D> V(AlgebraSignature(3, 3), dom,
                            {{one, zero, -y2, -y3}, {zero, one, one, y1}});
  return {std::move(V), {one, y1, y2, y3}};
}

/// Noncommutative polynomial in the generators v_1..v_r of R(V); key = index sequence.
template <Field D>
using VPolynomial = std::map<std::vector<int>, value_t<D>>;

template <Field D>
struct LeftModuleDecomposition {
  /// summand t pairs r_t in R(V) with b_t in {1, q_1, ..., q_{b-1}} (index 0 is 1).
  std::vector<VPolynomial<D>> r;
  [[nodiscard]] std::size_t summands() const {
    return static_cast<std::size_t>(std::count_if(r.begin(), r.end(), [](const auto& m) { return !m.empty(); }));
  }
};

template <Field D>
AlgebraElement<D> expand_vpoly(const VPolynomial<D>& poly, const SubspacePresentation<D>& V) {
  AlgebraElement<D> out(V.sig, V.dom);
  for (const auto& [seq, c] : poly) {
    auto m = AlgebraElement<D>::one(V.sig, V.dom);
    for (int i : seq) m = m * V.generator(static_cast<std::size_t>(i - 1));
    out = out + c * m;
  }
  return out;
}

template <Field D>
AlgebraElement<D> expand(const LeftModuleDecomposition<D>& dec, const SubspacePresentation<D>& V) {
  AlgebraElement<D> out(V.sig, V.dom);
  for (std::size_t t = 0; t < dec.r.size(); ++t) {
    const auto bt = t == 0 ? AlgebraElement<D>::one(V.sig, V.dom)
                           : AlgebraElement<D>::from_word(V.sig, V.dom, Word{Letter{Tag::Q, static_cast<int>(t)}});
    out = out + expand_vpoly(dec.r[t], V) * bt;
  }
  return out;
}

namespace detail {

/// Token sequence over {v_1..v_r} (positive) and {q_1..q_{b-1}} (negative).
template <Field D>
using TokenPoly = std::map<std::vector<int>, value_t<D>>;

template <Field D>
void add_token_term(TokenPoly<D>& poly, std::vector<int> seq, const value_t<D>& c) {
  // adjacent q tokens multiply inside B
  std::vector<int> s;
  for (int t : seq) {
    if (t < 0 && !s.empty() && s.back() < 0) {
      if (s.back() != t) return;  // q_j q_k = 0
      continue;
    }
    s.push_back(t);
  }
  if (scalar_is_zero(c)) return;
  auto [it, fresh] = poly.try_emplace(std::move(s), c);
  if (!fresh) {
    it->second = it->second + c;
    if (scalar_is_zero(it->second)) poly.erase(it);
  }
}

}  // namespace detail

/// Writes x = sum_t r_t b_t with r_t in R(V) and b_t running over {1, q_1, ..., q_{b-1}}.
/// Needs pi_A restricted to V to be an isomorphism onto Abar and pi_B onto Bbar.
template <Field D>
LeftModuleDecomposition<D> rewrite_left_module(const AlgebraElement<D>& x, const SubspacePresentation<D>& V) {
  using T = value_t<D>;
  const auto gen = genericity_check(V);
  if (!gen.pi_a_surjective || !gen.pi_b_surjective) throw UsageError("rewriting needs a generic subspace");
  if (V.dim() != V.a_width()) throw UsageError("rewriting needs dim V = dim Abar");
  if (!(x.signature() == V.sig)) throw UsageError("signature mismatch");
  const D& dom = V.dom;
  const std::size_t r = V.dim(), nb = V.b_width();
  // rebase so that v_i = p_i + b_i
  const Matrix<D> pa = V.projection(Tag::P);
  std::vector<std::vector<T>> vb;  // b_i in q-coordinates
  {
    Matrix<D> aug(dom, r, r + nb);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t c = 0; c < r; ++c) aug(i, c) = pa(i, c);
      for (std::size_t c = 0; c < nb; ++c) aug(i, r + c) = V.basis[i][r + c];
    }
    // left-multiply by pa^{-1}: solve column by column
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<T> bi(nb, dom.zero());
      std::vector<T> ei(r, dom.zero());
      ei[i] = dom.one();
      // row vector c with c * pa = e_i
      auto c = pa.transpose().solve(ei);
      if (!c) throw DegenerateError("projection to Abar is not invertible");
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t j = 0; j < r; ++j) bi[k] = bi[k] + (*c)[j] * aug(j, r + k);
      vb.push_back(std::move(bi));
    }
  }
  // q_k = sum_i lambda_ki b_i
  std::vector<std::vector<T>> lambda;
  {
    Matrix<D> bm(dom, r, nb);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < nb; ++k) bm(i, k) = vb[i][k];
    for (std::size_t k = 0; k < nb; ++k) {
      std::vector<T> ek(nb, dom.zero());
      ek[k] = dom.one();
      auto sol = bm.transpose().solve(ek);
      if (!sol) throw DegenerateError("b-parts do not span Bbar");
      lambda.push_back(*sol);
    }
  }
  auto b_tokens = [&](std::size_t i) {  // b_i as (token, coeff) list
    std::vector<std::pair<int, T>> out;
    for (std::size_t k = 0; k < nb; ++k) {
      if (!scalar_is_zero(vb[i][k])) out.emplace_back(-static_cast<int>(k + 1), vb[i][k]);
    }
    return out;
  };
  // substitute p_i = v_i - b_i
  detail::TokenPoly<D> poly;
  for (const auto& [w, c] : x.terms()) {
    std::vector<std::pair<std::vector<int>, T>> cur{{{}, c}};
    for (std::size_t t = 0; t < w.length(); ++t) {
      const Letter l = w[t];
      std::vector<std::pair<std::vector<int>, T>> next;
      for (auto& [seq, cc] : cur) {
        if (l.tag == Tag::Q) {
          auto s = seq;
          s.push_back(-l.index);
          next.emplace_back(std::move(s), cc);
          continue;
        }
        auto s = seq;
        s.push_back(l.index);
        next.emplace_back(std::move(s), cc);
        for (const auto& [tok, bc] : b_tokens(static_cast<std::size_t>(l.index - 1))) {
          auto s2 = seq;
          s2.push_back(tok);
          next.emplace_back(std::move(s2), -(cc * bc));
        }
      }
      cur = std::move(next);
    }
    for (auto& [seq, cc] : cur) detail::add_token_term<D>(poly, std::move(seq), cc);
  }
  // move q tokens to the right with b_i v_j = v_i v_j - v_i b_j + b_i b_j - [i=j](v_i - b_i)
  LeftModuleDecomposition<D> dec;
  dec.r.assign(nb + 1, {});
  while (!poly.empty()) {
    auto node = poly.extract(poly.begin());
    const std::vector<int> seq = node.key();
    const T c = node.mapped();
    std::size_t pos = seq.size();
    for (std::size_t t = 0; t + 1 < seq.size(); ++t) {
      if (seq[t] < 0 && seq[t + 1] > 0) {
        pos = t;
        break;
      }
    }
    if (pos == seq.size()) {
      std::vector<int> vs;
      std::size_t slot = 0;
      for (int t : seq) {
        if (t > 0) vs.push_back(t);
        else slot = static_cast<std::size_t>(-t);
      }
      auto& dst = dec.r[slot];
      auto [it, fresh] = dst.try_emplace(vs, c);
      if (!fresh) {
        it->second = it->second + c;
        if (scalar_is_zero(it->second)) dst.erase(it);
      }
      continue;
    }
    const std::vector<int> head(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(pos));
    const std::vector<int> tail(seq.begin() + static_cast<std::ptrdiff_t>(pos + 2), seq.end());
    const auto k = static_cast<std::size_t>(-seq[pos] - 1);
    const int j = seq[pos + 1];
    auto emit = [&](const std::vector<int>& mid, const T& coeff) {
      std::vector<int> s = head;
      s.insert(s.end(), mid.begin(), mid.end());
      s.insert(s.end(), tail.begin(), tail.end());
      detail::add_token_term<D>(poly, std::move(s), coeff);
    };
    for (std::size_t i = 0; i < r; ++i) {
      const T li = c * lambda[k][i];
      if (scalar_is_zero(li)) continue;
      const int vi = static_cast<int>(i + 1);
      emit({vi, j}, li);
      for (const auto& [tok, bc] : b_tokens(static_cast<std::size_t>(j - 1))) emit({vi, tok}, -(li * bc));
      for (const auto& [t1, c1] : b_tokens(i)) {
        for (const auto& [t2, c2] : b_tokens(static_cast<std::size_t>(j - 1))) emit({t1, t2}, li * c1 * c2);
      }
      if (vi == j) {
        emit({vi}, -li);
        for (const auto& [tok, bc] : b_tokens(i)) emit({tok}, li * bc);
      }
    }
  }
  // express over the original basis of V: v'_i = sum_j (pa^{-1})_{ij} v_j
  Matrix<D> inv(dom, r, r);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<T> ei(r, dom.zero());
    ei[i] = dom.one();
    auto c = pa.transpose().solve(ei);
    for (std::size_t jj = 0; jj < r; ++jj) inv(i, jj) = (*c)[jj];
  }
  LeftModuleDecomposition<D> out;
  out.r.assign(nb + 1, {});
  for (std::size_t t = 0; t <= nb; ++t) {
    for (const auto& [seq, c] : dec.r[t]) {
      std::vector<std::pair<std::vector<int>, T>> cur{{{}, c}};
      for (int vi : seq) {
        std::vector<std::pair<std::vector<int>, T>> next;
        for (auto& [s, cc] : cur) {
          for (std::size_t jj = 0; jj < r; ++jj) {
            const T f = inv(static_cast<std::size_t>(vi - 1), jj);
            if (scalar_is_zero(f)) continue;
            auto s2 = s;
            s2.push_back(static_cast<int>(jj + 1));
            next.emplace_back(std::move(s2), cc * f);
          }
        }
        cur = std::move(next);
      }
      for (auto& [s, cc] : cur) {
        auto [it, fresh] = out.r[t].try_emplace(s, cc);
        if (!fresh) {
          it->second = it->second + cc;
          if (scalar_is_zero(it->second)) out.r[t].erase(it);
        }
      }
    }
  }
  return out;
}

}  // namespace pabel
