#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pabel/linalg/dense.hpp"
#include "pabel/quotient/ideal_span.hpp"

namespace pabel {

struct FiltrationRow {
  std::size_t n = 0;
  std::size_t stage = 0;       // formal degree window n + slack
  std::size_t dim_r = 0;       // dim F^n R
  std::size_t counted = 0;     // rank of span intersected with F^n R
  std::size_t bound = 0;       // dim F^n S <= bound
  std::size_t bound_prev = 0;  // bound at n - 1 inside the same span
  bool closed = false;         // closure certificate succeeded at this n
};

struct FiltrationReport {
  std::string domain;
  std::size_t slack = 0;
  std::vector<FiltrationRow> rows;
  std::optional<std::size_t> certified_n;
  [[nodiscard]] bool strictly_increasing() const {
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].bound <= rows[i - 1].bound) return false;
    }
    return true;
  }
};

/// A basis B of words closed under right multiplication by the generators modulo
/// the ideal span, with its regular action.
template <Field D>
struct ClosureCertificate {
  using T = value_t<D>;
  bool closed = false;
  std::string failure;  // why closure failed
  std::size_t n = 0;
  std::size_t stage = 0;
  std::vector<Word> basis;
  /// right[g](r, c): coefficient of b_c in b_r * g; left[g](r, c): in g * b_r. Generators p1, p2, q1, q2
  /// for (3,3), in general the reduced letters P(1..a-1), Q(1..b-1).
  std::vector<Letter> letters;
  std::vector<Matrix<D>> right;
  std::vector<Matrix<D>> left;

  [[nodiscard]] std::size_t dim() const { return basis.size(); }
};

inline std::vector<Letter> reduced_letters(const AlgebraSignature& sig) {
  std::vector<Letter> out;
  for (int i = 1; i < sig.a; ++i) out.push_back({Tag::P, i});
  for (int j = 1; j < sig.b; ++j) out.push_back({Tag::Q, j});
  return out;
}

/// Coordinates of a normal form against the basis; nullopt if it leaves span(B).
template <Field D>
std::optional<std::vector<value_t<D>>> basis_coords(const AlgebraElement<D>& nf, const std::vector<Word>& basis,
                                                    const D& dom) {
  std::vector<value_t<D>> out(basis.size(), dom.zero());
  for (const auto& [w, c] : nf.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), w);
    if (it == basis.end() || !(*it == w)) return std::nullopt;
    out[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return out;
}

/// Checks closure of B = free words of length <= n under right and left multiplication by letters.
template <Field D>
ClosureCertificate<D> closure_certificate(const IdealSpan<D>& span, std::size_t n) {
  ClosureCertificate<D> cert;
  const D& dom = span.domain();
  const auto& sig = span.signature();
  cert.n = n;
  cert.stage = span.stage();
  cert.basis = span.free_words(n);
  cert.letters = reduced_letters(sig);
  const std::size_t k = cert.basis.size();
  if (k == 0) {
    cert.failure = "ideal contains 1";
    return cert;
  }
  if (!(cert.basis.front() == Word{})) {
    cert.failure = "unit is not a basis word";
    return cert;
  }
  for (const auto& b : cert.basis) {
    if (b.length() + 1 > span.stage()) {
      cert.failure = "basis word " + b.str() + " too long for the span window; increase n_max/slack";
      return cert;
    }
  }
  for (const auto& g : cert.letters) {
    Matrix<D> r(dom, k, k), l(dom, k, k);
    const Word gw{g};
    for (std::size_t i = 0; i < k; ++i) {
      for (int side = 0; side < 2; ++side) {
        auto prod = side == 0 ? multiply_words(cert.basis[i], gw) : multiply_words(gw, cert.basis[i]);
        if (!prod) continue;
        const auto nf = span.normal_form(AlgebraElement<D>::from_word(sig, dom, *prod));
        auto coords = basis_coords(nf, cert.basis, dom);
        if (!coords) {
          cert.failure = (side == 0 ? cert.basis[i].str() + "*" + g.str() : g.str() + "*" + cert.basis[i].str()) +
                         " does not reduce into the basis; increase n_max/slack";
          return cert;
        }
        for (std::size_t c = 0; c < k; ++c) (side == 0 ? r : l)(i, c) = (*coords)[c];
      }
    }
    cert.right.push_back(std::move(r));
    cert.left.push_back(std::move(l));
  }
  cert.closed = true;
  return cert;
}

/// Matrix of right multiplication by an algebra element, from the letter actions.
template <Field D>
Matrix<D> right_action(const ClosureCertificate<D>& cert, const AlgebraElement<D>& e, bool left_side = false) {
  const D& dom = e.domain();
  const std::size_t k = cert.dim();
  Matrix<D> total(dom, k, k);
  const auto& mats = left_side ? cert.left : cert.right;
  for (const auto& [w, c] : e.terms()) {
    Matrix<D> m = Matrix<D>::identity(dom, k);
    for (std::size_t i = 0; i < w.length(); ++i) {
      std::size_t at = 0;
      while (!(cert.letters[at] == w[i])) ++at;
      // right action composes in reading order, left action in reverse
      m = left_side ? mats[at] * m : m * mats[at];
    }
    total = total + c * m;
  }
  return total;
}

/// mu[i][j] = coordinates of b_i * b_j.
template <Field D>
std::vector<std::vector<std::vector<value_t<D>>>> structure_constants(const ClosureCertificate<D>& cert, const D& dom) {
  const std::size_t k = cert.dim();
  std::vector<std::vector<std::vector<value_t<D>>>> mu(k, std::vector<std::vector<value_t<D>>>(k));
  for (std::size_t j = 0; j < k; ++j) {
    Matrix<D> m = Matrix<D>::identity(dom, k);
    const Word& w = cert.basis[j];
    for (std::size_t t = 0; t < w.length(); ++t) {
      std::size_t at = 0;
      while (!(cert.letters[at] == w[t])) ++at;
      m = m * cert.right[at];
    }
    for (std::size_t i = 0; i < k; ++i) {
      mu[i][j].reserve(k);
      for (std::size_t c = 0; c < k; ++c) mu[i][j].push_back(m(i, c));
    }
  }
  return mu;
}

template <Field D>
struct AlgebraChecks {
  bool idempotents = false;   // R_g^2 = R_g and orthogonality inside each factor
  bool relations = false;     // every ideal generator acts as zero on both sides
  bool bimodule = false;      // left and right actions commute
  bool associative = false;   // sampled triples
  std::size_t triples = 0;
  bool commutative = false;
};

/// Structural sanity of a certificate: relations act as zero, associativity on random triples.
template <Field D, class Rng>
AlgebraChecks<D> check_certificate(const ClosureCertificate<D>& cert, const std::vector<AlgebraElement<D>>& gens,
                                   const D& dom, Rng& rng, std::size_t samples = 100) {
  AlgebraChecks<D> out;
  const std::size_t k = cert.dim();
  const std::size_t g = cert.letters.size();
  out.idempotents = true;
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      if (cert.letters[i].tag != cert.letters[j].tag) continue;
      for (const auto* mats : {&cert.right, &cert.left}) {
        const Matrix<D> prod = (*mats)[i] * (*mats)[j];
        const bool ok = i == j ? prod == (*mats)[i] : prod.is_zero();
        out.idempotents = out.idempotents && ok;
      }
    }
  }
  out.relations = true;
  for (const auto& gen : gens) {
    out.relations = out.relations && right_action(cert, gen).is_zero() && right_action(cert, gen, true).is_zero();
  }
  out.bimodule = true;
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) out.bimodule = out.bimodule && cert.left[i] * cert.right[j] == cert.right[j] * cert.left[i];
  }
  const auto mu = structure_constants(cert, dom);
  auto mul = [&](const std::vector<value_t<D>>& x, const std::vector<value_t<D>>& y) {
    std::vector<value_t<D>> z(k, dom.zero());
    for (std::size_t i = 0; i < k; ++i) {
      if (scalar_is_zero(x[i])) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (scalar_is_zero(y[j])) continue;
        const value_t<D> c = x[i] * y[j];
        for (std::size_t l = 0; l < k; ++l) z[l] = z[l] + c * mu[i][j][l];
      }
    }
    return z;
  };
  auto unit = [&](std::size_t i) {
    std::vector<value_t<D>> e(k, dom.zero());
    e[i] = dom.one();
    return e;
  };
  out.associative = true;
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto a = unit(pick(rng)), b = unit(pick(rng)), c = unit(pick(rng));
    out.associative = out.associative && mul(mul(a, b), c) == mul(a, mul(b, c));
  }
  out.triples = samples;
  out.commutative = true;
  for (std::size_t i = 0; i < k && out.commutative; ++i) {
    for (std::size_t j = i + 1; j < k && out.commutative; ++j) out.commutative = mu[i][j] == mu[j][i];
  }
  return out;
}

template <Field D>
struct ScanResult {
  FiltrationReport report;
  std::unique_ptr<IdealSpan<D>> span;  // span at the last stage reached
  std::optional<ClosureCertificate<D>> certificate;
};

/// Quotient bounds for n = n_from..n_to with window n + slack; stops at the first closed certificate
/// when stop_at_certificate is set.
template <Field D>
ScanResult<D> stabilization_scan(const D& dom, const std::vector<AlgebraElement<D>>& gens, std::size_t n_from,
                                 std::size_t n_to, std::size_t slack, bool stop_at_certificate = true) {
  if (n_from < 2 || n_from > n_to) throw UsageError("scan needs 2 <= n_from <= n_to");
  ScanResult<D> res;
  res.report.domain = dom.name();
  res.report.slack = slack;
  res.span = std::make_unique<IdealSpan<D>>(dom, gens, n_to + slack);
  for (std::size_t n = n_from; n <= n_to; ++n) {
    res.span->extend_to(n + slack);
    FiltrationRow row;
    row.n = n;
    row.stage = n + slack;
    row.dim_r = res.span->filtration_dim(n);
    row.counted = res.span->counted_rank(n);
    row.bound = res.span->quotient_bound(n);
    row.bound_prev = res.span->quotient_bound(n - 1);
    if (row.bound == row.bound_prev && slack >= 1) {
      auto cert = closure_certificate(*res.span, n);
      row.closed = cert.closed;
      if (cert.closed && !res.certificate) {
        res.report.certified_n = n;
        res.certificate = std::move(cert);
      }
    }
    res.report.rows.push_back(row);
    if (res.certificate && stop_at_certificate) break;
  }
  return res;
}

}  // namespace pabel
