#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "pabel/errors.hpp"
#include "pabel/quotient/closure.hpp"
#include "pabel/quotient/relation.hpp"
#include "pabel/rep/geometry.hpp"
#include "pabel/rep/wedderburn.hpp"
#include "pabel/scalars/prime_field.hpp"

namespace pabel {

struct TheoremParams {
  std::size_t nmax = 8;
  std::size_t slack = 4;
  std::uint64_t prime = 0;  // prefilter prime; 0 picks one from the seed
};

/// Chart point with numerators below `height` and denominators below `den_height`.
inline std::array<Rational, 3> sample_chart_point(std::mt19937_64& rng, std::int64_t height = 9999,
                                                  std::int64_t den_height = 999) {
  std::uniform_int_distribution<std::int64_t> num(-height, height), den(1, den_height);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

inline ProjectivePoint3 chart_point(const std::array<Rational, 3>& y) {
  return ProjectivePoint3({Rational(1), y[0], y[1], y[2]});
}

/// The point (1:0:0:-1), where the quotient is expected to be infinite-dimensional.
inline bool is_known_bad_chart(const std::array<Rational, 3>& y) {
  return y[0].is_zero() && y[1].is_zero() && y[2] == Rational(-1);
}

/// Extends (x11 x12; x21 x22) to the 3x3 coefficient matrix with zero row and column sums.
inline std::array<Rational, 9> extended_coefficients(const std::array<Rational, 4>& x) {
  return {x[0], x[1], x[0] - x[1], x[2], x[3], x[2] - x[3], x[0] - x[2], x[1] - x[3], x[0] - x[1] - x[2] + x[3]};
}

/// Some entry of the extended coefficient matrix vanishes; the filtration bounds keep growing there.
inline bool on_degenerate_hyperplane(const std::array<Rational, 3>& y) {
  for (const auto& e : extended_coefficients({Rational(1), y[0], y[1], y[2]}))
    if (e.is_zero()) return true;
  return false;
}

struct ModularSearch {
  std::uint64_t prime = 0;
  std::optional<std::size_t> n;
  std::size_t slack = 0;
  std::size_t bound = 0;
  std::vector<std::uint64_t> pivot_ids;
};

/// Smallest slack (then smallest n) at which the closure certificate succeeds modulo p.
inline ModularSearch modular_search(const std::array<Rational, 3>& y, std::uint64_t p, std::size_t nmax,
                                    std::size_t max_slack) {
  const PrimeField F(p);
  const auto rel = make_chart_relation(F, F.from_rational(y[0]), F.from_rational(y[1]), F.from_rational(y[2]));
  ModularSearch out;
  out.prime = p;
  for (std::size_t s = 1; s <= max_slack; ++s) {
    auto scan = stabilization_scan(F, {rel.X}, 2, nmax, s);
    if (scan.certificate) {
      out.n = scan.certificate->n;
      out.slack = s;
      out.bound = scan.certificate->dim();
      out.pivot_ids = scan.span->pivot_ids();
      return out;
    }
  }
  return out;
}

struct TheoremPoint {
  std::array<Rational, 3> y;
  ModularSearch modular;
  FiltrationReport exact_report;
  std::optional<ClosureCertificate<RationalField>> certificate;
  std::optional<AlgebraChecks<RationalField>> checks;
  std::optional<ExtensionSpec<RationalField>> spec;
  std::optional<LineSplitting<RationalField>> lines;
  std::optional<WedderburnMap<RationalField>> wedderburn;
  std::string failure;
  [[nodiscard]] std::size_t upper() const { return certificate ? certificate->dim() : 0; }
  [[nodiscard]] std::size_t lower() const { return wedderburn ? wedderburn->rank : 0; }
  [[nodiscard]] bool reproduced() const {
    return failure.empty() && certificate && wedderburn && checks && checks->associative && checks->relations &&
           wedderburn->verdict() == "dim S_x = 18, type k^9 + M3";
  }
  [[nodiscard]] std::string verdict() const {
    if (!failure.empty()) return "not reproduced: " + failure;
    return wedderburn ? wedderburn->verdict() : "not reproduced";
  }
};

/// Exact closure certificate over Q, guided by a modular run that fixes (n, slack) and the useful rows.
inline ScanResult<RationalField> exact_certificate(const std::array<Rational, 3>& y, const ModularSearch& mod,
                                                   std::size_t nmax, std::size_t max_slack) {
  const RationalField Q;
  const auto rel = make_chart_relation(Q, y[0], y[1], y[2]);
  if (mod.n) {
    ScanResult<RationalField> res;
    res.report.domain = Q.name();
    res.report.slack = mod.slack;
    res.span = std::make_unique<IdealSpan<RationalField>>(Q, std::vector{rel.X}, *mod.n + mod.slack);
    const std::unordered_set<std::uint64_t> keep(mod.pivot_ids.begin(), mod.pivot_ids.end());
    res.span->set_filter([keep](std::uint64_t id) { return keep.count(id) > 0; });
    res.span->extend_to(*mod.n + mod.slack);
    const std::size_t n = *mod.n;
    FiltrationRow row{n, n + mod.slack, res.span->filtration_dim(n), res.span->counted_rank(n),
                      res.span->quotient_bound(n), res.span->quotient_bound(n - 1), false};
    if (row.bound == row.bound_prev) {
      auto cert = closure_certificate(*res.span, n);
      row.closed = cert.closed;
      if (cert.closed) {
        res.report.certified_n = n;
        res.certificate = std::move(cert);
      }
    }
    res.report.rows.push_back(row);
    if (res.certificate) return res;
  }
  // unfiltered fallback
  for (std::size_t s = 1; s <= max_slack; ++s) {
    auto res = stabilization_scan(Q, {rel.X}, 2, nmax, s);
    if (res.certificate || s == max_slack) return res;
  }
  throw UsageError("slack must be positive");
}

/// Upper bound from the exact certificate, lower bound from the Wedderburn map, at one chart point.
inline TheoremPoint theorem_at(const std::array<Rational, 3>& y, const TheoremParams& params) {
  TheoremPoint out;
  out.y = y;
  const RationalField Q;
  if ((y[2] - y[0] * y[1]).is_zero()) {
    out.failure = "point lies on the quadric";
    return out;
  }
  if (on_degenerate_hyperplane(y)) {
    out.failure = "an entry of the extended coefficient matrix vanishes";
    return out;
  }
  std::uint64_t p = params.prime;
  if (p == 0) {
    std::mt19937_64 prng(0x5eedULL);
    p = random_prime(prng);
  }
  try {
    out.modular = modular_search(y, p, params.nmax, params.slack);
  } catch (const PoleError&) {
    out.failure = "prefilter prime divides a denominator";
    return out;
  }
  auto res = exact_certificate(y, out.modular, params.nmax, params.slack);
  out.exact_report = res.report;
  if (!res.certificate) {
    out.failure = "no closure certificate up to n = " + std::to_string(params.nmax);
    return out;
  }
  out.certificate = std::move(res.certificate);
  const auto rel = make_chart_relation(Q, y[0], y[1], y[2]);
  std::mt19937_64 rng(7);
  out.checks = check_certificate(*out.certificate, {rel.X}, Q, rng);
  const auto cs = conics(Q, y[0], y[1], y[2]);
  try {
    out.spec = intersect_conics(cs);
    out.lines = split_into_lines(determinantal_cubic(cs.M, Q));
    const auto sol = tq_rewrite(Q, y[0], y[1], y[2]);
    out.wedderburn = wedderburn_verify(*out.certificate, rel.X, *out.spec, rho_polynomial(sol), y);
  } catch (const DegenerateError& e) {
    out.failure = std::string("degenerate specialization: ") + e.what();
  }
  return out;
}

}  // namespace pabel
