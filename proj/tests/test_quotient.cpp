#include <catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "pabel/classify/verdict.hpp"
#include "pabel/pipeline/theorem.hpp"
#include "pabel/quotient/closure.hpp"
#include "pabel/quotient/ideal_span.hpp"
#include "pabel/quotient/listed_generators.hpp"
#include "pabel/quotient/reduction.hpp"
#include "pabel/quotient/relation.hpp"
#include "pabel/quotient/sigma.hpp"

using namespace pabel;

namespace {

const RationalField kQ;

std::array<Rational, 3> generic_chart(std::mt19937_64& rng) {
  for (;;) {
    auto y = sample_chart_point(rng, 50, 9);
    if (!(y[2] - y[0] * y[1]).is_zero() && !on_degenerate_hyperplane(y)) return y;
  }
}

AlgebraElement<RationalField> el(std::string_view s) { return AlgebraElement<RationalField>::parse({3, 3}, kQ, s); }

}  // namespace

TEST_CASE("relations at special points", "[quotient]") {
  const auto x0 = make_relation(kQ, ProjectivePoint3::parse("1:0:0:0"));
  CHECK(x0.X == el("1*p1.q1 + (-1)*q1.p1"));
  CHECK(x0.X.degree() == 2);
  const auto bad = make_relation(kQ, ProjectivePoint3::parse("1:0:0:-1"));
  CHECK(bad.X == el("1*p1.q1 + (-1)*q1.p1") - el("1*p2.q2 + (-1)*q2.p2"));
  CHECK_THROWS_AS(ProjectivePoint3::parse("0:0:0:0"), DomainError);
  CHECK_THROWS_AS(ProjectivePoint3::parse("1:2:3"), UsageError);
  CHECK(ProjectivePoint3::parse("2:4:6:8") == ProjectivePoint3::parse("1:2:3:4"));
}

TEST_CASE("symbolic chart relation expands termwise", "[quotient]") {
  const RationalFunctionField F;
  const auto X = make_chart_relation(F, F.y(1), F.y(2), F.y(3)).X;
  const AlgebraSignature s(3, 3);
  auto word = [&](const char* w) { return Word::parse(w); };
  // [p1,q1] + y1[p1,q2] + y2[p2,q1] + y3[p2,q2]
  CHECK(X.coeff(word("p1.q1")) == F.one());
  CHECK(X.coeff(word("q1.p1")) == -F.one());
  CHECK(X.coeff(word("p1.q2")) == F.y(1));
  CHECK(X.coeff(word("q2.p1")) == -F.y(1));
  CHECK(X.coeff(word("p2.q1")) == F.y(2));
  CHECK(X.coeff(word("q1.p2")) == -F.y(2));
  CHECK(X.coeff(word("p2.q2")) == F.y(3));
  CHECK(X.coeff(word("q2.p2")) == -F.y(3));
  CHECK(X.size() == 8);
  CHECK(X.signature() == s);
}

TEST_CASE("a single relation spans rank one at n = 2", "[quotient]") {
  IdealSpan<RationalField> span(kQ, {make_relation(kQ, ProjectivePoint3::parse("1:0:0:0")).X}, 2);
  span.extend_to(2);
  CHECK(span.counted_rank(2) == 1);
  CHECK(span.quotient_bound(2) == 12);
}

TEST_CASE("the 53 listed generators have rank 42", "[quotient]") {
  std::mt19937_64 rng(101);
  const auto y = generic_chart(rng);
  const auto X = make_chart_relation(kQ, y[0], y[1], y[2]).X;
  const auto r = listed_generator_rank(X);
  CHECK(r.generators == 53);
  CHECK(r.max_length == 4);
  CHECK(r.dim_f4 == 61);
  CHECK(r.rank == 42);
  CHECK(r.bound == 19);
  CHECK(r.omitted_dependent());
  for (int i = 0; i < 2; ++i) {
    const PrimeField F(random_prime(rng));
    const auto Xp = make_chart_relation(F, F.from_rational(y[0]), F.from_rational(y[1]), F.from_rational(y[2])).X;
    CHECK(listed_generator_rank(Xp).rank == 42);
  }
}

TEST_CASE("generator rank on the quadric agrees across primes", "[quotient]") {
  std::mt19937_64 rng(5);
  const auto x = ProjectivePoint3::parse("1:2:2:4");
  const auto rq = listed_generator_rank(make_relation(kQ, x).X);
  for (int i = 0; i < 2; ++i) {
    const PrimeField F(random_prime(rng));
    CHECK(listed_generator_rank(make_relation(F, x).X).rank == rq.rank);
  }
  CHECK(rq.rank <= 42);
}

TEST_CASE("ideal span with one degree of slack meets the listed generators", "[quotient]") {
  std::mt19937_64 rng(7);
  const auto y = generic_chart(rng);
  const PrimeField F(random_prime(rng));
  const auto X = make_chart_relation(F, F.from_rational(y[0]), F.from_rational(y[1]), F.from_rational(y[2])).X;
  IdealSpan<PrimeField> span(F, {X}, 5);
  span.extend_to(5);
  CHECK(span.counted_rank(4) == 42);
  CHECK(span.quotient_bound(4) == 19);
  for (const auto& g : listed_generators(X)) CHECK(span.contains(g));
}

TEST_CASE("span rows re-expand to elements of the ideal", "[quotient][property]") {
  std::mt19937_64 rng(9);
  const PrimeField F(random_prime(rng));
  const auto y = generic_chart(rng);
  const auto X = make_chart_relation(F, F.from_rational(y[0]), F.from_rational(y[1]), F.from_rational(y[2])).X;
  IdealSpan<PrimeField> span(F, {X}, 5);
  span.track_origins(true);
  span.extend_to(5);
  REQUIRE(span.pivot_origins().size() == span.rank());
  SparseEchelon<PrimeField> ech(F, span.index().size());
  for (const auto& o : span.pivot_origins()) {
    const auto e = span.expand(o);
    CHECK(e == X.sandwich(o.u, o.v));
    CHECK(span.contains(e));
    CHECK(ech.insert(to_row(e, span.index())));
  }
  CHECK(ech.rank() == span.rank());
}

TEST_CASE("more slack never raises a quotient bound", "[quotient][property]") {
  std::mt19937_64 rng(13);
  const PrimeField F(random_prime(rng));
  for (int t = 0; t < 3; ++t) {
    const auto y = generic_chart(rng);
    const auto X = make_chart_relation(F, F.from_rational(y[0]), F.from_rational(y[1]), F.from_rational(y[2])).X;
    for (std::size_t n : {3, 4, 5}) {
      std::size_t prev = static_cast<std::size_t>(-1);
      for (std::size_t s = 0; s <= 3; ++s) {
        IdealSpan<PrimeField> span(F, {X}, n + s);
        span.extend_to(n + s);
        CHECK(span.quotient_bound(n) <= prev);
        prev = span.quotient_bound(n);
      }
    }
  }
}

TEST_CASE("generic closure certificate has 18 words", "[quotient]") {
  std::mt19937_64 rng(21);
  const auto y = generic_chart(rng);
  const auto X = make_chart_relation(kQ, y[0], y[1], y[2]).X;
  auto scan = stabilization_scan(kQ, {X}, 2, 8, 1);
  REQUIRE(scan.certificate);
  const auto& cert = *scan.certificate;
  CHECK(cert.dim() == 18);
  CHECK(scan.report.certified_n.value() <= 8);
  CHECK(monomial_rank(*scan.span, cert, listed_f4_monomials()) == 18);
  std::mt19937_64 arng(1);
  const auto checks = check_certificate(cert, {X}, kQ, arng, 100);
  CHECK(checks.associative);
  CHECK(checks.relations);
  CHECK(checks.idempotents);
  CHECK(checks.bimodule);
  CHECK_FALSE(checks.commutative);
  const auto slices = idempotent_slices(cert, X.signature(), kQ);
  REQUIRE(slices.size() == 3);
  CHECK(slices[0] == slices[1]);
  CHECK(slices[1] == slices[2]);
  CHECK(slices[0] + slices[1] + slices[2] == 18);
}

TEST_CASE("certified bounds agree across specializations and primes", "[quotient][property]") {
  std::mt19937_64 rng(33);
  const std::uint64_t p1 = random_prime(rng), p2 = random_prime(rng);
  int generic = 0, quadric = 0;
  while (generic < 3) {
    const auto y = generic_chart(rng);
    CHECK(modular_search(y, p1, 8, 2).bound == 18);
    CHECK(modular_search(y, p2, 8, 2).bound == 18);
    ++generic;
  }
  while (quadric < 3) {
    auto y = sample_chart_point(rng, 20, 5);
    y[2] = y[0] * y[1];
    if (classify_p3(chart_point(y)).verdict.tag != Verdict::quadric_k9_mid1) continue;
    CHECK(modular_search(y, p1, 8, 2).bound == 9);
    CHECK(modular_search(y, p2, 8, 2).bound == 9);
    ++quadric;
  }
}

TEST_CASE("bounds grow where an extended coefficient vanishes", "[quotient][property]") {
  std::mt19937_64 rng(55);
  const PrimeField F(random_prime(rng));
  using X4 = std::array<Rational, 4>;
  // each entry of the extended matrix except x11, solved for one chart coordinate
  const std::vector<std::function<void(X4&)>> put{
      [](X4& x) { x[1] = Rational(0); },        [](X4& x) { x[1] = x[0]; },
      [](X4& x) { x[2] = Rational(0); },        [](X4& x) { x[3] = Rational(0); },
      [](X4& x) { x[3] = x[2]; },               [](X4& x) { x[2] = x[0]; },
      [](X4& x) { x[3] = x[1]; },               [](X4& x) { x[3] = x[1] + x[2] - x[0]; }};
  for (std::size_t k = 0; k < put.size(); ++k) {
    X4 x;
    do {
      const auto y = sample_chart_point(rng, 30, 7);
      x = {Rational(1), y[0], y[1], y[2]};
      put[k](x);
    } while ((x[3] - x[1] * x[2]).is_zero());
    CHECK(on_degenerate_hyperplane({x[1], x[2], x[3]}));
    INFO("entry " << k);
    const auto X = make_chart_relation(F, F.from_rational(x[1]), F.from_rational(x[2]), F.from_rational(x[3])).X;
    auto scan = stabilization_scan(F, {X}, 4, 7, 2, false);
    CHECK_FALSE(scan.certificate);
    CHECK(scan.report.strictly_increasing());
  }
}

TEST_CASE("the two diagonal hyperplanes are not degenerate", "[quotient]") {
  std::mt19937_64 rng(56);
  const PrimeField F(random_prime(rng));
  for (int t = 0; t < 2; ++t) {
    auto y = generic_chart(rng);
    y[t == 0 ? 2 : 1] = t == 0 ? Rational(1) : y[0];  // x22 = x11, then x21 = x12
    if ((y[2] - y[0] * y[1]).is_zero() || on_degenerate_hyperplane(y)) continue;
    CHECK(modular_search(y, F.modulus(), 8, 2).bound == 18);
  }
}

TEST_CASE("quadric point (1:2:2:4) gives a commutative 9-dimensional quotient", "[quotient]") {
  const auto X = make_relation(kQ, ProjectivePoint3::parse("1:2:2:4")).X;
  auto scan = stabilization_scan(kQ, {X}, 2, 8, 2);
  REQUIRE(scan.certificate);
  CHECK(scan.certificate->dim() == 9);
  std::mt19937_64 rng(2);
  const auto checks = check_certificate(*scan.certificate, {X}, kQ, rng, 100);
  CHECK(checks.commutative);
  CHECK(checks.associative);
}

TEST_CASE("bounds at (1:0:0:-1) keep growing", "[quotient]") {
  const auto X = make_relation(kQ, ProjectivePoint3::parse("1:0:0:-1")).X;
  auto scan = stabilization_scan(kQ, {X}, 4, 8, 4);
  CHECK_FALSE(scan.certificate);
  CHECK(scan.report.rows.size() == 5);
  CHECK(scan.report.strictly_increasing());
}

TEST_CASE("reduction coefficients", "[quotient]") {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 5; ++t) {
    const auto y = generic_chart(rng);
    const auto X = make_chart_relation(kQ, y[0], y[1], y[2]).X;
    auto scan = stabilization_scan(kQ, {X}, 2, 6, 2);
    REQUIRE(scan.certificate);
    const auto tab = reduction_coefficients(*scan.span);
    REQUIRE(tab.ok);
    CHECK(tab.a(2, 1, 1, 1).coeff == Rational(1));
    CHECK(tab.a(2, 1, 1, 1).tail.is_zero());
    CHECK(tab.b(2, 1, 1, 1).coeff == Rational(1));
    CHECK(tab.b(2, 1, 1, 1).tail.is_zero());
    for (const auto& e : tab.alpha) CHECK(e.verified);
    for (const auto& e : tab.beta) CHECK(e.verified);
    CHECK_FALSE(tab.a(2, 2, 1, 1).coeff * tab.b(1, 1, 1, 1).coeff == Rational(1));
  }
}

TEST_CASE("sigma actions", "[quotient]") {
  const RationalFunctionField F;
  const auto s1 = sigma1(), s2 = sigma2();
  CHECK(apply(s1, F.y(2)) == F.one() / F.y(2));
  CHECK(apply(s2, F.y(3)) == F.y(1) - F.y(3));
  const auto r = sigma_check();
  CHECK(r.sigma1_scales_by_inv_y2);
  CHECK(r.sigma2_negates);
  CHECK(r.sigma1_involution);
  CHECK(r.sigma2_involution);
  CHECK(r.braid);
  CHECK(r.letters_consistent);
  // sigma maps differences of the relation to zero numerators after cross-multiplication
  const auto X = make_chart_relation(F, F.y(1), F.y(2), F.y(3)).X;
  const auto diff = apply(s1, X) - (F.one() / F.y(2)) * X;
  CHECK(diff.is_zero());
}
