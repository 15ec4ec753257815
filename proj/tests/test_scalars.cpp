#include <catch_amalgamated.hpp>

#include <random>

#include "pabel/scalars/extension.hpp"
#include "pabel/scalars/prime_field.hpp"
#include "pabel/scalars/rational.hpp"
#include "pabel/scalars/rational_function.hpp"
#include "pabel/scalars/univariate.hpp"

using namespace pabel;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-50, 50), den(1, 30);
  return {num(rng), den(rng)};
}

template <Field D, class Gen>
void check_field_axioms(const D& dom, Gen gen, int trials) {
  for (int t = 0; t < trials; ++t) {
    auto a = gen(), b = gen(), c = gen();
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + dom.zero() == a);
    REQUIRE(a * dom.one() == a);
    REQUIRE(a - a == dom.zero());
    REQUIRE(a + (-a) == dom.zero());
    if (!is_zero(a)) {
      REQUIRE(a * inv(a) == dom.one());
      REQUIRE((b / a) * a == b);
    }
  }
}

UPoly<RationalField> lin_product(const std::vector<std::int64_t>& roots) {
  RationalField q;
  auto p = UPoly<RationalField>::constant(q, q.one());
  for (auto r : roots) p = p * UPoly<RationalField>::from_rationals(q, {Rational(-r), Rational(1)});
  return p;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical", "[scalars]") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(4, -6).str() == "-2/3");
  CHECK(Rational(0, 5).den() == 1);
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(0).inv(), DomainError);
  CHECK_THROWS_AS(Rational::parse("x/2"), UsageError);
}

TEST_CASE("prime field inverse and guards", "[scalars]") {
  PrimeField f7(7);
  CHECK(inv(f7.from_int(3)) == f7.from_int(5));
  CHECK(f7.from_int(-1) == f7.from_int(6));
  CHECK(f7.from_rational(Rational(1, 2)) == f7.from_int(4));
  CHECK_THROWS_AS(f7.from_rational(Rational(1, 7)), PoleError);
  CHECK_THROWS_AS(PrimeField(15), UsageError);
  CHECK_THROWS_AS(f7.zero().inv(), DomainError);
  PrimeField f11(11);
  CHECK_THROWS_AS(f7.one() + f11.one(), UsageError);
}

TEST_CASE("random primes lie in the documented window", "[scalars]") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 5; ++i) {
    auto p = random_prime(rng);
    CHECK(p >= (std::uint64_t{1} << 40));
    CHECK(p < (std::uint64_t{1} << 62));
    CHECK(is_prime_u64(p));
  }
}

TEST_CASE("extension field inverse of t modulo t^3 - 2", "[scalars]") {
  RationalField q;
  ExtensionField<RationalField> k(UPoly<RationalField>::from_rationals(q, {Rational(-2), 0, 0, 1}));
  auto t = k.generator();
  auto expected = k.make(UPoly<RationalField>::from_rationals(q, {0, 0, Rational(1, 2)}));
  CHECK(inv(t) == expected);
  CHECK(t * t * t == k.from_int(2));
  CHECK(k.norm(t) == Rational(2));
  CHECK(k.trace(t) == Rational(0));

  ExtensionField<RationalField> other(UPoly<RationalField>::from_rationals(q, {Rational(-3), 0, 1}));
  CHECK_THROWS_AS(t + other.generator(), UsageError);
  CHECK_THROWS_AS(k.zero().inv(), DomainError);
}

TEST_CASE("zero divisors in a reducible modulus expose a factor", "[scalars]") {
  RationalField q;
  ExtensionField<RationalField> k(lin_product({1, 2}));
  auto x = k.generator() - k.one();
  try {
    (void)inv(x);
    FAIL("expected a zero divisor");
  } catch (const ZeroDivisorError<RationalField>& e) {
    CHECK(e.factor == lin_product({1}));
  }
}

TEST_CASE("field axioms hold on random elements", "[scalars][property]") {
  std::mt19937_64 rng(11);
  SECTION("rationals") {
    RationalField q;
    check_field_axioms(q, [&] { return random_rational(rng); }, 200);
  }
  SECTION("prime field") {
    PrimeField fp(random_prime(rng));
    std::uniform_int_distribution<std::int64_t> d(-1000000, 1000000);
    check_field_axioms(fp, [&] { return fp.from_int(d(rng)); }, 200);
  }
  SECTION("cubic extension") {
    RationalField q;
    ExtensionField<RationalField> k(UPoly<RationalField>::from_rationals(q, {Rational(-2), 0, 0, 1}));
    auto gen = [&] {
      return k.make(UPoly<RationalField>::from_rationals(q, {random_rational(rng), random_rational(rng), random_rational(rng)}));
    };
    check_field_axioms(k, gen, 60);
  }
  SECTION("rational functions") {
    RationalFunctionField f;
    auto gen = [&] {
      std::uniform_int_distribution<int> v(1, 3), e(0, 2);
      RationalFunction n = f.from_rational(random_rational(rng)), d = f.one();
      for (int i = 0; i < 2; ++i) {
        auto m = f.y(v(rng));
        n = n + f.from_rational(random_rational(rng)) * m * (e(rng) ? m : f.one());
      }
      d = d + f.from_rational(random_rational(rng)) * f.y(v(rng));
      if (is_zero(d)) d = f.one();
      return n / d;
    };
    check_field_axioms(f, gen, 25);
  }
}

TEST_CASE("specialization at (2,3,5)", "[scalars]") {
  RationalFunctionField f;
  RationalField q;
  const std::array<Rational, 3> pt{Rational(2), Rational(3), Rational(5)};
  auto y1 = f.y(1), y2 = f.y(2), y3 = f.y(3);
  CHECK(specialize(y3 - y1 * y2, q, pt) == Rational(-1));
  CHECK(specialize(f.one() / y2, q, pt) == Rational(1, 3));
  CHECK(specialize(y1 * y2 + y3, q, pt) == Rational(11));
  CHECK_THROWS_AS(specialize(f.one() / (y3 - y1 * y2 + f.one()), q, pt), PoleError);

  PrimeField f7(7);
  const std::array<Fp, 3> pp{f7.from_int(2), f7.from_int(3), f7.from_int(5)};
  CHECK(specialize(f.one() / y2, f7, pp) == f7.from_int(5));
}

TEST_CASE("specialization is a ring homomorphism", "[scalars][property]") {
  std::mt19937_64 rng(17);
  RationalFunctionField f;
  RationalField q;
  auto y1 = f.y(1), y2 = f.y(2), y3 = f.y(3);
  const RationalFunction a = (y1 * y2 - y3) / (y2 + f.one());
  const RationalFunction b = y3 * y3 / (y1 - f.from_int(7));
  const RationalFunction c = f.one() / y2 + y1;
  int checked = 0;
  for (int t = 0; t < 50; ++t) {
    const std::array<Rational, 3> pt{random_rational(rng), random_rational(rng), random_rational(rng)};
    Rational lhs1, rhs1, lhs2, rhs2;
    try {
      lhs1 = specialize(a * b + c, q, pt);
      rhs1 = specialize(a, q, pt) * specialize(b, q, pt) + specialize(c, q, pt);
      lhs2 = specialize(a / c - b, q, pt);
      rhs2 = specialize(a, q, pt) / specialize(c, q, pt) - specialize(b, q, pt);
    } catch (const PoleError&) {
      continue;
    }
    CHECK(lhs1 == rhs1);
    CHECK(lhs2 == rhs2);
    ++checked;
  }
  CHECK(checked > 40);
}

TEST_CASE("resultants under the f-rows-first convention", "[scalars]") {
  RationalField q;
  using P = UPoly<RationalField>;
  CHECK(resultant(P::from_rationals(q, {-1, 0, 1}), P::from_rationals(q, {-1, 1})) == Rational(0));
  CHECK(resultant(P::from_rationals(q, {1, 0, 1}), P::from_rationals(q, {-1, 0, 1})) == Rational(4));
  for (std::int64_t a : {-3, 0, 4}) {
    for (std::int64_t b : {-2, 1, 9}) {
      CHECK(resultant(P::from_rationals(q, {Rational(-a), 1}), P::from_rationals(q, {Rational(-b), 1})) == Rational(a - b));
    }
  }
  CHECK(resultant(P::constant(q, Rational(3)), P::from_rationals(q, {1, 0, 1})) == Rational(9));
  CHECK_THROWS_AS(resultant(P(q), P(q)), DomainError);
}

TEST_CASE("univariate gcd", "[scalars]") {
  RationalField q;
  using P = UPoly<RationalField>;
  CHECK(gcd(P::from_rationals(q, {-1, 0, 1}), P::from_rationals(q, {-1, 1})) == P::from_rationals(q, {-1, 1}));
  CHECK(gcd(P::from_rationals(q, {1, 0, 1}), P::from_rationals(q, {2, 1})).degree() == 0);
  CHECK(gcd(lin_product({1, 2, 3, 4}), lin_product({1, 2, 3, 5})) == lin_product({1, 2, 3}));
  CHECK(gcd(P(q), P(q)).is_zero());
  CHECK(squarefree_part(lin_product({1, 1, 2})) == lin_product({1, 2}));
}

TEST_CASE("resultant vanishes exactly when a common factor exists", "[scalars][property]") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> root(-6, 6);
  std::uniform_int_distribution<int> len(1, 4);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::int64_t> ra, rb;
    for (int i = len(rng); i > 0; --i) ra.push_back(root(rng));
    for (int i = len(rng); i > 0; --i) rb.push_back(root(rng));
    auto a = lin_product(ra), b = lin_product(rb);
    const bool common = gcd(a, b).degree() > 0;
    CHECK(is_zero(resultant(a, b)) == common);
  }
}
