#include <catch_amalgamated.hpp>

#include <random>

#include "pabel/algebra/element.hpp"
#include "pabel/scalars/prime_field.hpp"
#include "pabel/scalars/rational.hpp"

using namespace pabel;
using E = AlgebraElement<RationalField>;

namespace {

const RationalField kQ;

E el(const AlgebraSignature& sig, std::string_view text) { return E::parse(sig, kQ, text); }

// Independent count of alternating words: a length-k word is fixed by its
// starting tag and a free choice of index at each position.
std::size_t count_alternating(std::size_t na, std::size_t nb, std::size_t n) {
  std::size_t total = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t from_p = 1, from_q = 1;
    for (std::size_t i = 0; i < k; ++i) {
      from_p *= (i % 2 == 0) ? na : nb;
      from_q *= (i % 2 == 0) ? nb : na;
    }
    total += from_p + from_q;
  }
  return total;
}

E random_element(const AlgebraSignature& sig, std::mt19937_64& rng, std::size_t max_len, int terms) {
  const auto words = words_up_to(sig, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<std::int64_t> c(-9, 9);
  E e(sig, kQ);
  for (int i = 0; i < terms; ++i) e.add_term(words[pick(rng)], Rational(c(rng), 1 + pick(rng) % 4));
  return e;
}

}  // namespace

TEST_CASE("idempotents in reduced and eliminated ranges", "[algebra]") {
  const AlgebraSignature s33(3, 3), s32(3, 2);
  CHECK(idempotent(s33, kQ, Tag::P, 1) == el(s33, "1*p1"));
  CHECK(idempotent(s33, kQ, Tag::P, 3) == el(s33, "1*1 + (-1)*p1 + (-1)*p2"));
  CHECK(idempotent(s32, kQ, Tag::Q, 2) == el(s32, "1*1 + (-1)*q1"));
  CHECK_THROWS_AS(idempotent(s33, kQ, Tag::P, 4), UsageError);
  CHECK_THROWS_AS(idempotent(s33, kQ, Tag::Q, 0), UsageError);
}

TEST_CASE("word multiplication merges and annihilates at the boundary", "[algebra]") {
  const AlgebraSignature s(3, 3);
  CHECK(el(s, "1*p1.q1") * el(s, "1*p2") == el(s, "1*p1.q1.p2"));
  CHECK(el(s, "1*q1.p1") * el(s, "1*p1.q2") == el(s, "1*q1.p1.q2"));
  CHECK((el(s, "1*q1.p1") * el(s, "1*p2.q2")).is_zero());
  CHECK_THROWS_AS(el(s, "1*p1") * E::one(AlgebraSignature(2, 2), kQ), UsageError);
}

TEST_CASE("commutator examples", "[algebra]") {
  const AlgebraSignature s(3, 3);
  CHECK(commutator(el(s, "1*p1"), el(s, "1*p2")).is_zero());
  CHECK(commutator(el(s, "1*p1"), el(s, "1*q1")) == el(s, "1*p1.q1 + (-1)*q1.p1"));
  CHECK(commutator(E::one(s, kQ), el(s, "1*q1")).is_zero());
}

TEST_CASE("filtration dimensions", "[algebra]") {
  CHECK(filtration_dim(AlgebraSignature(3, 3), 2) == 13);
  CHECK(filtration_dim(AlgebraSignature(3, 3), 0) == 1);
  CHECK(filtration_dim(AlgebraSignature(3, 2), 2) == 8);
  for (std::size_t k = 0; k <= 10; ++k) {
    CHECK(filtration_dim(AlgebraSignature(3, 3), k) == (std::size_t{1} << (k + 2)) - 3);
  }
  for (int a = 2; a <= 5; ++a) {
    for (int b = 2; b <= 4; ++b) {
      for (std::size_t n = 0; n <= 5; ++n) {
        CHECK(filtration_dim(AlgebraSignature(a, b), n) == count_alternating(a - 1, b - 1, n));
      }
    }
  }
}

TEST_CASE("orthogonal idempotent laws over the full index range", "[algebra][property]") {
  for (auto sig : {AlgebraSignature(3, 3), AlgebraSignature(4, 2), AlgebraSignature(2, 5)}) {
    for (Tag tag : {Tag::P, Tag::Q}) {
      const int n = tag == Tag::P ? sig.a : sig.b;
      E sum(sig, kQ);
      for (int i = 1; i <= n; ++i) {
        const E ei = idempotent(sig, kQ, tag, i);
        sum = sum + ei;
        for (int j = 1; j <= n; ++j) {
          const E prod = ei * idempotent(sig, kQ, tag, j);
          if (i == j) {
            CHECK(prod == ei);
          } else {
            CHECK(prod.is_zero());
          }
        }
      }
      CHECK(sum == E::one(sig, kQ));
    }
  }
}

TEST_CASE("multiplication is associative and degree-subadditive", "[algebra][property]") {
  std::mt19937_64 rng(3);
  for (auto sig : {AlgebraSignature(3, 3), AlgebraSignature(4, 3)}) {
    for (int t = 0; t < 60; ++t) {
      const E a = random_element(sig, rng, 3, 4), b = random_element(sig, rng, 3, 4), c = random_element(sig, rng, 2, 3);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      const E ab = a * b;
      if (!ab.is_zero() && !a.is_zero() && !b.is_zero()) CHECK(ab.degree() <= a.degree() + b.degree());
    }
  }
}

TEST_CASE("degree is additive on concatenating words", "[algebra][property]") {
  const AlgebraSignature s(3, 3);
  for (const auto& u : words_up_to(s, 3)) {
    for (const auto& v : words_up_to(s, 2)) {
      if (u.empty() || v.empty() || u.back().tag == v.front().tag) continue;
      const E prod = E::from_word(s, kQ, u) * E::from_word(s, kQ, v);
      CHECK(prod.degree() == static_cast<int>(u.length() + v.length()));
    }
  }
}

TEST_CASE("text and JSON forms round-trip exactly", "[algebra][property]") {
  std::mt19937_64 rng(7);
  const AlgebraSignature s(3, 3);
  CHECK(el(s, "3/2*p1.q2.p1 + (-1)*q1").str() == "3/2*p1.q2.p1 + (-1)*q1");
  for (int t = 0; t < 50; ++t) {
    const E a = random_element(s, rng, 4, 6);
    CHECK(E::parse(s, kQ, a.str()) == a);
    CHECK(E::from_json(kQ, a.to_json()) == a);
  }
  CHECK_THROWS_AS(el(s, "1*p1.p2"), UsageError);
  CHECK_THROWS_AS(el(s, "1*p3"), UsageError);
}

TEST_CASE("the element z of k^2 * k^2 is central", "[algebra]") {
  const auto r = central_element_check(kQ);
  CHECK(r.z_p.is_zero());
  CHECK(r.z_q.is_zero());
  CHECK(r.z2_p.is_zero());
  CHECK(r.central());
  CHECK_FALSE(r.z.is_zero());
  const AlgebraSignature s(2, 2);
  const E pp = p(s, kQ, 1), qq = q(s, kQ, 1);
  CHECK(r.z == -pp - qq + pp * qq + qq * pp);
  const auto rp = central_element_check(PrimeField(1000003));
  CHECK(rp.central());
}
