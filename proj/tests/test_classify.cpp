#include <catch_amalgamated.hpp>

#include <random>

#include "pabel/classify/subspace.hpp"
#include "pabel/classify/verdict.hpp"
#include "pabel/quotient/closure.hpp"
#include "pabel/quotient/relation.hpp"
#include "pabel/scalars/rational_function.hpp"

using namespace pabel;

namespace {

const RationalField kQ;
using Vec = std::vector<Rational>;

Rational rnd(std::mt19937_64& rng, int h = 6) {
  std::uniform_int_distribution<std::int64_t> d(-h, h);
  return Rational(d(rng));
}

// All set partitions of {1..n}, as block-label vectors.
void set_partitions(int n, std::vector<int>& cur, int blocks, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    cur.push_back(b);
    set_partitions(n, cur, std::max(blocks, b + 1), out);
    cur.pop_back();
  }
}

AlgebraElement<RationalField> random_element(const AlgebraSignature& sig, std::mt19937_64& rng, std::size_t len, int terms) {
  const auto words = words_up_to(sig, len);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  AlgebraElement<RationalField> e(sig, kQ);
  for (int i = 0; i < terms; ++i) e.add_term(words[pick(rng)], rnd(rng, 9));
  return e;
}

}  // namespace

TEST_CASE("genericity of restricted projections", "[classify]") {
  const Rational one(1), zero(0);
  SubspacePresentation<RationalField> v1({3, 3}, kQ, {{one, zero, -one, zero}, {zero, one, zero, -one}});
  auto g1 = genericity_check(v1);
  CHECK(g1.pi_a_surjective);
  CHECK(g1.pi_b_surjective);
  CHECK(g1.mid_bound == 3);

  SubspacePresentation<RationalField> abar({3, 3}, kQ, {{one, zero, zero, zero}, {zero, one, zero, zero}});
  CHECK_FALSE(genericity_check(abar).pi_b_surjective);
  CHECK(genericity_check(abar).pi_a_surjective);

  SubspacePresentation<RationalField> v3({4, 2}, kQ, {{one, one, zero, one}});
  auto g3 = genericity_check(v3);
  CHECK(g3.rank_a == 1);
  CHECK_FALSE(g3.pi_a_surjective);
  CHECK(g3.pi_b_surjective);
  CHECK_FALSE(g3.mid_bound);

  CHECK_THROWS_AS(SubspacePresentation<RationalField>({3, 3}, kQ, {{one, zero, zero, zero}, {one, zero, zero, zero}}),
                  UsageError);
}

TEST_CASE("grassmann chart", "[classify]") {
  const auto c0 = grassmann_chart(kQ, Rational(0), Rational(0), Rational(0));
  const Rational one(1), zero(0);
  CHECK(c0.V.basis == std::vector<Vec>{{one, zero, zero, zero}, {zero, one, one, zero}});
  CHECK(ProjectivePoint3(c0.point) == ProjectivePoint3::parse("1:0:0:0"));

  const auto c1 = grassmann_chart(kQ, Rational(1), Rational(1), Rational(2));
  const ProjectivePoint3 x1(c1.point);
  CHECK(x1 == ProjectivePoint3::parse("1:1:1:2"));
  CHECK_FALSE(x1.on_quadric());

  const RationalFunctionField F;
  const auto cs = grassmann_chart(F, F.y(1), F.y(2), F.y(3));
  CHECK(commutator(cs.V.generator(0), cs.V.generator(1)) == make_chart_relation(F, F.y(1), F.y(2), F.y(3)).X);
}

TEST_CASE("chart points lie on the quadric exactly when d vanishes", "[classify][property]") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    Rational y1 = rnd(rng, 3), y2 = rnd(rng, 3), y3 = rnd(rng, 9);
    if (t % 3 == 0) y3 = y1 * y2;
    CHECK(ProjectivePoint3::chart(y1, y2, y3).on_quadric() == (y3 - y1 * y2).is_zero());
  }
}

TEST_CASE("left-module rewriting", "[classify]") {
  const auto c = grassmann_chart(kQ, Rational(2), Rational(3), Rational(5));
  const auto& V = c.V;
  const auto one = AlgebraElement<RationalField>::one(V.sig, kQ);
  auto d1 = rewrite_left_module(one, V);
  CHECK(d1.summands() == 1);
  CHECK(d1.r[0].size() == 1);
  CHECK(d1.r[0].begin()->first.empty());
  CHECK(d1.r[0].begin()->second == Rational(1));

  // b_i v_j with b_i the B-part of v_i
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      Vec bi = V.basis[i];
      bi[0] = bi[1] = Rational(0);
      const auto x = V.element(bi) * V.generator(j);
      const auto dec = rewrite_left_module(x, V);
      CHECK(expand(dec, V) == x);
      CHECK(dec.summands() <= 3);
    }
  }
  SubspacePresentation<RationalField> abar({3, 3}, kQ, {{Rational(1), 0, 0, 0}, {0, Rational(1), 0, 0}});
  CHECK_THROWS_AS(rewrite_left_module(one, abar), UsageError);
}

TEST_CASE("rewriting round-trips on random elements", "[classify][property]") {
  std::mt19937_64 rng(19);
  int done = 0;
  while (done < 200) {
    std::vector<Vec> basis{{Rational(1), 0, rnd(rng), rnd(rng)}, {0, Rational(1), rnd(rng), rnd(rng)}};
    if (done % 2) {
      // mix the basis so that the A-projection is not the identity
      const Rational a = rnd(rng);
      for (std::size_t k = 0; k < 4; ++k) basis[0][k] = basis[0][k] + a * basis[1][k];
    }
    try {
      SubspacePresentation<RationalField> V({3, 3}, kQ, basis);
      if (!genericity_check(V).pi_b_surjective) continue;
      const auto x = random_element(V.sig, rng, 4, 5);
      const auto dec = rewrite_left_module(x, V);
      REQUIRE(expand(dec, V) == x);
      CHECK(dec.summands() <= 3);
      ++done;
    } catch (const UsageError&) {
    }
  }
  CHECK(done == 200);
}

TEST_CASE("classify_p3 special points", "[classify]") {
  CHECK(classify_p3(ProjectivePoint3::parse("1:0:0:0")).verdict.tag == Verdict::quadric_point_mid_inf);
  const auto q = classify_p3(ProjectivePoint3::parse("1:2:2:4"));
  CHECK(q.verdict.tag == Verdict::quadric_k9_mid1);
  CHECK(q.lines.empty());
  CHECK(classify_p3(ProjectivePoint3::parse("1:0:0:-1")).verdict.tag == Verdict::known_infinite_dim);
  CHECK(classify_p3(ProjectivePoint3::parse("1:1:1:2")).verdict.tag == Verdict::needs_engine);
  CHECK(classify_p3(ProjectivePoint3::parse("2:2:3:3")).verdict.tag == Verdict::quadric_line_mid_inf);
  for (const char* pt : {"0:0:0:1", "0:0:1:0", "0:1:0:0", "1:1:1:1"}) {
    CHECK(classify_p3(ProjectivePoint3::parse(pt)).verdict.tag == Verdict::quadric_point_mid_inf);
  }
  // every verdict carries a rule and a citation
  for (const char* pt : {"1:0:0:0", "1:2:2:4", "1:0:0:-1", "1:1:1:2", "2:2:3:3"}) {
    const auto v = classify_p3(ProjectivePoint3::parse(pt)).verdict;
    CHECK_FALSE(v.rule.empty());
    CHECK_FALSE(v.citation.empty());
  }
}

TEST_CASE("the nine points are the pairwise line intersections", "[classify]") {
  int points = 0;
  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t b = -2; b <= 2; ++b)
      for (std::int64_t c = -2; c <= 2; ++c)
        for (std::int64_t d = -2; d <= 2; ++d) {
          if (a == 0 && b == 0 && c == 0 && d == 0) continue;
          const ProjectivePoint3 x({Rational(a), Rational(b), Rational(c), Rational(d)});
          const auto r = classify_p3(x);
          if (r.point) {
            CHECK(r.on_quadric);
            CHECK(r.lines.size() == 2);
            ++points;
          }
        }
  CHECK(points > 0);
}

TEST_CASE("classify_p3 is scale invariant", "[classify][property]") {
  std::mt19937_64 rng(8);
  std::vector<ProjectivePoint3> pts;
  for (const char* s : {"1:0:0:0", "1:2:2:4", "1:0:0:-1", "1:1:1:2", "2:2:3:3", "0:1:0:0", "1:1:0:0"}) {
    pts.push_back(ProjectivePoint3::parse(s));
  }
  for (int t = 0; t < 50; ++t) {
    std::array<Rational, 4> x{rnd(rng, 3), rnd(rng, 3), rnd(rng, 3), rnd(rng, 3)};
    if (t % 2) x[3] = x[0].is_zero() ? x[3] : x[1] * x[2] / x[0];
    if (std::all_of(x.begin(), x.end(), [](const Rational& r) { return r.is_zero(); })) continue;
    pts.emplace_back(x);
  }
  for (const auto& p : pts) {
    const auto base = classify_p3(p).verdict.tag;
    for (int k = 0; k < 5; ++k) {
      Rational lambda = rnd(rng, 20);
      if (lambda.is_zero()) lambda = Rational(-7, 3);
      std::array<Rational, 4> y = p.coords();
      for (auto& c : y) c = c * lambda;
      CHECK(classify_p3(ProjectivePoint3(y)).verdict.tag == base);
    }
  }
}

TEST_CASE("classify_l2 over all set partitions for l <= 5", "[classify]") {
  std::mt19937_64 rng(12);
  int counts[4] = {0, 0, 0, 0};
  for (int l = 2; l <= 5; ++l) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    set_partitions(l, cur, 0, parts);
    for (const auto& labels : parts) {
      // V1 = span of the block indicators P_j for blocks avoiding l
      const int lblock = labels[static_cast<std::size_t>(l - 1)];
      const int nblocks = *std::max_element(labels.begin(), labels.end()) + 1;
      std::vector<Vec> v1;
      for (int b = 0; b < nblocks; ++b) {
        if (b == lblock) continue;
        Vec v(static_cast<std::size_t>(l), Rational(0));
        for (int i = 0; i < l - 1; ++i) {
          if (labels[static_cast<std::size_t>(i)] == b) v[static_cast<std::size_t>(i)] = Rational(1);
        }
        v1.push_back(v);
      }
      std::size_t max_block = 0;
      for (int b = 0; b < nblocks; ++b) {
        max_block = std::max<std::size_t>(max_block, static_cast<std::size_t>(std::count(labels.begin(), labels.end(), b)));
      }
      for (bool with_q : {false, true}) {
        std::vector<Vec> basis = v1;
        // scramble V1 by a unitriangular change of basis
        for (std::size_t i = 1; i < basis.size(); ++i) {
          const Rational c = rnd(rng, 3);
          for (std::size_t k = 0; k < basis[i].size(); ++k) basis[i][k] = basis[i][k] + c * basis[i - 1][k];
        }
        if (with_q) {
          Vec w(static_cast<std::size_t>(l), Rational(0));
          for (int i = 0; i < l - 1; ++i) w[static_cast<std::size_t>(i)] = rnd(rng, 4);
          w[static_cast<std::size_t>(l - 1)] = Rational(1);
          basis.push_back(w);
        }
        const SubspacePresentation<RationalField> V({l, 2}, kQ, basis);
        Verdict expected;
        if (!with_q) expected = Verdict::equals_R;
        else if (max_block <= 1) expected = Verdict::tensor_mid_1;
        else if (max_block == 2) expected = Verdict::mid_2;
        else expected = Verdict::mid_infinity;
        const auto got = classify_l2(V);
        CHECK(got.verdict.tag == expected);
        CHECK(got.partition.max_block() == max_block);
        CHECK(got.dim_v1 == v1.size());
        CHECK_FALSE(got.verdict.citation.empty());
        ++counts[static_cast<int>(expected)];
      }
    }
  }
  for (int c : counts) CHECK(c > 0);
  CHECK_THROWS_AS(classify_l2(SubspacePresentation<RationalField>({3, 3}, kQ, {})), UsageError);
}

TEST_CASE("tensor case gives a commutative quotient of dimension 2l", "[classify]") {
  for (int l = 2; l <= 4; ++l) {
    std::vector<Vec> basis;
    for (int i = 0; i < l - 1; ++i) {
      Vec v(static_cast<std::size_t>(l), Rational(0));
      v[static_cast<std::size_t>(i)] = Rational(1);
      basis.push_back(v);
    }
    Vec w(static_cast<std::size_t>(l), Rational(0));
    w[0] = Rational(2);
    w[static_cast<std::size_t>(l - 1)] = Rational(1);
    basis.push_back(w);
    const SubspacePresentation<RationalField> V({l, 2}, kQ, basis);
    REQUIRE(classify_l2(V).verdict.tag == Verdict::tensor_mid_1);
    std::vector<AlgebraElement<RationalField>> gens;
    for (std::size_t i = 0; i < V.dim(); ++i)
      for (std::size_t j = i + 1; j < V.dim(); ++j) {
        auto c = commutator(V.generator(i), V.generator(j));
        if (!c.is_zero()) gens.push_back(c);
      }
    auto scan = stabilization_scan(kQ, gens, 2, 6, 2);
    REQUIRE(scan.certificate);
    CHECK(scan.certificate->dim() == static_cast<std::size_t>(2 * l));
    std::mt19937_64 rng(4);
    CHECK(check_certificate(*scan.certificate, gens, kQ, rng, 50).commutative);
  }
}

TEST_CASE("inside Abar all commutators of V vanish", "[classify]") {
  for (int l = 2; l <= 5; ++l) {
    std::vector<Vec> basis;
    for (int i = 0; i < l - 1; ++i) {
      Vec v(static_cast<std::size_t>(l), Rational(0));
      v[static_cast<std::size_t>(i)] = Rational(i + 1);
      basis.push_back(v);
    }
    const SubspacePresentation<RationalField> V({l, 2}, kQ, basis);
    REQUIRE(classify_l2(V).verdict.tag == Verdict::equals_R);
    for (std::size_t i = 0; i < V.dim(); ++i)
      for (std::size_t j = 0; j < V.dim(); ++j) CHECK(commutator(V.generator(i), V.generator(j)).is_zero());
  }
}
