// One line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pabel/classify/subspace.hpp"
#include "pabel/classify/verdict.hpp"
#include "pabel/pipeline/theorem.hpp"
#include "pabel/quotient/listed_generators.hpp"
#include "pabel/quotient/reduction.hpp"
#include "pabel/quotient/sigma.hpp"

using namespace pabel;

namespace {

using Clock = std::chrono::steady_clock;
const RationalField kQ;
using Vec = std::vector<Rational>;
using K3 = ExtensionField<RationalField>;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "failed: ";
      else note << "; ";
      note << what;
      pass = false;
    }
  }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  if (!o.pass) ++failures;
  std::cout << "criterion " << id << " " << (o.pass ? "PASS" : "FAIL") << ": " << title << " (" << seconds_since(t0)
            << " s)";
  const std::string n = o.note.str();
  if (!n.empty()) std::cout << " | " << n;
  std::cout << std::endl;
}

std::array<Rational, 3> generic_chart(std::mt19937_64& rng, std::int64_t h = 9999, std::int64_t dh = 999) {
  for (;;) {
    auto y = sample_chart_point(rng, h, dh);
    if (!(y[2] - y[0] * y[1]).is_zero() && !on_degenerate_hyperplane(y)) return y;
  }
}

Rational rnd(std::mt19937_64& rng, int h) {
  std::uniform_int_distribution<std::int64_t> d(-h, h);
  return Rational(d(rng));
}

AlgebraElement<RationalField> random_element(const AlgebraSignature& sig, std::mt19937_64& rng, std::size_t len, int terms) {
  const auto words = words_up_to(sig, len);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  AlgebraElement<RationalField> e(sig, kQ);
  for (int i = 0; i < terms; ++i) e.add_term(words[pick(rng)], rnd(rng, 9));
  return e;
}

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

template <Field D, class Gen>
bool field_axioms(const D& dom, Gen gen, int trials) {
  bool ok = true;
  for (int t = 0; t < trials; ++t) {
    const auto a = gen(), b = gen(), c = gen();
    ok = ok && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * b == b * a &&
         a * (b + c) == a * b + a * c && a + dom.zero() == a && a * dom.one() == a;
    if (!is_zero(a)) ok = ok && a * inv(a) == dom.one();
  }
  return ok;
}

}  // namespace

int main() {
  std::mt19937_64 rng(20240611);

  report(1, "filtration_dim(3,3,k) = 2^(k+2) - 3 for k = 0..10, under 1 s", [&](Outcome& o) {
    const auto t0 = Clock::now();
    for (std::size_t k = 0; k <= 10; ++k) {
      const auto d = filtration_dim(AlgebraSignature(3, 3), k);
      o.require(d == (std::size_t{1} << (k + 2)) - 3, "k = " + std::to_string(k) + " gives " + std::to_string(d));
    }
    o.require(seconds_since(t0) < 1.0, "runtime over 1 s");
  });

  report(2, "53 generators have rank 42 and bound 19 over Q and two primes, under 10 s", [&](Outcome& o) {
    const auto t0 = Clock::now();
    const auto y = generic_chart(rng);
    auto verify = [&](const GeneratorRankReport& r, const std::string& where) {
      o.require(r.generators == 53, where + ": " + std::to_string(r.generators) + " generators");
      o.require(r.rank == 42, where + ": rank " + std::to_string(r.rank));
      o.require(r.dim_f4 == 61 && r.bound == 19, where + ": bound " + std::to_string(r.bound));
    };
    verify(listed_generator_rank(make_chart_relation(kQ, y[0], y[1], y[2]).X), "Q");
    std::uint64_t p1 = random_prime(rng), p2 = random_prime(rng);
    while (p2 == p1) p2 = random_prime(rng);
    for (auto p : {p1, p2}) {
      const PrimeField F(p);
      verify(listed_generator_rank(make_chart_relation(F, F.from_rational(y[0]), F.from_rational(y[1]), F.from_rational(y[2])).X),
             F.name());
    }
    o.require(seconds_since(t0) < 10.0, "runtime over 10 s");
  });

  report(3, "20 random points: upper 18 with n <= 8, lower 18, type k^9 + M3, under 2 min", [&](Outcome& o) {
    const auto t0 = Clock::now();
    int good = 0;
    for (int i = 0; i < 20; ++i) {
      const auto y = generic_chart(rng);
      const auto t = theorem_at(y, TheoremParams{});
      const bool ok = t.reproduced() && t.upper() == 18 && t.lower() == 18 && t.certificate->n <= 8;
      if (ok) ++good;
      else o.require(false, "(" + y[0].str() + "," + y[1].str() + "," + y[2].str() + "): " + t.verdict());
    }
    o.note << good << "/20 reproduced";
    o.require(seconds_since(t0) < 120.0, "runtime over 2 min");
  });

  report(4, "quadric points: certified dimension 9, commutative", [&](Outcome& o) {
    std::vector<ProjectivePoint3> pts{ProjectivePoint3::parse("1:2:2:4")};
    while (pts.size() < 3) {
      auto y = sample_chart_point(rng, 30, 7);
      y[2] = y[0] * y[1];
      const auto x = chart_point(y);
      if (classify_p3(x).verdict.tag == Verdict::quadric_k9_mid1) pts.push_back(x);
    }
    for (const auto& x : pts) {
      const auto X = make_relation(kQ, x).X;
      auto scan = stabilization_scan(kQ, {X}, 2, 8, 2);
      if (!scan.certificate) {
        o.require(false, x.str() + ": no certificate");
        continue;
      }
      std::mt19937_64 crng(1);
      const auto checks = check_certificate(*scan.certificate, {X}, kQ, crng);
      o.require(scan.certificate->dim() == 9, x.str() + ": dim " + std::to_string(scan.certificate->dim()));
      o.require(checks.commutative && checks.associative, x.str() + ": not a commutative algebra");
      o.require(character_rank(*scan.certificate, kQ) == 9, x.str() + ": character rank below 9");
    }
  });

  report(5, "(1:0:0:-1): bounds strictly increase for n = 4..8, no certificate (evidence, not proof)", [&](Outcome& o) {
    const auto X = make_relation(kQ, known_infinite_point()).X;
    auto scan = stabilization_scan(kQ, {X}, 4, 8, 4, false);
    std::string seq;
    for (const auto& r : scan.report.rows) seq += (seq.empty() ? "" : ",") + std::to_string(r.bound);
    o.note << "bounds " << seq << " ";
    o.require(scan.report.rows.size() == 5, "expected rows for n = 4..8");
    o.require(scan.report.strictly_increasing(), "bounds not strictly increasing");
    o.require(!scan.certificate, "closure certificate found");
  });

  report(6, "sigma identities, exact and symbolic", [&](Outcome& o) {
    const auto s = sigma_check();
    o.require(s.sigma1_scales_by_inv_y2, "sigma1(X) != X / y2");
    o.require(s.sigma2_negates, "sigma2(X) != -X");
    o.require(s.sigma1_involution && s.sigma2_involution, "not involutions");
    o.require(s.braid, "(sigma1 sigma2)^3 != id");
  });

  report(7, "alpha(2,2,1,1) * beta(1,1,1,1) != 1 at 5 random points", [&](Outcome& o) {
    for (int i = 0; i < 5; ++i) {
      const auto y = generic_chart(rng);
      auto scan = stabilization_scan(kQ, {make_chart_relation(kQ, y[0], y[1], y[2]).X}, 2, 6, 2);
      if (!scan.span) {
        o.require(false, "no span");
        continue;
      }
      const auto tab = reduction_coefficients(*scan.span);
      if (!tab.ok) {
        o.require(false, "reduction failed: " + tab.failure);
        continue;
      }
      bool verified = true;
      for (const auto& e : tab.alpha) verified = verified && e.verified;
      for (const auto& e : tab.beta) verified = verified && e.verified;
      o.require(verified, "reduction identity not in the ideal");
      o.require(!(tab.a(2, 2, 1, 1).coeff * tab.b(1, 1, 1, 1).coeff == Rational(1)), "product equals 1");
    }
  });

  report(8, "conic pipeline at 5 random points", [&](Outcome& o) {
    for (int i = 0; i < 5; ++i) {
      const auto y = generic_chart(rng);
      const auto cs = conics(kQ, y[0], y[1], y[2]);
      const auto spec = intersect_conics(cs);
      o.require(spec.f.degree() == 3, "deg f = " + std::to_string(spec.f.degree()));
      o.require(spec.points() == 3 && spec.verified(), "three exact common zeros");
      const auto split = split_into_lines(determinantal_cubic(cs.M, kQ));
      const bool numeric_ok = split.numeric && split.numeric->residual < 1e-9;
      o.require(split.splits && !split.concurrent && (split.norm_identity || numeric_ok), "cubic does not split into three lines");
      const auto& comp = spec.components.front();
      const K3 K(comp.modulus, "t");
      const std::function<value_t<K3>(const Rational&)> embed = [K](const Rational& v) -> value_t<K3> { return K.embed(v); };
      const auto r = build_rho(K, rho_polynomial(tq_rewrite(kQ, y[0], y[1], y[2])), y, embed, K.generator(), K.make(comp.z2));
      o.require(check_rho(r).relations(), "rho relations");
      const auto XK = make_chart_relation(kQ, y[0], y[1], y[2]).X.map_coefficients(K, embed);
      o.require(rho_of(r, XK, K).is_zero(), "rho(X) != 0");
      o.require(generated_algebra(r.generators(), K).dim == 9, "generated algebra dimension");
    }
  });

  report(9, "property suites: fields, associativity, idempotents, rewrite, scale invariance, central z", [&](Outcome& o) {
    std::mt19937_64 prng(9);
    std::uniform_int_distribution<std::int64_t> num(-60, 60), den(1, 40);
    o.require(field_axioms(kQ, [&] { return Rational(num(prng), den(prng)); }, 200), "field axioms over Q");
    const PrimeField F(random_prime(prng));
    o.require(field_axioms(F, [&] { return F.from_int(num(prng) * 1000003); }, 200), "field axioms over F_p");
    const K3 K(UPoly<RationalField>::from_rationals(kQ, {Rational(-2), 0, 0, 1}));
    o.require(field_axioms(K, [&] {
      return K.make(UPoly<RationalField>::from_rationals(kQ, {Rational(num(prng), den(prng)), Rational(num(prng)), Rational(num(prng), den(prng))}));
    }, 50), "field axioms over Q(2^(1/3))");

    const AlgebraSignature s(3, 3);
    bool assoc = true;
    for (int t = 0; t < 60; ++t) {
      const auto a = random_element(s, prng, 3, 4), b = random_element(s, prng, 3, 4), c = random_element(s, prng, 2, 3);
      assoc = assoc && (a * b) * c == a * (b * c);
    }
    o.require(assoc, "associativity");

    bool idem = true;
    for (Tag tag : {Tag::P, Tag::Q}) {
      auto sum = AlgebraElement<RationalField>(s, kQ);
      for (int i = 1; i <= 3; ++i) {
        const auto ei = idempotent(s, kQ, tag, i);
        sum = sum + ei;
        for (int j = 1; j <= 3; ++j) {
          const auto pr = ei * idempotent(s, kQ, tag, j);
          idem = idem && (i == j ? pr == ei : pr.is_zero());
        }
      }
      idem = idem && sum == AlgebraElement<RationalField>::one(s, kQ);
    }
    o.require(idem, "idempotent laws");

    int rounds = 0;
    bool round_trip = true;
    while (rounds < 100) {
      std::vector<Vec> basis{{Rational(1), 0, rnd(prng, 6), rnd(prng, 6)}, {0, Rational(1), rnd(prng, 6), rnd(prng, 6)}};
      try {
        const SubspacePresentation<RationalField> V(s, kQ, basis);
        if (!genericity_check(V).pi_b_surjective) continue;
        const auto x = random_element(s, prng, 4, 5);
        round_trip = round_trip && expand(rewrite_left_module(x, V), V) == x;
        ++rounds;
      } catch (const UsageError&) {
      }
    }
    o.require(round_trip, "rewrite round-trip");

    bool scale = true;
    for (int t = 0; t < 60; ++t) {
      std::array<Rational, 4> x{rnd(prng, 3), rnd(prng, 3), rnd(prng, 3), rnd(prng, 3)};
      if (t % 2 && !x[0].is_zero()) x[3] = x[1] * x[2] / x[0];
      if (std::all_of(x.begin(), x.end(), [](const Rational& r) { return r.is_zero(); })) continue;
      const auto base = classify_p3(ProjectivePoint3(x)).verdict.tag;
      Rational lambda = rnd(prng, 20);
      if (lambda.is_zero()) lambda = Rational(-7, 3);
      for (auto& c : x) c = c * lambda;
      scale = scale && classify_p3(ProjectivePoint3(x)).verdict.tag == base;
    }
    o.require(scale, "classify_p3 scale invariance");

    o.require(central_element_check(kQ).central(), "z not central over Q");
    o.require(central_element_check(F).central(), "z not central over F_p");
  });

  report(10, "classify_l2 reproduces all four verdicts on set-partition families, l <= 5", [&](Outcome& o) {
    std::mt19937_64 crng(10);
    std::array<int, 4> seen{0, 0, 0, 0};
    int total = 0;
    for (int l = 2; l <= 5; ++l) {
      std::vector<std::vector<int>> parts;
      std::vector<int> cur;
      set_partitions(l, cur, 0, parts);
      for (const auto& labels : parts) {
        const int lblock = labels[static_cast<std::size_t>(l - 1)];
        const int nblocks = *std::max_element(labels.begin(), labels.end()) + 1;
        std::vector<Vec> v1;
        std::size_t max_block = 0;
        for (int b = 0; b < nblocks; ++b) {
          max_block = std::max<std::size_t>(max_block, static_cast<std::size_t>(std::count(labels.begin(), labels.end(), b)));
          if (b == lblock) continue;
          Vec v(static_cast<std::size_t>(l), Rational(0));
          for (int i = 0; i < l - 1; ++i)
            if (labels[static_cast<std::size_t>(i)] == b) v[static_cast<std::size_t>(i)] = Rational(1);
          v1.push_back(v);
        }
        for (bool with_q : {false, true}) {
          std::vector<Vec> basis = v1;
          if (with_q) {
            Vec w(static_cast<std::size_t>(l), Rational(0));
            for (int i = 0; i < l - 1; ++i) w[static_cast<std::size_t>(i)] = rnd(crng, 4);
            w[static_cast<std::size_t>(l - 1)] = Rational(1);
            basis.push_back(w);
          }
          const SubspacePresentation<RationalField> V({l, 2}, kQ, basis);
          Verdict expected = !with_q ? Verdict::equals_R
                             : max_block <= 1 ? Verdict::tensor_mid_1
                             : max_block == 2 ? Verdict::mid_2
                                              : Verdict::mid_infinity;
          const auto got = classify_l2(V).verdict.tag;
          o.require(got == expected, "l = " + std::to_string(l) + ": " + to_string(got) + " vs " + to_string(expected));
          if (got == expected) {
            const int k = expected == Verdict::equals_R ? 0 : expected == Verdict::tensor_mid_1 ? 1 : expected == Verdict::mid_2 ? 2 : 3;
            ++seen[static_cast<std::size_t>(k)];
          }
          ++total;
        }
      }
    }
    o.require(std::all_of(seen.begin(), seen.end(), [](int c) { return c > 0; }), "not every verdict occurs");
    o.note << total << " subspaces";
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
