#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pabel/algebra/element.hpp"
#include "pabel/classify/verdict.hpp"
#include "pabel/pipeline/theorem.hpp"
#include "pabel/quotient/closure.hpp"
#include "pabel/quotient/listed_generators.hpp"
#include "pabel/quotient/reduction.hpp"
#include "pabel/quotient/sigma.hpp"
#include "pabel/rep/geometry.hpp"
#include "pabel/rep/rho.hpp"
#include "pabel/rep/tq.hpp"
#include "pabel/rep/wedderburn.hpp"

namespace pabel::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "pabel-report/1";

/// One checked statement. source is "reference" when the expected value is printed there,
/// "derived" when it comes from an independent computation.
struct Claim {
  std::string name;
  json computed;
  json expected;
  std::string source;
  bool holds = false;
};

inline json to_json(const Claim& c) {
  return json{{"name", c.name}, {"computed", c.computed}, {"expected", c.expected}, {"source", c.source}, {"holds", c.holds}};
}

template <class T>
Claim claim_eq(std::string name, const T& computed, const T& expected, std::string source) {
  return {std::move(name), json(computed), json(expected), std::move(source), computed == expected};
}

inline Claim claim_true(std::string name, bool computed, std::string source) {
  return {std::move(name), json(computed), json(true), std::move(source), computed};
}

inline json rational_triple(const std::array<Rational, 3>& y) {
  return json::array({y[0].str(), y[1].str(), y[2].str()});
}

template <Field D>
json matrix_json(const Matrix<D>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline json to_json(const FiltrationRow& r) {
  return json{{"n", r.n},           {"stage", r.stage}, {"dim_F_n_R", r.dim_r}, {"counted_rank", r.counted},
              {"bound", r.bound}, {"bound_prev", r.bound_prev}, {"closed", r.closed}};
}

inline json to_json(const FiltrationReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) rows.push_back(to_json(r));
  json j{{"domain", rep.domain}, {"slack", rep.slack}, {"rows", rows}};
  j["certified_n"] = rep.certified_n ? json(*rep.certified_n) : json(nullptr);
  return j;
}

template <Field D>
json certificate_digest(const ClosureCertificate<D>& c) {
  json basis = json::array();
  for (const auto& w : c.basis) basis.push_back(w.str());
  json j{{"closed", c.closed}, {"n", c.n}, {"stage", c.stage}, {"dim", c.dim()}, {"basis", basis}};
  if (!c.failure.empty()) j["failure"] = c.failure;
  return j;
}

template <Field D>
json to_json(const AlgebraChecks<D>& a) {
  return json{{"idempotents", a.idempotents}, {"relations_vanish", a.relations}, {"bimodule", a.bimodule},
              {"associative_samples", a.triples}, {"associative", a.associative}, {"commutative", a.commutative}};
}

template <Field D>
json to_json(const ExtensionSpec<D>& s) {
  json comps = json::array();
  for (const auto& c : s.components) {
    comps.push_back(json{{"modulus", c.modulus.str("t")}, {"z1", "t"}, {"z2", c.z2.str("t")}, {"verified", c.verified}});
  }
  return json{{"r12", s.r12.str("z1")}, {"r13", s.r13.str("z1")}, {"f", s.f.str("t")}, {"deg_f", s.f.degree()},
              {"points", s.points()}, {"f_irreducible_split", s.irreducible_f()}, {"components", comps}};
}

template <Field D>
json to_json(const LineSplitting<D>& l) {
  json j{{"verdict", l.verdict()}, {"singular_points", l.singular_points}, {"infinite_singular", l.infinite_singular},
         {"non_collinear", l.non_collinear}, {"concurrent", l.concurrent}, {"norm_identity", l.norm_identity},
         {"attempts", l.attempts}};
  json ch = json::array();
  for (const auto& r : l.change) ch.push_back(json::array({r[0], r[1], r[2]}));
  j["change"] = ch;
  j["h"] = l.h ? json(l.h->str("u")) : json(nullptr);
  j["phi"] = l.phi ? json(l.phi->str("u")) : json(nullptr);
  if (l.numeric) {
    json lines = json::array();
    for (const auto& L : l.numeric->lines) {
      json v = json::array();
      for (const auto& x : L) v.push_back(json::array({x.real(), x.imag()}));
      lines.push_back(v);
    }
    j["numeric"] = json{{"lines", lines}, {"residual_below_1e-9", l.numeric->residual < 1e-9}};
  }
  return j;
}

template <Field D>
json to_json(const WedderburnMap<D>& w) {
  json chars = json::array();
  for (const auto& c : w.characters) chars.push_back(c.str());
  json rho = json::object();
  const char* names[] = {"p1", "p2", "q1", "q2"};
  for (std::size_t i = 0; i < w.rho_entries.size(); ++i) rho[names[i]] = w.rho_entries[i];
  return json{{"verdict", w.verdict()},
              {"characters", chars},
              {"characters_kill_relation", w.characters_kill_relation},
              {"modulus", w.modulus ? json(w.modulus->str("t")) : json(nullptr)},
              {"rho", rho},
              {"rho_relations", w.rho_relations},
              {"rho_kills_relation", w.rho_kills_relation},
              {"generated_algebra_dim", w.generated_dim},
              {"target_dim", w.target_dim},
              {"rank", w.rank},
              {"upper_bound", w.upper_bound},
              {"center_dim", w.center_dim},
              {"trace_form_rank", w.trace_rank}};
}

inline json to_json(const ModularSearch& m) {
  json j{{"prime", m.prime}, {"slack", m.slack}, {"bound", m.bound}};
  j["n"] = m.n ? json(*m.n) : json(nullptr);
  return j;
}

inline json to_json(const TheoremPoint& t) {
  json j{{"y", rational_triple(t.y)}, {"x", chart_point(t.y).str()}, {"verdict", t.verdict()},
         {"upper_bound", t.upper()}, {"lower_bound", t.lower()}, {"modular", to_json(t.modular)},
         {"exact_scan", to_json(t.exact_report)}};
  if (t.certificate) j["certificate"] = certificate_digest(*t.certificate);
  if (t.checks) j["checks"] = to_json(*t.checks);
  if (t.spec) j["intersection"] = to_json(*t.spec);
  if (t.lines) j["determinantal_cubic"] = to_json(*t.lines);
  if (t.wedderburn) j["wedderburn"] = to_json(*t.wedderburn);
  if (!t.failure.empty()) j["failure"] = t.failure;
  return j;
}

inline json to_json(const GeneratorRankReport& r) {
  return json{{"generators", r.generators}, {"max_length", r.max_length}, {"rank", r.rank},  {"dim_F4_R", r.dim_f4},
              {"bound", r.bound},           {"rank_with_omitted", r.rank_with_omitted}, {"omitted_dependent", r.omitted_dependent()}};
}

inline json to_json(const SigmaReport& s) {
  return json{{"sigma1_X_is_X_over_y2", s.sigma1_scales_by_inv_y2},
              {"sigma2_X_is_minus_X", s.sigma2_negates},
              {"sigma1_involution", s.sigma1_involution},
              {"sigma2_involution", s.sigma2_involution},
              {"braid_relation", s.braid},
              {"letter_images_consistent", s.letters_consistent},
              {"sigma1_y", s.sigma1_y},
              {"sigma2_y", s.sigma2_y}};
}

template <Field D>
json to_json(const CentralElementReport<D>& c) {
  return json{{"z", c.z.str()}, {"[z,p]", c.z_p.str()}, {"[z,q]", c.z_q.str()}, {"[z^2,p]", c.z2_p.str()},
              {"central", c.central()}};
}

inline json to_json(const P3Classification& c) {
  json j{{"classification", c.verdict.to_json()}, {"on_quadric", c.on_quadric}, {"lines", c.lines}};
  j["point"] = c.point ? json(*c.point) : json(nullptr);
  return j;
}

inline json to_json(const TqDiscrepancy& d) {
  return json{{"identity", d.lhs}, {"word", d.word}, {"derived", d.derived}, {"printed", d.printed}};
}

inline json to_json(const CommutatorIdealReport& r) {
  json e = json::array();
  for (const auto& row : r.entries) e.push_back(row);
  return json{{"entries_d2_commutator", e}, {"all_unit_multiples", r.all_unit_multiples},
              {"generates_all_three", r.generates_all_three}, {"same_ideal", r.same_ideal()}};
}

template <Field D>
json to_json(const ConicTriple<D>& cs) {
  const std::array<std::string, 2> zn{"z1", "z2"};
  return json{{"c1", cs.c[0].str(zn)}, {"c2", cs.c[1].str(zn)}, {"c3", cs.c[2].str(zn)},
              {"M1", matrix_json(cs.M[0])}, {"M2", matrix_json(cs.M[1])}, {"M3", matrix_json(cs.M[2])}};
}

}  // namespace pabel::report
