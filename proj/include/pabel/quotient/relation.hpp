#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pabel/algebra/element.hpp"
#include "pabel/errors.hpp"
#include "pabel/scalars/rational.hpp"

namespace pabel {

/// Point (x11:x12:x21:x22) of P^3, stored with its first nonzero coordinate equal to 1.
class ProjectivePoint3 {
 public:
  explicit ProjectivePoint3(std::array<Rational, 4> x) : x_(std::move(x)) {
    std::size_t lead = 0;
    while (lead < 4 && x_[lead].is_zero()) ++lead;
    if (lead == 4) throw DomainError("projective point with all coordinates zero");
    const Rational s = x_[lead].inv();
    for (auto& c : x_) c = c * s;
  }
  /// Chart point (1:y1:y2:y3).
  static ProjectivePoint3 chart(const Rational& y1, const Rational& y2, const Rational& y3) {
    return ProjectivePoint3({Rational(1), y1, y2, y3});
  }
  /// Parses "a:b:c:d" with rational entries.
  static ProjectivePoint3 parse(const std::string& text) {
    std::array<Rational, 4> x;
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
      const std::size_t end = text.find(':', pos);
      if ((i < 3) == (end == std::string::npos)) throw UsageError("point must have four ':'-separated coordinates");
      x[static_cast<std::size_t>(i)] = Rational::parse(text.substr(pos, end == std::string::npos ? end : end - pos));
      pos = end + 1;
    }
    return ProjectivePoint3(x);
  }

  [[nodiscard]] const std::array<Rational, 4>& coords() const { return x_; }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return x_[i]; }
  [[nodiscard]] bool on_quadric() const { return x_[0] * x_[3] == x_[1] * x_[2]; }
  /// (y1,y2,y3) when x11 != 0.
  [[nodiscard]] std::optional<std::array<Rational, 3>> chart_coords() const {
    if (x_[0].is_zero()) return std::nullopt;
    return std::array<Rational, 3>{x_[1], x_[2], x_[3]};
  }
  [[nodiscard]] std::string str() const {
    return x_[0].str() + ":" + x_[1].str() + ":" + x_[2].str() + ":" + x_[3].str();
  }
  friend bool operator==(const ProjectivePoint3&, const ProjectivePoint3&) = default;

 private:
  std::array<Rational, 4> x_;
};

/// X = x11[p1,q1] + x12[p1,q2] + x21[p2,q1] + x22[p2,q2] in k^3 * k^3.
template <Field D>
AlgebraElement<D> commutator_relation(const D& dom, const std::array<value_t<D>, 4>& x) {
  const AlgebraSignature sig(3, 3);
  AlgebraElement<D> out(sig, dom);
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      const auto& c = x[static_cast<std::size_t>(2 * (i - 1) + (j - 1))];
      out = out + c * commutator(p(sig, dom, i), q(sig, dom, j));
    }
  }
  if (out.is_zero()) throw DomainError("relation X vanishes");
  return out;
}

template <Field D>
struct CommutatorRelation {
  std::optional<ProjectivePoint3> point;  // empty for symbolic chart relations
  AlgebraElement<D> X;
};

template <Field D>
CommutatorRelation<D> make_relation(const D& dom, const ProjectivePoint3& x) {
  std::array<value_t<D>, 4> c{dom.from_rational(x[0]), dom.from_rational(x[1]), dom.from_rational(x[2]),
                              dom.from_rational(x[3])};
  return {x, commutator_relation(dom, c)};
}

/// Chart relation with y-values already in the domain (e.g. symbolic y1, y2, y3).
template <Field D>
CommutatorRelation<D> make_chart_relation(const D& dom, const value_t<D>& y1, const value_t<D>& y2,
                                          const value_t<D>& y3) {
  return {std::nullopt, commutator_relation(dom, std::array<value_t<D>, 4>{dom.one(), y1, y2, y3})};
}

inline nlohmann::json to_json(const ProjectivePoint3& x) { return x.str(); }

}  // namespace pabel
