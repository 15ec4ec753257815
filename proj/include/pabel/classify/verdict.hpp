#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pabel/classify/subspace.hpp"
#include "pabel/quotient/relation.hpp"

namespace pabel {

enum class Verdict {
  equals_R,
  tensor_mid_1,
  mid_2,
  mid_infinity,
  generic_dim18,
  quadric_k9_mid1,
  quadric_line_mid_inf,
  quadric_point_mid_inf,
  known_infinite_dim,
  needs_engine,
};

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::equals_R: return "equals_R";
    case Verdict::tensor_mid_1: return "tensor_mid_1";
    case Verdict::mid_2: return "mid_2";
    case Verdict::mid_infinity: return "mid_infinity";
    case Verdict::generic_dim18: return "generic_dim18";
    case Verdict::quadric_k9_mid1: return "quadric_k9_mid1";
    case Verdict::quadric_line_mid_inf: return "quadric_line_mid_inf";
    case Verdict::quadric_point_mid_inf: return "quadric_point_mid_inf";
    case Verdict::known_infinite_dim: return "known_infinite_dim";
    case Verdict::needs_engine: return "needs_engine";
  }
  return "unknown";
}

struct ClassificationVerdict {
  Verdict tag = Verdict::needs_engine;
  std::string rule;      // which rule fired
  std::string citation;  // where the rule comes from
  std::optional<int> mid;
  bool mid_infinite = false;

  [[nodiscard]] nlohmann::json to_json() const {
    nlohmann::json j{{"verdict", to_string(tag)}, {"rule", rule}, {"citation", citation}};
    if (mid_infinite) j["mid"] = "infinity";
    else if (mid) j["mid"] = *mid;
    else j["mid"] = nullptr;
    return j;
  }
};

/// Blocks I_j of {1..l} read off from V1 = V cap Abar: indices whose coordinates agree on all of V1
/// (p_l has coordinate 0). Only blocks of size >= 2 enter the minimal presentation.
struct PartitionData {
  std::vector<std::vector<int>> classes;  // all classes, singletons included
  [[nodiscard]] std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out;
    for (const auto& c : classes) {
      if (c.size() >= 2) out.push_back(c);
    }
    return out;
  }
  [[nodiscard]] std::size_t max_block() const {
    std::size_t m = 0;
    for (const auto& c : classes) m = std::max(m, c.size());
    return m;
  }
  /// A(V) = A exactly when every class is a singleton.
  [[nodiscard]] bool generates_a() const { return max_block() <= 1; }
};

template <Field D>
PartitionData partition_of(const std::vector<std::vector<value_t<D>>>& v1, int l, const D& dom) {
  auto coord = [&](const std::vector<value_t<D>>& v, int i) { return i == l ? dom.zero() : v[static_cast<std::size_t>(i - 1)]; };
  PartitionData out;
  std::vector<bool> used(static_cast<std::size_t>(l + 1), false);
  for (int i = 1; i <= l; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    std::vector<int> cls{i};
    used[static_cast<std::size_t>(i)] = true;
    for (int k = i + 1; k <= l; ++k) {
      if (used[static_cast<std::size_t>(k)]) continue;
      bool same = true;
      for (const auto& v : v1) same = same && coord(v, i) == coord(v, k);
      if (same) {
        cls.push_back(k);
        used[static_cast<std::size_t>(k)] = true;
      }
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

struct L2Classification {
  ClassificationVerdict verdict;
  PartitionData partition;
  std::size_t dim_v1 = 0;
};

template <Field D>
L2Classification classify_l2(const SubspacePresentation<D>& V) {
  if (V.sig.b != 2) throw UsageError("classify_l2 needs signature (l, 2)");
  const int l = V.sig.a;
  L2Classification out;
  const auto v1 = V.intersection(Tag::P);
  out.dim_v1 = v1.size();
  out.partition = partition_of(v1, l, V.dom);
  auto& vd = out.verdict;
  if (v1.size() == V.dim()) {
    vd = {Verdict::equals_R, "V is contained in Abar, so the commutator ideal is zero",
          "classification of k^l * k^2, first case", std::nullopt, false};
  } else if (out.partition.generates_a()) {
    vd = {Verdict::tensor_mid_1, "V1 generates A, quotient is A tensor B", "classification of k^l * k^2, second case",
          1, false};
  } else if (out.partition.max_block() == 2) {
    vd = {Verdict::mid_2, "largest block has two indices, fibres are k^2 * k^2",
          "classification of k^l * k^2, third case; central element of k^2 * k^2", 2, false};
  } else {
    vd = {Verdict::mid_infinity, "a block has at least three indices, fibres contain k^s * k^2 with s >= 3",
          "classification of k^l * k^2, fourth case; free subgroup of finite index in Z_s * Z_l", std::nullopt, true};
  }
  return out;
}

namespace detail {

/// Rows are linear forms on (x11, x12, x21, x22); the line or point is their common zero set.
struct LinearLocus {
  std::string name;
  std::vector<std::array<int, 4>> forms;
  [[nodiscard]] bool contains(const ProjectivePoint3& x) const {
    for (const auto& f : forms) {
      Rational s(0);
      for (std::size_t i = 0; i < 4; ++i) s = s + Rational(f[i]) * x[i];
      if (!s.is_zero()) return false;
    }
    return true;
  }
};

inline const std::array<LinearLocus, 6>& quadric_lines() {
  static const std::array<LinearLocus, 6> lines{{
      {"l1", {{0, 0, 1, 0}, {0, 0, 0, 1}}},
      {"l2", {{1, 0, 0, 0}, {0, 1, 0, 0}}},
      {"l3", {{1, 0, -1, 0}, {0, 1, 0, -1}}},
      {"l'1", {{0, 1, 0, 0}, {0, 0, 0, 1}}},
      {"l'2", {{1, 0, 0, 0}, {0, 0, 1, 0}}},
      {"l'3", {{1, -1, 0, 0}, {0, 0, 1, -1}}},
  }};
  return lines;
}

}  // namespace detail

struct P3Classification {
  ClassificationVerdict verdict;
  bool on_quadric = false;
  std::vector<std::string> lines;  // names of the lines through x
  std::optional<std::string> point;  // pt_ij when x is one
};

inline ProjectivePoint3 known_infinite_point() { return ProjectivePoint3({Rational(1), Rational(0), Rational(0), Rational(-1)}); }

inline P3Classification classify_p3(const ProjectivePoint3& x) {
  P3Classification out;
  out.on_quadric = x.on_quadric();
  const auto& lines = detail::quadric_lines();
  std::size_t through_l = 0, through_lp = 0;
  std::string li, lpj;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (!lines[k].contains(x)) continue;
    out.lines.push_back(lines[k].name);
    if (k < 3) {
      ++through_l;
      li = std::to_string(k + 1);
    } else {
      ++through_lp;
      lpj = std::to_string(k - 2);
    }
  }
  auto& vd = out.verdict;
  if (x == known_infinite_point()) {
    vd = {Verdict::known_infinite_dim, "the point (1:0:0:-1) is listed as infinite dimensional",
          "remark after the dimension bound 18", std::nullopt, false};
  } else if (!out.on_quadric) {
    vd = {Verdict::needs_engine, "off the quadric; the generic theorem does not decide single points",
          "main theorem holds for generic x only", std::nullopt, false};
  } else if (through_l > 0 && through_lp > 0) {
    out.point = "pt" + li + lpj;
    vd = {Verdict::quadric_point_mid_inf, "x = " + *out.point + ", relation [p_i0, q_j0] = 0",
          "corollary on the quadric, first case; k^2 * k^3 quotient", std::nullopt, true};
  } else if (!out.lines.empty()) {
    vd = {Verdict::quadric_line_mid_inf, "x on line " + out.lines.front() + " and off the points pt_ij",
          "corollary on the quadric, second case", std::nullopt, true};
  } else {
    vd = {Verdict::quadric_k9_mid1, "x on the quadric and off the six lines, relation [a, b] = 0",
          "corollary on the quadric, third case", 1, false};
  }
  return out;
}

}  // namespace pabel
