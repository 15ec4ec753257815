#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "pabel/errors.hpp"

namespace pabel::numeric {

using cplx = std::complex<double>;

/// p(x) and p'(x) by Horner; coefficients low to high.
inline std::pair<cplx, cplx> horner(const std::vector<cplx>& c, cplx x) {
  cplx p = 0, dp = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    dp = dp * x + p;
    p = p * x + c[i];
  }
  return {p, dp};
}

/// All complex roots of a polynomial (coefficients low to high) by Aberth-Ehrlich iteration.
inline std::vector<cplx> polynomial_roots(std::vector<cplx> c, double tol = 1e-15, int max_iter = 1000) {
  while (!c.empty() && c.back() == cplx(0)) c.pop_back();
  if (c.size() < 2) return {};
  const std::size_t n = c.size() - 1;
  const cplx lead = c.back();
  for (auto& x : c) x /= lead;
  // Cauchy bound for the initial circle
  double radius = 0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i]));
  radius = 1 + radius;
  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double ang = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(radius * 0.5, ang);
  }
  for (int it = 0; it < max_iter; ++it) {
    double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto [p, dp] = horner(c, z[k]);
      if (p == cplx(0)) continue;
      const cplx ratio = p / dp;
      cplx s = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) s += 1.0 / (z[k] - z[j]);
      }
      const cplx step = ratio / (1.0 - ratio * s);
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (worst < tol) break;
  }
  for (auto& r : z) {
    for (int k = 0; k < 3; ++k) {
      const auto [p, dp] = horner(c, r);
      if (dp == cplx(0)) break;
      r -= p / dp;
    }
  }
  return z;
}

inline std::vector<cplx> polynomial_roots(const std::vector<double>& c) {
  return polynomial_roots(std::vector<cplx>(c.begin(), c.end()));
}

inline std::array<cplx, 3> cross(const std::array<cplx, 3>& a, const std::array<cplx, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Scales a vector so its largest entry is 1.
inline std::array<cplx, 3> normalized(std::array<cplx, 3> v) {
  std::size_t at = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (std::abs(v[i]) > std::abs(v[at])) at = i;
  }
  const cplx s = v[at];
  if (s == cplx(0)) throw DegenerateError("zero vector");
  for (auto& x : v) x /= s;
  return v;
}

}  // namespace pabel::numeric
