#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "pabel/scalars/field.hpp"

namespace pabel {

/// Sparse vector with strictly decreasing column indices; the first entry is the lead.
template <class T>
struct SparseRow {
  std::vector<std::uint32_t> cols;
  std::vector<T> vals;

  [[nodiscard]] bool empty() const { return cols.empty(); }
  [[nodiscard]] std::size_t size() const { return cols.size(); }
  [[nodiscard]] std::uint32_t lead() const { return cols.front(); }
  [[nodiscard]] const T& lead_value() const { return vals.front(); }
  void push(std::uint32_t c, T v) {
    cols.push_back(c);
    vals.push_back(std::move(v));
  }
};

/// x - c*y, both sorted decreasingly.
template <class T>
SparseRow<T> axpy_sub(const SparseRow<T>& x, const T& c, const SparseRow<T>& y) {
  SparseRow<T> out;
  out.cols.reserve(x.size() + y.size());
  out.vals.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x.cols[i] > y.cols[j])) {
      out.push(x.cols[i], x.vals[i]);
      ++i;
    } else if (i == x.size() || y.cols[j] > x.cols[i]) {
      out.push(y.cols[j], -(c * y.vals[j]));
      ++j;
    } else {
      T v = x.vals[i] - c * y.vals[j];
      if (!is_zero(v)) out.push(x.cols[i], std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

/// Incremental row echelon form with monic rows, one pivot per column, pivot = highest column.
/// Rows are only lead-reduced (semi-echelon), which keeps fill-in low.
template <Field D>
class SparseEchelon {
 public:
  using T = value_t<D>;

  SparseEchelon(D dom, std::size_t ncols) : dom_(std::move(dom)), pivot_of_(ncols, -1) {}

  [[nodiscard]] const D& domain() const { return dom_; }
  [[nodiscard]] std::size_t cols() const { return pivot_of_.size(); }
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] const std::vector<SparseRow<T>>& rows() const { return rows_; }
  [[nodiscard]] bool is_pivot(std::uint32_t c) const { return pivot_of_[c] >= 0; }
  [[nodiscard]] const SparseRow<T>& pivot_row(std::uint32_t c) const { return rows_[static_cast<std::size_t>(pivot_of_[c])]; }

  /// Number of pivots in columns [0, limit).
  [[nodiscard]] std::size_t rank_below(std::size_t limit) const {
    std::size_t r = 0;
    for (std::size_t c = 0; c < limit && c < pivot_of_.size(); ++c) r += pivot_of_[c] >= 0 ? 1 : 0;
    return r;
  }

  /// Reduces r by lead elimination; returns true if it was independent and got stored.
  bool insert(SparseRow<T> r) {
    while (!r.empty()) {
      const std::int64_t at = pivot_of_[r.lead()];
      if (at < 0) {
        if (!(r.lead_value() == dom_.one())) {
          const T s = dom_.one() / r.lead_value();
          for (auto& v : r.vals) v = s * v;
        }
        pivot_of_[r.lead()] = static_cast<std::int64_t>(rows_.size());
        rows_.push_back(std::move(r));
        return true;
      }
      const T c = r.lead_value();
      r = axpy_sub(r, c, rows_[static_cast<std::size_t>(at)]);
    }
    return false;
  }

  /// Unique representative of r modulo the row span, supported on non-pivot columns.
  [[nodiscard]] SparseRow<T> normal_form(const SparseRow<T>& r) const {
    std::map<std::uint32_t, T, std::greater<>> acc;
    for (std::size_t i = 0; i < r.size(); ++i) acc.emplace(r.cols[i], r.vals[i]);
    SparseRow<T> out;
    while (!acc.empty()) {
      auto node = acc.extract(acc.begin());
      const std::uint32_t c = node.key();
      T v = std::move(node.mapped());
      const std::int64_t at = pivot_of_[c];
      if (at < 0) {
        out.push(c, std::move(v));
        continue;
      }
      const auto& row = rows_[static_cast<std::size_t>(at)];
      for (std::size_t k = 1; k < row.size(); ++k) {
        auto [it, fresh] = acc.try_emplace(row.cols[k], -(v * row.vals[k]));
        if (!fresh) {
          it->second = it->second - v * row.vals[k];
          if (is_zero(it->second)) acc.erase(it);
        }
      }
    }
    return out;
  }

 private:
  D dom_;
  std::vector<std::int64_t> pivot_of_;
  std::vector<SparseRow<T>> rows_;
};

}  // namespace pabel
