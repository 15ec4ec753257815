#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pabel/algebra/element.hpp"
#include "pabel/algebra/word.hpp"
#include "pabel/linalg/sparse.hpp"

namespace pabel {

template <Field D>
SparseRow<value_t<D>> to_row(const AlgebraElement<D>& e, const WordIndex& index) {
  SparseRow<value_t<D>> r;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) r.push(index.at(it->first), it->second);
  return r;
}

template <Field D>
AlgebraElement<D> from_row(const SparseRow<value_t<D>>& r, const WordIndex& index, const D& dom) {
  AlgebraElement<D> e(index.signature(), dom);
  for (std::size_t i = 0; i < r.size(); ++i) e.add_term(index.word(r.cols[i]), r.vals[i]);
  return e;
}

/// Where a raw row u*g*v came from.
struct RowOrigin {
  std::uint32_t generator;
  Word u;
  Word v;
};

/// Echelonized span of all products u*g*v (g a generator of the ideal) of formal
/// degree |u| + deg g + |v| up to the current stage.
template <Field D>
class IdealSpan {
 public:
  using T = value_t<D>;
  /// Decides by raw row id whether a candidate row is used.
  using RowFilter = std::function<bool(std::uint64_t)>;

  IdealSpan(D dom, std::vector<AlgebraElement<D>> gens, std::size_t max_degree)
      : dom_(dom),
        sig_(gens.at(0).signature()),
        gens_(std::move(gens)),
        index_(std::make_shared<WordIndex>(sig_, max_degree)),
        ech_(dom, index_->size()) {
    for (const auto& g : gens_) {
      if (g.is_zero()) throw UsageError("zero ideal generator");
      if (!(g.signature() == sig_)) throw UsageError("ideal generators with mixed signatures");
      if (static_cast<std::size_t>(g.degree()) > max_degree) throw UsageError("generator exceeds degree window");
    }
  }

  void set_filter(RowFilter f) { filter_ = std::move(f); }
  /// Keeps the origin of every raw row that became a pivot.
  void track_origins(bool on) { track_ = on; }

  /// Adds all rows of formal degree <= m.
  void extend_to(std::size_t m) {
    if (m > index_->max_length()) throw UsageError("stage beyond the word index");
    const std::size_t start = stage_ == kNone ? 0 : stage_ + 1;
    for (std::size_t s = start; s <= m; ++s) add_stage(s);
    if (stage_ == kNone || m > stage_) stage_ = m;
  }

  [[nodiscard]] std::size_t stage() const { return stage_ == kNone ? 0 : stage_; }
  [[nodiscard]] const D& domain() const { return dom_; }
  [[nodiscard]] const AlgebraSignature& signature() const { return sig_; }
  [[nodiscard]] const WordIndex& index() const { return *index_; }
  [[nodiscard]] const std::vector<AlgebraElement<D>>& generators() const { return gens_; }
  [[nodiscard]] const SparseEchelon<D>& echelon() const { return ech_; }
  [[nodiscard]] std::size_t rank() const { return ech_.rank(); }
  [[nodiscard]] std::uint64_t raw_rows() const { return raw_count_; }
  [[nodiscard]] const std::vector<std::uint64_t>& pivot_ids() const { return pivot_ids_; }
  [[nodiscard]] const std::vector<RowOrigin>& pivot_origins() const { return origins_; }

  /// dim of span intersected with F^n R: rows whose pivot word has length <= n.
  [[nodiscard]] std::size_t counted_rank(std::size_t n) const { return ech_.rank_below(index_->count_up_to(n)); }
  [[nodiscard]] std::size_t filtration_dim(std::size_t n) const { return index_->count_up_to(n); }
  /// Upper bound for dim F^n S.
  [[nodiscard]] std::size_t quotient_bound(std::size_t n) const { return filtration_dim(n) - counted_rank(n); }

  /// Non-pivot words of length <= n, in graded order.
  [[nodiscard]] std::vector<Word> free_words(std::size_t n) const {
    std::vector<Word> out;
    for (std::uint32_t c = 0; c < index_->count_up_to(n); ++c) {
      if (!ech_.is_pivot(c)) out.push_back(index_->word(c));
    }
    return out;
  }

  [[nodiscard]] AlgebraElement<D> normal_form(const AlgebraElement<D>& e) const {
    if (e.degree() > static_cast<int>(index_->max_length())) throw UsageError("element exceeds degree window");
    return from_row(ech_.normal_form(to_row(e, *index_)), *index_, dom_);
  }
  [[nodiscard]] bool contains(const AlgebraElement<D>& e) const { return normal_form(e).is_zero(); }

  /// The element u * g * v for a raw origin.
  [[nodiscard]] AlgebraElement<D> expand(const RowOrigin& o) const { return gens_.at(o.generator).sandwich(o.u, o.v); }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void add_stage(std::size_t m) {
    for (std::uint32_t gi = 0; gi < gens_.size(); ++gi) {
      const auto dg = static_cast<std::size_t>(gens_[gi].degree());
      if (dg > m) continue;
      const std::size_t s = m - dg;
      for (std::size_t lu = 0; lu <= s; ++lu) {
        const auto us = words_of_length(sig_, lu);
        const auto vs = words_of_length(sig_, s - lu);
        for (const auto& u : us) {
          const AlgebraElement<D> ug = AlgebraElement<D>::from_word(sig_, dom_, u) * gens_[gi];
          for (const auto& v : vs) {
            const std::uint64_t id = raw_count_++;
            if (filter_ && !filter_(id)) continue;
            AlgebraElement<D> r(sig_, dom_);
            for (const auto& [w, c] : ug.terms()) {
              if (auto wv = multiply_words(w, v)) r.add_term(*wv, c);
            }
            if (r.is_zero()) continue;
            if (ech_.insert(to_row(r, *index_))) {
              pivot_ids_.push_back(id);
              if (track_) origins_.push_back({gi, u, v});
            }
          }
        }
      }
    }
  }

  D dom_;
  AlgebraSignature sig_;
  std::vector<AlgebraElement<D>> gens_;
  std::shared_ptr<WordIndex> index_;
  SparseEchelon<D> ech_;
  RowFilter filter_;
  bool track_ = false;
  std::size_t stage_ = kNone;
  std::uint64_t raw_count_ = 0;
  std::vector<std::uint64_t> pivot_ids_;
  std::vector<RowOrigin> origins_;
};

}  // namespace pabel
