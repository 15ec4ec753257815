#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pabel/errors.hpp"

namespace pabel {

/// Free product k^a * k^b presented by idempotents p_1..p_a, q_1..q_b with
/// p_a and q_b eliminated through the unit relations.
struct AlgebraSignature {
  int a = 3;
  int b = 3;

  AlgebraSignature() = default;
  AlgebraSignature(int pa, int qb) : a(pa), b(qb) {
    if (a < 2 || b < 2) throw UsageError("signature factors must have dimension >= 2");
    if (a > 63 || b > 63) throw UsageError("signature factors must have dimension <= 63");
  }
  friend bool operator==(const AlgebraSignature&, const AlgebraSignature&) = default;
};

enum class Tag : std::uint8_t { P = 0, Q = 1 };

/// One letter; the packed code orders letters as P(1) < P(2) < ... < Q(1) < Q(2) < ...
struct Letter {
  Tag tag;
  int index;  // 1-based, reduced range

  [[nodiscard]] char code() const { return static_cast<char>(static_cast<int>(tag) * 64 + index); }
  static Letter from_code(char c) {
    const int v = static_cast<unsigned char>(c);
    return {v >= 64 ? Tag::Q : Tag::P, v % 64};
  }
  [[nodiscard]] std::string str() const { return (tag == Tag::P ? "p" : "q") + std::to_string(index); }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Reduced alternating word; the empty word is the unit.
class Word {
 public:
  Word() = default;
  explicit Word(std::string codes) : s_(std::move(codes)) {}
  Word(std::initializer_list<Letter> letters) {
    for (const auto& l : letters) s_.push_back(l.code());
  }

  [[nodiscard]] std::size_t length() const { return s_.size(); }
  [[nodiscard]] bool empty() const { return s_.empty(); }
  [[nodiscard]] Letter operator[](std::size_t i) const { return Letter::from_code(s_[i]); }
  [[nodiscard]] Letter front() const { return Letter::from_code(s_.front()); }
  [[nodiscard]] Letter back() const { return Letter::from_code(s_.back()); }
  [[nodiscard]] const std::string& codes() const { return s_; }

  /// True when letters alternate and indices are in the reduced range of sig.
  [[nodiscard]] bool valid_for(const AlgebraSignature& sig) const {
    for (std::size_t i = 0; i < s_.size(); ++i) {
      const Letter l = (*this)[i];
      const int top = l.tag == Tag::P ? sig.a - 1 : sig.b - 1;
      if (l.index < 1 || l.index > top) return false;
      if (i > 0 && (*this)[i - 1].tag == l.tag) return false;
    }
    return true;
  }

  /// "p1.q2.p1"; the unit prints as "1".
  [[nodiscard]] std::string str() const {
    if (s_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < s_.size(); ++i) {
      if (i) out += '.';
      out += (*this)[i].str();
    }
    return out;
  }

  static Word parse(std::string_view text) {
    if (text == "1") return {};
    Word w;
    std::size_t pos = 0;
    while (pos < text.size()) {
      const char t = text[pos];
      if (t != 'p' && t != 'q') throw UsageError("bad letter in word '" + std::string(text) + "'");
      std::size_t end = pos + 1;
      while (end < text.size() && text[end] != '.') ++end;
      int idx = 0;
      try {
        idx = std::stoi(std::string(text.substr(pos + 1, end - pos - 1)));
      } catch (const std::exception&) {
        throw UsageError("bad index in word '" + std::string(text) + "'");
      }
      if (idx < 1 || idx > 63) throw UsageError("letter index out of range");
      w.s_.push_back(Letter{t == 'p' ? Tag::P : Tag::Q, idx}.code());
      pos = end + 1;
    }
    return w;
  }

  /// Graded order: shorter words first, then lexicographic on letter codes.
  friend bool operator<(const Word& x, const Word& y) {
    if (x.s_.size() != y.s_.size()) return x.s_.size() < y.s_.size();
    return x.s_ < y.s_;
  }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string s_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return std::hash<std::string>{}(w.codes()); }
};

/// Product of two words: concatenation, with p_i p_i = p_i and p_i p_j = 0 at the seam.
inline std::optional<Word> multiply_words(const Word& u, const Word& v) {
  if (u.empty()) return v;
  if (v.empty()) return u;
  const Letter l = u.back(), r = v.front();
  if (l.tag != r.tag) return Word(u.codes() + v.codes());
  if (l.index != r.index) return std::nullopt;
  return Word(u.codes() + v.codes().substr(1));
}

/// All reduced words of length exactly k, in graded order.
inline std::vector<Word> words_of_length(const AlgebraSignature& sig, std::size_t k) {
  std::vector<Word> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  for (Tag start : {Tag::P, Tag::Q}) {
    std::vector<std::string> layer{""};
    Tag tag = start;
    for (std::size_t i = 0; i < k; ++i) {
      const int top = tag == Tag::P ? sig.a - 1 : sig.b - 1;
      std::vector<std::string> next;
      next.reserve(layer.size() * static_cast<std::size_t>(top));
      for (const auto& s : layer) {
        for (int idx = 1; idx <= top; ++idx) next.push_back(s + Letter{tag, idx}.code());
      }
      layer = std::move(next);
      tag = tag == Tag::P ? Tag::Q : Tag::P;
    }
    for (auto& s : layer) out.emplace_back(std::move(s));
  }
  return out;
}

/// All reduced words of length <= n, in graded order.
inline std::vector<Word> words_up_to(const AlgebraSignature& sig, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto layer = words_of_length(sig, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// dim F^n R, counted by enumeration.
inline std::size_t filtration_dim(const AlgebraSignature& sig, std::size_t n) {
  return words_up_to(sig, n).size();
}

/// Dense indexing of the words of length <= n by their position in the graded order.
class WordIndex {
 public:
  WordIndex(const AlgebraSignature& sig, std::size_t max_len) : sig_(sig), max_len_(max_len) {
    words_ = words_up_to(sig, max_len);
    index_.reserve(words_.size() * 2);
    for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], static_cast<std::uint32_t>(i));
    std::size_t acc = 0;
    for (std::size_t k = 0; k <= max_len; ++k) {
      acc += words_of_length(sig, k).size();
      up_to_.push_back(acc);
    }
  }

  [[nodiscard]] const AlgebraSignature& signature() const { return sig_; }
  [[nodiscard]] std::size_t max_length() const { return max_len_; }
  [[nodiscard]] std::size_t size() const { return words_.size(); }
  [[nodiscard]] const Word& word(std::size_t i) const { return words_[i]; }
  [[nodiscard]] std::uint32_t at(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw UsageError("word " + w.str() + " outside index range");
    return it->second;
  }
  /// Number of words of length <= k.
  [[nodiscard]] std::size_t count_up_to(std::size_t k) const { return up_to_[std::min(k, max_len_)]; }

 private:
  AlgebraSignature sig_;
  std::size_t max_len_;
  std::vector<Word> words_;
  std::unordered_map<Word, std::uint32_t, WordHash> index_;
  std::vector<std::size_t> up_to_;
};

}  // namespace pabel
