#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace eqdim {

using VertexId = std::uint32_t;

/**
 * Fixed-universe bit set over vertex ids 0..size()-1. Width is chosen at
 * construction; all binary operations require equal universes.
 */
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kBitsPerWord = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + kBitsPerWord - 1) / kBitsPerWord, 0) {}

  VertexSet(std::size_t universe, std::initializer_list<VertexId> members) : VertexSet(universe) {
    for (auto v : members) set(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.set(static_cast<VertexId>(v));
    return s;
  }

  template <class Range>
  static VertexSet from_range(std::size_t universe, const Range& ids) {
    VertexSet s(universe);
    for (auto v : ids) s.set(static_cast<VertexId>(v));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const Word* data() const noexcept { return words_.data(); }

  void set(VertexId v) { words_[v / kBitsPerWord] |= Word{1} << (v % kBitsPerWord); }
  void reset(VertexId v) { words_[v / kBitsPerWord] &= ~(Word{1} << (v % kBitsPerWord)); }
  bool test(VertexId v) const { return (words_[v / kBitsPerWord] >> (v % kBitsPerWord)) & Word{1}; }
  void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  bool intersects(const VertexSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  std::size_t intersection_count(const VertexSet& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  std::size_t difference_count(const VertexSet& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & ~other.words_[i]));
    return c;
  }

  bool is_subset_of(const VertexSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Smallest member, or universe() when empty.
  std::size_t first() const noexcept { return next(0); }

  /// Smallest member >= from, or universe() when none.
  std::size_t next(std::size_t from) const noexcept {
    if (from >= universe_) return universe_;
    std::size_t wi = from / kBitsPerWord;
    Word w = words_[wi] & (~Word{0} << (from % kBitsPerWord));
    while (true) {
      if (w) return wi * kBitsPerWord + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= words_.size()) return universe_;
      w = words_[wi];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(static_cast<VertexId>(wi * kBitsPerWord + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    out.reserve(count());
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic order on ascending member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto ma = a.members();
    auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
  }

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace eqdim
