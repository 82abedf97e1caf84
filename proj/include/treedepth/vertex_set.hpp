#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace treedepth {

/// Fixed-width bit vector over vertex indices 0..universe-1.
///
/// All binary operations require both operands to share the same universe.
/// Iteration visits members in ascending index order.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    Iterator() = default;
    Iterator(const VertexSet* set, int pos) : set_(set), pos_(pos) {}

    int operator*() const { return pos_; }
    Iterator& operator++() {
      pos_ = set_->next(pos_);
      return *this;
    }
    Iterator operator++(int) {
      Iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const Iterator& other) const { return pos_ == other.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    int pos_ = -1;
  };

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(word_count(universe), Word{0}) {}

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }
  static VertexSet single(int universe, int v) {
    VertexSet s(universe);
    s.set(v);
    return s;
  }
  static VertexSet of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.set(v);
    return s;
  }
  template <typename Range>
  static VertexSet from_range(int universe, const Range& members) {
    VertexSet s(universe);
    for (int v : members) s.set(v);
    return s;
  }

  int universe() const { return universe_; }
  std::size_t word_size() const { return words_.size(); }
  const Word* data() const { return words_.data(); }

  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(int v) { words_[v >> 6] |= Word{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(Word{1} << (v & 63)); }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * kWordBits) + std::countr_zero(words_[i]);
    return -1;
  }

  /// Smallest member strictly greater than v, or -1.
  int next(int v) const {
    int start = v + 1;
    if (start >= universe_) return -1;
    std::size_t i = static_cast<std::size_t>(start >> 6);
    Word w = words_[i] & (~Word{0} << (start & 63));
    while (true) {
      if (w) return static_cast<int>(i * kWordBits) + std::countr_zero(w);
      if (++i >= words_.size()) return -1;
      w = words_[i];
    }
  }

  Iterator begin() const { return Iterator(this, first()); }
  Iterator end() const { return Iterator(this, -1); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  bool subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }
  int intersection_count(const VertexSet& other) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
    return c;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Lexicographic order on the bit pattern read from index 0 upwards; the
  /// set holding the lowest differing index compares greater.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      Word diff = a.words_[i] ^ b.words_[i];
      if (diff) {
        Word low = diff & (~diff + 1);
        return (b.words_[i] & low) != 0;
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(universe_);
    for (Word w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
      h ^= h >> 33;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  static std::size_t word_count(int universe) {
    return static_cast<std::size_t>((universe + kWordBits - 1) / kWordBits);
  }
  void trim() {
    if (universe_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
  }

  int universe_ = 0;
  boost::container::small_vector<Word, 4> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/// Orders by size, then lexicographically.
inline bool size_lex_less(const VertexSet& a, const VertexSet& b) {
  int ca = a.count();
  int cb = b.count();
  if (ca != cb) return ca < cb;
  return lex_less(a, b);
}

}  // namespace treedepth

template <>
struct std::hash<treedepth::VertexSet> {
  std::size_t operator()(const treedepth::VertexSet& s) const { return s.hash(); }
};
