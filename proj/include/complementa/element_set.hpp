#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace complementa {

/// Dense index of a group element; the identity is always 0.
using Element = std::uint32_t;

/**
 * A dynamic bitset over the element indices of one parent group.
 *
 * Only provides what subgroup computations need: membership, word-parallel
 * intersection/union, subset tests, and the canonical member ordering.
 */
class ElementSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t bits_per_word = 64;

  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + bits_per_word - 1) / bits_per_word, 0) {}

  std::size_t universe() const { return universe_; }

  void set(Element e) { words_[e / bits_per_word] |= Word{1} << (e % bits_per_word); }
  void reset(Element e) { words_[e / bits_per_word] &= ~(Word{1} << (e % bits_per_word)); }
  bool test(Element e) const { return (words_[e / bits_per_word] >> (e % bits_per_word)) & 1U; }

  void set_all() {
    for (std::size_t i = 0; i < universe_; ++i) set(static_cast<Element>(i));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  /// Number of common members, without materialising the intersection.
  std::size_t intersection_count(const ElementSet& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  ElementSet& operator&=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Lexicographic comparison of the ascending member lists.
  friend bool lexicographic_less(const ElementSet& a, const ElementSet& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const Word diff = a.words_[i] ^ b.words_[i];
      if (!diff) continue;
      const Word low = diff & (~diff + 1);
      // The set holding the lowest differing member is smaller, unless the
      // other set ends before it (then the other is a proper prefix).
      const bool a_has = (a.words_[i] & low) != 0;
      const ElementSet& other = a_has ? b : a;
      const bool other_continues = other.has_member_above(i, low);
      return a_has == other_continues;
    }
    return false;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w) {
        const int b = std::countr_zero(w);
        f(static_cast<Element>(i * bits_per_word + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(count());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  std::size_t hash() const {
    std::size_t seed = universe_;
    for (Word w : words_) seed ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }

 private:
  bool has_member_above(std::size_t word, Word low_bit) const {
    const Word above = ~((low_bit << 1) - 1);
    if (low_bit != (Word{1} << 63) && (words_[word] & above)) return true;
    for (std::size_t j = word + 1; j < words_.size(); ++j)
      if (words_[j]) return true;
    return false;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace complementa
