// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hyperforge/kernels.hpp"

namespace hyperforge {

using Element = std::uint32_t;
using kernels::Word;

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

/// Calls fn(i) for every set bit i of a word array, in increasing order.
template <class Fn>
void for_each_bit(std::span<const Word> words, Fn&& fn) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    Word bits = words[w];
    while (bits != 0) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
      fn(static_cast<Element>(w * kWordBits + bit));
      bits &= bits - 1;
    }
  }
}

/// A subset of a carrier {0..n-1} stored as a bitmask.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe)
      : universe_(universe), words_(words_for(universe), 0) {}
  Subset(std::size_t universe, std::initializer_list<Element> members)
      : Subset(universe) {
    for (Element e : members) insert(e);
  }
  Subset(std::size_t universe, std::span<const Word> words)
      : universe_(universe), words_(words.begin(), words.end()) {}

  static Subset full(std::size_t universe) {
    Subset s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Element>(i));
    return s;
  }
  static Subset from(std::size_t universe, std::span<const Element> members) {
    Subset s(universe);
    for (Element e : members) s.insert(e);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }
  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  bool contains(Element e) const noexcept {
    return e < universe_ && ((words_[e / kWordBits] >> (e % kWordBits)) & 1U) != 0;
  }
  void insert(Element e) { words_[e / kWordBits] |= Word{1} << (e % kWordBits); }
  void erase(Element e) { words_[e / kWordBits] &= ~(Word{1} << (e % kWordBits)); }

  bool empty() const noexcept {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }
  std::size_t count() const { return kernels::popcount(words_); }

  /// Smallest member; universe() when empty.
  Element first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] != 0)
        return static_cast<Element>(w * kWordBits + std::countr_zero(words_[w]));
    return static_cast<Element>(universe_);
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    for_each_bit(words(), [&](Element e) { out.push_back(e); });
    return out;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for_each_bit(words(), std::forward<Fn>(fn));
  }

  Subset& operator|=(const Subset& other) {
    kernels::or_into(words_, other.words_);
    return *this;
  }
  Subset& operator&=(const Subset& other) {
    kernels::and_into(words_, other.words_);
    return *this;
  }
  Subset& operator|=(std::span<const Word> other) {
    kernels::or_into(words_, other);
    return *this;
  }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }

  Subset complement() const {
    Subset out(universe_);
    for (std::size_t i = 0; i < universe_; ++i)
      if (!contains(static_cast<Element>(i))) out.insert(static_cast<Element>(i));
    return out;
  }

  bool intersects(const Subset& other) const {
    return kernels::intersects(words_, other.words_);
  }
  bool is_subset_of(const Subset& other) const {
    return kernels::subset_of(words_, other.words_);
  }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.universe_ == b.universe_ && kernels::equal(a.words_, b.words_);
  }
  friend bool operator<(const Subset& a, const Subset& b) {
    return a.elements() < b.elements();
  }

  /// "{0,2,5}"
  std::string to_string() const;

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept {
    std::size_t h = s.universe();
    for (Word w : s.words()) h = h * 0x9E3779B97F4A7C15ULL ^ (w + (h >> 7));
    return h;
  }
};

}  // namespace hyperforge
