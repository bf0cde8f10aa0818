#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "contact/kernels.hpp"

namespace contact {

/// Fixed-width dynamic bitset. All bulk operations go through the active
/// kernel table, so the same code exercises the scalar and SIMD paths.
class Bitset {
 public:
  using Word = kernels::Word;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  static Bitset full(std::size_t size);

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  const Word* data() const { return words_.data(); }
  Word* data() { return words_.data(); }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& other);
  Bitset& operator&=(const Bitset& other);
  /// Set difference: clears every bit set in other.
  Bitset& operator-=(const Bitset& other);

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool intersects(const Bitset& other) const;
  bool is_subset_of(const Bitset& other) const;
  Bitset complement() const;

  /// Index of the lowest set bit at or after from, or size() if none.
  std::size_t find_next(std::size_t from) const;
  std::size_t find_first() const { return find_next(0); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        const std::size_t i = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        f(i);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const;

  friend bool operator==(const Bitset&, const Bitset&) = default;
  friend std::strong_ordering operator<=>(const Bitset& a, const Bitset& b);

  std::size_t hash() const;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Square boolean relation stored row-major as bitsets: row(i).test(j) is (i, j).
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : rows_(n, Bitset(n)) {}

  static BitMatrix identity(std::size_t n);

  std::size_t size() const { return rows_.size(); }
  bool test(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  void set(std::size_t i, std::size_t j) { rows_[i].set(j); }
  void reset(std::size_t i, std::size_t j) { rows_[i].reset(j); }
  void assign(std::size_t i, std::size_t j, bool v) { rows_[i].assign(j, v); }

  const Bitset& row(std::size_t i) const { return rows_[i]; }
  Bitset& row(std::size_t i) { return rows_[i]; }

  BitMatrix transpose() const;
  std::size_t count() const;

  /// Reflexive-transitive closure in place (Warshall over word rows).
  void close_reflexive_transitive();

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::vector<Bitset> rows_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace contact
