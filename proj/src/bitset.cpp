#include "contact/bitset.hpp"

namespace contact {

namespace {
const kernels::Table& k() { return kernels::active(); }
}  // namespace

Bitset Bitset::full(std::size_t size) {
  Bitset b(size);
  for (auto& w : b.words_) w = ~Word{0};
  if (const std::size_t tail = size % kWordBits; tail != 0 && !b.words_.empty())
    b.words_.back() = (Word{1} << tail) - 1;
  return b;
}

std::size_t Bitset::count() const { return k().popcount(words_.data(), words_.size()); }

bool Bitset::any() const {
  for (Word w : words_)
    if (w) return true;
  return false;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  k().or_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& other) {
  k().and_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

Bitset& Bitset::operator-=(const Bitset& other) {
  k().andnot_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

bool Bitset::intersects(const Bitset& other) const {
  return k().intersects(words_.data(), other.words_.data(), words_.size());
}

bool Bitset::is_subset_of(const Bitset& other) const {
  return k().is_subset(words_.data(), other.words_.data(), words_.size());
}

Bitset Bitset::complement() const { return full(size_) - *this; }

std::size_t Bitset::find_next(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t w = from / kWordBits;
  Word bits = words_[w] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (bits) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == words_.size()) return size_;
    bits = words_[w];
  }
}

std::vector<std::size_t> Bitset::indices() const {
  std::vector<std::size_t> out;
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::strong_ordering operator<=>(const Bitset& a, const Bitset& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // Compare as integers, most significant word first.
  for (std::size_t w = a.words_.size(); w-- > 0;)
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t Bitset::hash() const {
  std::size_t h = std::hash<std::size_t>{}(size_);
  for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(size());
  for (std::size_t i = 0; i < size(); ++i) rows_[i].for_each([&](std::size_t j) { t.set(j, i); });
  return t;
}

std::size_t BitMatrix::count() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.count();
  return total;
}

void BitMatrix::close_reflexive_transitive() {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) rows_[i].set(i);
  for (std::size_t mid = 0; mid < n; ++mid) {
    const Bitset through = rows_[mid];
    for (std::size_t i = 0; i < n; ++i)
      if (rows_[i].test(mid)) rows_[i] |= through;
  }
}

}  // namespace contact
