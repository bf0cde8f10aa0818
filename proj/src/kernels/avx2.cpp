// Compiled with -mavx2; only reached after a runtime CPU check.
#include "contact/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace contact::kernels {
namespace {

constexpr std::size_t kLane = 4;  // 64-bit words per __m256i

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void or_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
  for (; i < words; ++i) dst[i] |= src[i];
}

void and_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane) store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
  for (; i < words; ++i) dst[i] &= src[i];
}

void andnot_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  // _mm256_andnot_si256(x, y) computes ~x & y
  for (; i + kLane <= words; i += kLane) store(dst + i, _mm256_andnot_si256(load(src + i), load(dst + i)));
  for (; i < words; ++i) dst[i] &= ~src[i];
}

bool intersects(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane)
    if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
  for (; i < words; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool is_subset(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  // testc(b, a) is 1 iff (~b & a) == 0
  for (; i + kLane <= words; i += kLane)
    if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
  for (; i < words; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::size_t popcount(const Word* a, std::size_t words) {
  // No AVX2 popcount instruction; the hardware scalar popcnt is the fast path.
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

constexpr Table kAvx2{or_into, and_into, andnot_into, intersects, is_subset, popcount};

}  // namespace

const Table& avx2_table() { return kAvx2; }

}  // namespace contact::kernels
