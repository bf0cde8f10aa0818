#pragma once

// Word-row kernels behind Bitset and BitMatrix.
//
// Every kernel has a portable scalar reference in kernels/scalar.cpp. On x86-64
// an AVX2 variant is compiled separately and picked at startup when the CPU
// reports support; CONTACT_KERNELS=scalar in the environment forces the
// reference path. Both tables must agree bit for bit (tests/test_kernels.cpp).

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace contact::kernels {

using Word = std::uint64_t;

enum class Backend { Scalar, Avx2 };

struct Table {
  // dst |= src
  void (*or_into)(Word* dst, const Word* src, std::size_t words);
  // dst &= src
  void (*and_into)(Word* dst, const Word* src, std::size_t words);
  // dst &= ~src
  void (*andnot_into)(Word* dst, const Word* src, std::size_t words);
  // (a & b) != 0
  bool (*intersects)(const Word* a, const Word* b, std::size_t words);
  // (a & ~b) == 0
  bool (*is_subset)(const Word* a, const Word* b, std::size_t words);
  std::size_t (*popcount)(const Word* a, std::size_t words);
};

const Table& scalar_table();

/// Returns nullptr when the backend was not compiled in or the CPU lacks it.
const Table* table_for(Backend backend);

const Table& active();
Backend active_backend();

/// Switches the process-wide table. Returns false if the backend is unavailable.
bool set_backend(Backend backend);

std::vector<Backend> available_backends();
std::string_view backend_name(Backend backend);

}  // namespace contact::kernels
