#include <bit>

#include "gca/kernels.hpp"

namespace gca::kernels::scalar {

void step_binary(const BinaryRule& rule, std::span<const std::uint32_t> in,
                 std::span<std::uint32_t> out) {
  for (std::size_t k = 0; k < in.size(); ++k) {
    const std::uint32_t c = in[k];
    std::uint32_t next = 0;
    for (std::size_t m = 0; m < rule.cells; ++m) {
      const std::uint32_t* cells = rule.neighbor_cells.data() + m * rule.neighbors;
      std::uint32_t index = 0;
      for (std::size_t i = 0; i < rule.neighbors; ++i) index |= ((c >> cells[i]) & 1u) << i;
      next |= (rule.delta[index] & 1u) << m;
    }
    out[k] = next;
  }
}

void permute_bits(std::span<const std::uint32_t> source, std::span<const std::uint32_t> in,
                  std::span<std::uint32_t> out) {
  for (std::size_t k = 0; k < in.size(); ++k) {
    std::uint32_t moved = 0;
    for (std::size_t m = 0; m < source.size(); ++m) moved |= ((in[k] >> source[m]) & 1u) << m;
    out[k] = moved;
  }
}

void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= src[i];
}

void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
}

bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::uint64_t popcount(std::span<const std::uint64_t> words) {
  std::uint64_t total = 0;
  for (std::uint64_t w : words) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

}  // namespace gca::kernels::scalar
