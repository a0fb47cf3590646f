// Compiled with -mavx2; only reached through dispatch after a CPU check.

#include <immintrin.h>

#include "gca/kernels.hpp"

namespace gca::kernels::avx2 {

namespace {

inline __m256i load(const void* p) { return _mm256_loadu_si256(static_cast<const __m256i*>(p)); }
inline void store(void* p, __m256i v) { _mm256_storeu_si256(static_cast<__m256i*>(p), v); }

// Per-byte popcount by nibble lookup, summed into 64-bit lanes.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i counts =
      _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

}  // namespace

void step_binary(const BinaryRule& rule, std::span<const std::uint32_t> in,
                 std::span<std::uint32_t> out) {
  const __m256i one = _mm256_set1_epi32(1);
  const int* delta = reinterpret_cast<const int*>(rule.delta.data());
  std::size_t k = 0;
  for (; k + 8 <= in.size(); k += 8) {
    const __m256i c = load(in.data() + k);
    __m256i next = _mm256_setzero_si256();
    for (std::size_t m = 0; m < rule.cells; ++m) {
      const std::uint32_t* cells = rule.neighbor_cells.data() + m * rule.neighbors;
      __m256i index = _mm256_setzero_si256();
      for (std::size_t i = 0; i < rule.neighbors; ++i) {
        const __m256i bit =
            _mm256_and_si256(_mm256_srlv_epi32(c, _mm256_set1_epi32(static_cast<int>(cells[i]))), one);
        index = _mm256_or_si256(index, _mm256_sllv_epi32(bit, _mm256_set1_epi32(static_cast<int>(i))));
      }
      const __m256i value = _mm256_and_si256(_mm256_i32gather_epi32(delta, index, 4), one);
      next = _mm256_or_si256(next, _mm256_sllv_epi32(value, _mm256_set1_epi32(static_cast<int>(m))));
    }
    store(out.data() + k, next);
  }
  if (k < in.size()) scalar::step_binary(rule, in.subspan(k), out.subspan(k));
}

void permute_bits(std::span<const std::uint32_t> source, std::span<const std::uint32_t> in,
                  std::span<std::uint32_t> out) {
  const __m256i one = _mm256_set1_epi32(1);
  std::size_t k = 0;
  for (; k + 8 <= in.size(); k += 8) {
    const __m256i c = load(in.data() + k);
    __m256i moved = _mm256_setzero_si256();
    for (std::size_t m = 0; m < source.size(); ++m) {
      const __m256i bit =
          _mm256_and_si256(_mm256_srlv_epi32(c, _mm256_set1_epi32(static_cast<int>(source[m]))), one);
      moved = _mm256_or_si256(moved, _mm256_sllv_epi32(bit, _mm256_set1_epi32(static_cast<int>(m))));
    }
    store(out.data() + k, moved);
  }
  if (k < in.size()) scalar::permute_bits(source, in.subspan(k), out.subspan(k));
}

void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  std::size_t i = 0;
  for (; i + 4 <= dst.size(); i += 4)
    store(dst.data() + i, _mm256_and_si256(load(dst.data() + i), load(src.data() + i)));
  if (i < dst.size()) scalar::and_words(dst.subspan(i), src.subspan(i));
}

void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  std::size_t i = 0;
  for (; i + 4 <= dst.size(); i += 4)
    store(dst.data() + i, _mm256_or_si256(load(dst.data() + i), load(src.data() + i)));
  if (i < dst.size()) scalar::or_words(dst.subspan(i), src.subspan(i));
}

bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4)
    if (!_mm256_testc_si256(load(b.data() + i), load(a.data() + i))) return false;
  return i == a.size() || scalar::is_subset(a.subspan(i), b.subspan(i));
}

std::uint64_t popcount(std::span<const std::uint64_t> words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words.size(); i += 4) acc = _mm256_add_epi64(acc, popcount_lanes(load(words.data() + i)));
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  if (i < words.size()) total += scalar::popcount(words.subspan(i));
  return total;
}

}  // namespace gca::kernels::avx2
