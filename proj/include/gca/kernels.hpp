#pragma once

// Data-parallel inner loops. Each kernel has a portable scalar reference in
// kernels::scalar and, on x86-64, an AVX2 variant in kernels::avx2; the
// unqualified entry points dispatch to the best variant the CPU supports.
// Setting GCA_FORCE_SCALAR=1 in the environment pins the scalar variants.
//
// Binary kernels work on configurations over two states packed as bit masks
// (bit m = state of cell m), which covers every |Q| = 2 space with at most 32
// cells.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace gca::kernels {

enum class Isa { scalar, avx2 };

/// The variant the dispatching entry points use.
Isa active_isa();
std::string_view isa_name(Isa isa);
/// True when this build contains the variant and the CPU can run it.
bool isa_available(Isa isa);

/// Geometry of a binary global transition function: neighbor_cells holds,
/// row-major, the cell m ↷ n_i for every cell m and neighbor i.
struct BinaryRule {
  std::size_t cells = 0;
  std::size_t neighbors = 0;
  std::span<const std::uint32_t> neighbor_cells;  // cells * neighbors
  std::span<const std::uint32_t> delta;            // 2^neighbors entries, each 0 or 1
};

/// out[k] = Δ(in[k]) for packed binary configurations.
void step_binary(const BinaryRule& rule, std::span<const std::uint32_t> in,
                 std::span<std::uint32_t> out);

/// out[k] bit m = in[k] bit source[m]; with source[m] = g⁻¹ |> m this is the
/// shift g ↴ c.
void permute_bits(std::span<const std::uint32_t> source, std::span<const std::uint32_t> in,
                  std::span<std::uint32_t> out);

/// dst &= src, word-wise.
void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
/// dst |= src, word-wise.
void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
/// True when every bit of a is set in b.
bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
std::uint64_t popcount(std::span<const std::uint64_t> words);

namespace scalar {
void step_binary(const BinaryRule& rule, std::span<const std::uint32_t> in,
                 std::span<std::uint32_t> out);
void permute_bits(std::span<const std::uint32_t> source, std::span<const std::uint32_t> in,
                  std::span<std::uint32_t> out);
void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
std::uint64_t popcount(std::span<const std::uint64_t> words);
}  // namespace scalar

namespace avx2 {
// Only callable when isa_available(Isa::avx2).
void step_binary(const BinaryRule& rule, std::span<const std::uint32_t> in,
                 std::span<std::uint32_t> out);
void permute_bits(std::span<const std::uint32_t> source, std::span<const std::uint32_t> in,
                  std::span<std::uint32_t> out);
void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
std::uint64_t popcount(std::span<const std::uint64_t> words);
}  // namespace avx2

}  // namespace gca::kernels
