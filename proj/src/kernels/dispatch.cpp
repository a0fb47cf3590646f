#include <cstdlib>
#include <cstring>

#include "gca/kernels.hpp"

namespace gca::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(GCA_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

bool forced_scalar() {
  const char* value = std::getenv("GCA_FORCE_SCALAR");
  return value != nullptr && std::strcmp(value, "0") != 0 && *value != '\0';
}

struct Table {
  Isa isa;
  void (*step_binary)(const BinaryRule&, std::span<const std::uint32_t>, std::span<std::uint32_t>);
  void (*permute_bits)(std::span<const std::uint32_t>, std::span<const std::uint32_t>,
                       std::span<std::uint32_t>);
  void (*and_words)(std::span<std::uint64_t>, std::span<const std::uint64_t>);
  void (*or_words)(std::span<std::uint64_t>, std::span<const std::uint64_t>);
  bool (*is_subset)(std::span<const std::uint64_t>, std::span<const std::uint64_t>);
  std::uint64_t (*popcount)(std::span<const std::uint64_t>);
};

Table select() {
#if defined(GCA_HAVE_AVX2)
  if (cpu_has_avx2() && !forced_scalar())
    return {Isa::avx2,      avx2::step_binary, avx2::permute_bits, avx2::and_words,
            avx2::or_words, avx2::is_subset,   avx2::popcount};
#endif
  return {Isa::scalar,      scalar::step_binary, scalar::permute_bits, scalar::and_words,
          scalar::or_words, scalar::is_subset,   scalar::popcount};
}

const Table& table() {
  static const Table t = select();
  return t;
}

}  // namespace

Isa active_isa() { return table().isa; }

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) { return isa == Isa::scalar || cpu_has_avx2(); }

void step_binary(const BinaryRule& rule, std::span<const std::uint32_t> in,
                 std::span<std::uint32_t> out) {
  table().step_binary(rule, in, out);
}
void permute_bits(std::span<const std::uint32_t> source, std::span<const std::uint32_t> in,
                  std::span<std::uint32_t> out) {
  table().permute_bits(source, in, out);
}
void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  table().and_words(dst, src);
}
void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  table().or_words(dst, src);
}
bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  return table().is_subset(a, b);
}
std::uint64_t popcount(std::span<const std::uint64_t> words) { return table().popcount(words); }

}  // namespace gca::kernels

#if !defined(GCA_HAVE_AVX2)
// Builds without AVX2 still export the symbols; isa_available() keeps callers away.
namespace gca::kernels::avx2 {
void step_binary(const BinaryRule& rule, std::span<const std::uint32_t> in,
                 std::span<std::uint32_t> out) {
  scalar::step_binary(rule, in, out);
}
void permute_bits(std::span<const std::uint32_t> source, std::span<const std::uint32_t> in,
                  std::span<std::uint32_t> out) {
  scalar::permute_bits(source, in, out);
}
void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  scalar::and_words(dst, src);
}
void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  scalar::or_words(dst, src);
}
bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  return scalar::is_subset(a, b);
}
std::uint64_t popcount(std::span<const std::uint64_t> words) { return scalar::popcount(words); }
}  // namespace gca::kernels::avx2
#endif
