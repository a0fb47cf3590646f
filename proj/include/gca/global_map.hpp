#pragma once

// Self-maps of the configuration space Q^M, either tabulated over all
// mixed-radix codes or kept as a black box when |Q|^|M| is too large.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gca/automaton.hpp"

namespace gca {

/// Configuration spaces up to this size are tabulated and analysed exhaustively.
inline constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 16;

class GlobalMap {
 public:
  using Function = std::function<Configuration(const Configuration&)>;

  /// table[code(c)] = code(Δ(c)); validated for length and range.
  static GlobalMap from_table(CellSpacePtr space, unsigned states, std::vector<std::uint64_t> table);
  /// Memoised into a table when |Q|^|M| <= limit, otherwise kept as a black box.
  static GlobalMap from_function(CellSpacePtr space, unsigned states, Function f,
                                 std::uint64_t limit = kExhaustiveLimit);
  /// The global transition function of an automaton.
  static GlobalMap of(const SemiCellularAutomaton& ca, std::uint64_t limit = kExhaustiveLimit);

  const CellSpace& space() const { return *space_; }
  const CellSpacePtr& space_ptr() const { return space_; }
  unsigned states() const { return states_; }
  bool tabulated() const { return !table_.empty(); }
  /// Only meaningful when tabulated().
  const std::vector<std::uint64_t>& table() const { return table_; }
  /// Present whenever |Q|^|M| fits a 63-bit code.
  const std::optional<MixedRadix>& codec() const { return codec_; }

  Configuration operator()(const Configuration& c) const;
  /// Requires tabulated().
  std::uint64_t operator()(std::uint64_t code) const { return table_[code]; }

 private:
  GlobalMap(CellSpacePtr space, unsigned states);

  CellSpacePtr space_;
  unsigned states_;
  std::optional<MixedRadix> codec_;
  std::vector<std::uint64_t> table_;
  Function function_;
};

/// Tabulates Δ of an automaton over all codes. Binary spaces with at most 32
/// cells go through the SIMD step kernel. Throws BoundExceeded above `limit`.
std::vector<std::uint64_t> tabulate(const SemiCellularAutomaton& ca,
                                    std::uint64_t limit = kExhaustiveLimit);

/// Pointwise equality of two tabulated maps over the same space; the witness
/// is the first configuration on which they differ.
Verdict same_global_function(const GlobalMap& a, const GlobalMap& b);

}  // namespace gca
