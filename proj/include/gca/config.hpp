#pragma once

// Global and local configurations, and the mixed-radix codes that index them:
// code(c) = sum_i c[i] * |Q|^i.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gca {

using State = std::uint8_t;
inline constexpr unsigned kMaxStates = 256;

template <class Tag>
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t size, State fill = 0) : values_(size, fill) {}
  explicit StateVector(std::vector<State> values) : values_(std::move(values)) {}
  StateVector(std::initializer_list<State> values) : values_(values) {}

  std::size_t size() const { return values_.size(); }
  State operator[](std::size_t i) const { return values_[i]; }
  State& operator[](std::size_t i) { return values_[i]; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }
  std::span<const State> values() const { return values_; }

  friend bool operator==(const StateVector&, const StateVector&) = default;
  friend auto operator<=>(const StateVector&, const StateVector&) = default;

 private:
  std::vector<State> values_;
};

/// c : M -> Q, one state per cell in index order.
using Configuration = StateVector<struct ConfigurationTag>;
/// l : N -> Q, one state per neighbor in canonical neighborhood order.
using LocalConfiguration = StateVector<struct LocalConfigurationTag>;

/// |Q|^length, or nullopt when it does not fit in 63 bits.
std::optional<std::uint64_t> power_count(unsigned states, std::size_t length);

/// Mixed-radix codec for fixed-length state vectors over |Q| states.
class MixedRadix {
 public:
  /// Throws BoundExceeded when |Q|^length overflows 63 bits.
  MixedRadix(unsigned states, std::size_t length);

  unsigned states() const { return states_; }
  std::size_t length() const { return length_; }
  std::uint64_t count() const { return count_; }
  std::uint64_t weight(std::size_t i) const { return weights_[i]; }

  std::uint64_t encode(std::span<const State> values) const;
  void decode(std::uint64_t code, std::span<State> out) const;
  State digit(std::uint64_t code, std::size_t i) const {
    return static_cast<State>((code / weights_[i]) % states_);
  }
  std::uint64_t with_digit(std::uint64_t code, std::size_t i, State value) const {
    return code - digit(code, i) * weights_[i] + value * weights_[i];
  }

  template <class Tag>
  std::uint64_t encode(const StateVector<Tag>& v) const { return encode(v.values()); }
  template <class V>
  V decode_as(std::uint64_t code) const {
    std::vector<State> values(length_);
    decode(code, values);
    return V(std::move(values));
  }

 private:
  unsigned states_;
  std::size_t length_;
  std::uint64_t count_;
  std::vector<std::uint64_t> weights_;
};

/// Parses "0110" (one digit per cell, |Q| <= 10) or "0,1,12,3".
Configuration parse_configuration(const std::string& text, unsigned states);
/// Inverse of parse_configuration: digits when |Q| <= 10, commas otherwise.
std::string format_configuration(const Configuration& c, unsigned states);

}  // namespace gca
