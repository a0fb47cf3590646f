#include "gca/config.hpp"

#include <sstream>

#include "gca/verdict.hpp"

namespace gca {

std::optional<std::uint64_t> power_count(unsigned states, std::size_t length) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 63;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (states != 0 && count > kLimit / states) return std::nullopt;
    count *= states;
  }
  return count;
}

MixedRadix::MixedRadix(unsigned states, std::size_t length)
    : states_(states), length_(length), weights_(length) {
  if (states == 0 || states > kMaxStates)
    throw InputError("state count must be in 1.." + std::to_string(kMaxStates));
  auto count = power_count(states, length);
  if (!count)
    throw BoundExceeded(std::to_string(states) + "^" + std::to_string(length) +
                        " does not fit a 63-bit code");
  count_ = *count;
  std::uint64_t w = 1;
  for (std::size_t i = 0; i < length; ++i) {
    weights_[i] = w;
    w *= states;
  }
}

std::uint64_t MixedRadix::encode(std::span<const State> values) const {
  std::uint64_t code = 0;
  for (std::size_t i = length_; i-- > 0;) code = code * states_ + values[i];
  return code;
}

void MixedRadix::decode(std::uint64_t code, std::span<State> out) const {
  for (std::size_t i = 0; i < length_; ++i) {
    out[i] = static_cast<State>(code % states_);
    code /= states_;
  }
}

Configuration parse_configuration(const std::string& text, unsigned states) {
  std::vector<State> values;
  auto push = [&](unsigned long v) {
    if (v >= states)
      throw InputError("state " + std::to_string(v) + " out of range for " +
                       std::to_string(states) + " states");
    values.push_back(static_cast<State>(v));
  };
  if (text.find(',') != std::string::npos) {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        unsigned long v = std::stoul(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        push(v);
      } catch (const std::logic_error&) {
        throw InputError("cannot parse state '" + item + "'");
      }
    }
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw InputError(std::string("cannot parse state '") + ch + "'");
      push(static_cast<unsigned long>(ch - '0'));
    }
  }
  return Configuration(std::move(values));
}

std::string format_configuration(const Configuration& c, unsigned states) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (states > 10 && i > 0) out += ',';
    if (states > 10)
      out += std::to_string(c[i]);
    else
      out += static_cast<char>('0' + c[i]);
  }
  return out;
}

}  // namespace gca
