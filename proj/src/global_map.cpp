#include "gca/global_map.hpp"

#include <numeric>
#include <string>

#include "gca/kernels.hpp"

namespace gca {

namespace {

nlohmann::json states_json(const Configuration& c) {
  return std::vector<int>(c.begin(), c.end());
}

}  // namespace

GlobalMap::GlobalMap(CellSpacePtr space, unsigned states)
    : space_(std::move(space)), states_(states) {
  if (states_ == 0 || states_ > kMaxStates)
    throw InputError("state count must be in 1.." + std::to_string(kMaxStates));
  if (power_count(states_, space_->cells())) codec_.emplace(states_, space_->cells());
}

GlobalMap GlobalMap::from_table(CellSpacePtr space, unsigned states,
                                std::vector<std::uint64_t> table) {
  GlobalMap map(std::move(space), states);
  if (!map.codec_ || map.codec_->count() > kExhaustiveLimit)
    throw BoundExceeded("configuration space too large to tabulate");
  if (table.size() != map.codec_->count())
    throw InputError("global map table has " + std::to_string(table.size()) +
                     " entries, expected " + std::to_string(map.codec_->count()));
  for (std::size_t k = 0; k < table.size(); ++k)
    if (table[k] >= map.codec_->count())
      throw InputError("global map entry " + std::to_string(k) + " is not a configuration code");
  map.table_ = std::move(table);
  return map;
}

GlobalMap GlobalMap::from_function(CellSpacePtr space, unsigned states, Function f,
                                   std::uint64_t limit) {
  GlobalMap map(std::move(space), states);
  if (map.codec_ && map.codec_->count() <= limit) {
    const MixedRadix& codec = *map.codec_;
    map.table_.resize(codec.count());
    for (std::uint64_t code = 0; code < codec.count(); ++code) {
      const Configuration image = f(codec.decode_as<Configuration>(code));
      if (image.size() != codec.length())
        throw InputError("global map returned a configuration of the wrong length");
      map.table_[code] = codec.encode(image);
    }
  } else {
    map.function_ = std::move(f);
  }
  return map;
}

GlobalMap GlobalMap::of(const SemiCellularAutomaton& ca, std::uint64_t limit) {
  auto count = power_count(ca.states(), ca.space().cells());
  if (count && *count <= limit) {
    GlobalMap map(ca.space_ptr(), ca.states());
    map.table_ = tabulate(ca, limit);
    return map;
  }
  // Black box: keeps its own copy of the automaton alive.
  auto owned = std::make_shared<const SemiCellularAutomaton>(ca);
  return from_function(ca.space_ptr(), ca.states(),
                       [owned](const Configuration& c) { return step(*owned, c); }, limit);
}

Configuration GlobalMap::operator()(const Configuration& c) const {
  if (c.size() != space_->cells()) throw InputError("configuration has the wrong length");
  if (tabulated()) return codec_->decode_as<Configuration>(table_[codec_->encode(c)]);
  return function_(c);
}

std::vector<std::uint64_t> tabulate(const SemiCellularAutomaton& ca, std::uint64_t limit) {
  auto count = power_count(ca.states(), ca.space().cells());
  if (!count || *count > limit)
    throw BoundExceeded("configuration space exceeds the exhaustive limit");
  std::vector<std::uint64_t> table(*count);

  if (ca.states() == 2 && ca.space().cells() <= 32) {
    std::vector<std::uint32_t> delta(ca.delta().begin(), ca.delta().end());
    kernels::BinaryRule rule{ca.space().cells(), ca.neighbors(), ca.neighbor_cells(), delta};
    std::vector<std::uint32_t> in(*count), out(*count);
    std::iota(in.begin(), in.end(), std::uint32_t{0});
    kernels::step_binary(rule, in, out);
    std::copy(out.begin(), out.end(), table.begin());
    return table;
  }

  const MixedRadix codec(ca.states(), ca.space().cells());
  for (std::uint64_t code = 0; code < *count; ++code)
    table[code] = codec.encode(step(ca, codec.decode_as<Configuration>(code)));
  return table;
}

Verdict same_global_function(const GlobalMap& a, const GlobalMap& b) {
  if (!a.tabulated() || !b.tabulated())
    throw BoundExceeded("pointwise comparison needs tabulated maps");
  if (a.table().size() != b.table().size() || a.states() != b.states())
    return Verdict::fail("configuration spaces differ",
                         {{"size", a.table().size()}, {"size2", b.table().size()}});
  for (std::uint64_t code = 0; code < a.table().size(); ++code) {
    if (a(code) != b(code)) {
      const MixedRadix& codec = *a.codec();
      return Verdict::fail(
          "global functions differ",
          {{"configuration", states_json(codec.decode_as<Configuration>(code))},
           {"image", states_json(codec.decode_as<Configuration>(a(code)))},
           {"image2", states_json(codec.decode_as<Configuration>(b(code)))}});
    }
  }
  return Verdict::pass();
}

}  // namespace gca
