#include "gca/automaton.hpp"

#include <algorithm>
#include <string>

namespace gca {

namespace {

constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

MixedRadix local_codec_for(unsigned states, std::size_t neighbors) {
  auto count = power_count(states, neighbors);
  if (!count || *count > kMaxLocalTable)
    throw BoundExceeded("local rule table " + std::to_string(states) + "^" +
                        std::to_string(neighbors) + " exceeds 2^20 entries");
  return MixedRadix(states, neighbors);
}

}  // namespace

std::vector<std::size_t> saturate_neighborhood(const CellSpace& r, std::vector<std::size_t> cosets) {
  const FiniteGroup& g = r.group();
  std::vector<bool> in(r.cosets().size(), false);
  for (std::size_t c : cosets) {
    if (c >= r.cosets().size()) throw InputError("neighbor coset index out of range");
    in[c] = true;
  }
  for (std::size_t c : cosets)
    for (Element g0 : r.stabilizer().members())
      in[r.cosets().index_of(g.mul(g0, r.cosets().representative(c)))] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < in.size(); ++c)
    if (in[c]) out.push_back(c);
  return out;
}

SemiCellularAutomaton::SemiCellularAutomaton(CellSpacePtr space, unsigned states,
                                             std::vector<std::size_t> neighborhood,
                                             std::vector<State> delta, Closure closure)
    : space_(std::move(space)),
      states_(states),
      neighborhood_(std::move(neighborhood)),
      delta_(std::move(delta)),
      local_codec_(1, 0) {
  if (states_ == 0 || states_ > kMaxStates)
    throw InputError("state count must be in 1.." + std::to_string(kMaxStates));
  std::vector<std::size_t> sorted = neighborhood_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("neighborhood lists a coset twice");
  std::vector<std::size_t> closed = saturate_neighborhood(*space_, sorted);
  if (closed != sorted) {
    if (closure == Closure::reject)
      throw InputError("neighborhood is not closed under the origin stabiliser (" +
                       std::to_string(sorted.size()) + " cosets, closure has " +
                       std::to_string(closed.size()) + ")");
  }
  neighborhood_ = std::move(closed);
  local_codec_ = local_codec_for(states_, neighborhood_.size());
  if (delta_.size() != local_codec_.count())
    throw InputError("local rule has " + std::to_string(delta_.size()) + " entries, expected " +
                     std::to_string(local_codec_.count()));
  for (std::size_t k = 0; k < delta_.size(); ++k)
    if (delta_[k] >= states_)
      throw InputError("local rule output " + std::to_string(delta_[k]) + " at entry " +
                       std::to_string(k) + " is not a state");

  position_.assign(space_->cosets().size(), kAbsent);
  for (std::size_t i = 0; i < neighborhood_.size(); ++i) position_[neighborhood_[i]] = i;
  neighbor_cells_.resize(space_->cells() * neighborhood_.size());
  for (Point m = 0; m < space_->cells(); ++m)
    for (std::size_t i = 0; i < neighborhood_.size(); ++i)
      neighbor_cells_[m * neighborhood_.size() + i] = space_->semi_act(m, neighborhood_[i]);
}

SemiCellularAutomaton SemiCellularAutomaton::from_representatives(
    CellSpacePtr space, unsigned states, const std::vector<Element>& representatives,
    std::vector<State> delta, Closure closure) {
  std::vector<std::size_t> cosets;
  for (Element rep : representatives) {
    if (rep >= space->group().order())
      throw InputError("neighbor representative " + std::to_string(rep) + " out of range");
    cosets.push_back(space->cosets().index_of(rep));
  }
  std::sort(cosets.begin(), cosets.end());
  cosets.erase(std::unique(cosets.begin(), cosets.end()), cosets.end());
  return SemiCellularAutomaton(std::move(space), states, std::move(cosets), std::move(delta),
                               closure);
}

std::optional<std::size_t> SemiCellularAutomaton::position(std::size_t coset) const {
  if (coset >= position_.size() || position_[coset] == kAbsent) return std::nullopt;
  return position_[coset];
}

State SemiCellularAutomaton::apply_local(const LocalConfiguration& l) const {
  if (l.size() != neighbors()) throw InputError("local configuration has the wrong length");
  return delta_[local_codec_.encode(l)];
}

LocalConfiguration bullet(const SemiCellularAutomaton& ca, Element g0, const LocalConfiguration& l) {
  const CellSpace& r = ca.space();
  if (!r.stabilizer().contains(g0)) throw PreconditionError("element is not in the stabiliser G0");
  if (l.size() != ca.neighbors()) throw InputError("local configuration has the wrong length");
  const FiniteGroup& g = r.group();
  const Element inverse = g.inv(g0);
  LocalConfiguration out(ca.neighbors());
  for (std::size_t i = 0; i < ca.neighbors(); ++i) {
    const Element rep = r.cosets().representative(ca.neighborhood()[i]);
    const auto source = ca.position(r.cosets().index_of(g.mul(inverse, rep)));
    if (!source) throw std::logic_error("neighborhood not closed under G0");
    out[i] = l[*source];
  }
  return out;
}

Verdict is_cellular(const SemiCellularAutomaton& ca, const Subgroup& h) {
  const CellSpace& r = ca.space();
  if (!r.admits(h)) throw PreconditionError("subgroup misses a coordinate");
  const Subgroup h0 = r.origin_stabilizer_in(h);
  const MixedRadix& codec = ca.local_codec();
  const Element identity = r.group().identity();

  // Per h0 the bullet action is a fixed permutation of neighbor positions.
  std::vector<std::size_t> pull(ca.neighbors());
  std::vector<State> digits(ca.neighbors()), moved(ca.neighbors());
  for (Element x : h0.members()) {
    if (x == identity) continue;
    const FiniteGroup& g = r.group();
    for (std::size_t i = 0; i < ca.neighbors(); ++i) {
      const Element rep = r.cosets().representative(ca.neighborhood()[i]);
      pull[i] = *ca.position(r.cosets().index_of(g.mul(g.inv(x), rep)));
    }
    for (std::uint64_t code = 0; code < codec.count(); ++code) {
      codec.decode(code, digits);
      for (std::size_t i = 0; i < digits.size(); ++i) moved[i] = digits[pull[i]];
      const std::uint64_t moved_code = codec.encode(moved);
      if (ca.apply_local(moved_code) != ca.apply_local(code))
        return Verdict::fail("bullet invariance",
                             {{"h0", x},
                              {"local", std::vector<int>(digits.begin(), digits.end())},
                              {"delta", ca.apply_local(code)},
                              {"delta_moved", ca.apply_local(moved_code)}});
    }
  }
  return Verdict::pass();
}

Configuration shift(const LeftAction& a, Element g, const Configuration& c) {
  if (c.size() != a.points()) throw InputError("configuration has the wrong length");
  const Element inverse = a.group().inv(g);
  Configuration out(c.size());
  for (Point m = 0; m < c.size(); ++m) out[m] = c[a.act(inverse, m)];
  return out;
}

LocalConfiguration observe(const SemiCellularAutomaton& ca, const Configuration& c, Point m) {
  if (c.size() != ca.space().cells()) throw InputError("configuration has the wrong length");
  LocalConfiguration out(ca.neighbors());
  for (std::size_t i = 0; i < ca.neighbors(); ++i) out[i] = c[ca.neighbor_cell(m, i)];
  return out;
}

Configuration realize(const SemiCellularAutomaton& ca, const LocalConfiguration& l, Point m) {
  if (l.size() != ca.neighbors()) throw InputError("local configuration has the wrong length");
  Configuration out(ca.space().cells());
  for (std::size_t i = 0; i < ca.neighbors(); ++i) out[ca.neighbor_cell(m, i)] = l[i];
  return out;
}

Configuration step(const SemiCellularAutomaton& ca, const Configuration& c) {
  if (c.size() != ca.space().cells()) throw InputError("configuration has the wrong length");
  Configuration out(c.size());
  const MixedRadix& codec = ca.local_codec();
  for (Point m = 0; m < c.size(); ++m) {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < ca.neighbors(); ++i)
      code += c[ca.neighbor_cell(m, i)] * codec.weight(i);
    out[m] = ca.apply_local(code);
  }
  return out;
}

Configuration step_origin_form(const SemiCellularAutomaton& ca, const Configuration& c) {
  const CellSpace& r = ca.space();
  if (c.size() != r.cells()) throw InputError("configuration has the wrong length");
  // N0 = m0 ↷ N, listed per neighbor.
  std::vector<Point> origin_neighbors(ca.neighbors());
  for (std::size_t i = 0; i < ca.neighbors(); ++i)
    origin_neighbors[i] = r.semi_act(r.origin(), ca.neighborhood()[i]);

  Configuration out(c.size());
  LocalConfiguration l(ca.neighbors());
  for (Point m = 0; m < c.size(); ++m) {
    const Configuration moved = shift(r.action(), r.group().inv(r.coordinate(m)), c);
    // δ0 evaluated on the restriction of the moved configuration to N0.
    for (std::size_t i = 0; i < ca.neighbors(); ++i) l[i] = moved[origin_neighbors[i]];
    out[m] = ca.apply_local(l);
  }
  return out;
}

std::vector<std::size_t> essential_neighborhood(const SemiCellularAutomaton& ca) {
  const MixedRadix& codec = ca.local_codec();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ca.neighbors(); ++i) {
    bool essential = false;
    for (std::uint64_t code = 0; code < codec.count() && !essential; ++code) {
      if (codec.digit(code, i) != 0) continue;
      for (unsigned q = 1; q < ca.states() && !essential; ++q)
        essential = ca.apply_local(codec.with_digit(code, i, static_cast<State>(q))) !=
                    ca.apply_local(code);
    }
    if (essential) out.push_back(i);
  }
  return out;
}

}  // namespace gca
