#include "gca/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gca::catalog {

namespace {

Permutation compose_perm(const Permutation& g, const Permutation& h) {
  Permutation out(h.size());
  for (std::size_t x = 0; x < h.size(); ++x) out[x] = g[h[x]];
  return out;
}

CellSpacePtr space_of(const std::vector<Permutation>& gens, std::size_t degree) {
  const PermutationGroup pg = permutation_closure(degree, gens);
  return make_cell_space(CoordinateSystem::minimal(pg.action(), 0));
}

}  // namespace

Element PermutationGroup::element_of(const Permutation& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || *it != p) throw InputError("permutation is not a group element");
  return static_cast<Element>(it - elements.begin());
}

LeftAction PermutationGroup::action() const {
  std::vector<std::vector<Point>> rows(elements.begin(), elements.end());
  return LeftAction::from_rows(group, rows);
}

PermutationGroup permutation_closure(std::size_t degree, const std::vector<Permutation>& generators) {
  Permutation identity(degree);
  std::iota(identity.begin(), identity.end(), Point{0});
  for (const Permutation& p : generators) {
    Permutation sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity) throw InputError("generator is not a permutation of the cells");
  }

  std::set<Permutation> seen{identity};
  std::vector<Permutation> frontier{identity};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& p : frontier)
      for (const Permutation& s : generators) {
        Permutation q = compose_perm(s, p);
        if (seen.insert(q).second) {
          if (seen.size() > kMaxGroupOrder) throw BoundExceeded("permutation group too large");
          next.push_back(std::move(q));
        }
      }
    frontier = std::move(next);
  }

  PermutationGroup out;
  out.elements.assign(seen.begin(), seen.end());
  const std::size_t n = out.elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = out.element_of(compose_perm(out.elements[a], out.elements[b]));
  out.group = std::make_shared<const FiniteGroup>(n, std::move(table), Element{0});
  return out;
}

CellSpacePtr z4() {
  auto g = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(4));
  return make_cell_space(CoordinateSystem::minimal(LeftAction::regular(g), 0));
}

CellSpacePtr d4_square() { return space_of({{1, 2, 3, 0}, {0, 3, 2, 1}}, 4); }

CellSpacePtr cube_faces() {
  // Faces 0/1, 2/3, 4/5 are opposite pairs. z fixes 4 and 5, x fixes 0 and 1.
  return space_of({{2, 3, 1, 0, 4, 5}, {0, 1, 4, 5, 3, 2}}, 6);
}

CellSpacePtr torus_p4() {
  Permutation translate(16), turn(16);
  for (Point y = 0; y < 4; ++y)
    for (Point x = 0; x < 4; ++x) {
      translate[4 * y + x] = 4 * y + (x + 1) % 4;
      turn[4 * y + x] = 4 * x + (4 - y) % 4;
    }
  return space_of({translate, turn}, 16);
}

std::vector<NamedSpace> test_spaces() {
  return {{"z4", z4()}, {"d4_square", d4_square()}, {"cube_faces", cube_faces()}, {"torus_p4", torus_p4()}};
}

std::vector<CoordinateSystem> coordinate_systems(const LeftAction& action, std::size_t limit) {
  std::vector<CoordinateSystem> out;
  for (Point origin = 0; origin < action.points() && out.size() < limit; ++origin) {
    std::vector<std::vector<Element>> choices(action.points());
    for (Point m = 0; m < action.points(); ++m)
      choices[m] = m == origin ? std::vector<Element>{action.group().identity()}
                               : transporter(action, origin, m);
    // Odometer over the transporter choices, last cell fastest.
    std::vector<std::size_t> pick(action.points(), 0);
    while (out.size() < limit) {
      std::vector<Element> coords(action.points());
      for (Point m = 0; m < action.points(); ++m) coords[m] = choices[m][pick[m]];
      out.push_back(CoordinateSystem::with_coordinates(action, origin, std::move(coords)));
      std::size_t m = action.points();
      while (m > 0 && ++pick[m - 1] == choices[m - 1].size()) pick[--m] = 0;
      if (m == 0) break;
    }
  }
  return out;
}

std::vector<CoordinateSystem> random_coordinate_systems(const LeftAction& action, const Subgroup& h,
                                                        std::size_t count, std::mt19937_64& rng) {
  std::vector<CoordinateSystem> out;
  for (std::size_t k = 0; k < count; ++k) {
    const Point origin = static_cast<Point>(rng() % action.points());
    std::vector<Element> coords(action.points(), action.group().identity());
    for (Point m = 0; m < action.points(); ++m) {
      if (m == origin) continue;
      std::vector<Element> choices;
      for (Element g : transporter(action, origin, m))
        if (h.contains(g)) choices.push_back(g);
      if (choices.empty()) throw PreconditionError("subgroup does not act transitively");
      coords[m] = choices[rng() % choices.size()];
    }
    out.push_back(CoordinateSystem::with_coordinates(action, origin, std::move(coords)));
  }
  return out;
}

std::size_t coset_of_cell(const CellSpace& r, Point m) { return r.cosets().index_of(r.coordinate(m)); }

std::vector<std::size_t> all_cosets(const CellSpace& r) {
  std::vector<std::size_t> out(r.cosets().size());
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

SemiCellularAutomaton identity_rule(CellSpacePtr space, unsigned states) {
  std::vector<State> delta(states);
  std::iota(delta.begin(), delta.end(), State{0});
  const std::size_t trivial = space->trivial_coset();
  return SemiCellularAutomaton(std::move(space), states, {trivial}, std::move(delta));
}

SemiCellularAutomaton or_rule(CellSpacePtr space, std::vector<std::size_t> neighborhood) {
  if (neighborhood.empty()) neighborhood = all_cosets(*space);
  std::vector<State> delta(std::size_t{1} << neighborhood.size(), 1);
  delta[0] = 0;
  return SemiCellularAutomaton(std::move(space), 2, std::move(neighborhood), std::move(delta));
}

SemiCellularAutomaton shift_rule(CellSpacePtr space, unsigned states, Element g) {
  std::vector<State> delta(states);
  std::iota(delta.begin(), delta.end(), State{0});
  return SemiCellularAutomaton::from_representatives(std::move(space), states, {g}, std::move(delta));
}

SemiCellularAutomaton projection_rule(CellSpacePtr space, unsigned states,
                                      std::vector<std::size_t> neighborhood, std::size_t index) {
  std::sort(neighborhood.begin(), neighborhood.end());
  if (index >= neighborhood.size()) throw InputError("projection index out of range");
  const MixedRadix codec(states, neighborhood.size());
  std::vector<State> delta(codec.count());
  for (std::uint64_t code = 0; code < codec.count(); ++code) delta[code] = codec.digit(code, index);
  return SemiCellularAutomaton(std::move(space), states, std::move(neighborhood), std::move(delta));
}

SemiCellularAutomaton random_rule(CellSpacePtr space, unsigned states,
                                  std::vector<std::size_t> neighborhood, std::mt19937_64& rng) {
  std::sort(neighborhood.begin(), neighborhood.end());
  const MixedRadix codec(states, neighborhood.size());
  std::vector<State> delta(codec.count());
  for (State& q : delta) q = static_cast<State>(rng() % states);
  return SemiCellularAutomaton(std::move(space), states, std::move(neighborhood), std::move(delta));
}

SemiCellularAutomaton symmetrized(const SemiCellularAutomaton& ca, const Subgroup& h) {
  const Subgroup h0 = ca.space().origin_stabilizer_in(h);
  const MixedRadix& codec = ca.local_codec();
  std::vector<State> delta(codec.count());
  for (std::uint64_t code = 0; code < codec.count(); ++code) {
    const auto l = codec.decode_as<LocalConfiguration>(code);
    std::uint64_t least = code;
    for (Element x : h0.members()) least = std::min(least, codec.encode(bullet(ca, x, l)));
    delta[code] = ca.apply_local(least);
  }
  return SemiCellularAutomaton(ca.space_ptr(), ca.states(), ca.neighborhood(), std::move(delta));
}

}  // namespace gca::catalog
