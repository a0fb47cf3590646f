#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "gca/catalog.hpp"
#include "gca/laws.hpp"
#include "oracles.hpp"

using namespace gca;

namespace {

std::vector<std::size_t> saturated(const CellSpace& r, std::mt19937_64& rng, std::size_t picks) {
  std::vector<std::size_t> some;
  for (std::size_t k = 0; k < picks; ++k) some.push_back(rng() % r.cosets().size());
  std::sort(some.begin(), some.end());
  some.erase(std::unique(some.begin(), some.end()), some.end());
  return saturate_neighborhood(r, some);
}

Subgroup whole(const CellSpacePtr& r) { return Subgroup::whole(r->group_ptr()); }

// Δ with the origin cell overwritten by (c(m0) + 1) mod q: never equivariant
// on a space with more than one cell.
GlobalMap overwrite_origin(const SemiCellularAutomaton& ca) {
  const Point m0 = ca.space().origin();
  const unsigned q = ca.states();
  return GlobalMap::from_function(ca.space_ptr(), q, [ca, m0, q](const Configuration& c) {
    Configuration out = step(ca, c);
    out[m0] = static_cast<State>((c[m0] + 1) % q);
    return out;
  });
}

}  // namespace

TEST_CASE("equivariance agrees with the all-elements oracle") {
  std::mt19937_64 rng(31);
  for (const auto& [name, space] : catalog::test_spaces()) {
    if (space->cells() > 6) continue;
    CAPTURE(name);
    for (int trial = 0; trial < 10; ++trial) {
      const auto n = saturated(*space, rng, 2);
      auto ca = catalog::random_rule(space, 2, n, rng);
      if (trial % 2) ca = catalog::symmetrized(ca, whole(space));
      const GlobalMap map = GlobalMap::of(ca);
      CHECK(check_equivariance(map, whole(space)).ok == oracle::equivariant(map, whole(space)));
      const GlobalMap bad = overwrite_origin(ca);
      CHECK_FALSE(oracle::equivariant(bad, whole(space)));
      const Verdict v = check_equivariance(bad, whole(space));
      CHECK_FALSE(v.ok);
      CHECK(v.law == "equivariance");
    }
  }
}

TEST_CASE("the torus map is checked through the bit permutation path") {
  std::mt19937_64 rng(5);
  const CellSpacePtr torus = catalog::torus_p4();
  const auto ca = catalog::symmetrized(catalog::random_rule(torus, 2, saturated(*torus, rng, 2), rng), whole(torus));
  const Verdict v = check_equivariance(GlobalMap::of(ca), whole(torus));
  CHECK(v.ok);
  CHECK_FALSE(v.sampled);
  CHECK_FALSE(check_equivariance(overwrite_origin(ca), whole(torus)).ok);
}

TEST_CASE("black-box equivariance is sampled") {
  const CellSpacePtr torus = catalog::torus_p4();
  const auto ca = catalog::or_rule(torus, {0});
  const Verdict v = check_equivariance(GlobalMap::of(ca, 1000), whole(torus), {1, 200});
  CHECK(v.ok);
  CHECK(v.sampled);
}

TEST_CASE("invariance and equivariance coincide") {
  std::mt19937_64 rng(12);
  for (const auto& [name, space] : catalog::test_spaces()) {
    CAPTURE(name);
    for (int trial = 0; trial < 10; ++trial) {
      const auto n = saturated(*space, rng, 2);
      if (std::pow(2.0, n.size()) > 4096) continue;
      auto ca = catalog::random_rule(space, 2, n, rng);
      if (trial % 2) ca = catalog::symmetrized(ca, whole(space));
      const EquivalenceReport report = check_invariance_equivalence(ca, whole(space));
      CHECK(report.verdict.ok);
      CHECK(report.invariant == oracle::invariant(ca, whole(space)));
    }
  }
}

TEST_CASE("changing coordinates keeps the global function") {
  std::mt19937_64 rng(17);
  for (const auto& [name, space] : catalog::test_spaces()) {
    CAPTURE(name);
    const Subgroup h = whole(space);
    const auto ca = catalog::symmetrized(catalog::random_rule(space, 2, saturated(*space, rng, 2), rng), h);
    const std::vector<Configuration> probes = [&] {
      std::vector<Configuration> out;
      for (int k = 0; k < 40; ++k) out.push_back(oracle::random_configuration(rng, space->cells(), 2));
      return out;
    }();
    for (const CoordinateSystem& k : catalog::random_coordinate_systems(space->action(), h, 5, rng)) {
      const CellSpacePtr target = make_cell_space(k);
      const Element t = transporter(space->action(), space->origin(), target->origin()).front();
      const auto moved = change_coordinates(ca, target, t, h);
      CHECK(moved.neighbors() == ca.neighbors());
      CHECK(is_cellular(moved, h).ok);
      for (const Configuration& c : probes) CHECK(step(moved, c) == step(ca, c));
    }
  }
}

TEST_CASE("changing coordinates rejects non-invariant rules and wrong transporters") {
  const CellSpacePtr d4 = catalog::d4_square();
  const auto projection = catalog::projection_rule(d4, 2, catalog::all_cosets(*d4), 1);
  const CellSpacePtr same = make_cell_space(CoordinateSystem::minimal(d4->action(), 0));
  CHECK_THROWS_AS(change_coordinates(projection, same, 0, whole(d4)), LawViolation);
  const CellSpacePtr other = make_cell_space(CoordinateSystem::minimal(d4->action(), 2));
  CHECK_THROWS_AS(change_coordinates(catalog::or_rule(d4), other, 0, whole(d4)), PreconditionError);
}

TEST_CASE("determination by the origin") {
  std::mt19937_64 rng(9);
  const CellSpacePtr d4 = catalog::d4_square();
  const Subgroup h = whole(d4);
  const auto ca = catalog::or_rule(d4);
  SUBCASE("the automaton's own map") {
    const DeterminationReport r = check_determination(ca, GlobalMap::of(ca), h);
    CHECK(r.automaton_side);
    CHECK(r.origin_side);
    CHECK(r.verdict.ok);
  }
  SUBCASE("a map that disagrees at the origin") {
    const DeterminationReport r = check_determination(ca, overwrite_origin(ca), h);
    CHECK_FALSE(r.automaton_side);
    CHECK_FALSE(r.origin_side);
    CHECK(r.verdict.ok);
    CHECK_FALSE(r.origin_witness.is_null());
  }
  SUBCASE("equivariant, but the map of a different rule") {
    const auto other = catalog::identity_rule(d4, 2);
    const DeterminationReport r = check_determination(ca, GlobalMap::of(other), h);
    CHECK_FALSE(r.automaton_side);
    CHECK_FALSE(r.origin_side);
    CHECK(r.verdict.ok);
  }
  SUBCASE("non-invariant rule against its own map") {
    const auto projection = catalog::projection_rule(d4, 2, catalog::all_cosets(*d4), 1);
    const DeterminationReport r = check_determination(projection, GlobalMap::of(projection), h);
    CHECK_FALSE(r.automaton_side);
    CHECK_FALSE(r.origin_side);
    CHECK(r.verdict.ok);
  }
}

TEST_CASE("composition on Z4: shifting twice") {
  const CellSpacePtr z4 = catalog::z4();
  const auto one = catalog::shift_rule(z4, 2, 1);
  const auto two = compose(one, one, whole(z4));
  CHECK(two.neighborhood() == std::vector<std::size_t>{2});
  for (const Configuration& c : oracle::all_configurations(4, 2))
    for (Point m = 0; m < 4; ++m) CHECK(step(two, c)[m] == c[(m + 2) % 4]);
}

TEST_CASE("composition realises Δ ∘ Δ' and is associative") {
  std::mt19937_64 rng(44);
  for (const auto& [name, space] : catalog::test_spaces()) {
    CAPTURE(name);
    const Subgroup h = whole(space);
    for (int trial = 0; trial < 4; ++trial) {
      const auto a = catalog::symmetrized(catalog::random_rule(space, 2, saturated(*space, rng, 1), rng), h);
      const auto b = catalog::symmetrized(catalog::random_rule(space, 2, saturated(*space, rng, 1), rng), h);
      const auto c = catalog::symmetrized(catalog::random_rule(space, 2, saturated(*space, rng, 1), rng), h);
      const auto ab = compose(a, b, h);
      CHECK(is_cellular(ab, h).ok);
      for (int k = 0; k < 30; ++k) {
        const Configuration x = oracle::random_configuration(rng, space->cells(), 2);
        CHECK(step(ab, x) == step(a, step(b, x)));
      }
      if (space->cells() > 6) continue;
      const auto left = compose(compose(a, b, h), c, h);
      const auto right = compose(a, compose(b, c, h), h);
      CHECK(same_global_function(GlobalMap::of(left), GlobalMap::of(right)).ok);
    }
  }
}

TEST_CASE("composition rejects non-invariant rules") {
  const CellSpacePtr d4 = catalog::d4_square();
  const auto projection = catalog::projection_rule(d4, 2, catalog::all_cosets(*d4), 1);
  CHECK_THROWS_AS(compose(projection, catalog::or_rule(d4), whole(d4)), LawViolation);
  CHECK_THROWS_AS(compose(catalog::or_rule(d4), projection, whole(d4)), LawViolation);
}

TEST_CASE("extraction recovers automata from their global maps") {
  std::mt19937_64 rng(73);
  for (const auto& [name, space] : catalog::test_spaces()) {
    CAPTURE(name);
    const Subgroup h = whole(space);
    for (int trial = 0; trial < 4; ++trial) {
      const auto ca = catalog::symmetrized(catalog::random_rule(space, 2, saturated(*space, rng, 2), rng), h);
      const GlobalMap map = GlobalMap::of(ca);
      const auto back = extract(map, h);
      CHECK(same_global_function(GlobalMap::of(back), map).ok);
      // The extracted neighborhood is no larger than the essential one.
      CHECK(back.neighbors() <= ca.neighbors());
    }
  }
}

TEST_CASE("extraction of special maps") {
  const CellSpacePtr cube = catalog::cube_faces();
  const Subgroup h = whole(cube);
  const auto id = extract(GlobalMap::of(catalog::identity_rule(cube, 3)), h);
  CHECK(id.neighborhood() == std::vector<std::size_t>{cube->trivial_coset()});
  CHECK(id.delta() == std::vector<State>{0, 1, 2});
  const GlobalMap constant = GlobalMap::from_function(cube, 2, [](const Configuration& c) {
    return Configuration(c.size(), 1);
  });
  const auto k = extract(constant, h);
  CHECK(k.neighbors() == 0);
  CHECK(k.delta() == std::vector<State>{1});
  try {
    extract(overwrite_origin(catalog::or_rule(cube)), h);
    FAIL("extraction accepted a non-equivariant map");
  } catch (const LawViolation& e) {
    CHECK(e.verdict().law == "equivariance");
  }
}

TEST_CASE("origin dependency of the OR rule is the whole square") {
  const CellSpacePtr d4 = catalog::d4_square();
  CHECK(origin_dependency(GlobalMap::of(catalog::or_rule(d4))) == std::vector<Point>{0, 1, 2, 3});
  CHECK(origin_dependency(GlobalMap::of(catalog::identity_rule(d4, 2))) == std::vector<Point>{0});
}

TEST_CASE("inverting the Z4 shift") {
  const CellSpacePtr z4 = catalog::z4();
  const auto ca = catalog::shift_rule(z4, 2, 1);
  const Inversion result = invert(ca, whole(z4));
  REQUIRE(std::holds_alternative<SemiCellularAutomaton>(result));
  const auto& inv = std::get<SemiCellularAutomaton>(result);
  CHECK(inv.neighborhood() == std::vector<std::size_t>{3});
  for (const Configuration& c : oracle::all_configurations(4, 2)) {
    CHECK(step(inv, step(ca, c)) == c);
    CHECK(step(ca, step(inv, c)) == c);
  }
}

TEST_CASE("OR is not invertible and the collision checks out") {
  for (const CellSpacePtr& space : {catalog::d4_square(), catalog::cube_faces()}) {
    const auto ca = catalog::or_rule(space);
    const Inversion result = invert(ca, whole(space));
    REQUIRE(std::holds_alternative<NotInvertible>(result));
    const auto& w = std::get<NotInvertible>(result);
    CHECK(w.first != w.second);
    CHECK(step(ca, w.first) == w.image);
    CHECK(step(ca, w.second) == w.image);
    CHECK_FALSE(w.sampled);
  }
}

TEST_CASE("random invariant rules: inverse exists iff the table is a bijection") {
  std::mt19937_64 rng(6);
  const CellSpacePtr z4 = catalog::z4();
  int invertible = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto ca = catalog::random_rule(z4, 2, saturated(*z4, rng, 2), rng);
    const GlobalMap map = GlobalMap::of(ca);
    std::vector<std::uint64_t> sorted = map.table();
    std::sort(sorted.begin(), sorted.end());
    const bool bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    const Inversion result = invert(ca, whole(z4));
    CHECK(std::holds_alternative<SemiCellularAutomaton>(result) == bijective);
    if (const auto* inv = std::get_if<SemiCellularAutomaton>(&result)) {
      ++invertible;
      for (const Configuration& c : oracle::all_configurations(4, 2)) CHECK(step(*inv, step(ca, c)) == c);
    }
  }
  CHECK(invertible > 0);
}

TEST_CASE("inverting the identity on the torus") {
  const CellSpacePtr torus = catalog::torus_p4();
  const Subgroup h = whole(torus);
  const auto full = invert(catalog::or_rule(torus, {0}), h);
  CHECK(std::holds_alternative<SemiCellularAutomaton>(full));
}
