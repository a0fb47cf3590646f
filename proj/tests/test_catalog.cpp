#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gca/catalog.hpp"
#include "oracles.hpp"

using namespace gca;

TEST_CASE("permutation closure") {
  // S3 from a 3-cycle and a transposition.
  const auto s3 = catalog::permutation_closure(3, {{1, 2, 0}, {1, 0, 2}});
  CHECK(s3.elements.size() == 6);
  CHECK(std::is_sorted(s3.elements.begin(), s3.elements.end()));
  CHECK(verify_group(*s3.group).ok);
  const LeftAction a = s3.action();
  for (Element g = 0; g < 6; ++g)
    for (Point x = 0; x < 3; ++x) CHECK(a.act(g, x) == s3.elements[g][x]);
  CHECK_THROWS_AS(s3.element_of({0, 0, 1}), InputError);
}

TEST_CASE("test spaces have the documented shapes") {
  const std::pair<const char*, std::pair<std::size_t, std::size_t>> shapes[] = {
      {"z4", {4, 1}}, {"d4_square", {4, 2}}, {"cube_faces", {6, 4}}, {"torus_p4", {16, 4}}};
  const auto spaces = catalog::test_spaces();
  REQUIRE(spaces.size() == 4);
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    CAPTURE(spaces[i].name);
    CHECK(spaces[i].name == shapes[i].first);
    CHECK(spaces[i].space->cells() == shapes[i].second.first);
    CHECK(spaces[i].space->stabilizer().size() == shapes[i].second.second);
    CHECK(spaces[i].space->origin() == 0);
    CHECK(spaces[i].space->cosets().size() == spaces[i].space->cells());
  }
}

TEST_CASE("coordinate systems are distinct and valid") {
  for (const auto& [name, space] : catalog::test_spaces()) {
    CAPTURE(name);
    const auto systems = catalog::coordinate_systems(space->action(), 40);
    std::set<std::pair<Point, std::vector<Element>>> seen;
    for (const CoordinateSystem& k : systems) {
      CHECK(seen.insert({k.origin(), k.coordinates()}).second);
      for (Point m = 0; m < space->cells(); ++m) CHECK(space->action().act(k.coordinate(m), k.origin()) == m);
    }
    CHECK(systems.size() <= 40);
  }
  std::mt19937_64 rng(4);
  const CellSpacePtr torus = catalog::torus_p4();
  for (const CoordinateSystem& k :
       catalog::random_coordinate_systems(torus->action(), Subgroup::whole(torus->group_ptr()), 10, rng))
    CHECK(check_semi_action_laws(CellSpace(k), Subgroup::whole(torus->group_ptr())).ok);
}

TEST_CASE("rule families") {
  const CellSpacePtr d4 = catalog::d4_square();
  const Subgroup h = Subgroup::whole(d4->group_ptr());
  for (const Configuration& c : oracle::all_configurations(4, 3))
    CHECK(step(catalog::identity_rule(d4, 3), c) == c);
  CHECK(is_cellular(catalog::or_rule(d4), h).ok);
  // The shift by the coset of the antipodal vertex is G0-closed.
  const auto opposite = catalog::shift_rule(d4, 2, d4->coordinate(2));
  CHECK(step(opposite, Configuration{1, 1, 0, 0}) == Configuration{0, 0, 1, 1});
  std::mt19937_64 rng(1);
  for (int k = 0; k < 10; ++k) {
    const auto r = catalog::random_rule(d4, 3, catalog::all_cosets(*d4), rng);
    const auto s = catalog::symmetrized(r, h);
    CHECK(oracle::invariant(s, h));
    CHECK(catalog::symmetrized(s, h).delta() == s.delta());
  }
}
