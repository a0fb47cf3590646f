#pragma once

// Built-in test spaces and rule families. Groups are generated from
// permutations of the cells; elements are numbered in lexicographic order of
// their image lists, so the identity is element 0, and (gh)(x) = g(h(x)).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gca/automaton.hpp"

namespace gca::catalog {

using Permutation = std::vector<Point>;

struct PermutationGroup {
  GroupPtr group;
  std::vector<Permutation> elements;
  /// Index of a permutation; throws InputError when it is not an element.
  Element element_of(const Permutation& p) const;
  LeftAction action() const;
};

/// Throws BoundExceeded past kMaxGroupOrder elements.
PermutationGroup permutation_closure(std::size_t degree, const std::vector<Permutation>& generators);

/// Z4 acting on itself by addition.
CellSpacePtr z4();
/// D4 on the vertices of a square; vertex i is adjacent to i ± 1.
CellSpacePtr d4_square();
/// The rotation group of the cube on its 6 faces (|G| = 24, |G0| = 4).
CellSpacePtr cube_faces();
/// Z4 × Z4 torus under translations and quarter turns (|G| = 64); cell
/// (x, y) has index 4y + x.
CellSpacePtr torus_p4();

struct NamedSpace {
  std::string name;
  CellSpacePtr space;
};
std::vector<NamedSpace> test_spaces();

/// Every coordinate system of the action, origins in increasing order and
/// transporter choices in lexicographic order, truncated at `limit`.
std::vector<CoordinateSystem> coordinate_systems(const LeftAction& action, std::size_t limit);

/// `count` coordinate systems with uniformly drawn origins and transporter
/// choices, restricted to coordinates in `h`.
std::vector<CoordinateSystem> random_coordinate_systems(const LeftAction& action, const Subgroup& h,
                                                        std::size_t count, std::mt19937_64& rng);

/// Coset of G/G0 that iota assigns to cell m.
std::size_t coset_of_cell(const CellSpace& r, Point m);
/// All cosets, i.e. the whole of G/G0.
std::vector<std::size_t> all_cosets(const CellSpace& r);

SemiCellularAutomaton identity_rule(CellSpacePtr space, unsigned states);
/// Binary OR over the neighborhood (default: every coset).
SemiCellularAutomaton or_rule(CellSpacePtr space, std::vector<std::size_t> neighborhood = {});
/// Δ(c)(m) = c(m ↷ gG0); only G0-closed when gG0 is fixed by G0.
SemiCellularAutomaton shift_rule(CellSpacePtr space, unsigned states, Element g);
/// δ(l) = l(n_index) over the given neighborhood.
SemiCellularAutomaton projection_rule(CellSpacePtr space, unsigned states,
                                      std::vector<std::size_t> neighborhood, std::size_t index);
SemiCellularAutomaton random_rule(CellSpacePtr space, unsigned states,
                                  std::vector<std::size_t> neighborhood, std::mt19937_64& rng);
/// Replaces δ by l |-> δ(min of the H0-bullet orbit of l), which is
/// •_{H0}-invariant.
SemiCellularAutomaton symmetrized(const SemiCellularAutomaton& ca, const Subgroup& h);

}  // namespace gca::catalog
