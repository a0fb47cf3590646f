#pragma once

// Coordinate systems on left homogeneous spaces and the right quotient-set
// semi-action m ↷ gG0 = g_{m0,m} g |> m0 they induce.

#include <cstddef>
#include <memory>
#include <vector>

#include "gca/group.hpp"

namespace gca {

/// An origin m0 of a transitive action together with one coordinate
/// g_{m0,m} per cell, i.e. an element transporting m0 to m, where the origin's
/// own coordinate is the identity.
class CoordinateSystem {
 public:
  /// Coordinates are the smallest transporter elements (identity at the
  /// origin). Throws PreconditionError if the action is not transitive.
  static CoordinateSystem minimal(LeftAction action, Point origin);
  /// Validates the given coordinates; throws InputError on violation.
  static CoordinateSystem with_coordinates(LeftAction action, Point origin,
                                           std::vector<Element> coords);

  const LeftAction& action() const { return action_; }
  Point origin() const { return origin_; }
  Element coordinate(Point m) const { return coords_[m]; }
  const std::vector<Element>& coordinates() const { return coords_; }

 private:
  CoordinateSystem(LeftAction action, Point origin, std::vector<Element> coords);

  LeftAction action_;
  Point origin_;
  std::vector<Element> coords_;
};

/// A coordinate system plus the cached stabiliser G0 of its origin and the
/// coset list G/G0. Cosets are addressed by their index in cosets().
class CellSpace {
 public:
  explicit CellSpace(CoordinateSystem coords);

  const CoordinateSystem& coordinate_system() const { return coords_; }
  const LeftAction& action() const { return coords_.action(); }
  const FiniteGroup& group() const { return coords_.action().group(); }
  const GroupPtr& group_ptr() const { return coords_.action().group_ptr(); }
  std::size_t cells() const { return coords_.action().points(); }
  Point origin() const { return coords_.origin(); }
  Element coordinate(Point m) const { return coords_.coordinate(m); }
  const Subgroup& stabilizer() const { return quotient_.subgroup(); }
  const QuotientSet& cosets() const { return quotient_; }
  /// Index of the coset G0 itself.
  std::size_t trivial_coset() const { return quotient_.index_of(group().identity()); }

  /// m ↷ gG0 for the coset with the given index.
  Point semi_act(Point m, std::size_t coset) const {
    return action().act(group().mul(coordinate(m), quotient_.representative(coset)), origin());
  }
  /// m ↷ gG0, taking any representative g.
  Point semi_act_element(Point m, Element g) const {
    return action().act(group().mul(coordinate(m), g), origin());
  }
  /// Throws PreconditionError when `c` is not a coset of G0.
  Point semi_act(Point m, const Coset& c) const { return semi_act(m, quotient_.index_of(c)); }

  /// True when every coordinate lies in `h`.
  bool admits(const Subgroup& h) const;
  /// H0 = G0 ∩ H.
  Subgroup origin_stabilizer_in(const Subgroup& h) const { return intersect(stabilizer(), h); }

 private:
  CoordinateSystem coords_;
  QuotientSet quotient_;
};

using CellSpacePtr = std::shared_ptr<const CellSpace>;

inline CellSpacePtr make_cell_space(CoordinateSystem coords) {
  return std::make_shared<const CellSpace>(std::move(coords));
}

/// The h0 in G0 with m ↷ h·𝔤 = (m ↷ hG0) ↷ h0·𝔤 for every 𝔤.
Element defect(const CellSpace& r, Point m, Element h);
/// The h0 in G0 with (h |> m) ↷ 𝔤 = h |> (m ↷ h0·𝔤) for every 𝔤.
Element commutation_defect(const CellSpace& r, Point m, Element h);

/// Exhaustive check of the defect postcondition for one (m, h).
Verdict check_defect(const CellSpace& r, Point m, Element h);
/// Exhaustive check of the commutation-defect postcondition for one (m, h).
Verdict check_commutation_defect(const CellSpace& r, Point m, Element h);

/// Freeness and transitivity of ↷.
Verdict check_free_transitive(const CellSpace& r);

/// The mutually inverse maps m0 ↷ · : G/G0 -> M and iota : M -> G/G0.
struct Identification {
  std::vector<Point> point_of_coset;
  std::vector<std::size_t> coset_of_point;
  Verdict verdict;
};
Identification identify(const CellSpace& r);

/// For two coordinate systems on the same action and h with h |> m0 = m0':
/// the h0 in G0 with m ↷' 𝔤' = m ↷ h0·(h⁻¹ ∘ 𝔤') for every 𝔤' in G/G0'.
/// Throws PreconditionError when h does not transport m0 to m0'.
Element coord_change_defect(const CellSpace& r, const CellSpace& r2, Element h, Point m);
Verdict check_coord_change_defect(const CellSpace& r, const CellSpace& r2, Element h, Point m);

/// Index in `to`'s G/G0' of h ∘ n = h g h⁻¹ G0', for n = gG0 a coset of `from`.
/// Requires h |> from.origin() = to.origin().
std::size_t conjugate_coset(const CellSpace& from, const CellSpace& to, Element h,
                            std::size_t coset);

/// Every semi-action law for one cell space, quantified over all m, all h in
/// `h_group` and all cosets: m ↷ G0 = m, freeness, transitivity, the defect
/// and commutation-defect postconditions, and the identification round trip.
Verdict check_semi_action_laws(const CellSpace& r, const Subgroup& h_group);

}  // namespace gca
