#pragma once

// Finite groups given by Cayley tables, left actions on finite sets, and the
// orbit / stabiliser / transporter / coset machinery built on top of them.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "gca/verdict.hpp"

namespace gca {

using Element = std::uint32_t;
using Point = std::uint32_t;

inline constexpr Element kNoElement = std::numeric_limits<Element>::max();

inline constexpr std::size_t kMaxGroupOrder = 5040;
inline constexpr std::size_t kMaxPoints = 4096;

/// A finite group g_0..g_{n-1} given extensionally by its multiplication
/// table. Construction only checks shapes; the axioms are checked by
/// verify_group(). Inverses are derived from the table, never stored in files.
class FiniteGroup {
 public:
  /// `table` is row-major: table[a * order + b] = a * b.
  FiniteGroup(std::size_t order, std::vector<Element> table, Element identity);

  static FiniteGroup from_rows(const std::vector<std::vector<Element>>& rows,
                               Element identity);
  /// Z_n under addition, identity 0.
  static FiniteGroup cyclic(std::size_t n);

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  /// kNoElement when the table has no two-sided inverse for g.
  Element inv(Element g) const { return inverse_[g]; }
  std::span<const Element> table() const { return table_; }

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  std::size_t order_;
  std::vector<Element> table_;
  Element identity_;
  std::vector<Element> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Checks closure, two-sided identity, cancellation, inverses and
/// associativity, reporting the first violated axiom with witnesses.
Verdict verify_group(const FiniteGroup& g);

/// A subgroup, stored as the sorted list of its members.
class Subgroup {
 public:
  /// Throws InputError unless `members` is closed under products and inverses
  /// and contains the identity.
  static Subgroup from_members(GroupPtr group, std::vector<Element> members);
  /// Smallest subgroup containing `generators`.
  static Subgroup generated_by(GroupPtr group, std::span<const Element> generators);
  static Subgroup whole(GroupPtr group);
  static Subgroup trivial(GroupPtr group);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::span<const Element> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Element g) const { return g < mask_.size() && mask_[g]; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_;
  }

 private:
  Subgroup(GroupPtr group, std::vector<Element> members);

  GroupPtr group_;
  std::vector<Element> members_;
  std::vector<bool> mask_;
};

Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// A small generating set of `h`, chosen greedily in ascending element order.
std::vector<Element> generators(const Subgroup& h);

/// A left coset gH, identified by its minimum member.
struct Coset {
  std::shared_ptr<const Subgroup> subgroup;
  Element representative = 0;

  friend bool operator==(const Coset& a, const Coset& b) {
    return a.representative == b.representative && *a.subgroup == *b.subgroup;
  }
};

class LeftAction;

/// The quotient set G/H. Cosets are numbered in ascending order of their
/// canonical (minimum) representative.
class QuotientSet {
 public:
  explicit QuotientSet(Subgroup h);

  const Subgroup& subgroup() const { return *subgroup_; }
  const std::shared_ptr<const Subgroup>& subgroup_ptr() const { return subgroup_; }
  std::size_t size() const { return representatives_.size(); }
  Element representative(std::size_t coset) const { return representatives_[coset]; }
  /// Index of the coset gH.
  std::size_t index_of(Element g) const { return coset_of_[g]; }
  /// Throws PreconditionError if `c` is a coset of a different subgroup.
  std::size_t index_of(const Coset& c) const;
  Coset coset(std::size_t index) const { return {subgroup_, representatives_[index]}; }
  std::vector<Element> members(std::size_t coset) const;

  /// g . (g'H) = (gg')H on coset indices.
  LeftAction induced_action() const;

 private:
  std::shared_ptr<const Subgroup> subgroup_;
  std::vector<Element> representatives_;
  std::vector<std::size_t> coset_of_;
};

/// A left action of a finite group on the points 0..points-1.
class LeftAction {
 public:
  /// `table` is row-major: table[g * points + m] = g |> m.
  LeftAction(GroupPtr group, std::size_t points, std::vector<Point> table);
  static LeftAction from_rows(GroupPtr group, const std::vector<std::vector<Point>>& rows);
  /// The group acting on itself by left multiplication.
  static LeftAction regular(GroupPtr group);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t points() const { return points_; }
  Point act(Element g, Point m) const { return table_[g * points_ + m]; }
  std::span<const Point> row(Element g) const {
    return std::span<const Point>(table_).subspan(g * points_, points_);
  }

  friend bool operator==(const LeftAction& a, const LeftAction& b) {
    return a.points_ == b.points_ && a.table_ == b.table_ && *a.group_ == *b.group_;
  }

 private:
  GroupPtr group_;
  std::size_t points_;
  std::vector<Point> table_;
};

/// Identity and compatibility axioms; witness (g, g', m) on failure.
Verdict verify_action(const LeftAction& a);

std::vector<Point> orbit(const LeftAction& a, Point m);
Subgroup stabilizer(const LeftAction& a, Point m);
/// G_{m,m'} = { g : g |> m = m' }, ascending.
std::vector<Element> transporter(const LeftAction& a, Point from, Point to);
bool is_transitive(const LeftAction& a);

/// For g in G_{m,m'}: G_{m'} = g G_m g^-1 and g G_m = G_{m,m'} = G_{m'} g.
/// Throws PreconditionError when g does not transport m to m'.
Verdict check_transporter_lemma(const LeftAction& a, Point m, Point m2, Element g);

/// The bijection M -> G/G_{m0}, m |-> G_{m0,m}, for a transitive action.
struct OriginIdentification {
  QuotientSet quotient;
  std::vector<std::size_t> coset_of_point;
};
/// Throws PreconditionError when `a` is not transitive.
OriginIdentification iota(const LeftAction& a, Point origin);

/// g o g'G_m = g g' G_m g^-1, a coset of G_{g |> m}. Throws
/// PreconditionError when the coset's subgroup stabilises no point.
Coset circ_action(const LeftAction& a, Element g, const Coset& c);

}  // namespace gca
