#pragma once

// Finite model of uniform structures on the configuration space: relations
// as bit matrices, entourage bases, the prodiscrete base {E(K) : K ⊆ M} and
// uniform continuity of global maps. Universes are capped at
// kMaxUniformUniverse configurations because the algebra is quadratic.

#include <cstdint>
#include <span>
#include <vector>

#include "gca/global_map.hpp"

namespace gca {

inline constexpr std::size_t kMaxUniformUniverse = 256;

/// A subset of X × X for X = {0, ..., n-1}, one bit row per x.
class Relation {
 public:
  explicit Relation(std::size_t n);
  static Relation diagonal(std::size_t n);
  static Relation full(std::size_t n);

  std::size_t universe() const { return n_; }
  bool contains(std::size_t x, std::size_t y) const {
    return (bits_[x * stride_ + y / 64] >> (y % 64)) & 1U;
  }
  void insert(std::size_t x, std::size_t y) { bits_[x * stride_ + y / 64] |= std::uint64_t{1} << (y % 64); }
  std::span<const std::uint64_t> row(std::size_t x) const { return {bits_.data() + x * stride_, stride_}; }
  std::span<std::uint64_t> row(std::size_t x) { return {bits_.data() + x * stride_, stride_}; }
  std::span<const std::uint64_t> words() const { return bits_; }
  std::span<std::uint64_t> words() { return bits_; }
  std::uint64_t pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_;
  std::size_t stride_;
  std::vector<std::uint64_t> bits_;
};

/// {(x, z) : (x, y) in r and (y, z) in s for some y}. Throws InputError on a
/// universe mismatch, as do the other binary operations.
Relation rel_compose(const Relation& r, const Relation& s);
Relation inverse(const Relation& r);
Relation intersect(const Relation& a, const Relation& b);
bool is_subset(const Relation& a, const Relation& b);
/// (f × f)⁻¹(r) = {(x, y) : (f(x), f(y)) in r}.
Relation preimage(const Relation& r, std::span<const std::uint64_t> f);

struct EntourageBase {
  std::size_t universe = 0;
  std::vector<Relation> members;
};

/// Nonempty, every member contains the diagonal, pairwise intersections and
/// inverses contain a member, and every member contains the square of a
/// member. The witness names the first failing condition and members.
Verdict check_uniformity_base(const EntourageBase& base);

/// E(K) = {(c, c') : c and c' agree on K}, with K ⊆ M as a bit mask.
Relation agreement_entourage(const MixedRadix& codec, std::uint64_t k);

/// Member i is E(K) for the cell set with mask i, so the list has 2^|M| entries.
struct ProdiscreteBase {
  EntourageBase base;
  MixedRadix codec;
};

/// Throws BoundExceeded when |Q|^|M| exceeds kMaxUniformUniverse.
ProdiscreteBase prodiscrete_base(const CellSpace& space, unsigned states);

struct UniformContinuity {
  Verdict verdict;
  /// modulus[K] = smallest L (by size, then by sorted cell list) with
  /// (Δ × Δ)(E(L)) ⊆ E(K).
  std::vector<std::uint64_t> modulus;
};

/// Requires a tabulated map over the base's universe.
UniformContinuity check_uniform_continuity(const GlobalMap& map, const ProdiscreteBase& base);

/// Δ is bijective and both Δ and Δ⁻¹ are uniformly continuous.
Verdict check_uniform_isomorphism(const GlobalMap& map, const ProdiscreteBase& base);

/// Cell-wise form of uniform continuity for tabulated maps of any size:
/// modulus[m] is the set of cells that Δ(c)(m) depends on, verified to
/// determine Δ(c)(m). The modulus of K is the union over m in K.
struct CellwiseContinuity {
  Verdict verdict;
  std::vector<std::uint64_t> modulus;
};
CellwiseContinuity check_cellwise_continuity(const GlobalMap& map);

/// As above for any tabulated map: the relation algebra up to
/// kMaxUniformUniverse configurations, the cell-wise form beyond it.
Verdict check_uniform_isomorphism(const GlobalMap& map);

/// Cells of a mask in increasing order.
std::vector<Point> cells_of(std::uint64_t mask);

}  // namespace gca
