#pragma once

// Semi-cellular automata over a cell space: a state count |Q|, a
// neighborhood N ⊆ G/G0 closed under G0, and a local rule tabulated over
// all |Q|^|N| local configurations.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gca/cell_space.hpp"
#include "gca/config.hpp"

namespace gca {

inline constexpr std::uint64_t kMaxLocalTable = std::uint64_t{1} << 20;

class SemiCellularAutomaton {
 public:
  enum class Closure {
    reject,    ///< throw InputError when G0 · N ⊄ N
    saturate,  ///< replace N by G0 · N
  };

  /// `neighborhood` lists coset indices of space->cosets(); `delta[k]` is the
  /// output for the local configuration with mixed-radix code k over N in
  /// ascending coset order (equivalently ascending canonical representative).
  SemiCellularAutomaton(CellSpacePtr space, unsigned states, std::vector<std::size_t> neighborhood,
                        std::vector<State> delta, Closure closure = Closure::reject);

  /// Same, with the neighborhood given by arbitrary coset representatives.
  static SemiCellularAutomaton from_representatives(CellSpacePtr space, unsigned states,
                                                    const std::vector<Element>& representatives,
                                                    std::vector<State> delta,
                                                    Closure closure = Closure::reject);

  const CellSpace& space() const { return *space_; }
  const CellSpacePtr& space_ptr() const { return space_; }
  unsigned states() const { return states_; }
  const std::vector<std::size_t>& neighborhood() const { return neighborhood_; }
  std::size_t neighbors() const { return neighborhood_.size(); }
  const std::vector<State>& delta() const { return delta_; }
  const MixedRadix& local_codec() const { return local_codec_; }

  /// Position of a coset in N, if present.
  std::optional<std::size_t> position(std::size_t coset) const;

  State apply_local(std::uint64_t local_code) const { return delta_[local_code]; }
  State apply_local(const LocalConfiguration& l) const;

  /// m ↷ n_i.
  Point neighbor_cell(Point m, std::size_t i) const { return neighbor_cells_[m * neighbors() + i]; }
  const std::vector<std::uint32_t>& neighbor_cells() const { return neighbor_cells_; }

 private:
  CellSpacePtr space_;
  unsigned states_;
  std::vector<std::size_t> neighborhood_;
  std::vector<State> delta_;
  MixedRadix local_codec_;
  std::vector<std::size_t> position_;
  std::vector<std::uint32_t> neighbor_cells_;
};

/// The G0-saturation G0 · N of a set of cosets, sorted.
std::vector<std::size_t> saturate_neighborhood(const CellSpace& r, std::vector<std::size_t> cosets);

/// g0 • l = [n |-> l(g0⁻¹ · n)]. Throws PreconditionError when g0 ∉ G0.
LocalConfiguration bullet(const SemiCellularAutomaton& ca, Element g0, const LocalConfiguration& l);

/// δ(h0 • l) = δ(l) for every h0 in H0 = G0 ∩ H and every l. Throws
/// PreconditionError when H misses a coordinate.
Verdict is_cellular(const SemiCellularAutomaton& ca, const Subgroup& h);

/// g ↴ c = [m |-> c(g⁻¹ |> m)].
Configuration shift(const LeftAction& a, Element g, const Configuration& c);

/// [n |-> c(m ↷ n)].
LocalConfiguration observe(const SemiCellularAutomaton& ca, const Configuration& c, Point m);

/// A configuration in which m observes l; cells outside m ↷ N hold state 0.
Configuration realize(const SemiCellularAutomaton& ca, const LocalConfiguration& l, Point m);

/// Δ(c) = [m |-> δ(observe(c, m))].
Configuration step(const SemiCellularAutomaton& ca, const Configuration& c);

/// The same map computed through the origin: Δ0(c)(m) = δ0((g_{m0,m}⁻¹ ↴ c)|N0)
/// with N0 = m0 ↷ N and δ0(l0) = δ(n |-> l0(m0 ↷ n)).
Configuration step_origin_form(const SemiCellularAutomaton& ca, const Configuration& c);

/// Positions i in N at which some single-neighbor change alters δ. This is
/// the smallest essential neighborhood. Throws BoundExceeded beyond the
/// local-table bound.
std::vector<std::size_t> essential_neighborhood(const SemiCellularAutomaton& ca);

}  // namespace gca
