#pragma once

// Executable forms of the structural theorems about global transition
// functions: equivariance versus invariance, independence of the coordinate
// system, determination by the origin, composition, Curtis-Hedlund-Lyndon
// extraction and invertibility. All checks are exhaustive over Q^M up to
// kExhaustiveLimit configurations and fall back to seeded sampling beyond it.

#include <cstdint>
#include <variant>
#include <vector>

#include "gca/global_map.hpp"

namespace gca {

struct Sampling {
  std::uint64_t seed = 0;
  std::size_t samples = 4096;
};

/// Δ(h ↴ c) = h ↴ Δ(c) for all h in H and all c. The identity is checked on a
/// generating set of H, which implies it for all of H. Black-box maps are
/// sampled and the verdict is marked as such. Throws PreconditionError when
/// H misses a coordinate.
Verdict check_equivariance(const GlobalMap& map, const Subgroup& h, const Sampling& sampling = {});

/// The same automaton over another coordinate system K' (same action, origin
/// m0' = h |> m0): N' = h ∘ N and δ'(l') = δ(n |-> l'(h ∘ n)). Throws
/// LawViolation when δ is not •_{H0}-invariant and PreconditionError when
/// h ∉ H, h does not transport the origins, or H misses a coordinate of
/// either system.
SemiCellularAutomaton change_coordinates(const SemiCellularAutomaton& ca, CellSpacePtr target,
                                         Element h, const Subgroup& h_group);

struct EquivalenceReport {
  bool invariant = false;
  bool equivariant = false;
  Verdict invariance;
  Verdict equivariance;
  /// ok iff invariant == equivariant.
  Verdict verdict;
};
EquivalenceReport check_invariance_equivalence(const SemiCellularAutomaton& ca, const Subgroup& h,
                                               const Sampling& sampling = {});

struct DeterminationReport {
  /// δ is •_{H0}-invariant and Δ0 is the global transition function.
  bool automaton_side = false;
  /// Δ0 is H-equivariant and Δ0(c)(m0) = δ(n |-> c(m0 ↷ n)) for all c.
  bool origin_side = false;
  nlohmann::json origin_witness;
  /// ok iff both sides agree.
  Verdict verdict;
};
DeterminationReport check_determination(const SemiCellularAutomaton& ca, const GlobalMap& candidate,
                                        const Subgroup& h, const Sampling& sampling = {});

/// C'' with N'' = { g · n' : n in N, n' in N', g in n } and
/// δ''(l'') = δ(n |-> δ'(n' |-> l''(g_{m0, m0 ↷ n} · n'))), whose global
/// transition function is Δ ∘ Δ'. Both automata must share one cell space and
/// state set; throws LawViolation when either rule is not •_{H0}-invariant.
SemiCellularAutomaton compose(const SemiCellularAutomaton& outer, const SemiCellularAutomaton& inner,
                              const Subgroup& h);

/// Cells whose state can change Δ(c)(m0) by a single-site change.
std::vector<Point> origin_dependency(const GlobalMap& map);

/// Builds an automaton whose global transition function is `map`: the
/// neighborhood is G0 · iota(E0) for the origin dependency set E0, and δ is
/// read off Δ at the origin with every cell outside m0 ↷ N in state 0.
/// Throws LawViolation (with witness) when the map is not H-equivariant and
/// BoundExceeded when it is not tabulated.
SemiCellularAutomaton extract(const GlobalMap& map, const Subgroup& h, const Sampling& sampling = {});

struct NotInvertible {
  Configuration first;
  Configuration second;
  Configuration image;
  bool sampled = false;
};

using Inversion = std::variant<SemiCellularAutomaton, NotInvertible>;

/// Inverse automaton via extraction from the inverse table, or a collision
/// witness when Δ is not injective. Beyond the exhaustive limit only a sampled
/// collision search is possible; without a collision that throws BoundExceeded.
/// Throws LawViolation when δ is not •_{H0}-invariant.
Inversion invert(const SemiCellularAutomaton& ca, const Subgroup& h, const Sampling& sampling = {});

}  // namespace gca
