#include "gca/suites.hpp"

#include <algorithm>

#include "gca/catalog.hpp"
#include "gca/uniformity.hpp"

namespace gca {

namespace {

nlohmann::json states_json(const Configuration& c) { return std::vector<int>(c.begin(), c.end()); }

SuiteResult result(const std::string& suite, SuiteStatus status, nlohmann::json details) {
  return {suite, status, std::move(details)};
}

SuiteStatus status_of(const Verdict& v) {
  if (!v) return SuiteStatus::fail;
  return v.sampled ? SuiteStatus::sampled : SuiteStatus::pass;
}

// Pointwise equality, exhaustive when both maps are tabulated.
Verdict same_function(const GlobalMap& a, const GlobalMap& b, const Sampling& sampling) {
  if (a.tabulated() && b.tabulated()) return same_global_function(a, b);
  std::mt19937_64 rng(sampling.seed);
  for (std::size_t k = 0; k < sampling.samples; ++k) {
    Configuration c(a.space().cells());
    for (std::size_t m = 0; m < c.size(); ++m) c[m] = static_cast<State>(rng() % a.states());
    if (a(c) != b(c))
      return Verdict::fail("global functions differ",
                           {{"configuration", states_json(c)}, {"image", states_json(a(c))},
                            {"image2", states_json(b(c))}});
  }
  Verdict v = Verdict::pass();
  v.sampled = true;
  return v;
}

GlobalMap composed(const GlobalMap& outer, const GlobalMap& inner) {
  if (outer.tabulated() && inner.tabulated()) {
    std::vector<std::uint64_t> table(inner.table().size());
    for (std::uint64_t x = 0; x < table.size(); ++x) table[x] = outer(inner(x));
    return GlobalMap::from_table(outer.space_ptr(), outer.states(), std::move(table));
  }
  return GlobalMap::from_function(outer.space_ptr(), outer.states(),
                                  [outer, inner](const Configuration& c) { return outer(inner(c)); });
}

bool all_tabulated(const SemiCellularAutomaton& ca) {
  auto count = power_count(ca.states(), ca.space().cells());
  return count && *count <= kExhaustiveLimit;
}

SuiteResult coordinate_independence(const SemiCellularAutomaton& ca, const Subgroup& h,
                                    const Sampling& sampling) {
  const std::string name = "coordinate-independence";
  if (Verdict v = is_cellular(ca, h); !v)
    return result(name, SuiteStatus::skipped, {{"reason", "local rule is not invariant"}, {"invariance", v.to_json()}});
  const CellSpace& r = ca.space();
  const GlobalMap base = GlobalMap::of(ca);
  std::mt19937_64 rng(sampling.seed);
  nlohmann::json systems = nlohmann::json::array();
  bool sampled = false;
  for (const CoordinateSystem& k : catalog::random_coordinate_systems(r.action(), h, 8, rng)) {
    const auto moving = transporter(r.action(), r.origin(), k.origin());
    const auto hit = std::find_if(moving.begin(), moving.end(), [&](Element x) { return h.contains(x); });
    if (hit == moving.end()) continue;
    const SemiCellularAutomaton moved = change_coordinates(ca, make_cell_space(k), *hit, h);
    const Verdict v = same_function(GlobalMap::of(moved), base, sampling);
    sampled = sampled || v.sampled;
    systems.push_back({{"origin", k.origin()}, {"coords", k.coordinates()}, {"h", *hit}, {"verdict", v.to_json()}});
    if (!v) return result(name, SuiteStatus::fail, {{"systems", systems}});
  }
  return result(name, sampled ? SuiteStatus::sampled : SuiteStatus::pass, {{"systems", systems}});
}

SuiteResult equivalence(const SemiCellularAutomaton& ca, const Subgroup& h, const Sampling& sampling) {
  const EquivalenceReport report = check_invariance_equivalence(ca, h, sampling);
  return result("equivalence", status_of(report.verdict),
                {{"invariant", report.invariant},
                 {"equivariant", report.equivariant},
                 {"invariance", report.invariance.to_json()},
                 {"equivariance", report.equivariance.to_json()},
                 {"verdict", report.verdict.to_json()}});
}

SuiteResult determination(const SemiCellularAutomaton& ca, const Subgroup& h, const Sampling& sampling) {
  const std::string name = "determination";
  if (!all_tabulated(ca)) return result(name, SuiteStatus::bound_exceeded, {{"reason", "configuration space too large"}});
  const GlobalMap map = GlobalMap::of(ca);
  nlohmann::json candidates = nlohmann::json::array();
  bool ok = true;
  auto run = [&](const std::string& label, const GlobalMap& candidate) {
    const DeterminationReport report = check_determination(ca, candidate, h, sampling);
    ok = ok && report.verdict.ok;
    candidates.push_back({{"candidate", label},
                          {"automaton_side", report.automaton_side},
                          {"origin_side", report.origin_side},
                          {"origin_witness", report.origin_witness},
                          {"verdict", report.verdict.to_json()}});
  };
  run("global transition function", map);
  if (ca.states() > 1) {
    // Same map with the origin's output bumped by one state.
    const MixedRadix& codec = *map.codec();
    const Point origin = ca.space().origin();
    std::vector<std::uint64_t> table(map.table());
    for (std::uint64_t& y : table)
      y = codec.with_digit(y, origin, static_cast<State>((codec.digit(y, origin) + 1) % ca.states()));
    run("origin overwritten", GlobalMap::from_table(ca.space_ptr(), ca.states(), std::move(table)));
  }
  return result(name, ok ? SuiteStatus::pass : SuiteStatus::fail, {{"candidates", candidates}});
}

SuiteResult composition(const SemiCellularAutomaton& ca, const Subgroup& h, const Sampling& sampling) {
  const std::string name = "composition";
  if (Verdict v = is_cellular(ca, h); !v)
    return result(name, SuiteStatus::skipped, {{"reason", "local rule is not invariant"}, {"invariance", v.to_json()}});
  const SemiCellularAutomaton id = catalog::identity_rule(ca.space_ptr(), ca.states());
  nlohmann::json pairs = nlohmann::json::array();
  bool ok = true, sampled = false;
  auto run = [&](const std::string& label, const SemiCellularAutomaton& outer, const SemiCellularAutomaton& inner) {
    const SemiCellularAutomaton c = compose(outer, inner, h);
    const Verdict invariant = is_cellular(c, h);
    const Verdict same = same_function(GlobalMap::of(c), composed(GlobalMap::of(outer), GlobalMap::of(inner)), sampling);
    ok = ok && invariant.ok && same.ok;
    sampled = sampled || same.sampled;
    pairs.push_back({{"pair", label},
                     {"neighbors", c.neighbors()},
                     {"invariant", invariant.to_json()},
                     {"global_function", same.to_json()}});
  };
  try {
    run("rule after identity", ca, id);
    run("identity after rule", id, ca);
    run("rule after rule", ca, ca);
  } catch (const BoundExceeded& e) {
    return result(name, SuiteStatus::bound_exceeded, {{"reason", e.what()}, {"pairs", pairs}});
  }
  return result(name, !ok ? SuiteStatus::fail : sampled ? SuiteStatus::sampled : SuiteStatus::pass, {{"pairs", pairs}});
}

SuiteResult chl(const SemiCellularAutomaton& ca, const Subgroup& h, const Sampling& sampling) {
  const std::string name = "chl";
  if (!all_tabulated(ca)) return result(name, SuiteStatus::bound_exceeded, {{"reason", "configuration space too large"}});
  const GlobalMap map = GlobalMap::of(ca);
  const bool invariant = is_cellular(ca, h).ok;
  try {
    const SemiCellularAutomaton extracted = extract(map, h, sampling);
    const Verdict same = same_global_function(GlobalMap::of(extracted), map);
    const Verdict extracted_invariant = is_cellular(extracted, h);
    const bool ok = invariant && same.ok && extracted_invariant.ok;
    std::vector<Element> reps;
    for (std::size_t c : extracted.neighborhood()) reps.push_back(ca.space().cosets().representative(c));
    return result(name, ok ? SuiteStatus::pass : SuiteStatus::fail,
                  {{"extracted_neighborhood", reps},
                   {"round_trip", same.to_json()},
                   {"extracted_invariant", extracted_invariant.to_json()}});
  } catch (const LawViolation& e) {
    // A non-invariant rule has a non-equivariant step, which must be rejected.
    return result(name, invariant ? SuiteStatus::fail : SuiteStatus::pass,
                  {{"rejected", e.verdict().to_json()}});
  }
}

SuiteResult invertibility(const SemiCellularAutomaton& ca, const Subgroup& h, const Sampling& sampling) {
  const std::string name = "invertibility";
  if (Verdict v = is_cellular(ca, h); !v)
    return result(name, SuiteStatus::skipped, {{"reason", "local rule is not invariant"}, {"invariance", v.to_json()}});
  const Inversion inv = invert(ca, h, sampling);
  if (const auto* no = std::get_if<NotInvertible>(&inv)) {
    const bool checked = no->first != no->second && step(ca, no->first) == no->image &&
                         step(ca, no->second) == no->image;
    nlohmann::json details = {{"invertible", false},
                              {"collision", {{"first", states_json(no->first)},
                                             {"second", states_json(no->second)},
                                             {"image", states_json(no->image)}}},
                              {"witness_checked", checked},
                              {"sampled", no->sampled}};
    return result(name, checked ? SuiteStatus::fail : SuiteStatus::error, details);
  }
  const auto& inverse = std::get<SemiCellularAutomaton>(inv);
  const GlobalMap forward = GlobalMap::of(ca), backward = GlobalMap::of(inverse);
  const GlobalMap identity = GlobalMap::of(catalog::identity_rule(ca.space_ptr(), ca.states()));
  const Verdict left = same_global_function(composed(backward, forward), identity);
  const Verdict right = same_global_function(composed(forward, backward), identity);
  std::vector<Element> reps;
  for (std::size_t c : inverse.neighborhood()) reps.push_back(ca.space().cosets().representative(c));
  return result(name, left.ok && right.ok ? SuiteStatus::pass : SuiteStatus::error,
                {{"invertible", true},
                 {"inverse_neighborhood", reps},
                 {"left_inverse", left.to_json()},
                 {"right_inverse", right.to_json()}});
}

SuiteResult uniformity(const SemiCellularAutomaton& ca, const Subgroup& h, const Sampling& sampling) {
  const std::string name = "uniformity";
  const CellSpace& r = ca.space();
  auto count = power_count(ca.states(), r.cells());
  if (!count || *count > kMaxUniformUniverse)
    return result(name, SuiteStatus::bound_exceeded, {{"reason", "configuration space too large"}});
  const ProdiscreteBase base = prodiscrete_base(r, ca.states());
  const Verdict axioms = check_uniformity_base(base.base);

  const std::uint64_t subsets = base.base.members.size();
  nlohmann::json intersection = Verdict::pass().to_json();
  for (std::uint64_t k = 0; k < subsets && intersection["ok"] == true; ++k)
    for (std::uint64_t k2 = k + 1; k2 < subsets; ++k2)
      if (!(intersect(base.base.members[k], base.base.members[k2]) == base.base.members[k | k2])) {
        intersection = Verdict::fail("E(K) ∩ E(K') = E(K ∪ K')", {{"K", cells_of(k)}, {"K2", cells_of(k2)}}).to_json();
        break;
      }

  const GlobalMap map = GlobalMap::of(ca);
  const UniformContinuity continuity = check_uniform_continuity(map, base);
  nlohmann::json within = Verdict::pass().to_json();
  if (continuity.verdict)
    for (std::uint64_t k = 0; k < subsets; ++k) {
      std::uint64_t reach = 0;  // K ↷ N
      for (Point m : cells_of(k))
        for (std::size_t i = 0; i < ca.neighbors(); ++i) reach |= std::uint64_t{1} << ca.neighbor_cell(m, i);
      if ((continuity.modulus[k] & ~reach) != 0) {
        within = Verdict::fail("L ⊆ K ↷ N", {{"K", cells_of(k)}, {"L", cells_of(continuity.modulus[k])},
                                              {"K_N", cells_of(reach)}})
                     .to_json();
        break;
      }
    }

  const Verdict iso = check_uniform_isomorphism(map, base);
  bool invertible = false;
  if (is_cellular(ca, h)) invertible = std::holds_alternative<SemiCellularAutomaton>(invert(ca, h, sampling));
  else invertible = iso.ok;  // invert does not apply; nothing to compare against
  const bool agree = iso.ok == invertible;

  const bool ok = axioms.ok && intersection["ok"] == true && continuity.verdict.ok && within["ok"] == true && agree;
  nlohmann::json moduli = nlohmann::json::array();
  for (std::uint64_t k = 0; k < subsets; ++k)
    moduli.push_back({{"K", cells_of(k)}, {"L", cells_of(continuity.modulus[k])}});
  return result(name, ok ? SuiteStatus::pass : SuiteStatus::fail,
                {{"base_axioms", axioms.to_json()},
                 {"intersection", intersection},
                 {"continuity", continuity.verdict.to_json()},
                 {"modulus", moduli},
                 {"modulus_within_neighborhood", within},
                 {"uniform_isomorphism", iso.to_json()},
                 {"agrees_with_invert", agree}});
}

}  // namespace

std::string status_name(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::pass: return "pass";
    case SuiteStatus::fail: return "fail";
    case SuiteStatus::skipped: return "skipped";
    case SuiteStatus::sampled: return "sampled";
    case SuiteStatus::bound_exceeded: return "bound_exceeded";
    case SuiteStatus::error: return "error";
  }
  return "unknown";
}

nlohmann::json SuiteResult::to_json() const {
  return {{"suite", suite}, {"status", status_name(status)}, {"details", details}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"coordinate-independence", "equivalence", "determination",
                                                 "composition", "chl", "invertibility", "uniformity"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SemiCellularAutomaton& ca, const Subgroup& h,
                      const Sampling& sampling) {
  try {
    if (name == "coordinate-independence") return coordinate_independence(ca, h, sampling);
    if (name == "equivalence") return equivalence(ca, h, sampling);
    if (name == "determination") return determination(ca, h, sampling);
    if (name == "composition") return composition(ca, h, sampling);
    if (name == "chl") return chl(ca, h, sampling);
    if (name == "invertibility") return invertibility(ca, h, sampling);
    if (name == "uniformity") return uniformity(ca, h, sampling);
  } catch (const BoundExceeded& e) {
    return result(name, SuiteStatus::bound_exceeded, {{"reason", e.what()}});
  }
  throw InputError("unknown suite \"" + name + "\"");
}

}  // namespace gca
