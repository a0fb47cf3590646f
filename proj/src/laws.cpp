#include "gca/laws.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

#include "gca/kernels.hpp"

namespace gca {

namespace {

nlohmann::json states_json(const Configuration& c) { return std::vector<int>(c.begin(), c.end()); }

void require_admitted(const CellSpace& r, const Subgroup& h) {
  if (!r.admits(h)) throw PreconditionError("subgroup misses a coordinate");
}

void require_invariant(const SemiCellularAutomaton& ca, const Subgroup& h) {
  if (Verdict v = is_cellular(ca, h); !v) throw LawViolation(std::move(v));
}

// mt19937_64 is fully specified, so sampled runs agree across platforms.
Configuration random_configuration(std::mt19937_64& rng, std::size_t cells, unsigned states) {
  Configuration c(cells);
  for (std::size_t m = 0; m < cells; ++m) c[m] = static_cast<State>(rng() % states);
  return c;
}

Verdict equivariance_failure(Element h, const Configuration& c, const Configuration& mapped_shift,
                             const Configuration& shifted_map) {
  return Verdict::fail("equivariance", {{"h", h},
                                        {"configuration", states_json(c)},
                                        {"map_of_shift", states_json(mapped_shift)},
                                        {"shift_of_map", states_json(shifted_map)}});
}

Verdict check_tabulated_equivariance(const GlobalMap& map, std::span<const Element> gens) {
  const LeftAction& a = map.space().action();
  const MixedRadix& codec = *map.codec();
  const std::size_t cells = map.space().cells();
  const std::uint64_t count = codec.count();

  for (Element s : gens) {
    const Element s_inv = a.group().inv(s);
    std::vector<std::uint32_t> source(cells);
    for (Point m = 0; m < cells; ++m) source[m] = a.act(s_inv, m);

    auto fail_at = [&](std::uint64_t code) {
      const Configuration c = codec.decode_as<Configuration>(code);
      return equivariance_failure(s, c, map(shift(a, s, c)), shift(a, s, map(c)));
    };

    if (map.states() == 2 && cells <= 32) {
      constexpr std::size_t kChunk = 4096;
      std::vector<std::uint32_t> in(kChunk), images(kChunk), moved_in(kChunk), moved_images(kChunk);
      for (std::uint64_t base = 0; base < count; base += kChunk) {
        const std::size_t n = static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, count - base));
        for (std::size_t k = 0; k < n; ++k) {
          in[k] = static_cast<std::uint32_t>(base + k);
          images[k] = static_cast<std::uint32_t>(map(base + k));
        }
        const std::span<const std::uint32_t> in_view(in.data(), n), images_view(images.data(), n);
        kernels::permute_bits(source, in_view, std::span(moved_in.data(), n));
        kernels::permute_bits(source, images_view, std::span(moved_images.data(), n));
        for (std::size_t k = 0; k < n; ++k)
          if (map(moved_in[k]) != moved_images[k]) return fail_at(base + k);
      }
      continue;
    }

    std::vector<State> digits(cells), moved(cells);
    auto permute_code = [&](std::uint64_t code) {
      codec.decode(code, digits);
      for (Point m = 0; m < cells; ++m) moved[m] = digits[source[m]];
      return codec.encode(moved);
    };
    for (std::uint64_t code = 0; code < count; ++code)
      if (map(permute_code(code)) != permute_code(map(code))) return fail_at(code);
  }
  return Verdict::pass();
}

}  // namespace

Verdict check_equivariance(const GlobalMap& map, const Subgroup& h, const Sampling& sampling) {
  require_admitted(map.space(), h);
  const std::vector<Element> gens = generators(h);
  if (map.tabulated()) return check_tabulated_equivariance(map, gens);

  const LeftAction& a = map.space().action();
  std::mt19937_64 rng(sampling.seed);
  for (std::size_t k = 0; k < sampling.samples; ++k) {
    const Configuration c = random_configuration(rng, map.space().cells(), map.states());
    const Configuration image = map(c);
    for (Element s : gens) {
      const Configuration lhs = map(shift(a, s, c));
      const Configuration rhs = shift(a, s, image);
      if (lhs != rhs) {
        Verdict v = equivariance_failure(s, c, lhs, rhs);
        v.sampled = true;
        return v;
      }
    }
  }
  Verdict v = Verdict::pass();
  v.sampled = true;
  return v;
}

SemiCellularAutomaton change_coordinates(const SemiCellularAutomaton& ca, CellSpacePtr target,
                                         Element h, const Subgroup& h_group) {
  const CellSpace& r = ca.space();
  require_admitted(r, h_group);
  require_admitted(*target, h_group);
  if (!h_group.contains(h)) throw PreconditionError("h is not in H");
  require_invariant(ca, h_group);

  // Position in the new neighborhood of h ∘ n_i.
  std::vector<std::size_t> moved(ca.neighbors());
  for (std::size_t i = 0; i < ca.neighbors(); ++i)
    moved[i] = conjugate_coset(r, *target, h, ca.neighborhood()[i]);
  std::vector<std::size_t> new_neighborhood = moved;
  std::sort(new_neighborhood.begin(), new_neighborhood.end());
  std::vector<std::size_t> pos(ca.neighbors());
  for (std::size_t i = 0; i < ca.neighbors(); ++i)
    pos[i] = static_cast<std::size_t>(
        std::lower_bound(new_neighborhood.begin(), new_neighborhood.end(), moved[i]) -
        new_neighborhood.begin());

  const MixedRadix& codec = ca.local_codec();
  std::vector<State> delta(codec.count());
  std::vector<State> primed(ca.neighbors()), local(ca.neighbors());
  for (std::uint64_t code = 0; code < codec.count(); ++code) {
    codec.decode(code, primed);
    for (std::size_t i = 0; i < ca.neighbors(); ++i) local[i] = primed[pos[i]];
    delta[code] = ca.apply_local(codec.encode(local));
  }
  return SemiCellularAutomaton(std::move(target), ca.states(), std::move(new_neighborhood),
                               std::move(delta));
}

EquivalenceReport check_invariance_equivalence(const SemiCellularAutomaton& ca, const Subgroup& h,
                                               const Sampling& sampling) {
  EquivalenceReport report;
  report.invariance = is_cellular(ca, h);
  report.equivariance = check_equivariance(GlobalMap::of(ca), h, sampling);
  report.invariant = report.invariance.ok;
  report.equivariant = report.equivariance.ok;
  if (report.invariant != report.equivariant)
    report.verdict = Verdict::fail("invariance iff equivariance",
                                   {{"invariant", report.invariant},
                                    {"equivariant", report.equivariant},
                                    {"invariance", report.invariance.to_json()},
                                    {"equivariance", report.equivariance.to_json()}});
  report.verdict.sampled = report.equivariance.sampled;
  return report;
}

DeterminationReport check_determination(const SemiCellularAutomaton& ca, const GlobalMap& candidate,
                                        const Subgroup& h, const Sampling& sampling) {
  if (!candidate.tabulated()) throw BoundExceeded("determination check needs a tabulated map");
  DeterminationReport report;
  const CellSpace& r = ca.space();

  const bool invariant = is_cellular(ca, h).ok;
  const bool is_global = same_global_function(GlobalMap::of(ca), candidate).ok;
  report.automaton_side = invariant && is_global;

  const bool equivariant = check_equivariance(candidate, h, sampling).ok;
  bool origin_agrees = true;
  const MixedRadix& codec = *candidate.codec();
  for (std::uint64_t code = 0; code < codec.count() && origin_agrees; ++code) {
    const Configuration c = codec.decode_as<Configuration>(code);
    const State expected = ca.apply_local(observe(ca, c, r.origin()));
    const State actual = codec.digit(candidate(code), r.origin());
    if (expected != actual) {
      origin_agrees = false;
      report.origin_witness = {{"configuration", states_json(c)},
                               {"map_at_origin", actual},
                               {"rule_at_origin", expected}};
    }
  }
  report.origin_side = equivariant && origin_agrees;

  if (report.automaton_side != report.origin_side)
    report.verdict = Verdict::fail("determination at the origin",
                                   {{"automaton_side", report.automaton_side},
                                    {"origin_side", report.origin_side},
                                    {"invariant", invariant},
                                    {"is_global_function", is_global},
                                    {"equivariant", equivariant},
                                    {"origin_agrees", origin_agrees}});
  return report;
}

SemiCellularAutomaton compose(const SemiCellularAutomaton& outer, const SemiCellularAutomaton& inner,
                              const Subgroup& h) {
  if (outer.space_ptr() != inner.space_ptr()) {
    const CellSpace& a = outer.space();
    const CellSpace& b = inner.space();
    if (!(a.action() == b.action()) || a.origin() != b.origin() ||
        a.coordinate_system().coordinates() != b.coordinate_system().coordinates())
      throw PreconditionError("automata live on different cell spaces");
  }
  if (outer.states() != inner.states()) throw PreconditionError("automata have different state sets");
  require_invariant(outer, h);
  require_invariant(inner, h);

  const CellSpace& r = outer.space();
  const FiniteGroup& g = r.group();
  const QuotientSet& cosets = r.cosets();

  std::vector<bool> in(cosets.size(), false);
  for (std::size_t n : outer.neighborhood())
    for (Element x : cosets.members(n))
      for (std::size_t n2 : inner.neighborhood())
        in[cosets.index_of(g.mul(x, cosets.representative(n2)))] = true;
  std::vector<std::size_t> combined;
  for (std::size_t c = 0; c < in.size(); ++c)
    if (in[c]) combined.push_back(c);
  std::vector<std::size_t> pos_of(cosets.size(), 0);
  for (std::size_t k = 0; k < combined.size(); ++k) pos_of[combined[k]] = k;

  // For neighbor i of the outer rule and j of the inner rule: the position in
  // N'' of g_{m0, m0 ↷ n_i} · n'_j.
  const std::size_t outer_n = outer.neighbors();
  const std::size_t inner_n = inner.neighbors();
  std::vector<std::size_t> source(outer_n * inner_n);
  for (std::size_t i = 0; i < outer_n; ++i) {
    const Element k = r.coordinate(r.semi_act(r.origin(), outer.neighborhood()[i]));
    for (std::size_t j = 0; j < inner_n; ++j)
      source[i * inner_n + j] =
          pos_of[cosets.index_of(g.mul(k, cosets.representative(inner.neighborhood()[j])))];
  }

  auto count = power_count(outer.states(), combined.size());
  if (!count || *count > kMaxLocalTable)
    throw BoundExceeded("composed neighborhood of " + std::to_string(combined.size()) +
                        " cosets exceeds the local-table bound");
  const MixedRadix codec(outer.states(), combined.size());
  const MixedRadix& outer_codec = outer.local_codec();
  const MixedRadix& inner_codec = inner.local_codec();
  std::vector<State> delta(codec.count());
  std::vector<State> local(combined.size());
  for (std::uint64_t code = 0; code < codec.count(); ++code) {
    codec.decode(code, local);
    std::uint64_t outer_code = 0;
    for (std::size_t i = 0; i < outer_n; ++i) {
      std::uint64_t inner_code = 0;
      for (std::size_t j = 0; j < inner_n; ++j)
        inner_code += local[source[i * inner_n + j]] * inner_codec.weight(j);
      outer_code += inner.apply_local(inner_code) * outer_codec.weight(i);
    }
    delta[code] = outer.apply_local(outer_code);
  }
  return SemiCellularAutomaton(outer.space_ptr(), outer.states(), std::move(combined),
                               std::move(delta));
}

std::vector<Point> origin_dependency(const GlobalMap& map) {
  if (!map.tabulated()) throw BoundExceeded("dependency scan needs a tabulated map");
  const MixedRadix& codec = *map.codec();
  const Point origin = map.space().origin();
  std::vector<Point> out;
  for (Point m = 0; m < map.space().cells(); ++m) {
    bool depends = false;
    for (std::uint64_t code = 0; code < codec.count() && !depends; ++code) {
      if (codec.digit(code, m) != 0) continue;
      const State base = codec.digit(map(code), origin);
      for (unsigned q = 1; q < map.states() && !depends; ++q)
        depends = codec.digit(map(codec.with_digit(code, m, static_cast<State>(q))), origin) != base;
    }
    if (depends) out.push_back(m);
  }
  return out;
}

SemiCellularAutomaton extract(const GlobalMap& map, const Subgroup& h, const Sampling& sampling) {
  if (!map.tabulated()) throw BoundExceeded("extraction needs a tabulated map");
  if (Verdict v = check_equivariance(map, h, sampling); !v) throw LawViolation(std::move(v));

  const CellSpace& r = map.space();
  const OriginIdentification ident = iota(r.action(), r.origin());
  std::vector<std::size_t> generating;
  for (Point m : origin_dependency(map)) generating.push_back(ident.coset_of_point[m]);
  const std::vector<std::size_t> neighborhood = saturate_neighborhood(r, generating);

  auto count = power_count(map.states(), neighborhood.size());
  if (!count || *count > kMaxLocalTable)
    throw BoundExceeded("extracted neighborhood exceeds the local-table bound");
  const MixedRadix local_codec(map.states(), neighborhood.size());
  const MixedRadix& codec = *map.codec();
  std::vector<Point> origin_cells(neighborhood.size());
  for (std::size_t i = 0; i < neighborhood.size(); ++i)
    origin_cells[i] = r.semi_act(r.origin(), neighborhood[i]);

  std::vector<State> delta(local_codec.count());
  std::vector<State> local(neighborhood.size());
  Configuration probe(r.cells());
  for (std::uint64_t code = 0; code < local_codec.count(); ++code) {
    local_codec.decode(code, local);
    // Unobserved cells are held at state 0.
    probe = Configuration(r.cells());
    for (std::size_t i = 0; i < neighborhood.size(); ++i) probe[origin_cells[i]] = local[i];
    delta[code] = codec.digit(map(codec.encode(probe)), r.origin());
  }
  return SemiCellularAutomaton(map.space_ptr(), map.states(), neighborhood, std::move(delta));
}

Inversion invert(const SemiCellularAutomaton& ca, const Subgroup& h, const Sampling& sampling) {
  require_invariant(ca, h);
  const GlobalMap map = GlobalMap::of(ca);

  if (!map.tabulated()) {
    // Only a collision can be found by sampling; bijectivity cannot be shown.
    std::mt19937_64 rng(sampling.seed);
    std::map<std::vector<State>, Configuration> seen;
    for (std::size_t k = 0; k < sampling.samples; ++k) {
      const Configuration c = random_configuration(rng, ca.space().cells(), ca.states());
      const Configuration image = map(c);
      std::vector<State> key(image.begin(), image.end());
      auto [it, inserted] = seen.emplace(std::move(key), c);
      if (!inserted && it->second != c) return NotInvertible{it->second, c, image, true};
    }
    throw BoundExceeded("configuration space too large to decide invertibility");
  }

  const MixedRadix& codec = *map.codec();
  constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  std::vector<std::uint64_t> inverse(codec.count(), kUnset);
  for (std::uint64_t code = 0; code < codec.count(); ++code) {
    std::uint64_t& slot = inverse[map(code)];
    if (slot != kUnset)
      return NotInvertible{codec.decode_as<Configuration>(slot), codec.decode_as<Configuration>(code),
                           codec.decode_as<Configuration>(map(code)), false};
    slot = code;
  }
  // Injective on a finite set, hence bijective; the inverse of an
  // equivariant bijection is equivariant, so extraction applies.
  return extract(GlobalMap::from_table(ca.space_ptr(), ca.states(), std::move(inverse)), h, sampling);
}

}  // namespace gca
