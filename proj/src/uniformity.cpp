#include "gca/uniformity.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <variant>

#include "gca/kernels.hpp"

namespace gca {

namespace {

void require_same(const Relation& a, const Relation& b) {
  if (a.universe() != b.universe()) throw InputError("relations over different universes");
}

// Cell sets ordered by size, then by their sorted cell lists.
std::vector<std::uint64_t> masks_by_size(std::size_t cells) {
  std::vector<std::uint64_t> masks(std::uint64_t{1} << cells);
  for (std::uint64_t k = 0; k < masks.size(); ++k) masks[k] = k;
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return cells_of(a) < cells_of(b);
  });
  return masks;
}

}  // namespace

Relation::Relation(std::size_t n) : n_(n), stride_((n + 63) / 64), bits_(n * stride_, 0) {}

Relation Relation::diagonal(std::size_t n) {
  Relation r(n);
  for (std::size_t x = 0; x < n; ++x) r.insert(x, x);
  return r;
}

Relation Relation::full(std::size_t n) {
  Relation r(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) r.insert(x, y);
  return r;
}

std::uint64_t Relation::pairs() const { return kernels::popcount(bits_); }

Relation rel_compose(const Relation& r, const Relation& s) {
  require_same(r, s);
  Relation out(r.universe());
  for (std::size_t x = 0; x < r.universe(); ++x)
    for (std::size_t y = 0; y < r.universe(); ++y)
      if (r.contains(x, y)) kernels::or_words(out.row(x), s.row(y));
  return out;
}

Relation inverse(const Relation& r) {
  Relation out(r.universe());
  for (std::size_t x = 0; x < r.universe(); ++x)
    for (std::size_t y = 0; y < r.universe(); ++y)
      if (r.contains(x, y)) out.insert(y, x);
  return out;
}

Relation intersect(const Relation& a, const Relation& b) {
  require_same(a, b);
  Relation out = a;
  kernels::and_words(out.words(), b.words());
  return out;
}

bool is_subset(const Relation& a, const Relation& b) {
  require_same(a, b);
  return kernels::is_subset(a.words(), b.words());
}

Relation preimage(const Relation& r, std::span<const std::uint64_t> f) {
  if (f.size() != r.universe()) throw InputError("map and relation have different universes");
  Relation out(r.universe());
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = 0; y < f.size(); ++y)
      if (r.contains(f[x], f[y])) out.insert(x, y);
  return out;
}

Verdict check_uniformity_base(const EntourageBase& base) {
  const auto& b = base.members;
  if (b.empty()) return Verdict::fail("base is empty", {});
  for (const Relation& r : b)
    if (r.universe() != base.universe) throw InputError("base member over the wrong universe");

  const Relation diag = Relation::diagonal(base.universe);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!is_subset(diag, b[i])) return Verdict::fail("member misses the diagonal", {{"member", i}});

  std::map<std::vector<std::uint64_t>, std::size_t> index;
  for (std::size_t i = 0; i < b.size(); ++i)
    index.emplace(std::vector<std::uint64_t>(b[i].words().begin(), b[i].words().end()), i);
  auto contains_member = [&](const Relation& target) {
    if (index.contains(std::vector<std::uint64_t>(target.words().begin(), target.words().end())))
      return true;
    return std::any_of(b.begin(), b.end(), [&](const Relation& r) { return is_subset(r, target); });
  };

  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!contains_member(intersect(b[i], b[j])))
        return Verdict::fail("intersection contains no member", {{"member", i}, {"member2", j}});
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!contains_member(inverse(b[i])))
      return Verdict::fail("inverse contains no member", {{"member", i}});
  std::vector<Relation> squares;
  for (const Relation& r : b) squares.push_back(rel_compose(r, r));
  for (std::size_t i = 0; i < b.size(); ++i) {
    const bool halves = std::any_of(squares.begin(), squares.end(),
                                    [&](const Relation& sq) { return is_subset(sq, b[i]); });
    if (!halves) return Verdict::fail("no member composes into member", {{"member", i}});
  }
  return Verdict::pass();
}

Relation agreement_entourage(const MixedRadix& codec, std::uint64_t k) {
  const std::vector<Point> cells = cells_of(k);
  Relation r(codec.count());
  // Codes agree on K iff their K-digits match; bucket by the projection.
  std::vector<std::uint64_t> projection(codec.count(), 0);
  for (std::uint64_t x = 0; x < codec.count(); ++x)
    for (Point m : cells) projection[x] += codec.digit(x, m) * codec.weight(m);
  for (std::uint64_t x = 0; x < codec.count(); ++x)
    for (std::uint64_t y = 0; y < codec.count(); ++y)
      if (projection[x] == projection[y]) r.insert(x, y);
  return r;
}

ProdiscreteBase prodiscrete_base(const CellSpace& space, unsigned states) {
  auto count = power_count(states, space.cells());
  if (!count || *count > kMaxUniformUniverse)
    throw BoundExceeded("uniformity module is limited to " + std::to_string(kMaxUniformUniverse) +
                        " configurations");
  ProdiscreteBase out{EntourageBase{*count, {}}, MixedRadix(states, space.cells())};
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << space.cells()); ++k)
    out.base.members.push_back(agreement_entourage(out.codec, k));
  return out;
}

UniformContinuity check_uniform_continuity(const GlobalMap& map, const ProdiscreteBase& base) {
  if (!map.tabulated() || map.table().size() != base.base.universe)
    throw PreconditionError("uniform continuity needs a tabulated map over the base universe");
  const auto& members = base.base.members;
  const std::vector<std::uint64_t> order = masks_by_size(base.codec.length());

  UniformContinuity out;
  out.modulus.assign(members.size(), 0);
  for (std::uint64_t k = 0; k < members.size(); ++k) {
    // (Δ × Δ)(E(L)) ⊆ E(K) iff E(L) ⊆ (Δ × Δ)⁻¹(E(K)).
    const Relation pulled = preimage(members[k], map.table());
    auto found = std::find_if(order.begin(), order.end(),
                              [&](std::uint64_t l) { return is_subset(members[l], pulled); });
    if (found == order.end()) {
      out.verdict = Verdict::fail("uniform continuity", {{"K", cells_of(k)}});
      return out;
    }
    out.modulus[k] = *found;
  }
  return out;
}

namespace {

nlohmann::json config_json(const MixedRadix& codec, std::uint64_t code) {
  const auto c = codec.decode_as<Configuration>(code);
  return std::vector<int>(c.begin(), c.end());
}

// The inverse table, or the failing verdict for the first collision.
std::variant<std::vector<std::uint64_t>, Verdict> inverse_table(const GlobalMap& map) {
  const auto& table = map.table();
  constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  std::vector<std::uint64_t> out(table.size(), kUnset);
  for (std::uint64_t x = 0; x < table.size(); ++x) {
    if (out[table[x]] != kUnset)
      return Verdict::fail("not injective", {{"configuration", config_json(*map.codec(), out[table[x]])},
                                             {"configuration2", config_json(*map.codec(), x)},
                                             {"image", config_json(*map.codec(), table[x])}});
    out[table[x]] = x;
  }
  return out;
}

}  // namespace

Verdict check_uniform_isomorphism(const GlobalMap& map, const ProdiscreteBase& base) {
  if (!map.tabulated() || map.table().size() != base.base.universe)
    throw PreconditionError("uniform isomorphism needs a tabulated map over the base universe");
  auto inv = inverse_table(map);
  if (auto* v = std::get_if<Verdict>(&inv)) return *v;
  if (Verdict v = check_uniform_continuity(map, base).verdict; !v) return v;
  const GlobalMap inverse_map =
      GlobalMap::from_table(map.space_ptr(), map.states(), std::move(std::get<0>(inv)));
  if (Verdict v = check_uniform_continuity(inverse_map, base).verdict; !v) {
    v.law = "inverse " + v.law;
    return v;
  }
  return Verdict::pass();
}

CellwiseContinuity check_cellwise_continuity(const GlobalMap& map) {
  if (!map.tabulated()) throw PreconditionError("cell-wise continuity needs a tabulated map");
  const MixedRadix& codec = *map.codec();
  const std::size_t cells = codec.length();
  if (cells > 64) throw BoundExceeded("cell-wise continuity is limited to 64 cells");
  const auto& table = map.table();
  CellwiseContinuity out;
  out.modulus.assign(cells, 0);
  // Single-site sensitivity: cell i is in modulus[m] when changing c(i) alone
  // can change Δ(c)(m).
  for (std::uint64_t x = 0; x < table.size(); ++x)
    for (std::size_t i = 0; i < cells; ++i)
      for (unsigned v = codec.digit(x, i) + 1u; v < codec.states(); ++v) {
        const std::uint64_t y = codec.with_digit(x, i, static_cast<State>(v));
        for (std::size_t m = 0; m < cells; ++m)
          if (codec.digit(table[x], m) != codec.digit(table[y], m)) out.modulus[m] |= std::uint64_t{1} << i;
      }
  // Δ(c)(m) must be a function of c restricted to modulus[m].
  constexpr std::uint16_t kUnset = 0xFFFF;
  std::vector<std::uint16_t> seen(table.size());
  for (std::size_t m = 0; m < cells; ++m) {
    std::fill(seen.begin(), seen.end(), kUnset);
    for (std::uint64_t x = 0; x < table.size(); ++x) {
      std::uint64_t key = x;
      for (std::size_t i = 0; i < cells; ++i)
        if (!((out.modulus[m] >> i) & 1U)) key = codec.with_digit(key, i, 0);
      const State value = codec.digit(table[x], m);
      if (seen[key] == kUnset) {
        seen[key] = value;
      } else if (seen[key] != value) {
        out.verdict = Verdict::fail("uniform continuity", {{"cell", m}, {"L", cells_of(out.modulus[m])},
                                                           {"configuration", config_json(codec, x)}});
        return out;
      }
    }
  }
  return out;
}

Verdict check_uniform_isomorphism(const GlobalMap& map) {
  if (!map.tabulated()) throw PreconditionError("uniform isomorphism needs a tabulated map");
  if (map.table().size() <= kMaxUniformUniverse)
    return check_uniform_isomorphism(map, prodiscrete_base(map.space(), map.states()));
  auto inv = inverse_table(map);
  if (auto* v = std::get_if<Verdict>(&inv)) return *v;
  if (Verdict v = check_cellwise_continuity(map).verdict; !v) return v;
  const GlobalMap inverse_map =
      GlobalMap::from_table(map.space_ptr(), map.states(), std::move(std::get<0>(inv)));
  if (Verdict v = check_cellwise_continuity(inverse_map).verdict; !v) {
    v.law = "inverse " + v.law;
    return v;
  }
  return Verdict::pass();
}

std::vector<Point> cells_of(std::uint64_t mask) {
  std::vector<Point> out;
  for (Point m = 0; m < 64; ++m)
    if ((mask >> m) & 1U) out.push_back(m);
  return out;
}

}  // namespace gca
