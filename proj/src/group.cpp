#include "gca/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gca {

namespace {

std::vector<Element> derive_inverses(std::size_t n, std::span<const Element> table,
                                     Element identity) {
  std::vector<Element> inverse(n, kNoElement);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (table[g * n + h] == identity && table[h * n + g] == identity) {
        inverse[g] = static_cast<Element>(h);
        break;
      }
    }
  }
  return inverse;
}

// Closure of {identity} under right multiplication by `gens`. Every element
// reached is a product of generators, which is all Light's test needs.
std::vector<bool> right_closure(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> queue{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Element s : gens) {
      Element next = g.mul(queue[head], s);
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  return seen;
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, Element identity)
    : order_(order), table_(std::move(table)), identity_(identity) {
  if (order_ == 0) throw InputError("group order must be positive");
  if (order_ > kMaxGroupOrder) {
    throw BoundExceeded("group order " + std::to_string(order_) + " exceeds " +
                        std::to_string(kMaxGroupOrder));
  }
  if (table_.size() != order_ * order_) {
    throw InputError("multiplication table has " + std::to_string(table_.size()) +
                     " entries, expected " + std::to_string(order_ * order_));
  }
  if (identity_ >= order_) throw InputError("identity index out of range");
  // Out-of-range entries are a closure violation reported by verify_group;
  // inverses are only derived for in-range tables.
  bool in_range = std::all_of(table_.begin(), table_.end(),
                              [n = order_](Element e) { return e < n; });
  inverse_ = in_range ? derive_inverses(order_, table_, identity_)
                      : std::vector<Element>(order_, kNoElement);
}

FiniteGroup FiniteGroup::from_rows(const std::vector<std::vector<Element>>& rows,
                                   Element identity) {
  const std::size_t n = rows.size();
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw InputError("multiplication table row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(n));
    }
    table.insert(table.end(), rows[i].begin(), rows[i].end());
  }
  return FiniteGroup(n, std::move(table), identity);
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  return FiniteGroup(n, std::move(table), 0);
}

Verdict verify_group(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const Element e = g.identity();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (g.mul(a, b) >= n)
        return Verdict::fail("closure", {{"a", a}, {"b", b}, {"product", g.mul(a, b)}});

  for (Element a = 0; a < n; ++a) {
    if (g.mul(e, a) != a || g.mul(a, e) != a)
      return Verdict::fail("identity", {{"identity", e}, {"element", a}});
  }

  // Every row and column of a group table is a permutation.
  std::vector<Element> first(n);
  for (Element a = 0; a < n; ++a) {
    std::fill(first.begin(), first.end(), kNoElement);
    for (Element b = 0; b < n; ++b) {
      Element p = g.mul(a, b);
      if (first[p] != kNoElement)
        return Verdict::fail("cancellation",
                             {{"side", "left"}, {"a", a}, {"b", first[p]}, {"c", b}, {"product", p}});
      first[p] = b;
    }
    std::fill(first.begin(), first.end(), kNoElement);
    for (Element b = 0; b < n; ++b) {
      Element p = g.mul(b, a);
      if (first[p] != kNoElement)
        return Verdict::fail("cancellation",
                             {{"side", "right"}, {"a", a}, {"b", first[p]}, {"c", b}, {"product", p}});
      first[p] = b;
    }
  }

  for (Element a = 0; a < n; ++a)
    if (g.inv(a) == kNoElement) return Verdict::fail("inverse", {{"element", a}});

  // Light's associativity test: (xy)s = x(ys) for all x, y and every s in a
  // set that generates the table under multiplication.
  std::vector<Element> gens;
  std::vector<bool> reached = right_closure(g, gens);
  for (Element s = 0; s < n; ++s) {
    if (reached[s]) continue;
    gens.push_back(s);
    reached = right_closure(g, gens);
  }
  for (Element s : gens)
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (g.mul(g.mul(x, y), s) != g.mul(x, g.mul(y, s)))
          return Verdict::fail("associativity", {{"a", x}, {"b", y}, {"c", s}});
  return Verdict::pass();
}

// ---------------------------------------------------------------- subgroups

Subgroup::Subgroup(GroupPtr group, std::vector<Element> members)
    : group_(std::move(group)), members_(std::move(members)), mask_(group_->order(), false) {
  for (Element m : members_) mask_[m] = true;
}

Subgroup Subgroup::from_members(GroupPtr group, std::vector<Element> members) {
  const FiniteGroup& g = *group;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Element m : members)
    if (m >= g.order()) throw InputError("subgroup member " + std::to_string(m) + " out of range");
  Subgroup h(std::move(group), std::move(members));
  if (!h.contains(g.identity())) throw InputError("subgroup does not contain the identity");
  for (Element a : h.members()) {
    if (!h.contains(g.inv(a)))
      throw InputError("subgroup not closed under inverses at " + std::to_string(a));
    for (Element b : h.members())
      if (!h.contains(g.mul(a, b)))
        throw InputError("subgroup not closed: " + std::to_string(a) + " * " +
                         std::to_string(b) + " = " + std::to_string(g.mul(a, b)));
  }
  return h;
}

Subgroup Subgroup::generated_by(GroupPtr group, std::span<const Element> gens) {
  for (Element s : gens)
    if (s >= group->order()) throw InputError("generator " + std::to_string(s) + " out of range");
  std::vector<bool> seen = right_closure(*group, gens);
  std::vector<Element> members;
  for (Element g = 0; g < group->order(); ++g)
    if (seen[g]) members.push_back(g);
  return Subgroup(std::move(group), std::move(members));
}

Subgroup Subgroup::whole(GroupPtr group) {
  std::vector<Element> all(group->order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup(std::move(group), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr group) {
  Element e = group->identity();
  return Subgroup(std::move(group), {e});
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<Element> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(common));
  return Subgroup::from_members(a.group_ptr(), std::move(common));
}

std::vector<Element> generators(const Subgroup& h) {
  const FiniteGroup& g = h.group();
  std::vector<Element> gens;
  std::vector<bool> reached = right_closure(g, gens);
  for (Element m : h.members()) {
    if (reached[m]) continue;
    gens.push_back(m);
    reached = right_closure(g, gens);
  }
  return gens;
}

// ------------------------------------------------------------------ cosets

QuotientSet::QuotientSet(Subgroup h)
    : subgroup_(std::make_shared<const Subgroup>(std::move(h))),
      coset_of_(subgroup_->group().order(), static_cast<std::size_t>(-1)) {
  const FiniteGroup& g = subgroup_->group();
  // Ascending scan: the first unassigned element is the minimum of its coset.
  for (Element a = 0; a < g.order(); ++a) {
    if (coset_of_[a] != static_cast<std::size_t>(-1)) continue;
    const std::size_t index = representatives_.size();
    representatives_.push_back(a);
    for (Element x : subgroup_->members()) coset_of_[g.mul(a, x)] = index;
  }
}

std::size_t QuotientSet::index_of(const Coset& c) const {
  if (!c.subgroup || !(*c.subgroup == *subgroup_))
    throw PreconditionError("coset belongs to a different subgroup");
  std::size_t index = coset_of_[c.representative];
  if (representatives_[index] != c.representative)
    throw PreconditionError("coset representative is not canonical");
  return index;
}

std::vector<Element> QuotientSet::members(std::size_t coset) const {
  const FiniteGroup& g = subgroup_->group();
  std::vector<Element> out;
  out.reserve(subgroup_->size());
  for (Element x : subgroup_->members()) out.push_back(g.mul(representatives_[coset], x));
  std::sort(out.begin(), out.end());
  return out;
}

LeftAction QuotientSet::induced_action() const {
  const FiniteGroup& g = subgroup_->group();
  std::vector<Point> table(g.order() * size());
  for (Element a = 0; a < g.order(); ++a)
    for (std::size_t c = 0; c < size(); ++c)
      table[a * size() + c] = static_cast<Point>(coset_of_[g.mul(a, representatives_[c])]);
  return LeftAction(subgroup_->group_ptr(), size(), std::move(table));
}

// ----------------------------------------------------------------- actions

LeftAction::LeftAction(GroupPtr group, std::size_t points, std::vector<Point> table)
    : group_(std::move(group)), points_(points), table_(std::move(table)) {
  if (points_ == 0) throw InputError("an action needs at least one point");
  if (points_ > kMaxPoints) {
    throw BoundExceeded("point count " + std::to_string(points_) + " exceeds " +
                        std::to_string(kMaxPoints));
  }
  if (table_.size() != group_->order() * points_)
    throw InputError("action table has " + std::to_string(table_.size()) + " entries, expected " +
                     std::to_string(group_->order() * points_));
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] >= points_)
      throw InputError("action table entry act[" + std::to_string(i / points_) + "][" +
                       std::to_string(i % points_) + "] out of range");
}

LeftAction LeftAction::from_rows(GroupPtr group, const std::vector<std::vector<Point>>& rows) {
  if (rows.size() != group->order())
    throw InputError("action table has " + std::to_string(rows.size()) + " rows, expected " +
                     std::to_string(group->order()));
  const std::size_t points = rows.empty() ? 0 : rows.front().size();
  std::vector<Point> table;
  for (std::size_t g = 0; g < rows.size(); ++g) {
    if (rows[g].size() != points)
      throw InputError("action table row " + std::to_string(g) + " has the wrong length");
    table.insert(table.end(), rows[g].begin(), rows[g].end());
  }
  return LeftAction(std::move(group), points, std::move(table));
}

LeftAction LeftAction::regular(GroupPtr group) {
  const std::size_t n = group->order();
  std::vector<Point> table(group->table().begin(), group->table().end());
  return LeftAction(std::move(group), n, std::move(table));
}

Verdict verify_action(const LeftAction& a) {
  const FiniteGroup& g = a.group();
  for (Point m = 0; m < a.points(); ++m)
    if (a.act(g.identity(), m) != m)
      return Verdict::fail("identity", {{"m", m}, {"image", a.act(g.identity(), m)}});
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      for (Point m = 0; m < a.points(); ++m)
        if (a.act(g.mul(x, y), m) != a.act(x, a.act(y, m)))
          return Verdict::fail("compatibility", {{"g", x}, {"g2", y}, {"m", m}});
  return Verdict::pass();
}

namespace {
void check_point(const LeftAction& a, Point m) {
  if (m >= a.points()) throw InputError("point " + std::to_string(m) + " out of range");
}
}  // namespace

std::vector<Point> orbit(const LeftAction& a, Point m) {
  check_point(a, m);
  std::vector<bool> seen(a.points(), false);
  for (Element g = 0; g < a.group().order(); ++g) seen[a.act(g, m)] = true;
  std::vector<Point> out;
  for (Point p = 0; p < a.points(); ++p)
    if (seen[p]) out.push_back(p);
  return out;
}

Subgroup stabilizer(const LeftAction& a, Point m) {
  return Subgroup::from_members(a.group_ptr(), transporter(a, m, m));
}

std::vector<Element> transporter(const LeftAction& a, Point from, Point to) {
  check_point(a, from);
  check_point(a, to);
  std::vector<Element> out;
  for (Element g = 0; g < a.group().order(); ++g)
    if (a.act(g, from) == to) out.push_back(g);
  return out;
}

bool is_transitive(const LeftAction& a) { return orbit(a, 0).size() == a.points(); }

Verdict check_transporter_lemma(const LeftAction& a, Point m, Point m2, Element g) {
  check_point(a, m);
  check_point(a, m2);
  if (g >= a.group().order() || a.act(g, m) != m2)
    throw PreconditionError("element does not transport m to m'");
  const FiniteGroup& grp = a.group();
  const Subgroup stab = stabilizer(a, m);
  const Subgroup stab2 = stabilizer(a, m2);
  const std::vector<Element> trans = transporter(a, m, m2);

  std::vector<Element> conj, left, right;
  for (Element x : stab.members()) {
    conj.push_back(grp.mul(grp.mul(g, x), grp.inv(g)));
    left.push_back(grp.mul(g, x));
  }
  for (Element x : stab2.members()) right.push_back(grp.mul(x, g));
  std::sort(conj.begin(), conj.end());
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());

  auto members = [](const std::vector<Element>& v) { return nlohmann::json(v); };
  std::vector<Element> stab2_members(stab2.members().begin(), stab2.members().end());
  if (conj != stab2_members)
    return Verdict::fail("stabiliser conjugation", {{"g", g}, {"conjugate", members(conj)},
                                                    {"stabiliser", members(stab2_members)}});
  if (left != trans)
    return Verdict::fail("left coset", {{"g", g}, {"coset", members(left)},
                                        {"transporter", members(trans)}});
  if (right != trans)
    return Verdict::fail("right coset", {{"g", g}, {"coset", members(right)},
                                         {"transporter", members(trans)}});
  return Verdict::pass();
}

OriginIdentification iota(const LeftAction& a, Point origin) {
  check_point(a, origin);
  if (!is_transitive(a)) throw PreconditionError("action is not transitive");
  QuotientSet quotient(stabilizer(a, origin));
  std::vector<std::size_t> coset_of_point(a.points());
  for (Point m = 0; m < a.points(); ++m)
    coset_of_point[m] = quotient.index_of(transporter(a, origin, m).front());
  return {std::move(quotient), std::move(coset_of_point)};
}

Coset circ_action(const LeftAction& a, Element g, const Coset& c) {
  const FiniteGroup& grp = a.group();
  if (!c.subgroup) throw PreconditionError("coset has no subgroup");
  if (g >= grp.order()) throw InputError("element out of range");
  for (Point m = 0; m < a.points(); ++m) {
    Subgroup stab = stabilizer(a, m);
    if (!(stab == *c.subgroup)) continue;
    // g g' G_m g^-1 = (g g' g^-1) G_{g |> m}.
    QuotientSet target(stabilizer(a, a.act(g, m)));
    Element moved = grp.mul(grp.mul(g, c.representative), grp.inv(g));
    return target.coset(target.index_of(moved));
  }
  throw PreconditionError("coset subgroup is not a point stabiliser");
}

}  // namespace gca
