#include "gca/cell_space.hpp"

#include <string>

namespace gca {

CoordinateSystem::CoordinateSystem(LeftAction action, Point origin, std::vector<Element> coords)
    : action_(std::move(action)), origin_(origin), coords_(std::move(coords)) {}

CoordinateSystem CoordinateSystem::minimal(LeftAction action, Point origin) {
  if (origin >= action.points()) throw InputError("origin out of range");
  const FiniteGroup& g = action.group();
  std::vector<Element> coords(action.points(), kNoElement);
  for (Element x = g.order(); x-- > 0;) coords[action.act(x, origin)] = x;
  coords[origin] = g.identity();
  for (Point m = 0; m < action.points(); ++m)
    if (coords[m] == kNoElement)
      throw PreconditionError("action is not transitive: no element moves the origin to " +
                              std::to_string(m));
  return CoordinateSystem(std::move(action), origin, std::move(coords));
}

CoordinateSystem CoordinateSystem::with_coordinates(LeftAction action, Point origin,
                                                    std::vector<Element> coords) {
  if (origin >= action.points()) throw InputError("origin out of range");
  if (coords.size() != action.points())
    throw InputError("expected " + std::to_string(action.points()) + " coordinates, got " +
                     std::to_string(coords.size()));
  const FiniteGroup& g = action.group();
  if (coords[origin] != g.identity())
    throw InputError("the coordinate of the origin must be the identity");
  for (Point m = 0; m < coords.size(); ++m) {
    if (coords[m] >= g.order())
      throw InputError("coordinate of cell " + std::to_string(m) + " out of range");
    if (action.act(coords[m], origin) != m)
      throw InputError("coordinate of cell " + std::to_string(m) +
                       " does not move the origin to it");
  }
  return CoordinateSystem(std::move(action), origin, std::move(coords));
}

CellSpace::CellSpace(CoordinateSystem coords)
    : coords_(std::move(coords)), quotient_(gca::stabilizer(coords_.action(), coords_.origin())) {}

bool CellSpace::admits(const Subgroup& h) const {
  for (Element c : coords_.coordinates())
    if (!h.contains(c)) return false;
  return true;
}

Element defect(const CellSpace& r, Point m, Element h) {
  const FiniteGroup& g = r.group();
  const Element gmh = g.mul(r.coordinate(m), h);
  const Point target = r.action().act(gmh, r.origin());
  return g.mul(g.inv(r.coordinate(target)), gmh);
}

Element commutation_defect(const CellSpace& r, Point m, Element h) {
  const FiniteGroup& g = r.group();
  const Point moved = r.action().act(h, m);
  return g.mul(g.mul(g.inv(r.coordinate(m)), g.inv(h)), r.coordinate(moved));
}

Verdict check_defect(const CellSpace& r, Point m, Element h) {
  const FiniteGroup& g = r.group();
  const Element h0 = defect(r, m, h);
  if (!r.stabilizer().contains(h0))
    return Verdict::fail("defect in stabiliser", {{"m", m}, {"h", h}, {"h0", h0}});
  const Point base = r.semi_act_element(m, h);
  for (std::size_t c = 0; c < r.cosets().size(); ++c) {
    const Element rep = r.cosets().representative(c);
    const Point lhs = r.semi_act_element(m, g.mul(h, rep));
    const Point rhs = r.semi_act_element(base, g.mul(h0, rep));
    if (lhs != rhs)
      return Verdict::fail("defect", {{"m", m}, {"h", h}, {"h0", h0}, {"coset", rep},
                                      {"lhs", lhs}, {"rhs", rhs}});
  }
  return Verdict::pass();
}

Verdict check_commutation_defect(const CellSpace& r, Point m, Element h) {
  const FiniteGroup& g = r.group();
  const Element h0 = commutation_defect(r, m, h);
  if (!r.stabilizer().contains(h0))
    return Verdict::fail("commutation defect in stabiliser", {{"m", m}, {"h", h}, {"h0", h0}});
  const Point moved = r.action().act(h, m);
  for (std::size_t c = 0; c < r.cosets().size(); ++c) {
    const Element rep = r.cosets().representative(c);
    const Point lhs = r.semi_act(moved, c);
    const Point rhs = r.action().act(h, r.semi_act_element(m, g.mul(h0, rep)));
    if (lhs != rhs)
      return Verdict::fail("commutation defect", {{"m", m}, {"h", h}, {"h0", h0},
                                                  {"coset", rep}, {"lhs", lhs}, {"rhs", rhs}});
  }
  return Verdict::pass();
}

Verdict check_free_transitive(const CellSpace& r) {
  const std::size_t n = r.cells();
  const std::size_t k = r.cosets().size();
  for (Point m = 0; m < n; ++m) {
    std::vector<std::size_t> hit(n, k);
    for (std::size_t c = 0; c < k; ++c) {
      const Point target = r.semi_act(m, c);
      if (hit[target] != k)
        return Verdict::fail("freeness", {{"m", m},
                                          {"coset", r.cosets().representative(hit[target])},
                                          {"coset2", r.cosets().representative(c)},
                                          {"image", target}});
      hit[target] = c;
    }
    for (Point target = 0; target < n; ++target)
      if (hit[target] == k) return Verdict::fail("transitivity", {{"m", m}, {"unreached", target}});
  }
  return Verdict::pass();
}

Identification identify(const CellSpace& r) {
  Identification out;
  const OriginIdentification ident = iota(r.action(), r.origin());
  out.coset_of_point = ident.coset_of_point;
  out.point_of_coset.resize(r.cosets().size());
  for (std::size_t c = 0; c < r.cosets().size(); ++c)
    out.point_of_coset[c] = r.semi_act(r.origin(), c);
  out.verdict = [&]() -> Verdict {
    for (Point m = 0; m < r.cells(); ++m)
      if (out.point_of_coset[out.coset_of_point[m]] != m)
        return Verdict::fail("identification round trip on cells", {{"m", m}});
    for (std::size_t c = 0; c < r.cosets().size(); ++c)
      if (out.coset_of_point[out.point_of_coset[c]] != c)
        return Verdict::fail("identification round trip on cosets",
                             {{"coset", r.cosets().representative(c)}});
    // m ↷ 𝔤 = g_{m0,m} |> iota⁻¹(𝔤).
    for (Point m = 0; m < r.cells(); ++m)
      for (std::size_t c = 0; c < r.cosets().size(); ++c)
        if (r.semi_act(m, c) != r.action().act(r.coordinate(m), out.point_of_coset[c]))
          return Verdict::fail("semi-action via identification",
                               {{"m", m}, {"coset", r.cosets().representative(c)}});
    return Verdict::pass();
  }();
  return out;
}

namespace {
void require_origin_transport(const CellSpace& r, const CellSpace& r2, Element h) {
  if (!(r.action() == r2.action()))
    throw PreconditionError("coordinate systems live on different actions");
  if (h >= r.group().order() || r.action().act(h, r.origin()) != r2.origin())
    throw PreconditionError("h does not move the first origin to the second");
}
}  // namespace

Element coord_change_defect(const CellSpace& r, const CellSpace& r2, Element h, Point m) {
  require_origin_transport(r, r2, h);
  const FiniteGroup& g = r.group();
  return g.mul(g.mul(g.inv(r.coordinate(m)), r2.coordinate(m)), h);
}

std::size_t conjugate_coset(const CellSpace& from, const CellSpace& to, Element h,
                            std::size_t coset) {
  require_origin_transport(from, to, h);
  const FiniteGroup& g = from.group();
  const Element rep = from.cosets().representative(coset);
  return to.cosets().index_of(g.mul(g.mul(h, rep), g.inv(h)));
}

Verdict check_coord_change_defect(const CellSpace& r, const CellSpace& r2, Element h, Point m) {
  const FiniteGroup& g = r.group();
  const Element h0 = coord_change_defect(r, r2, h, m);
  if (!r.stabilizer().contains(h0))
    return Verdict::fail("coordinate-change defect in stabiliser", {{"m", m}, {"h", h}, {"h0", h0}});
  const Element h_inv = g.inv(h);
  for (std::size_t c = 0; c < r2.cosets().size(); ++c) {
    const std::size_t back = conjugate_coset(r2, r, h_inv, c);
    const Point lhs = r2.semi_act(m, c);
    const Point rhs = r.semi_act_element(m, g.mul(h0, r.cosets().representative(back)));
    if (lhs != rhs)
      return Verdict::fail("coordinate-change defect",
                           {{"m", m}, {"h", h}, {"h0", h0},
                            {"coset", r2.cosets().representative(c)}, {"lhs", lhs}, {"rhs", rhs}});
  }
  return Verdict::pass();
}

Verdict check_semi_action_laws(const CellSpace& r, const Subgroup& h_group) {
  if (!r.admits(h_group)) throw PreconditionError("subgroup misses a coordinate");
  const std::size_t origin_coset = r.trivial_coset();
  for (Point m = 0; m < r.cells(); ++m)
    if (r.semi_act(m, origin_coset) != m) return Verdict::fail("m ↷ G0 = m", {{"m", m}});
  if (Verdict v = check_free_transitive(r); !v) return v;
  for (Point m = 0; m < r.cells(); ++m) {
    for (Element h : h_group.members()) {
      if (Verdict v = check_defect(r, m, h); !v) return v;
      if (!h_group.contains(defect(r, m, h)))
        return Verdict::fail("defect in H0", {{"m", m}, {"h", h}});
      if (Verdict v = check_commutation_defect(r, m, h); !v) return v;
      if (!h_group.contains(commutation_defect(r, m, h)))
        return Verdict::fail("commutation defect in H0", {{"m", m}, {"h", h}});
    }
  }
  return identify(r).verdict;
}

}  // namespace gca
