#pragma once

// Naive reference computations for the tests. They avoid the library's
// generator shortcuts, kernels and codecs and work directly from the action
// table and the defining formulas.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gca/automaton.hpp"
#include "gca/catalog.hpp"
#include "gca/global_map.hpp"

namespace oracle {

using gca::Configuration;
using gca::Element;
using gca::Point;
using gca::State;

inline std::vector<Configuration> all_configurations(std::size_t cells, unsigned states) {
  std::vector<Configuration> out;
  std::vector<State> c(cells, 0);
  while (true) {
    out.emplace_back(c);
    std::size_t i = 0;
    while (i < cells && ++c[i] == states) c[i++] = 0;
    if (i == cells) break;
  }
  return out;
}

inline Configuration random_configuration(std::mt19937_64& rng, std::size_t cells, unsigned states) {
  std::vector<State> c(cells);
  for (State& q : c) q = static_cast<State>(rng() % states);
  return Configuration(std::move(c));
}

// (g ↴ c)(m) = c(g⁻¹ |> m), with g⁻¹ found by search.
inline Configuration shift(const gca::LeftAction& a, Element g, const Configuration& c) {
  const gca::FiniteGroup& grp = a.group();
  Element inverse = 0;
  while (grp.mul(g, inverse) != grp.identity()) ++inverse;
  std::vector<State> out(c.size());
  for (Point m = 0; m < c.size(); ++m) out[m] = c[a.act(inverse, m)];
  return Configuration(std::move(out));
}

// m ↷ gG0 = g_{m0,m} g |> m0, read straight from the action.
inline Point semi_act(const gca::CellSpace& r, Point m, Element g) {
  return r.action().act(r.group().mul(r.coordinate(m), g), r.origin());
}

// Δ(c)(m) = δ(n |-> c(m ↷ n)), local code built by hand.
inline Configuration step(const gca::SemiCellularAutomaton& ca, const Configuration& c) {
  const gca::CellSpace& r = ca.space();
  std::vector<State> out(c.size());
  for (Point m = 0; m < c.size(); ++m) {
    std::uint64_t code = 0, weight = 1;
    for (std::size_t n : ca.neighborhood()) {
      code += c[semi_act(r, m, r.cosets().representative(n))] * weight;
      weight *= ca.states();
    }
    out[m] = ca.delta()[code];
  }
  return Configuration(std::move(out));
}

// Equivariance over every element of h and every configuration.
inline bool equivariant(const gca::GlobalMap& map, const gca::Subgroup& h) {
  const auto& a = map.space().action();
  for (const Configuration& c : all_configurations(map.space().cells(), map.states()))
    for (Element g : h.members())
      if (map(oracle::shift(a, g, c)) != oracle::shift(a, g, map(c))) return false;
  return true;
}

// δ(g0 • l) = δ(l) for every g0 in H0, with (g0 • l)(n) = l(g0⁻¹ n) computed
// on coset members.
inline bool invariant(const gca::SemiCellularAutomaton& ca, const gca::Subgroup& h) {
  const gca::CellSpace& r = ca.space();
  const gca::FiniteGroup& g = r.group();
  const std::size_t k = ca.neighbors();
  for (Element g0 : h.members()) {
    if (!r.stabilizer().contains(g0)) continue;
    Element inv = 0;
    while (g.mul(g0, inv) != g.identity()) ++inv;
    std::vector<std::size_t> source(k);
    for (std::size_t i = 0; i < k; ++i) {
      const Point target = r.action().act(g.mul(inv, r.cosets().representative(ca.neighborhood()[i])), r.origin());
      for (std::size_t j = 0; j < k; ++j)
        if (r.action().act(r.cosets().representative(ca.neighborhood()[j]), r.origin()) == target) source[i] = j;
    }
    for (const Configuration& l : all_configurations(k, ca.states())) {
      std::uint64_t code = 0, moved = 0, weight = 1;
      for (std::size_t i = 0; i < k; ++i) {
        code += l[i] * weight;
        moved += l[source[i]] * weight;
        weight *= ca.states();
      }
      if (ca.delta()[code] != ca.delta()[moved]) return false;
    }
  }
  return true;
}

inline std::string text(const Configuration& c) {
  std::string s;
  for (State q : c) s += static_cast<char>('0' + q);
  return s;
}

}  // namespace oracle
