#include "gca/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gca::io {

namespace fs = std::filesystem;

namespace {

struct Located {
  nlohmann::json value;
  fs::path dir;
};

// A nested document given inline or as a path relative to `dir`.
Located resolve(const nlohmann::json& j, const char* key, const fs::path& dir) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  const nlohmann::json& v = j.at(key);
  if (v.is_string()) {
    const fs::path path = dir / v.get<std::string>();
    return {read_json(path), path.parent_path()};
  }
  if (!v.is_object()) throw InputError(std::string("\"") + key + "\" must be an object or a path");
  return {v, dir};
}

template <class T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("key \"") + key + "\" has the wrong type");
  }
}

template <class F>
auto with_path(const fs::path& path, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    if (std::string_view(e.what()).starts_with(path.string())) throw;
    throw InputError(path.string() + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

DocumentKind kind_of(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("document is not a JSON object");
  if (j.contains("delta")) return DocumentKind::automaton;
  if (j.contains("table")) return DocumentKind::global_map;
  if (j.contains("origin")) return DocumentKind::space;
  if (j.contains("act")) return DocumentKind::action;
  if (j.contains("mul")) return DocumentKind::group;
  throw InputError("cannot tell the document kind from its keys");
}

std::vector<Element> representatives(const CellSpace& r, const std::vector<std::size_t>& cosets) {
  std::vector<Element> out;
  for (std::size_t c : cosets) out.push_back(r.cosets().representative(c));
  return out;
}

}  // namespace

nlohmann::json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1, start = 0;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
        start = i + 1;
      } else {
        ++column;
      }
    }
    const std::size_t end = text.find('\n', start);
    const std::string excerpt = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    throw InputError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(column) +
                     ": JSON syntax error\n  " + excerpt);
  }
}

FiniteGroup group_from_json(const nlohmann::json& j, const fs::path&) {
  return FiniteGroup::from_rows(field<std::vector<std::vector<Element>>>(j, "mul"),
                                field<Element>(j, "identity"));
}

LeftAction action_from_json(const nlohmann::json& j, const fs::path& dir) {
  const Located g = resolve(j, "group", dir);
  auto group = std::make_shared<const FiniteGroup>(group_from_json(g.value, g.dir));
  auto rows = field<std::vector<std::vector<Point>>>(j, "act");
  if (j.contains("points") && field<std::size_t>(j, "points") != (rows.empty() ? 0 : rows[0].size()))
    throw InputError("\"points\" disagrees with the action rows");
  return LeftAction::from_rows(std::move(group), rows);
}

CellSpacePtr space_from_json(const nlohmann::json& j, const fs::path& dir) {
  const Located a = resolve(j, "action", dir);
  LeftAction action = action_from_json(a.value, a.dir);
  const auto origin = field<Point>(j, "origin");
  if (j.contains("coords"))
    return make_cell_space(
        CoordinateSystem::with_coordinates(std::move(action), origin, field<std::vector<Element>>(j, "coords")));
  return make_cell_space(CoordinateSystem::minimal(std::move(action), origin));
}

SemiCellularAutomaton automaton_from_json(const nlohmann::json& j, const fs::path& dir) {
  const Located s = resolve(j, "space", dir);
  CellSpacePtr space = space_from_json(s.value, s.dir);
  const auto states = field<unsigned>(j, "states");
  const auto reps = field<std::vector<Element>>(j, "neighborhood");
  auto raw = field<std::vector<unsigned>>(j, "delta");
  std::vector<State> delta(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] >= states) throw InputError("delta entry " + std::to_string(k) + " is not a state");
    delta[k] = static_cast<State>(raw[k]);
  }
  return SemiCellularAutomaton::from_representatives(std::move(space), states, reps, std::move(delta));
}

GlobalMap global_map_from_json(const nlohmann::json& j, const fs::path& dir) {
  const Located s = resolve(j, "space", dir);
  return GlobalMap::from_table(space_from_json(s.value, s.dir), field<unsigned>(j, "states"),
                               field<std::vector<std::uint64_t>>(j, "table"));
}

SemiCellularAutomaton load_automaton(const fs::path& path) {
  return with_path(path, [&] { return automaton_from_json(read_json(path), path.parent_path()); });
}

GlobalMap load_global_map(const fs::path& path) {
  return with_path(path, [&] { return global_map_from_json(read_json(path), path.parent_path()); });
}

nlohmann::json to_json(const FiniteGroup& g) {
  std::vector<std::vector<Element>> rows(g.order());
  for (Element a = 0; a < g.order(); ++a)
    rows[a].assign(g.table().begin() + a * g.order(), g.table().begin() + (a + 1) * g.order());
  return {{"order", g.order()}, {"identity", g.identity()}, {"mul", rows}};
}

nlohmann::json to_json(const LeftAction& a) {
  std::vector<std::vector<Point>> rows;
  for (Element g = 0; g < a.group().order(); ++g) rows.emplace_back(a.row(g).begin(), a.row(g).end());
  return {{"group", to_json(a.group())}, {"points", a.points()}, {"act", rows}};
}

nlohmann::json to_json(const CellSpace& r) {
  std::vector<Element> coords;
  for (Point m = 0; m < r.cells(); ++m) coords.push_back(r.coordinate(m));
  return {{"action", to_json(r.action())}, {"origin", r.origin()}, {"coords", coords}};
}

nlohmann::json to_json(const SemiCellularAutomaton& ca) {
  return {{"space", to_json(ca.space())},
          {"states", ca.states()},
          {"neighborhood", representatives(ca.space(), ca.neighborhood())},
          {"delta", std::vector<unsigned>(ca.delta().begin(), ca.delta().end())}};
}

nlohmann::json to_json(const GlobalMap& map) {
  if (!map.tabulated()) throw BoundExceeded("only tabulated maps can be written");
  return {{"space", to_json(map.space())}, {"states", map.states()}, {"table", map.table()}};
}

void write_json(const fs::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

std::string kind_name(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::group: return "group";
    case DocumentKind::action: return "action";
    case DocumentKind::space: return "space";
    case DocumentKind::automaton: return "automaton";
    case DocumentKind::global_map: return "global_map";
  }
  return "unknown";
}

bool Validation::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.verdict.ok; });
}

Validation validate_file(const fs::path& path) {
  return with_path(path, [&] {
    const nlohmann::json top = read_json(path);
    Validation out{kind_of(top), {}};

    // Peel the nesting down to the group, then check outward.
    std::vector<Located> layers{{top, path.parent_path()}};
    const char* keys[] = {"space", "action", "group"};
    const int depth = out.kind == DocumentKind::automaton || out.kind == DocumentKind::global_map ? 0
                      : out.kind == DocumentKind::space                                        ? 1
                      : out.kind == DocumentKind::action                                       ? 2
                                                                                               : 3;
    for (int k = depth; k < 3; ++k) layers.push_back(resolve(layers.back().value, keys[k], layers.back().dir));
    // layers.back() is the group; walk back up.

    const Located& gl = layers.back();
    auto group = std::make_shared<const FiniteGroup>(group_from_json(gl.value, gl.dir));
    out.checks.push_back({"group axioms", verify_group(*group)});
    if (!out.checks.back().verdict || layers.size() < 2) return out;

    const Located& al = layers[layers.size() - 2];
    const LeftAction action = action_from_json(al.value, al.dir);
    out.checks.push_back({"action axioms", verify_action(action)});
    if (!out.checks.back().verdict) return out;
    out.checks.push_back({"transitivity", is_transitive(action)
                                              ? Verdict::pass()
                                              : Verdict::fail("transitivity", {{"orbit_of_0", orbit(action, 0)}})});
    if (!out.checks.back().verdict || layers.size() < 3) return out;

    const Located& sl = layers[layers.size() - 3];
    const CellSpacePtr space = space_from_json(sl.value, sl.dir);
    out.checks.push_back({"semi-action laws", check_semi_action_laws(*space, Subgroup::whole(space->group_ptr()))});
    if (!out.checks.back().verdict || layers.size() < 4) return out;

    if (out.kind == DocumentKind::automaton) {
      std::vector<std::size_t> cosets;
      for (Element rep : field<std::vector<Element>>(top, "neighborhood")) {
        if (rep >= space->group().order()) throw InputError("neighbor representative out of range");
        cosets.push_back(space->cosets().index_of(rep));
      }
      std::sort(cosets.begin(), cosets.end());
      cosets.erase(std::unique(cosets.begin(), cosets.end()), cosets.end());
      const auto closed = saturate_neighborhood(*space, cosets);
      out.checks.push_back({"neighborhood closure",
                            closed == cosets ? Verdict::pass()
                                             : Verdict::fail("neighborhood closure",
                                                             {{"neighborhood", representatives(*space, cosets)},
                                                              {"closure", representatives(*space, closed)}})});
      if (!out.checks.back().verdict) return out;
      automaton_from_json(top, path.parent_path());
      out.checks.push_back({"local rule", Verdict::pass()});
    } else {
      global_map_from_json(top, path.parent_path());
      out.checks.push_back({"table", Verdict::pass()});
    }
    return out;
  });
}

}  // namespace gca::io
