// gca: validate, run and analyse automata stored as JSON files.
//
// Exit codes: 0 pass, 1 law violation, 2 input error, 3 bound exceeded or
// sampled verdicts only. With --expect-fail, 0 and 1 swap.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gca/catalog.hpp"
#include "gca/io.hpp"
#include "gca/kernels.hpp"
#include "gca/suites.hpp"

namespace {

using gca::Verdict;
using nlohmann::json;

enum Exit { kPass = 0, kViolation = 1, kInput = 2, kBound = 3 };

struct Common {
  std::uint64_t seed = 0;
  std::size_t samples = 4096;
  bool expect_fail = false;
  bool timing = false;
  std::string out;
};

int flip(int code, bool expect_fail) {
  if (!expect_fail) return code;
  if (code == kPass) return kViolation;
  if (code == kViolation) return kPass;
  return code;
}

json report_header(const std::string& command, const std::vector<std::string>& inputs, const Common& c) {
  return {{"command", command}, {"inputs", inputs}, {"seed", c.seed}, {"samples", c.samples},
          {"expect_fail", c.expect_fail}};
}

int emit(json report, int code, const Common& c, bool to_stdout = true) {
  code = flip(code, c.expect_fail);
  report["exit_code"] = code;
  if (to_stdout) std::cout << report.dump(2) << '\n';
  return code;
}

gca::Subgroup subgroup_of(const gca::CellSpace& r, const std::vector<gca::Element>& elements) {
  if (elements.empty()) return gca::Subgroup::whole(r.group_ptr());
  for (gca::Element e : elements)
    if (e >= r.group().order()) throw gca::InputError("subgroup element " + std::to_string(e) + " out of range");
  return gca::Subgroup::generated_by(r.group_ptr(), elements);
}

json states_json(const gca::Configuration& c) { return std::vector<int>(c.begin(), c.end()); }

// Written automata are reloaded and compared before the command succeeds.
Verdict write_checked(const std::string& path, const gca::SemiCellularAutomaton& ca,
                      const gca::GlobalMap& expected) {
  gca::io::write_json(path, gca::io::to_json(ca));
  const gca::SemiCellularAutomaton reloaded = gca::io::load_automaton(path);
  if (!expected.tabulated()) return Verdict::pass();
  return gca::same_global_function(gca::GlobalMap::of(reloaded), expected);
}

int cmd_validate(const std::vector<std::string>& paths, const Common& c) {
  json report = report_header("validate", paths, c);
  report["files"] = json::array();
  int code = kPass;
  for (const std::string& path : paths) {
    json entry = {{"path", path}};
    try {
      const gca::io::Validation v = gca::io::validate_file(path);
      entry["kind"] = gca::io::kind_name(v.kind);
      entry["checks"] = json::array();
      for (const auto& check : v.checks) entry["checks"].push_back({{"check", check.name}, {"verdict", check.verdict.to_json()}});
      entry["ok"] = v.ok();
      if (!v.ok() && code == kPass) code = kViolation;
    } catch (const gca::InputError& e) {
      entry["ok"] = false;
      entry["error"] = e.what();
      std::cerr << e.what() << '\n';
      code = kInput;
    } catch (const gca::PreconditionError& e) {
      entry["ok"] = false;
      entry["error"] = e.what();
      std::cerr << e.what() << '\n';
      code = kInput;
    }
    report["files"].push_back(entry);
  }
  if (!c.out.empty()) gca::io::write_json(c.out, report);
  return emit(report, code, c);
}

int cmd_run(const std::string& path, const std::string& initial, std::size_t steps, const Common& c) {
  const gca::SemiCellularAutomaton ca = gca::io::load_automaton(path);
  gca::Configuration config = gca::parse_configuration(initial, ca.states());
  if (config.size() != ca.space().cells())
    throw gca::InputError("configuration has " + std::to_string(config.size()) + " cells, the space has " +
                          std::to_string(ca.space().cells()));
  json trace = json::array();
  for (std::size_t t = 0; t <= steps; ++t) {
    const std::string line = gca::format_configuration(config, ca.states());
    std::cout << line << '\n';
    trace.push_back(line);
    if (t < steps) config = gca::step(ca, config);
  }
  json report = report_header("run", {path}, c);
  report["initial"] = initial;
  report["steps"] = steps;
  report["trace"] = trace;
  if (!c.out.empty()) gca::io::write_json(c.out, report);
  return emit(report, kPass, c, false);
}

int cmd_laws(const std::string& path, std::vector<std::string> suites, const std::vector<gca::Element>& subgroup,
             const Common& c) {
  const gca::SemiCellularAutomaton ca = gca::io::load_automaton(path);
  const gca::Subgroup h = subgroup_of(ca.space(), subgroup);
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = gca::suite_names();

  json report = report_header("laws", {path}, c);
  report["subgroup"] = h.members();
  report["results"] = json::array();
  bool any_fail = false, any_error = false, any_partial = false;
  for (const std::string& name : suites) {
    const auto start = std::chrono::steady_clock::now();
    const gca::SuiteResult r = gca::run_suite(name, ca, h, {c.seed, c.samples});
    if (c.timing)
      std::cerr << name << ": "
                << std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()
                << " ms\n";
    report["results"].push_back(r.to_json());
    any_fail = any_fail || r.status == gca::SuiteStatus::fail;
    any_error = any_error || r.status == gca::SuiteStatus::error;
    any_partial = any_partial || r.status == gca::SuiteStatus::sampled || r.status == gca::SuiteStatus::bound_exceeded;
  }
  int code = any_fail ? kViolation : any_partial ? kBound : kPass;
  if (!c.out.empty()) gca::io::write_json(c.out, report);
  if (any_error) {
    // A witness that does not check out is never an expected failure.
    report["exit_code"] = kViolation;
    std::cout << report.dump(2) << '\n';
    return kViolation;
  }
  return emit(report, code, c);
}

int cmd_extract(const std::string& path, const std::vector<gca::Element>& subgroup, const Common& c) {
  const gca::GlobalMap map = gca::io::load_global_map(path);
  const gca::Subgroup h = subgroup_of(map.space(), subgroup);
  json report = report_header("extract", {path}, c);
  try {
    const gca::SemiCellularAutomaton ca = gca::extract(map, h, {c.seed, c.samples});
    std::vector<gca::Element> reps;
    for (std::size_t n : ca.neighborhood()) reps.push_back(map.space().cosets().representative(n));
    report["neighborhood"] = reps;
    Verdict round_trip = gca::same_global_function(gca::GlobalMap::of(ca), map);
    if (round_trip && !c.out.empty()) round_trip = write_checked(c.out, ca, map);
    report["round_trip"] = round_trip.to_json();
    return emit(report, round_trip ? kPass : kViolation, c);
  } catch (const gca::LawViolation& e) {
    report["rejected"] = e.verdict().to_json();
    return emit(report, kViolation, c);
  }
}

int cmd_invert(const std::string& path, const std::vector<gca::Element>& subgroup, const Common& c) {
  const gca::SemiCellularAutomaton ca = gca::io::load_automaton(path);
  const gca::Subgroup h = subgroup_of(ca.space(), subgroup);
  json report = report_header("invert", {path}, c);
  const gca::Inversion inv = gca::invert(ca, h, {c.seed, c.samples});
  if (const auto* no = std::get_if<gca::NotInvertible>(&inv)) {
    report["invertible"] = false;
    report["collision"] = {{"first", states_json(no->first)},
                           {"second", states_json(no->second)},
                           {"image", states_json(no->image)}};
    return emit(report, kViolation, c);
  }
  const auto& inverse = std::get<gca::SemiCellularAutomaton>(inv);
  const gca::GlobalMap forward = gca::GlobalMap::of(ca), backward = gca::GlobalMap::of(inverse);
  std::vector<std::uint64_t> round(forward.table().size());
  for (std::uint64_t x = 0; x < round.size(); ++x) round[x] = backward(forward(x));
  bool identity = true;
  for (std::uint64_t x = 0; x < round.size(); ++x) identity = identity && round[x] == x && forward(backward(x)) == x;
  Verdict verdict = identity ? Verdict::pass() : Verdict::fail("two-sided inverse", {});
  if (verdict && !c.out.empty()) verdict = write_checked(c.out, inverse, backward);
  std::vector<gca::Element> reps;
  for (std::size_t n : inverse.neighborhood()) reps.push_back(ca.space().cosets().representative(n));
  report["invertible"] = true;
  report["inverse_neighborhood"] = reps;
  report["round_trip"] = verdict.to_json();
  return emit(report, verdict ? kPass : kViolation, c);
}

int cmd_compose(const std::string& outer_path, const std::string& inner_path,
                const std::vector<gca::Element>& subgroup, const Common& c) {
  const gca::SemiCellularAutomaton outer = gca::io::load_automaton(outer_path);
  const gca::SemiCellularAutomaton inner = gca::io::load_automaton(inner_path);
  const gca::Subgroup h = subgroup_of(outer.space(), subgroup);
  json report = report_header("compose", {outer_path, inner_path}, c);
  const gca::SemiCellularAutomaton both = gca::compose(outer, inner, h);
  const gca::GlobalMap a = gca::GlobalMap::of(outer), b = gca::GlobalMap::of(inner);
  if (!a.tabulated()) throw gca::BoundExceeded("configuration space too large to check the composition");
  std::vector<std::uint64_t> table(a.table().size());
  for (std::uint64_t x = 0; x < table.size(); ++x) table[x] = a(b(x));
  const gca::GlobalMap expected = gca::GlobalMap::from_table(outer.space_ptr(), outer.states(), std::move(table));
  Verdict verdict = gca::same_global_function(gca::GlobalMap::of(both), expected);
  if (verdict && !c.out.empty()) verdict = write_checked(c.out, both, expected);
  std::vector<gca::Element> reps;
  for (std::size_t n : both.neighborhood()) reps.push_back(outer.space().cosets().representative(n));
  report["neighborhood"] = reps;
  report["round_trip"] = verdict.to_json();
  return emit(report, verdict ? kPass : kViolation, c);
}

int failure(const std::string& kind, const std::string& message, int code) {
  std::cerr << "gca: " << kind << ": " << message << '\n';
  std::cout << json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump(2) << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cellular automata over finite left homogeneous spaces"};
  app.require_subcommand(1);
  Common common;
  std::vector<gca::Element> subgroup;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "Seed for sampled checks");
    sub->add_option("--samples", common.samples, "Sample count beyond the exhaustive limit");
    sub->add_flag("--expect-fail", common.expect_fail, "Swap exit codes 0 and 1");
    sub->add_flag("--timing", common.timing, "Print timings to stderr");
  };

  std::vector<std::string> paths;
  auto* validate = app.add_subcommand("validate", "Check group, action, space and automaton files");
  validate->add_option("paths", paths)->required();
  validate->add_option("--out", common.out, "Also write the report here");
  add_common(validate);

  std::string automaton, initial;
  std::size_t steps = 1;
  auto* run = app.add_subcommand("run", "Print a trace of configurations");
  run->add_option("automaton", automaton)->required();
  run->add_option("config", initial, "Initial configuration, e.g. 1000 or 1,0,0,0")->required();
  run->add_option("--steps", steps);
  run->add_option("--out", common.out, "Write the report here");
  add_common(run);

  std::vector<std::string> suites;
  auto* laws = app.add_subcommand("laws", "Run law suites against an automaton");
  laws->add_option("automaton", automaton)->required();
  laws->add_option("--suite", suites, "Suite name, repeatable; default all")->delimiter(',');
  laws->add_option("--subgroup", subgroup, "Elements generating H; default G")->delimiter(',');
  laws->add_option("--out", common.out, "Also write the report here");
  add_common(laws);

  std::string map_path;
  auto* extract = app.add_subcommand("extract", "Recover an automaton from a global map table");
  extract->add_option("map", map_path)->required();
  extract->add_option("--subgroup", subgroup)->delimiter(',');
  extract->add_option("--out", common.out, "Write the automaton here");
  add_common(extract);

  auto* invert = app.add_subcommand("invert", "Find the inverse automaton");
  invert->add_option("automaton", automaton)->required();
  invert->add_option("--subgroup", subgroup)->delimiter(',');
  invert->add_option("--out", common.out, "Write the automaton here");
  add_common(invert);

  std::string inner;
  auto* compose = app.add_subcommand("compose", "Compose two automata, outer after inner");
  compose->add_option("outer", automaton)->required();
  compose->add_option("inner", inner)->required();
  compose->add_option("--subgroup", subgroup)->delimiter(',');
  compose->add_option("--out", common.out, "Write the automaton here");
  add_common(compose);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInput;
  }

  if (common.timing)
    std::cerr << "kernels: " << gca::kernels::isa_name(gca::kernels::active_isa()) << '\n';

  try {
    if (*validate) return cmd_validate(paths, common);
    if (*run) return cmd_run(automaton, initial, steps, common);
    if (*laws) return cmd_laws(automaton, suites, subgroup, common);
    if (*extract) return cmd_extract(map_path, subgroup, common);
    if (*invert) return cmd_invert(automaton, subgroup, common);
    if (*compose) return cmd_compose(automaton, inner, subgroup, common);
  } catch (const gca::InputError& e) {
    return failure("input error", e.what(), kInput);
  } catch (const gca::PreconditionError& e) {
    return failure("precondition", e.what(), kInput);
  } catch (const gca::BoundExceeded& e) {
    return failure("bound exceeded", e.what(), kBound);
  } catch (const gca::LawViolation& e) {
    std::cerr << "gca: law violation: " << e.verdict().law << '\n';
    std::cout << json{{"error", "law violation"}, {"verdict", e.verdict().to_json()}, {"exit_code", kViolation}}.dump(2)
              << '\n';
    return flip(kViolation, common.expect_fail);
  }
  return kInput;
}
