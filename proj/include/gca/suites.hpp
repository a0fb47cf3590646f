#pragma once

// The law suites behind `gca laws`, each run against one automaton.

#include <string>
#include <vector>

#include "gca/laws.hpp"

namespace gca {

enum class SuiteStatus {
  pass,
  fail,            ///< a law failed or a negative outcome was found; see the witness
  skipped,         ///< a precondition of the suite does not hold
  sampled,         ///< passed on samples only
  bound_exceeded,  ///< too large to run
  error,           ///< a produced witness did not check out
};

std::string status_name(SuiteStatus s);

struct SuiteResult {
  std::string suite;
  SuiteStatus status = SuiteStatus::pass;
  nlohmann::json details;
  nlohmann::json to_json() const;
};

/// coordinate-independence, equivalence, determination, composition, chl,
/// invertibility, uniformity.
const std::vector<std::string>& suite_names();

/// Throws InputError for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SemiCellularAutomaton& ca, const Subgroup& h,
                      const Sampling& sampling);

}  // namespace gca
