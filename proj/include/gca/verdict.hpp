#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace gca {

/// Malformed input: wrong table shapes, out-of-range indices, unparsable files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A desk-scale bound (group order, cell count, table size) was exceeded.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its precondition (e.g. a subgroup that
/// misses a coordinate, or a rule that is not invariant where it must be).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Outcome of an exhaustive (or sampled) check.
///
/// A failing verdict names the violated law and carries the witnesses that
/// demonstrate the violation, so callers can report them verbatim.
struct Verdict {
  bool ok = true;
  bool sampled = false;
  std::string law;
  nlohmann::json witness;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string law, nlohmann::json witness) {
    Verdict v;
    v.ok = false;
    v.law = std::move(law);
    v.witness = std::move(witness);
    return v;
  }

  explicit operator bool() const { return ok; }

  nlohmann::json to_json() const {
    nlohmann::json out = {{"ok", ok}, {"sampled", sampled}};
    if (!ok) {
      out["law"] = law;
      out["witness"] = witness;
    }
    return out;
  }
};

/// Raised by operations whose precondition is a law (e.g. equivariance) and
/// which therefore have a witness to hand back.
class LawViolation : public std::runtime_error {
 public:
  explicit LawViolation(Verdict v)
      : std::runtime_error("law violated: " + v.law), verdict_(std::move(v)) {}
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

}  // namespace gca
