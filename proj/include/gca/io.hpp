#pragma once

// JSON files for groups, actions, cell spaces, automata and global maps.
// Nested objects may be given inline or as a path string, resolved relative
// to the directory of the file that names them. Writers inline everything
// and produce the same bytes for equal inputs.

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "gca/global_map.hpp"

namespace gca::io {

/// Parses a file; syntax errors become InputError with line, column and the
/// offending line.
nlohmann::json read_json(const std::filesystem::path& path);

FiniteGroup group_from_json(const nlohmann::json& j, const std::filesystem::path& dir);
LeftAction action_from_json(const nlohmann::json& j, const std::filesystem::path& dir);
CellSpacePtr space_from_json(const nlohmann::json& j, const std::filesystem::path& dir);
SemiCellularAutomaton automaton_from_json(const nlohmann::json& j, const std::filesystem::path& dir);
GlobalMap global_map_from_json(const nlohmann::json& j, const std::filesystem::path& dir);

SemiCellularAutomaton load_automaton(const std::filesystem::path& path);
GlobalMap load_global_map(const std::filesystem::path& path);

nlohmann::json to_json(const FiniteGroup& g);
nlohmann::json to_json(const LeftAction& a);
nlohmann::json to_json(const CellSpace& r);
nlohmann::json to_json(const SemiCellularAutomaton& ca);
nlohmann::json to_json(const GlobalMap& map);

/// Writes `j` with two-space indentation and a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

enum class DocumentKind { group, action, space, automaton, global_map };
std::string kind_name(DocumentKind kind);

struct Check {
  std::string name;
  Verdict verdict;
};

struct Validation {
  DocumentKind kind;
  std::vector<Check> checks;
  bool ok() const;
};

/// Loads any of the file kinds (told apart by their keys) and runs the group
/// axioms, action axioms, transitivity, semi-action laws and neighborhood
/// closure that apply to it, stopping at the first layer that fails.
Validation validate_file(const std::filesystem::path& path);

}  // namespace gca::io
