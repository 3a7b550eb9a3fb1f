#pragma once

#include <string>

#include <json.hpp>

#include "dimwit/detect.hpp"
#include "dimwit/types.hpp"

namespace dimwit {

// Shortest representation that parses back to the same double.
std::string format_double(double v);

// Pure-state scenario schema:
//   {"dim": d, "field": "real"|"complex",
//    "preparations": [[[re,im], ...d], ...k+1],
//    "effects": [{"columns": [[[re,im], ...d], ...rank]}, ...k]}
nlohmann::json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const nlohmann::json& j);

// Canonical text form: sorted keys (library default), two-space indent,
// trailing newline. Loading and re-saving is byte-identical.
std::string canonical_dump(const nlohmann::json& j);

void save_scenario(const Scenario& s, const std::string& path);
Scenario load_scenario(const std::string& path);

// Probability matrix CSV: header x1..x{k+1}, then k+1 rows (the last is the
// always-yes row of ones).
std::string pm_to_csv(const ProbabilityMatrix& pm);
ProbabilityMatrix pm_from_csv(const std::string& text);

// Counts CSV: header "i,j,n_ij,n"; 1-based cell indices, one row per cell.
std::string counts_to_csv(const ShotData& data);
ShotData counts_from_csv(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace dimwit
