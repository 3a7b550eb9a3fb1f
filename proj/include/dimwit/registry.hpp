#pragma once

#include <functional>
#include <optional>
#include <string>

#include "dimwit/types.hpp"

namespace dimwit {

// One cataloged extremal (or protocol) configuration: a parameter-free
// scenario constructor paired with its expected |W| and provenance notes.
struct RegistryEntry {
  std::string name;
  std::function<Scenario()> builder;  // absent for target-only values
  double expected = 0.0;
  std::string expected_expr;
  std::string provenance;
  double tolerance = 1e-9;
  bool is_maximum = false;    // claimed optimum; must be refine-stationary
  bool numeric_only = false;  // stored as a plain decimal, looser tolerance
  // Witness-table cross-check cell, when this entry realizes one.
  std::optional<int> table_k;
  std::optional<int> table_dim;
  std::optional<Field> table_field;
  // Structural checks beyond the witness value; throws on failure.
  std::function<void(const Scenario&)> extra_checks;
};

const std::vector<RegistryEntry>& registry();
std::vector<std::string> registry_names();
const RegistryEntry& find_entry(const std::string& name);
Scenario build_entry(const std::string& name);

struct VerifyResult {
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

VerifyResult verify_entry(const std::string& name);
std::vector<VerifyResult> verify_all();

// Catalog as a JSON document (the exported data file).
std::string registry_json();

// Best known quantum maxima per (k, dim, field) cell, for cells where a
// precise value is recorded; used as optimizer targets and upper bounds.
struct QuantumMaxTarget {
  int k = 0;
  int dim = 0;
  Field field = Field::Real;
  double value = 0.0;
  std::string source;  // registry entry name or "recorded numeric maximum"
};

const std::vector<QuantumMaxTarget>& quantum_max_targets();

// Resolves structural zeros (k at or past the counting threshold) and
// recorded maxima; nullopt when no precise value is known.
std::optional<double> known_quantum_max(int k, int dim, Field field);

// Rounded two-digit witness-table value for cross-checking, when published.
std::optional<double> published_max_printed(int k, int dim, Field field);

}  // namespace dimwit
