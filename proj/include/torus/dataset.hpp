#pragma once

// Curated Galois-extension data of the base field Q, stored as versioned JSON
// ("torus-dataset/1"). See README.md for the schema.

#include "torus/formulas.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torus {

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kDatasetSchema = "torus-dataset/1";

/// A G-module given by the action of chosen group generators.
struct UnitData {
  GModule module;
  std::vector<int> generators;
  std::vector<std::string> labels;
};

struct SClassOverride {
  PrimeSet S;
  Integer h_K_S;
  Integer h_L_S;
  UnitData units;
};

struct ExtensionDatum {
  std::string label;
  std::string base_field = "Q";
  FiniteGroup group;
  Integer class_number_L;
  Integer class_number_K;
  UnitData units;
  std::vector<PlaceDatum> places;
  std::optional<Integer> knot_number;
  std::vector<SClassOverride> overrides;
};

struct DatasetEntryError {
  std::string label;  // "#k" when the entry has no usable label
  std::string message;
};

struct Dataset {
  std::vector<ExtensionDatum> entries;
  std::vector<DatasetEntryError> errors;

  const ExtensionDatum* find(const std::string& label) const;
};

/// Throws DatasetError when the document does not parse or has the wrong
/// schema; invalid entries are collected in `errors` and skipped.
Dataset parse_dataset(const std::string& text);
Dataset load_dataset(const std::string& path);

/// Normalised JSON: subgroups sorted, torsion rows reduced, fixed key order.
std::string serialize_dataset(const std::vector<ExtensionDatum>& entries);

/// The dataset shipped with the sources.
std::string bundled_dataset_path();

/// Inputs for the formulas. `knot` overrides the entry's knot number.
ExtensionInputs datum_to_inputs(const ExtensionDatum& E, const PrimeSet& S,
                                const std::optional<Integer>& knot = std::nullopt);

}  // namespace torus
