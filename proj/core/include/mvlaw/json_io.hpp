#pragma once

#include <string>

#include "mvlaw/algebra.hpp"
#include "mvlaw/structure.hpp"

namespace mvlaw {

/// Algebra file format:
///   {"carrier": ["0","1/2","1"],
///    "ops": {"and": [[...]], "or": [[...]], "not": [...]},
///    "bottom": "0", "top": "1",
///    "values": {"1/2": "1/2"}}
/// Unary tables are flat arrays, binary tables row-major nested arrays.
AlgebraPtr algebra_from_json_text(const std::string& text);
std::string algebra_to_json_text(const LatticeAlgebra& a);

/// Resolves a built-in name ("B2", "L3", "G4", "prod(G3,L4)") or, failing
/// that, loads the path as an algebra JSON file.
AlgebraPtr load_algebra(const std::string& name_or_path);

/// Structure file format (1-based domain indices in the cell keys):
///   {"n": 3, "algebra": "L3", "relations": {"R": {"(1,2)": "1/2", ...}}}
/// Every cell must be present (totality).
WeightedStructure structure_from_json_text(const std::string& text,
                                           const ConstraintProfile& profile = {});
std::string structure_to_json_text(const WeightedStructure& m,
                                   const std::string& algebra_name = "custom");

/// Reads a whole file; throws input_error when missing.
std::string read_file(const std::string& path);

}  // namespace mvlaw
