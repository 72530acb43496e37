#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "mvlaw/algebra.hpp"
#include "mvlaw/profile.hpp"
#include "mvlaw/vocabulary.hpp"

namespace mvlaw {

/// A finite A-valued structure: each relation is a total table from
/// domain tuples into the carrier. Domain elements are 0-based indices;
/// the crisp identity (when the vocabulary declares it) is synthesized as
/// the diagonal and never stored. Immutable by convention after
/// make_structure.
struct WeightedStructure {
  int n = 0;
  AlgebraPtr algebra;
  Vocabulary vocab;
  ConstraintProfile profile;
  /// Row-major flattened tables: cell (i_1,...,i_k) at index
  /// i_1*n^{k-1} + ... + i_k.
  std::map<std::string, std::vector<Elem>> tables;

  Elem get(const std::string& rel, std::span<const int> tuple) const;
  std::size_t cell_index(std::span<const int> tuple) const;
};

/// Validates totality, cell ranges, and the constraint profile; throws
/// input_error on any violation. Empty domains are rejected.
WeightedStructure make_structure(int n, AlgebraPtr algebra, Vocabulary vocab,
                                 std::map<std::string, std::vector<Elem>> tables,
                                 ConstraintProfile profile = {});

/// Lists every violated profile constraint with the offending cell; empty
/// result means the structure satisfies the profile.
std::vector<std::string> check_constraints(const WeightedStructure& m,
                                           const ConstraintProfile& profile);

/// Number of cells of an arity-k table over domain [n].
std::size_t table_size(int n, int arity);

}  // namespace mvlaw
