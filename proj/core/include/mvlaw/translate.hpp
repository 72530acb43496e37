#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvlaw/evaluate.hpp"
#include "mvlaw/formula.hpp"
#include "mvlaw/limits.hpp"
#include "mvlaw/structure.hpp"

namespace mvlaw {

/// Name of the classical relation tracking value `a` of relation `rel`.
std::string classical_relation_name(const std::string& rel, const std::string& label);

/// The classical vocabulary: one relation R^label per (R, carrier element),
/// same arities; crisp identity carries over as real equality.
Vocabulary classical_vocabulary(const Vocabulary& vocab, const LatticeAlgebra& a);

/// The multi-translation of one sentence: per carrier element a, a classical
/// first-order formula (over the two-element algebra) with the same free
/// variables that holds in the transformed model exactly when the source
/// formula takes value a.
struct TranslationBundle {
  FormulaPtr source;
  std::vector<FormulaPtr> per_value;  // indexed by carrier element
};

/// Throws budget_error when |A| exceeds limits.max_carrier (the quantifier
/// clauses enumerate nonempty subsets of the carrier).
TranslationBundle translate(const FormulaPtr& f, const LatticeAlgebra& a,
                            const Vocabulary& vocab, const Limits& limits = {});

/// The A-valued structure M becomes a classical structure on the same domain
/// with (R^a) = { tuple : R(tuple) = a }.
WeightedStructure transform_model(const WeightedStructure& m);

/// Inverse of transform_model; rejects classical structures whose relation
/// families fail the partition property.
WeightedStructure inverse_transform(const WeightedStructure& classical, AlgebraPtr algebra,
                                    const Vocabulary& vocab);

/// Coverage and exclusivity sentences over the classical vocabulary (two per
/// source relation); the graph and crisp-identity profiles contribute their
/// extra axioms.
std::vector<FormulaPtr> partition_axioms(const Vocabulary& vocab, const LatticeAlgebra& a,
                                         const ConstraintProfile& profile = {});

/// Oberschelp shape check: after flattening top-level conjunctions, each
/// conjunct must be a universal prefix, optionally guarded by pairwise
/// distinctness, whose non-identity atoms use exactly the quantified
/// variables.
struct ParametricVerdict {
  bool ok = true;
  std::string offending;  // printed atom or reason when !ok
};
ParametricVerdict check_parametric(const FormulaPtr& sentence);

/// Standard two-valued semantics, implemented independently of evaluate()
/// so the two routes cross-check each other. The structure's algebra must be
/// two-valued with declared bounds; identity atoms are real equality.
bool classical_evaluate(const WeightedStructure& m, const Formula& f,
                        const std::map<std::string, int>& asg = {});

}  // namespace mvlaw
