#pragma once

#include <vector>

#include "mvlaw/demorgan.hpp"
#include "mvlaw/formula.hpp"
#include "mvlaw/limits.hpp"

namespace mvlaw {

/// Quantifier elimination relative to the theory of the random structure,
/// for formulas over {and, or, not} plus constants, on algebras passing
/// demorgan_check. Works innermost-out: the body is normalized to DNF (for
/// exists) or CNF (for forall) with negations pushed to depth at most two,
/// and each group of literals on an atom containing the quantified variable
/// is replaced by the matching constant (top/bottom for lone literals;
/// eps, eps_prime under exists; delta, delta_prime under forall). Sentences
/// reduce to a single constant node.
FormulaPtr qe_demorgan(const FormulaPtr& f, const LatticeAlgebra& a, const Limits& limits = {});

/// The almost-sure values of the {and, or, not}-fragment: bottom, the four
/// De Morgan constants, and top (deduplicated, in carrier order).
std::vector<Elem> almost_sure_set_demorgan(const LatticeAlgebra& a);

/// Folds constant subformulas via the algebra tables and applies the
/// top/bottom absorption laws for and/or.
FormulaPtr simplify_constants(const FormulaPtr& f, const LatticeAlgebra& a);

}  // namespace mvlaw
