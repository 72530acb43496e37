#pragma once

#include <string>

#include "mvlaw/algebra.hpp"
#include "mvlaw/formula.hpp"
#include "mvlaw/modal.hpp"
#include "mvlaw/term.hpp"
#include "mvlaw/vocabulary.hpp"

namespace mvlaw {

/// Concrete grammar (see README for the EBNF):
///   quantifiers  `forall x. f`, `exists x. f`
///   infix        `&` (and), `|` (or), `->` (imp, right associative)
///   prefix       `not f`
///   named calls  `oplus(f,g)`, `odot(f,g)`, and any other signature op
///   iterations   `pow(f,n)` = f odot ... odot f,  `times(n,f)` = f oplus ... oplus f
///   atoms        `P(x,y)`, crisp identity `x ~ y`, constants `#label`
///
/// When `require_sentence` is set, free variables are an error.
FormulaPtr parse_formula(const std::string& text, const Vocabulary& vocab,
                         const LatticeAlgebra& algebra, bool require_sentence = true);

/// Terms use the same operator syntax over variables instead of atoms.
TermPtr parse_term(const std::string& text, const LatticeAlgebra& algebra);

/// Modal grammar adds prefix `box` and `dia`; bare identifiers are
/// propositional letters.
ModalPtr parse_modal(const std::string& text, const LatticeAlgebra& algebra);

/// Guesses the vocabulary of a sentence: any identifier applied to plain
/// variable arguments that is not a connective of the algebra (or one of the
/// builtin forms) is a relation symbol; `~` switches on crisp identity.
Vocabulary infer_vocabulary(const std::string& text, const LatticeAlgebra& algebra);

}  // namespace mvlaw
