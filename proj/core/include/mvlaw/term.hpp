#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mvlaw/algebra.hpp"
#include "mvlaw/limits.hpp"

namespace mvlaw {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Algebra term: a variable or a connective applied to subterms.
struct Term {
  enum class Kind { Var, App };
  Kind kind;
  std::string var;            // Kind::Var
  std::string conn;           // Kind::App
  std::vector<TermPtr> args;  // Kind::App

  static TermPtr make_var(std::string name);
  static TermPtr make_app(std::string conn, std::vector<TermPtr> args);
};

/// Distinct variables in first-occurrence order.
std::vector<std::string> term_variables(const Term& t);

/// Evaluates t under an assignment of carrier elements to variables.
Elem eval_term(const LatticeAlgebra& a, const Term& t,
               const std::map<std::string, Elem>& asg);

/// Exact extrema of a term over A^k by brute force.
struct TermRange {
  Elem min, max;
  std::vector<Elem> argmin, argmax;  // aligned with term_variables order
};

/// Throws budget_error if |A|^k exceeds the configured brute-force budget.
TermRange term_range_finite(const LatticeAlgebra& a, const Term& t,
                            const Limits& limits = {});

}  // namespace mvlaw
