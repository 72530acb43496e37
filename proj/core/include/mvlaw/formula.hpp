#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mvlaw/term.hpp"
#include "mvlaw/vocabulary.hpp"

namespace mvlaw {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Many-valued first-order formula. Classical translations reuse this type
/// over a two-valued algebra. Interval nodes appear only in [0,1]-valued
/// extension axioms and are rejected by the finite evaluators.
struct Formula {
  enum class Kind { Atom, Ident, Const, Conn, Quant, Interval };
  Kind kind;

  // Atom
  std::string rel;
  std::vector<std::string> vars;
  // Ident uses vars[0] ~ vars[1]
  // Const
  std::string label;
  // Conn
  std::string conn;
  std::vector<FormulaPtr> children;  // also Quant body (children[0]) and Interval child
  // Quant
  bool universal = false;
  std::string var;
  // Interval bounds (closed)
  double lo = 0.0, hi = 1.0;

  static FormulaPtr atom(std::string rel, std::vector<std::string> vars);
  static FormulaPtr ident(std::string x, std::string y);
  static FormulaPtr constant(std::string label);
  static FormulaPtr connective(std::string name, std::vector<FormulaPtr> children);
  static FormulaPtr quant(bool universal, std::string var, FormulaPtr body);
  static FormulaPtr interval(FormulaPtr child, double lo, double hi);
};

/// Free variables in first-occurrence order.
std::vector<std::string> free_variables(const Formula& f);

bool is_sentence(const Formula& f);

/// Structural equality.
bool equal(const Formula& a, const Formula& b);

/// Round-trippable concrete syntax (fully parenthesized infix for &, |, ->).
std::string print_formula(const Formula& f);

/// The two witness sentences of a term t(v1,...,vk): substitute R(x_i) for
/// v_i over a single unary predicate R and close under forall / exists.
std::pair<FormulaPtr, FormulaPtr> witness_sentences(const Term& t,
                                                    const std::string& rel = "R");

/// Quantifier nesting depth.
int quantifier_depth(const Formula& f);

}  // namespace mvlaw
