#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mvlaw/formula.hpp"

namespace mvlaw {

struct ModalFormula;
using ModalPtr = std::shared_ptr<const ModalFormula>;

/// Propositional bimodal formula over box/diamond and the algebra connectives.
struct ModalFormula {
  enum class Kind { Prop, Conn, Box, Diamond };
  Kind kind;
  std::string prop;  // Kind::Prop
  std::string conn;  // Kind::Conn
  std::vector<ModalPtr> children;

  static ModalPtr prop_letter(std::string name);
  static ModalPtr connective(std::string name, std::vector<ModalPtr> children);
  static ModalPtr box(ModalPtr child);
  static ModalPtr diamond(ModalPtr child);
};

/// Every propositional letter occurs under a modality.
bool fully_modal(const ModalFormula& m);

/// Standard translation into the one-variable fragment over unary predicates:
/// p_i becomes P_i(w), box becomes forall w, diamond becomes exists w.
/// Fully modal inputs come out as sentences.
FormulaPtr s5_translate(const ModalFormula& m);

/// The unary vocabulary used by s5_translate for a given modal formula.
Vocabulary s5_vocabulary(const ModalFormula& m);

}  // namespace mvlaw
