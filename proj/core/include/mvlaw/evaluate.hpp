#pragma once

#include <map>
#include <string>

#include "mvlaw/formula.hpp"
#include "mvlaw/structure.hpp"

namespace mvlaw {

/// Tarski-style evaluation with quantifiers as infima/suprema over the
/// domain. Requires free_variables(f) to be covered by asg. Interval nodes
/// are rejected (they belong to the [0,1]-valued evaluator).
///
/// When every relation is unary and the vocabulary has no crisp identity,
/// quantifiers fold over the distinct unary value rows only (sound by
/// idempotency of meet/join), which keeps large random domains cheap.
Elem evaluate(const WeightedStructure& m, const Formula& f,
              const std::map<std::string, int>& asg = {});

}  // namespace mvlaw
