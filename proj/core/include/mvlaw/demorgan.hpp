#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvlaw/algebra.hpp"

namespace mvlaw {

/// Result of checking the three negation conditions
///   (1) !(v&w) = !v | !w and !(v|w) = !v & !w
///   (2) v <= !!v
///   (3) !1 = 0
/// plus the laws derivable from them (antitonicity, !!!v = !v, behaviour at
/// the bounds, and the ordering chain of the four constants).
struct DeMorganReport {
  struct Entry {
    std::string law;
    bool holds = false;
    std::string witness;  // empty when the law holds
  };
  std::vector<Entry> conditions;   // (1)-(3); all must hold for ok()
  std::vector<Entry> derived;      // (4)-(7), informational
  bool distributive = false;       // lattice distributivity, informational

  bool ok() const {
    for (const auto& e : conditions)
      if (!e.holds) return false;
    return true;
  }
};

/// The four constants of the quantifier-elimination theorem, computed by
/// exhaustive sup/inf over the carrier via the join/meet tables.
struct DeMorganConstants {
  Elem eps, eps_prime, delta, delta_prime;
};

/// Requires "not" and declared bounds.
DeMorganReport demorgan_check(const LatticeAlgebra& a);

/// Refuses (input_error) when demorgan_check fails.
DeMorganConstants demorgan_constants(const LatticeAlgebra& a);

}  // namespace mvlaw
