#pragma once

#include <cstdint>
#include <cstdlib>

namespace mvlaw {

/// Resource guardrails. Enumeration procedures are exponential, so every
/// entry point that enumerates takes a Limits (defaults are desk-scale).
/// Environment variables override the defaults in from_env().
struct Limits {
  int max_quantifier_depth = 4;   // nesting of quantifiers in the decision procedure
  int max_carrier = 12;           // |A| for subset enumeration in the translation
  int max_arity = 3;              // relation/operation arity
  std::uint64_t brute_force_budget = 10'000'000;  // |A|^k points in term_range_finite
  std::uint64_t model_count_budget = 1'000'000;   // models enumerated by exact_mu_small
  std::uint64_t grid_eval_budget = std::uint64_t(1) << 24;  // continuum grid evaluations
  bool memoize = true;            // memoize the complete-description recursion

  static Limits from_env() {
    Limits l;
    auto geti = [](const char* name, int dflt) {
      const char* v = std::getenv(name);
      return v ? std::atoi(v) : dflt;
    };
    auto getu = [](const char* name, std::uint64_t dflt) {
      const char* v = std::getenv(name);
      return v ? std::strtoull(v, nullptr, 10) : dflt;
    };
    l.max_quantifier_depth = geti("MVLAW_MAX_QDEPTH", l.max_quantifier_depth);
    l.max_carrier = geti("MVLAW_MAX_CARRIER", l.max_carrier);
    l.max_arity = geti("MVLAW_MAX_ARITY", l.max_arity);
    l.brute_force_budget = getu("MVLAW_BRUTE_BUDGET", l.brute_force_budget);
    l.model_count_budget = getu("MVLAW_MODEL_BUDGET", l.model_count_budget);
    l.grid_eval_budget = getu("MVLAW_GRID_BUDGET", l.grid_eval_budget);
    if (const char* v = std::getenv("MVLAW_NO_MEMO")) l.memoize = (std::atoi(v) == 0);
    return l;
  }
};

}  // namespace mvlaw
