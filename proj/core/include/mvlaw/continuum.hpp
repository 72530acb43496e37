#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mvlaw/formula.hpp"
#include "mvlaw/limits.hpp"
#include "mvlaw/rational.hpp"
#include "mvlaw/term.hpp"
#include "mvlaw/vocabulary.hpp"

namespace mvlaw {

/// A finite structure with [0,1]-valued relation tables. The crisp identity
/// (when declared by the vocabulary) is the diagonal indicator.
struct IntervalStructure {
  int n = 0;
  Vocabulary vocab;
  std::map<std::string, std::vector<double>> tables;  // row-major, like WeightedStructure

  double get(const std::string& rel, std::span<const int> tuple) const;
};

/// Standard [0,1]-valued semantics: and = min, or = max, not x = 1 - x,
/// imp = min(1, 1-a+b), oplus = min(1, a+b), odot = max(0, a+b-1),
/// prod = a*b. Quantifiers are min/max over the domain; interval nodes are
/// crisp membership indicators; constants are parsed as rationals.
double evaluate_interval(const IntervalStructure& m, const Formula& f,
                         const std::map<std::string, int>& asg = {});

/// Applies a named connective to [0,1] arguments (same table as above).
double apply_interval(const std::string& conn, std::span<const double> args);

/// A two-element algebra carrying every [0,1] connective name (including
/// prod), used as the parsing signature for continuum formulas and terms.
AlgebraPtr continuum_signature();

/// Each relation cell independent uniform on [0,1]; deterministic in
/// (seed, sample_idx).
IntervalStructure sample_interval_structure(int n, const Vocabulary& vocab, std::uint64_t seed,
                                            std::uint64_t sample_idx = 0);

struct ConcentrationReport {
  std::vector<double> bin_low, bin_high, bin_frequency;
  double median = 0.0;      // point estimate of the almost-sure value
  double mu_in_interval = 0.0;  // fraction of samples inside the supplied interval
  double min_value = 1.0, max_value = 0.0;
};

/// Histogram of sampled sentence values; when lo <= hi is supplied, also the
/// empirical probability of landing in [lo, hi].
ConcentrationReport estimate_concentration(const FormulaPtr& f, int n, const Vocabulary& vocab,
                                           std::uint64_t samples, int bins, std::uint64_t seed,
                                           double lo = 1.0, double hi = 0.0);

struct ExtremumResult {
  double inf_value = 0.0, sup_value = 0.0;
  std::vector<double> argmin, argmax;  // aligned with term_variables order
  double certified_bound = 0.0;        // |reported - true| is at most this
  double lipschitz = 0.0;              // structural Lipschitz constant used
};

/// Certified grid search over [0,1]^k: every listed connective is 1-Lipschitz
/// in each argument, so the term is Lipschitz with constant bounded by its
/// total variable occurrence count; the grid is refined (spacing halved,
/// starting at 1/16) until L*h/2 <= tol. Throws budget_error if the required
/// resolution exceeds limits.grid_eval_budget evaluations.
ExtremumResult term_extremum_interval(const Term& t, double tol, const Limits& limits = {});

/// Evaluates a term on [0,1] values.
double eval_term_interval(const Term& t, const std::map<std::string, double>& asg);

/// Semantic threshold event: value >= r (geq) or value <= r.
bool threshold_event(double value, const Rational& r, bool geq);

/// The [0,1]-valued extension axiom for the grid {[j/N, (j+1)/N]}: g assigns
/// a grid interval index to each frontier atom (aligned with
/// frontier_atoms(vocab, k)); membership is rendered with interval nodes.
FormulaPtr extension_axiom_interval(int k, int grid_n, const std::vector<int>& g,
                                    const Vocabulary& vocab);

}  // namespace mvlaw
