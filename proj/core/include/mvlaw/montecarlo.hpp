#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mvlaw/formula.hpp"
#include "mvlaw/rational.hpp"
#include "mvlaw/structure.hpp"

namespace mvlaw {

/// Per-relation distribution over the carrier. Elements with probability
/// zero are support restrictions: they never appear in sampled tables and
/// the profile machinery treats them as forbidden values.
struct AtomDistribution {
  std::map<std::string, std::vector<Rational>> probs;  // aligned with the carrier

  /// Uniform over the carrier for every relation.
  static AtomDistribution uniform(const Vocabulary& vocab, const LatticeAlgebra& a);

  /// Validates totality and sum-to-one; throws input_error.
  void validate(const Vocabulary& vocab, const LatticeAlgebra& a) const;

  /// Elements with positive probability.
  std::vector<Elem> support(const std::string& rel) const;

  /// The induced support restriction, merged into the given profile.
  ConstraintProfile restrict_profile(ConstraintProfile p) const;
};

/// One random structure under the product measure; profile-linked cells are
/// drawn once (graph symmetry) or forced (graph diagonal). sample_idx
/// separates draws within one experiment.
WeightedStructure sample_structure(int n, AlgebraPtr algebra, const Vocabulary& vocab,
                                   const AtomDistribution& p, const ConstraintProfile& profile,
                                   std::uint64_t seed, std::uint64_t sample_idx = 0);

struct EmpiricalDistribution {
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> counts;   // per carrier element
  std::vector<double> frequency;       // counts / samples
  std::vector<double> ci_low, ci_high; // Wilson score, 95%
  Elem modal_value() const;
};

EmpiricalDistribution estimate_distribution(const FormulaPtr& f, int n, AlgebraPtr algebra,
                                            const Vocabulary& vocab, const AtomDistribution& p,
                                            std::uint64_t samples,
                                            const ConstraintProfile& profile, std::uint64_t seed);

/// Exact value distribution by full enumeration of the model space; throws
/// budget_error when the model count exceeds limits.model_count_budget.
std::vector<Rational> exact_mu_small(const FormulaPtr& f, int n, AlgebraPtr algebra,
                                     const Vocabulary& vocab, const AtomDistribution& p,
                                     const ConstraintProfile& profile = {},
                                     const Limits& limits = {});

struct ConvergenceReport {
  std::vector<EmpiricalDistribution> per_n;
  std::vector<int> n_list;
  Elem decided = -1;  // the decided almost-sure value
  double final_frequency = 0.0;
  bool converged = false;  // frequency at max n exceeds the threshold
};

ConvergenceReport convergence_report(const FormulaPtr& f, const std::vector<int>& n_list,
                                     AlgebraPtr algebra, const Vocabulary& vocab,
                                     const AtomDistribution& p, std::uint64_t samples,
                                     const ConstraintProfile& profile, std::uint64_t seed,
                                     double threshold = 0.95, const Limits& limits = {});

/// Wilson score interval at 95% confidence.
std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t total);

}  // namespace mvlaw
