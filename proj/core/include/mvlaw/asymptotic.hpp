#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvlaw/description.hpp"
#include "mvlaw/formula.hpp"
#include "mvlaw/limits.hpp"

namespace mvlaw {

/// Decides values relative to the theory of the random structure: every
/// sentence has a unique value there, computed by recursion over complete
/// descriptions. Quantifiers fold meet/join over the achieved-value set,
/// which ranges over expansions of the current description by one fresh
/// variable plus the branches where the quantified variable coincides with
/// an existing one (the latter matter only in the presence of crisp
/// identity, where the fresh expansions alone would miss x = y).
class AsymptoticDecider {
 public:
  AsymptoticDecider(AlgebraPtr algebra, Vocabulary vocab, ConstraintProfile profile = {},
                    Limits limits = {});

  /// Value of f relative to the description: env maps f's free variables to
  /// description variables.
  Elem generic_value(const FormulaPtr& f, const CompleteDescription& delta,
                     const std::map<std::string, int>& env = {});

  /// generic_value over the empty description; f must be a sentence.
  Elem almost_sure_value(const FormulaPtr& f);

  /// When set, records one line per quantifier giving the achieved-value set
  /// (outermost first); cleared at each almost_sure_value call.
  void set_explain(bool on) { explain_ = on; }
  const std::vector<std::string>& explanation() const { return explanation_; }

 private:
  Elem quantifier_value(const FormulaPtr& f, const CompleteDescription& delta,
                        std::vector<std::pair<std::string, int>>& env);
  Elem eval(const FormulaPtr& f, const CompleteDescription& delta,
            std::vector<std::pair<std::string, int>>& env);

  AlgebraPtr algebra_;
  Vocabulary vocab_;
  ConstraintProfile profile_;
  Limits limits_;
  bool explain_ = false;
  std::vector<std::string> explanation_;
  std::map<const Formula*, std::vector<std::string>> free_cache_;
  std::map<const Formula*, std::map<std::vector<int>, Elem>> memo_;
};

/// Convenience wrapper around AsymptoticDecider for one sentence.
Elem almost_sure_value(const FormulaPtr& f, AlgebraPtr algebra, const Vocabulary& vocab,
                       const ConstraintProfile& profile = {}, const Limits& limits = {});

/// The classical extension axiom for k existing elements and the prescribed
/// atomic behavior f of the new one (values aligned with
/// frontier_atoms(vocab, k)). Profile-inconsistent prescriptions are
/// rejected.
FormulaPtr extension_axiom(int k, const std::vector<Elem>& f, const Vocabulary& vocab,
                           const LatticeAlgebra& a, const ConstraintProfile& profile = {});

}  // namespace mvlaw
