#include "mvlaw/asymptotic.hpp"

#include <algorithm>

#include "mvlaw/error.hpp"
#include "mvlaw/translate.hpp"

namespace mvlaw {

AsymptoticDecider::AsymptoticDecider(AlgebraPtr algebra, Vocabulary vocab,
                                     ConstraintProfile profile, Limits limits)
    : algebra_(std::move(algebra)),
      vocab_(std::move(vocab)),
      profile_(std::move(profile)),
      limits_(limits) {
  if (!algebra_) throw internal_error("AsymptoticDecider: null algebra");
  vocab_.validate();
  if (profile_.kind == ProfileKind::Custom)
    throw input_error(
        "custom parametric profiles are not supported by the decider; "
        "use the named profiles or Monte Carlo estimation");
  if (profile_.kind == ProfileKind::CrispIdentity) vocab_.has_crisp_identity = true;
  if (vocab_.max_arity() > limits_.max_arity)
    throw budget_error("vocabulary arity exceeds the configured maximum");
}

namespace {

int lookup(const std::vector<std::pair<std::string, int>>& env, const std::string& v) {
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->first == v) return it->second;
  throw input_error("unbound variable: " + v);
}

}  // namespace

Elem AsymptoticDecider::quantifier_value(const FormulaPtr& f, const CompleteDescription& delta,
                                         std::vector<std::pair<std::string, int>>& env) {
  const LatticeAlgebra& a = *algebra_;
  if (delta.k + 1 > limits_.max_quantifier_depth)
    throw budget_error("quantifier depth exceeds the configured maximum (" +
                       std::to_string(limits_.max_quantifier_depth) + ")");

  std::vector<Elem> achieved;
  auto record = [&](Elem v) {
    if (std::find(achieved.begin(), achieved.end(), v) == achieved.end()) achieved.push_back(v);
  };

  env.emplace_back(f->var, 0);
  // branches where the quantified variable coincides with an existing one
  for (int j = 0; j < delta.k; ++j) {
    env.back().second = j;
    record(eval(f->children[0], delta, env));
  }
  // fresh-element branches, one per expansion of the description
  ExpansionEnumerator exps(delta, vocab_, a, profile_);
  CompleteDescription expanded;
  bool any = false;
  env.back().second = delta.k;
  while (exps.next(expanded)) {
    any = true;
    record(eval(f->children[0], expanded, env));
  }
  env.pop_back();
  if (!any)
    throw input_error("the constraint profile admits no expansion (contradictory profile)");

  Elem acc = achieved.front();
  for (std::size_t i = 1; i < achieved.size(); ++i)
    acc = f->universal ? a.meet(acc, achieved[i]) : a.join(acc, achieved[i]);
  if (explain_) {
    std::string line = (f->universal ? "forall " : "exists ") + f->var + ": achieved {";
    for (std::size_t i = 0; i < achieved.size(); ++i)
      line += (i ? ", " : "") + a.display(achieved[i]);
    line += "} -> " + a.display(acc);
    explanation_.push_back(line);
  }
  return acc;
}

Elem AsymptoticDecider::eval(const FormulaPtr& f, const CompleteDescription& delta,
                             std::vector<std::pair<std::string, int>>& env) {
  const LatticeAlgebra& a = *algebra_;
  switch (f->kind) {
    case Formula::Kind::Atom: {
      std::vector<int> tuple;
      tuple.reserve(f->vars.size());
      for (const auto& v : f->vars) tuple.push_back(lookup(env, v));
      if (static_cast<int>(f->vars.size()) != vocab_.at(f->rel).arity)
        throw input_error("arity mismatch at atom " + f->rel);
      return delta.value_of(vocab_, f->rel, tuple);
    }
    case Formula::Kind::Ident: {
      if (!vocab_.has_crisp_identity)
        throw input_error("crisp identity used without declaring it in the vocabulary");
      return lookup(env, f->vars[0]) == lookup(env, f->vars[1]) ? a.require_top()
                                                                : a.require_bottom();
    }
    case Formula::Kind::Const:
      return a.elem(f->label);
    case Formula::Kind::Conn: {
      std::vector<Elem> args;
      args.reserve(f->children.size());
      for (const auto& c : f->children) args.push_back(eval(c, delta, env));
      return a.apply(f->conn, args);
    }
    case Formula::Kind::Quant: {
      if (!limits_.memoize || explain_) return quantifier_value(f, delta, env);
      // Memo key: how the node's free variables hit the description variables
      // (canonically renumbered) plus the description restricted to those
      // variables; sound because the value depends on nothing else.
      auto fit = free_cache_.find(f.get());
      if (fit == free_cache_.end())
        fit = free_cache_.emplace(f.get(), free_variables(*f)).first;
      const auto& fvs = fit->second;
      std::vector<int> used;
      for (const auto& v : fvs) {
        int j = lookup(env, v);
        if (std::find(used.begin(), used.end(), j) == used.end()) used.push_back(j);
      }
      std::sort(used.begin(), used.end());
      std::vector<int> key;
      for (const auto& v : fvs) {
        int j = lookup(env, v);
        key.push_back(static_cast<int>(std::find(used.begin(), used.end(), j) - used.begin()));
      }
      key.push_back(-1);
      for (const auto& atom : atoms_over(vocab_, static_cast<int>(used.size()))) {
        std::vector<int> orig(atom.tuple.size());
        for (std::size_t i = 0; i < atom.tuple.size(); ++i) orig[i] = used[atom.tuple[i]];
        key.push_back(delta.value_of(vocab_, atom.rel, orig));
      }
      auto& per_node = memo_[f.get()];
      auto mit = per_node.find(key);
      if (mit != per_node.end()) return mit->second;
      Elem v = quantifier_value(f, delta, env);
      per_node.emplace(std::move(key), v);
      return v;
    }
    case Formula::Kind::Interval:
      throw input_error("interval-membership formulas have no finite almost-sure value");
  }
  throw internal_error("generic_value: unreachable");
}

Elem AsymptoticDecider::generic_value(const FormulaPtr& f, const CompleteDescription& delta,
                                      const std::map<std::string, int>& env) {
  std::vector<std::pair<std::string, int>> e;
  for (const auto& [v, j] : env) {
    if (j < 0 || j >= delta.k)
      throw input_error("environment maps " + v + " outside the description variables");
    e.emplace_back(v, j);
  }
  for (const auto& v : free_variables(*f))
    lookup(e, v);  // unbound free variable -> input_error
  return eval(f, delta, e);
}

Elem AsymptoticDecider::almost_sure_value(const FormulaPtr& f) {
  if (!is_sentence(*f)) throw input_error("almost-sure values are defined for sentences only");
  explanation_.clear();
  Elem v = generic_value(f, CompleteDescription{}, {});
  // quantifiers finish innermost-first; report them outermost-first
  std::reverse(explanation_.begin(), explanation_.end());
  return v;
}

Elem almost_sure_value(const FormulaPtr& f, AlgebraPtr algebra, const Vocabulary& vocab,
                       const ConstraintProfile& profile, const Limits& limits) {
  AsymptoticDecider d(std::move(algebra), vocab, profile, limits);
  return d.almost_sure_value(f);
}

FormulaPtr extension_axiom(int k, const std::vector<Elem>& f, const Vocabulary& vocab,
                           const LatticeAlgebra& a, const ConstraintProfile& profile) {
  if (k < 0) throw input_error("extension axioms need k >= 0");
  auto frontier = frontier_atoms(vocab, k);
  if (f.size() != frontier.size())
    throw input_error("expected " + std::to_string(frontier.size()) +
                      " frontier values, got " + std::to_string(f.size()));
  // profile consistency of the prescription
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const AtomRef& atom = frontier[i];
    if (!profile.allows(atom.rel, f[i]))
      throw input_error("prescription assigns a value outside the support of " + atom.rel);
    if (profile.constrains_as_graph(static_cast<int>(atom.tuple.size()))) {
      if (atom.tuple[0] == k && atom.tuple[1] == k && f[i] != a.require_bottom())
        throw input_error("graph profile forces " + atom.rel + "(x,x) to bottom");
      if (atom.tuple[0] != atom.tuple[1]) {
        std::vector<int> mirror{atom.tuple[1], atom.tuple[0]};
        for (std::size_t j = 0; j < frontier.size(); ++j)
          if (frontier[j].rel == atom.rel && frontier[j].tuple == mirror && f[j] != f[i])
            throw input_error("graph profile requires a symmetric prescription for " + atom.rel);
      }
    }
  }

  auto var = [](int i) { return "x" + std::to_string(i + 1); };
  std::vector<FormulaPtr> parts;
  for (int i = 0; i < k; ++i)
    parts.push_back(Formula::connective("not", {Formula::ident(var(k), var(i))}));
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    std::vector<std::string> vars;
    for (int v : frontier[i].tuple) vars.push_back(var(v));
    parts.push_back(
        Formula::atom(classical_relation_name(frontier[i].rel, a.label(f[i])), vars));
  }
  if (parts.empty()) throw input_error("extension axiom over an empty vocabulary");
  FormulaPtr body = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) body = Formula::connective("and", {body, parts[i]});
  body = Formula::quant(false, var(k), body);
  if (k >= 2) {
    std::vector<FormulaPtr> guard;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        guard.push_back(Formula::connective("not", {Formula::ident(var(i), var(j))}));
    FormulaPtr g = guard.front();
    for (std::size_t i = 1; i < guard.size(); ++i) g = Formula::connective("and", {g, guard[i]});
    body = Formula::connective("imp", {g, body});
  }
  for (int i = k - 1; i >= 0; --i) body = Formula::quant(true, var(i), body);
  return body;
}

}  // namespace mvlaw
