#include "mvlaw/translate.hpp"

#include <algorithm>
#include <map>

#include "mvlaw/error.hpp"

namespace mvlaw {
namespace {

FormulaPtr mk_or(std::vector<FormulaPtr> parts) {
  if (parts.empty()) return Formula::constant("0");
  FormulaPtr f = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) f = Formula::connective("or", {f, parts[i]});
  return f;
}

FormulaPtr mk_and(std::vector<FormulaPtr> parts) {
  if (parts.empty()) return Formula::constant("1");
  FormulaPtr f = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) f = Formula::connective("and", {f, parts[i]});
  return f;
}

class Translator {
 public:
  Translator(const LatticeAlgebra& a, const Vocabulary& vocab, const Limits& limits)
      : a_(a), vocab_(vocab) {
    if (a.size() > limits.max_carrier)
      throw budget_error("carrier size " + std::to_string(a.size()) +
                         " exceeds the translation budget (max " +
                         std::to_string(limits.max_carrier) + ")");
  }

  const std::vector<FormulaPtr>& run(const FormulaPtr& f) {
    auto it = memo_.find(f.get());
    if (it != memo_.end()) return it->second;
    return memo_.emplace(f.get(), compute(f)).first->second;
  }

 private:
  std::vector<FormulaPtr> compute(const FormulaPtr& f) {
    const int sz = a_.size();
    std::vector<FormulaPtr> out(sz);
    switch (f->kind) {
      case Formula::Kind::Atom: {
        vocab_.at(f->rel);  // arity sanity
        for (Elem e = 0; e < sz; ++e)
          out[e] = Formula::atom(classical_relation_name(f->rel, a_.label(e)), f->vars);
        return out;
      }
      case Formula::Kind::Ident: {
        Elem top = a_.require_top(), bot = a_.require_bottom();
        for (Elem e = 0; e < sz; ++e) {
          if (e == top)
            out[e] = Formula::ident(f->vars[0], f->vars[1]);
          else if (e == bot)
            out[e] = Formula::connective("not", {Formula::ident(f->vars[0], f->vars[1])});
          else
            out[e] = Formula::constant("0");
        }
        return out;
      }
      case Formula::Kind::Const: {
        Elem c = a_.elem(f->label);
        for (Elem e = 0; e < sz; ++e) out[e] = Formula::constant(e == c ? "1" : "0");
        return out;
      }
      case Formula::Kind::Conn: {
        const Operation& op = a_.op(f->conn);
        std::vector<const std::vector<FormulaPtr>*> kids;
        for (const auto& c : f->children) kids.push_back(&run(c));
        // group A^arity tuples by the operation's result
        std::vector<std::vector<FormulaPtr>> disjuncts(sz);
        std::vector<Elem> tuple(op.arity, 0);
        for (;;) {
          Elem r = a_.apply(f->conn, tuple);
          std::vector<FormulaPtr> conj;
          conj.reserve(op.arity);
          for (int i = 0; i < op.arity; ++i) conj.push_back((*kids[i])[tuple[i]]);
          disjuncts[r].push_back(mk_and(std::move(conj)));
          int i = op.arity - 1;
          while (i >= 0 && ++tuple[i] == sz) tuple[i--] = 0;
          if (i < 0) break;
        }
        for (Elem e = 0; e < sz; ++e) out[e] = mk_or(std::move(disjuncts[e]));
        return out;
      }
      case Formula::Kind::Quant: {
        const auto& body = run(f->children[0]);
        // first conjunct: some nonempty subset of achieved values folds to a
        std::vector<std::vector<FormulaPtr>> subset_disj(sz);
        for (unsigned mask = 1; mask < (1u << sz); ++mask) {
          Elem folded = -1;
          std::vector<FormulaPtr> conj;
          for (Elem e = 0; e < sz; ++e) {
            if (!(mask & (1u << e))) continue;
            folded = folded < 0 ? e : (f->universal ? a_.meet(folded, e) : a_.join(folded, e));
            conj.push_back(Formula::quant(false, f->var, body[e]));
          }
          subset_disj[folded].push_back(mk_and(std::move(conj)));
        }
        for (Elem e = 0; e < sz; ++e) {
          // second conjunct: every element lands at or beyond a
          std::vector<FormulaPtr> bound;
          for (Elem b = 0; b < sz; ++b)
            if (f->universal ? a_.leq(e, b) : a_.leq(b, e)) bound.push_back(body[b]);
          FormulaPtr guard = Formula::quant(true, f->var, mk_or(std::move(bound)));
          out[e] = Formula::connective("and", {mk_or(std::move(subset_disj[e])), guard});
        }
        return out;
      }
      case Formula::Kind::Interval:
        throw input_error("interval-membership formulas cannot be translated");
    }
    throw internal_error("translate: unreachable");
  }

  const LatticeAlgebra& a_;
  const Vocabulary& vocab_;
  std::map<const Formula*, std::vector<FormulaPtr>> memo_;
};

}  // namespace

std::string classical_relation_name(const std::string& rel, const std::string& label) {
  return rel + "^" + label;
}

Vocabulary classical_vocabulary(const Vocabulary& vocab, const LatticeAlgebra& a) {
  Vocabulary out;
  out.has_crisp_identity = vocab.has_crisp_identity;
  for (const auto& rel : vocab.relations)
    for (Elem e = 0; e < a.size(); ++e)
      out.relations.push_back({classical_relation_name(rel.name, a.label(e)), rel.arity});
  return out;
}

TranslationBundle translate(const FormulaPtr& f, const LatticeAlgebra& a,
                            const Vocabulary& vocab, const Limits& limits) {
  Translator tr(a, vocab, limits);
  TranslationBundle b;
  b.source = f;
  b.per_value = tr.run(f);
  return b;
}

WeightedStructure transform_model(const WeightedStructure& m) {
  const LatticeAlgebra& a = *m.algebra;
  AlgebraPtr b2 = make_boolean();
  Vocabulary cv = classical_vocabulary(m.vocab, a);
  std::map<std::string, std::vector<Elem>> tables;
  for (const auto& rel : m.vocab.relations) {
    const auto& src = m.tables.at(rel.name);
    for (Elem e = 0; e < a.size(); ++e) {
      std::vector<Elem> t(src.size());
      for (std::size_t c = 0; c < src.size(); ++c) t[c] = src[c] == e ? 1 : 0;
      tables[classical_relation_name(rel.name, a.label(e))] = std::move(t);
    }
  }
  return make_structure(m.n, b2, cv, std::move(tables));
}

WeightedStructure inverse_transform(const WeightedStructure& classical, AlgebraPtr algebra,
                                    const Vocabulary& vocab) {
  const LatticeAlgebra& a = *algebra;
  std::map<std::string, std::vector<Elem>> tables;
  for (const auto& rel : vocab.relations) {
    std::size_t cells = table_size(classical.n, rel.arity);
    std::vector<Elem> t(cells);
    for (std::size_t c = 0; c < cells; ++c) {
      int hits = 0;
      for (Elem e = 0; e < a.size(); ++e) {
        const auto& ct = classical.tables.at(classical_relation_name(rel.name, a.label(e)));
        if (ct[c] == 1) {
          t[c] = e;
          ++hits;
        }
      }
      if (hits != 1)
        throw input_error("partition property fails for " + rel.name + " at cell " +
                          std::to_string(c) + " (" + std::to_string(hits) + " values hold)");
    }
    tables[rel.name] = std::move(t);
  }
  return make_structure(classical.n, std::move(algebra), vocab, std::move(tables));
}

std::vector<FormulaPtr> partition_axioms(const Vocabulary& vocab, const LatticeAlgebra& a,
                                         const ConstraintProfile& profile) {
  std::vector<FormulaPtr> out;
  for (const auto& rel : vocab.relations) {
    std::vector<std::string> vars;
    for (int i = 1; i <= rel.arity; ++i) vars.push_back("x" + std::to_string(i));
    auto close = [&](FormulaPtr body) {
      for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        body = Formula::quant(true, *it, body);
      return body;
    };
    std::vector<FormulaPtr> cover, excl;
    for (Elem e = 0; e < a.size(); ++e)
      cover.push_back(Formula::atom(classical_relation_name(rel.name, a.label(e)), vars));
    for (Elem e = 0; e < a.size(); ++e)
      for (Elem g = e + 1; g < a.size(); ++g)
        excl.push_back(Formula::connective(
            "not", {Formula::connective("and",
                                  {Formula::atom(classical_relation_name(rel.name, a.label(e)), vars),
                                   Formula::atom(classical_relation_name(rel.name, a.label(g)), vars)})}));
    out.push_back(close(mk_or(std::move(cover))));
    out.push_back(close(mk_and(std::move(excl))));
    if (profile.constrains_as_graph(rel.arity)) {
      std::string bot = a.label(a.require_bottom());
      out.push_back(Formula::quant(
          true, "x", Formula::atom(classical_relation_name(rel.name, bot), {"x", "x"})));
      std::vector<FormulaPtr> sym;
      for (Elem e = 0; e < a.size(); ++e) {
        FormulaPtr xy = Formula::atom(classical_relation_name(rel.name, a.label(e)), {"x", "y"});
        FormulaPtr yx = Formula::atom(classical_relation_name(rel.name, a.label(e)), {"y", "x"});
        sym.push_back(Formula::connective(
            "and", {Formula::connective("imp", {xy, yx}), Formula::connective("imp", {yx, xy})}));
      }
      FormulaPtr guard = Formula::connective("not", {Formula::ident("x", "y")});
      out.push_back(Formula::quant(
          true, "x",
          Formula::quant(true, "y", Formula::connective("imp", {guard, mk_and(std::move(sym))}))));
    }
  }
  if (profile.kind == ProfileKind::CrispIdentity || vocab.has_crisp_identity) {
    out.push_back(Formula::quant(true, "x", Formula::ident("x", "x")));
    out.push_back(Formula::quant(
        true, "x",
        Formula::quant(true, "y",
                       Formula::connective("imp", {Formula::connective("not", {Formula::ident("x", "y")}),
                                             Formula::connective("not", {Formula::ident("x", "y")})}))));
  }
  return out;
}

namespace {

void flatten_and(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  if (f->kind == Formula::Kind::Conn && f->conn == "and") {
    for (const auto& c : f->children) flatten_and(c, out);
    return;
  }
  out.push_back(f);
}

bool is_distinctness_guard(const Formula& f, const std::vector<std::string>& quantified) {
  std::vector<FormulaPtr> parts;
  flatten_and(std::make_shared<Formula>(f), parts);
  for (const auto& p : parts) {
    if (p->kind != Formula::Kind::Conn || p->conn != "not" ||
        p->children[0]->kind != Formula::Kind::Ident)
      return false;
    for (const auto& v : p->children[0]->vars)
      if (std::find(quantified.begin(), quantified.end(), v) == quantified.end()) return false;
  }
  return true;
}

bool scan_atoms(const Formula& f, const std::vector<std::string>& quantified,
                std::string& offending) {
  switch (f.kind) {
    case Formula::Kind::Atom: {
      std::vector<std::string> used = f.vars;
      std::sort(used.begin(), used.end());
      used.erase(std::unique(used.begin(), used.end()), used.end());
      std::vector<std::string> want = quantified;
      std::sort(want.begin(), want.end());
      if (used != want) {
        offending = print_formula(f) + " does not use exactly the quantified variables";
        return false;
      }
      return true;
    }
    case Formula::Kind::Ident:
    case Formula::Kind::Const:
      return true;
    case Formula::Kind::Conn:
    case Formula::Kind::Interval: {
      for (const auto& c : f.children)
        if (!scan_atoms(*c, quantified, offending)) return false;
      return true;
    }
    case Formula::Kind::Quant:
      offending = "nested quantifier " + print_formula(f);
      return false;
  }
  return false;
}

}  // namespace

ParametricVerdict check_parametric(const FormulaPtr& sentence) {
  std::vector<FormulaPtr> conjuncts;
  flatten_and(sentence, conjuncts);
  for (const auto& c : conjuncts) {
    std::vector<std::string> quantified;
    FormulaPtr body = c;
    while (body->kind == Formula::Kind::Quant) {
      if (!body->universal)
        return {false, "existential quantifier in " + print_formula(*c)};
      quantified.push_back(body->var);
      body = body->children[0];
    }
    if (body->kind == Formula::Kind::Conn && body->conn == "imp" &&
        is_distinctness_guard(*body->children[0], quantified))
      body = body->children[1];
    std::string offending;
    if (!scan_atoms(*body, quantified, offending)) return {false, offending};
  }
  return {true, ""};
}

namespace {

bool ceval(const WeightedStructure& m, const Formula& f,
           std::vector<std::pair<std::string, int>>& env) {
  auto lookup = [&](const std::string& v) {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == v) return it->second;
    throw input_error("unbound variable: " + v);
  };
  switch (f.kind) {
    case Formula::Kind::Atom: {
      std::vector<int> tuple;
      tuple.reserve(f.vars.size());
      for (const auto& v : f.vars) tuple.push_back(lookup(v));
      return m.get(f.rel, tuple) == m.algebra->require_top();
    }
    case Formula::Kind::Ident:
      return lookup(f.vars[0]) == lookup(f.vars[1]);
    case Formula::Kind::Const:
      return m.algebra->elem(f.label) == m.algebra->require_top();
    case Formula::Kind::Conn: {
      if (f.conn == "not") return !ceval(m, *f.children[0], env);
      if (f.conn == "and") {
        for (const auto& c : f.children)
          if (!ceval(m, *c, env)) return false;
        return true;
      }
      if (f.conn == "or") {
        for (const auto& c : f.children)
          if (ceval(m, *c, env)) return true;
        return false;
      }
      if (f.conn == "imp") return !ceval(m, *f.children[0], env) || ceval(m, *f.children[1], env);
      throw input_error("classical evaluation supports and/or/not/imp only, got " + f.conn);
    }
    case Formula::Kind::Quant: {
      env.emplace_back(f.var, 0);
      bool result = f.universal;
      for (int i = 0; i < m.n; ++i) {
        env.back().second = i;
        bool v = ceval(m, *f.children[0], env);
        if (f.universal ? !v : v) {
          result = !f.universal;
          break;
        }
      }
      env.pop_back();
      return result;
    }
    case Formula::Kind::Interval:
      throw input_error("interval-membership formulas are not classical");
  }
  throw internal_error("classical_evaluate: unreachable");
}

}  // namespace

bool classical_evaluate(const WeightedStructure& m, const Formula& f,
                        const std::map<std::string, int>& asg) {
  if (m.algebra->size() != 2)
    throw input_error("classical evaluation requires a two-valued structure");
  std::vector<std::pair<std::string, int>> env;
  for (const auto& [v, i] : asg) env.emplace_back(v, i);
  return ceval(m, f, env);
}

}  // namespace mvlaw
