#include "mvlaw/evaluate.hpp"

#include <algorithm>

#include "mvlaw/error.hpp"

namespace mvlaw {
namespace {

struct Env {
  std::vector<std::pair<std::string, int>> slots;  // innermost last

  int lookup(const std::string& v) const {
    for (auto it = slots.rbegin(); it != slots.rend(); ++it)
      if (it->first == v) return it->second;
    throw input_error("unbound variable: " + v);
  }
};

class Evaluator {
 public:
  Evaluator(const WeightedStructure& m) : m_(m), a_(*m.algebra) {
    // Representatives of the distinct unary value rows; see header.
    bool all_unary = !m.vocab.relations.empty() && m.vocab.max_arity() == 1;
    if (all_unary && !m.vocab.has_crisp_identity) {
      std::vector<std::vector<Elem>> seen;
      for (int i = 0; i < m.n; ++i) {
        std::vector<Elem> row;
        row.reserve(m.vocab.relations.size());
        for (const auto& rel : m.vocab.relations) row.push_back(m.tables.at(rel.name)[i]);
        if (std::find(seen.begin(), seen.end(), row) == seen.end()) {
          seen.push_back(row);
          reps_.push_back(i);
        }
      }
    } else {
      reps_.resize(m.n);
      for (int i = 0; i < m.n; ++i) reps_[i] = i;
    }
  }

  Elem eval(const Formula& f, Env& env) {
    switch (f.kind) {
      case Formula::Kind::Atom: {
        std::vector<int> tuple;
        tuple.reserve(f.vars.size());
        for (const auto& v : f.vars) tuple.push_back(env.lookup(v));
        return m_.get(f.rel, tuple);
      }
      case Formula::Kind::Ident: {
        if (!m_.vocab.has_crisp_identity)
          throw input_error("crisp identity used without declaring it in the vocabulary");
        return env.lookup(f.vars[0]) == env.lookup(f.vars[1]) ? a_.require_top()
                                                              : a_.require_bottom();
      }
      case Formula::Kind::Const:
        return a_.elem(f.label);
      case Formula::Kind::Conn: {
        std::vector<Elem> args;
        args.reserve(f.children.size());
        for (const auto& c : f.children) args.push_back(eval(*c, env));
        return a_.apply(f.conn, args);
      }
      case Formula::Kind::Quant: {
        env.slots.emplace_back(f.var, 0);
        Elem acc = -1;
        for (int i : reps_) {
          env.slots.back().second = i;
          Elem v = eval(*f.children[0], env);
          acc = acc < 0 ? v : (f.universal ? a_.meet(acc, v) : a_.join(acc, v));
        }
        env.slots.pop_back();
        return acc;
      }
      case Formula::Kind::Interval:
        throw input_error("interval-membership formulas are only valid in [0,1]-valued semantics");
    }
    throw internal_error("evaluate: unreachable");
  }

 private:
  const WeightedStructure& m_;
  const LatticeAlgebra& a_;
  std::vector<int> reps_;
};

}  // namespace

Elem evaluate(const WeightedStructure& m, const Formula& f,
              const std::map<std::string, int>& asg) {
  Evaluator ev(m);
  Env env;
  for (const auto& [v, i] : asg) {
    if (i < 0 || i >= m.n) throw input_error("assignment of " + v + " out of domain range");
    env.slots.emplace_back(v, i);
  }
  return ev.eval(f, env);
}

}  // namespace mvlaw
