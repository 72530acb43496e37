#include "mvlaw/term.hpp"

#include <algorithm>

#include "mvlaw/error.hpp"

namespace mvlaw {

TermPtr Term::make_var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Var;
  t->var = std::move(name);
  return t;
}

TermPtr Term::make_app(std::string conn, std::vector<TermPtr> args) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::App;
  t->conn = std::move(conn);
  t->args = std::move(args);
  return t;
}

namespace {

void collect_vars(const Term& t, std::vector<std::string>& out) {
  if (t.kind == Term::Kind::Var) {
    if (std::find(out.begin(), out.end(), t.var) == out.end()) out.push_back(t.var);
    return;
  }
  for (const auto& a : t.args) collect_vars(*a, out);
}

}  // namespace

std::vector<std::string> term_variables(const Term& t) {
  std::vector<std::string> out;
  collect_vars(t, out);
  return out;
}

Elem eval_term(const LatticeAlgebra& a, const Term& t,
               const std::map<std::string, Elem>& asg) {
  if (t.kind == Term::Kind::Var) {
    auto it = asg.find(t.var);
    if (it == asg.end()) throw input_error("unbound term variable: " + t.var);
    return it->second;
  }
  std::vector<Elem> vals;
  vals.reserve(t.args.size());
  for (const auto& arg : t.args) vals.push_back(eval_term(a, *arg, asg));
  return a.apply(t.conn, vals);
}

TermRange term_range_finite(const LatticeAlgebra& a, const Term& t, const Limits& limits) {
  const auto vars = term_variables(t);
  const int k = static_cast<int>(vars.size());
  std::uint64_t points = 1;
  for (int i = 0; i < k; ++i) {
    points *= a.size();
    if (points > limits.brute_force_budget)
      throw budget_error("term_range_finite: |A|^k exceeds brute-force budget");
  }
  std::map<std::string, Elem> asg;
  auto for_each_tuple = [&](auto f) {
    std::vector<Elem> tuple(k, 0);
    for (;;) {
      for (int i = 0; i < k; ++i) asg[vars[i]] = tuple[i];
      f(tuple, eval_term(a, t, asg));
      int pos = k - 1;
      while (pos >= 0 && ++tuple[pos] == a.size()) tuple[pos--] = 0;
      if (pos < 0) break;
    }
  };
  // inf/sup are lattice folds; in a non-distributive algebra they need not be
  // attained, in which case argmin/argmax stay empty.
  TermRange r;
  bool first = true;
  for_each_tuple([&](const std::vector<Elem>&, Elem v) {
    if (first) {
      r.min = r.max = v;
      first = false;
    } else {
      r.min = a.meet(r.min, v);
      r.max = a.join(r.max, v);
    }
  });
  for_each_tuple([&](const std::vector<Elem>& tuple, Elem v) {
    if (v == r.min && r.argmin.empty()) r.argmin = tuple;
    if (v == r.max && r.argmax.empty()) r.argmax = tuple;
  });
  return r;
}

}  // namespace mvlaw
