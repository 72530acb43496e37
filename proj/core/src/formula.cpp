#include "mvlaw/formula.hpp"

#include <algorithm>
#include <sstream>

namespace mvlaw {

FormulaPtr Formula::atom(std::string rel, std::vector<std::string> vars) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Atom;
  f->rel = std::move(rel);
  f->vars = std::move(vars);
  return f;
}

FormulaPtr Formula::ident(std::string x, std::string y) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Ident;
  f->vars = {std::move(x), std::move(y)};
  return f;
}

FormulaPtr Formula::constant(std::string label) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Const;
  f->label = std::move(label);
  return f;
}

FormulaPtr Formula::connective(std::string name, std::vector<FormulaPtr> children) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Conn;
  f->conn = std::move(name);
  f->children = std::move(children);
  return f;
}

FormulaPtr Formula::quant(bool universal, std::string var, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Quant;
  f->universal = universal;
  f->var = std::move(var);
  f->children = {std::move(body)};
  return f;
}

FormulaPtr Formula::interval(FormulaPtr child, double lo, double hi) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Interval;
  f->children = {std::move(child)};
  f->lo = lo;
  f->hi = hi;
  return f;
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound,
                  std::vector<std::string>& out) {
  auto add = [&](const std::string& v) {
    if (std::find(bound.begin(), bound.end(), v) != bound.end()) return;
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  switch (f.kind) {
    case Formula::Kind::Atom:
    case Formula::Kind::Ident:
      for (const auto& v : f.vars) add(v);
      break;
    case Formula::Kind::Const:
      break;
    case Formula::Kind::Conn:
    case Formula::Kind::Interval:
      for (const auto& c : f.children) collect_free(*c, bound, out);
      break;
    case Formula::Kind::Quant: {
      bound.push_back(f.var);
      collect_free(*f.children[0], bound, out);
      bound.pop_back();
      break;
    }
  }
}

}  // namespace

std::vector<std::string> free_variables(const Formula& f) {
  std::vector<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

bool is_sentence(const Formula& f) { return free_variables(f).empty(); }

bool equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Formula::Kind::Atom:
      return a.rel == b.rel && a.vars == b.vars;
    case Formula::Kind::Ident:
      return a.vars == b.vars;
    case Formula::Kind::Const:
      return a.label == b.label;
    case Formula::Kind::Conn: {
      if (a.conn != b.conn || a.children.size() != b.children.size()) return false;
      for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!equal(*a.children[i], *b.children[i])) return false;
      return true;
    }
    case Formula::Kind::Quant:
      return a.universal == b.universal && a.var == b.var && equal(*a.children[0], *b.children[0]);
    case Formula::Kind::Interval:
      return a.lo == b.lo && a.hi == b.hi && equal(*a.children[0], *b.children[0]);
  }
  return false;
}

namespace {

void print(const Formula& f, std::ostream& os) {
  switch (f.kind) {
    case Formula::Kind::Atom: {
      os << f.rel << "(";
      for (std::size_t i = 0; i < f.vars.size(); ++i) os << (i ? "," : "") << f.vars[i];
      os << ")";
      break;
    }
    case Formula::Kind::Ident:
      os << "(" << f.vars[0] << " ~ " << f.vars[1] << ")";
      break;
    case Formula::Kind::Const:
      os << "#" << f.label;
      break;
    case Formula::Kind::Conn: {
      if (f.conn == "not") {
        os << "not ";
        print(*f.children[0], os);
      } else if ((f.conn == "and" || f.conn == "or" || f.conn == "imp") &&
                 f.children.size() == 2) {
        const char* sym = f.conn == "and" ? " & " : f.conn == "or" ? " | " : " -> ";
        os << "(";
        print(*f.children[0], os);
        os << sym;
        print(*f.children[1], os);
        os << ")";
      } else {
        os << f.conn << "(";
        for (std::size_t i = 0; i < f.children.size(); ++i) {
          if (i) os << ", ";
          print(*f.children[i], os);
        }
        os << ")";
      }
      break;
    }
    case Formula::Kind::Quant:
      os << "(" << (f.universal ? "forall " : "exists ") << f.var << ". ";
      print(*f.children[0], os);
      os << ")";
      break;
    case Formula::Kind::Interval:
      os << "in[" << f.lo << "," << f.hi << "](";
      print(*f.children[0], os);
      os << ")";
      break;
  }
}

FormulaPtr term_to_formula(const Term& t, const std::string& rel,
                           const std::vector<std::string>& vars) {
  if (t.kind == Term::Kind::Var) {
    // v_i becomes R(x_i), with x_i aligned to the term's variable order
    return Formula::atom(rel, {"x_" + t.var});
  }
  std::vector<FormulaPtr> children;
  children.reserve(t.args.size());
  for (const auto& a : t.args) children.push_back(term_to_formula(*a, rel, vars));
  return Formula::connective(t.conn, std::move(children));
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::ostringstream os;
  print(f, os);
  return os.str();
}

std::pair<FormulaPtr, FormulaPtr> witness_sentences(const Term& t, const std::string& rel) {
  const auto vars = term_variables(t);
  FormulaPtr body = term_to_formula(t, rel, vars);
  FormulaPtr all = body, some = body;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    all = Formula::quant(true, "x_" + *it, all);
    some = Formula::quant(false, "x_" + *it, some);
  }
  return {all, some};
}

int quantifier_depth(const Formula& f) {
  int d = 0;
  for (const auto& c : f.children) d = std::max(d, quantifier_depth(*c));
  if (f.kind == Formula::Kind::Quant) ++d;
  return d;
}

}  // namespace mvlaw
