#include "mvlaw/qe.hpp"

#include <algorithm>
#include <map>

#include "mvlaw/error.hpp"

namespace mvlaw {
namespace {

void check_signature(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Atom:
    case Formula::Kind::Const:
      return;
    case Formula::Kind::Ident:
      throw input_error("quantifier elimination handles the {and, or, not} fragment only "
                        "(crisp identity found)");
    case Formula::Kind::Interval:
      throw input_error("quantifier elimination does not apply to interval formulas");
    case Formula::Kind::Conn: {
      if (f.conn != "and" && f.conn != "or" && f.conn != "not")
        throw input_error("quantifier elimination handles the {and, or, not} fragment only "
                          "(connective " + f.conn + " found)");
      for (const auto& c : f.children) check_signature(*c);
      return;
    }
    case Formula::Kind::Quant:
      check_signature(*f.children[0]);
      return;
  }
}

/// A literal: an atom under 0, 1, or 2 negations, or a folded constant.
struct Lit {
  FormulaPtr atom;  // null for constants
  std::string key;  // printed atom, for grouping
  int negd = 0;
  Elem cval = -1;  // constants only
};

class Eliminator {
 public:
  Eliminator(const LatticeAlgebra& a) : a_(a), e_(demorgan_constants(a)) {}

  FormulaPtr run(const FormulaPtr& f) {
    switch (f->kind) {
      case Formula::Kind::Atom:
      case Formula::Kind::Const:
        return f;
      case Formula::Kind::Conn: {
        std::vector<FormulaPtr> children;
        children.reserve(f->children.size());
        for (const auto& c : f->children) children.push_back(run(c));
        return Formula::connective(f->conn, std::move(children));
      }
      case Formula::Kind::Quant:
        return eliminate(f->universal, f->var, run(f->children[0]));
      default:
        throw internal_error("qe: unexpected node");
    }
  }

 private:
  FormulaPtr lit_formula(const Lit& l) const {
    if (!l.atom) return Formula::constant(a_.label(l.cval));
    FormulaPtr f = l.atom;
    for (int i = 0; i < l.negd; ++i) f = Formula::connective("not", {f});
    return f;
  }

  // Pushes n pending negations inward; negation depth on atoms stays <= 2
  // (three negations collapse to one) and constants fold through the table.
  FormulaPtr push_neg(const FormulaPtr& f, int n) const {
    switch (f->kind) {
      case Formula::Kind::Atom: {
        FormulaPtr out = f;
        for (int i = 0; i < n; ++i) out = Formula::connective("not", {out});
        return out;
      }
      case Formula::Kind::Const: {
        Elem v = a_.elem(f->label);
        for (int i = 0; i < n; ++i) v = a_.apply1("not", v);
        return Formula::constant(a_.label(v));
      }
      case Formula::Kind::Conn: {
        if (f->conn == "not") {
          int m = n + 1;
          if (m == 3) m = 1;
          return push_neg(f->children[0], m);
        }
        // a single negation swaps and/or; a double one distributes unchanged
        const char* op = (n == 1) == (f->conn == "and") ? "or" : "and";
        if (n == 1) {
          return Formula::connective(op, {push_neg(f->children[0], 1), push_neg(f->children[1], 1)});
        }
        return Formula::connective(f->conn, {push_neg(f->children[0], n), push_neg(f->children[1], n)});
      }
      default:
        throw internal_error("qe: unexpected node in push_neg");
    }
  }

  // Folds constants, deduplicates literals, and detects groups that reduce
  // to the absorbing element of the outer connective (those can be dropped:
  // they are the identity of the surrounding disjunction/conjunction).
  // Returns false for dropped groups.
  bool normalize_group(std::vector<Lit>& group, bool dnf) const {
    Elem unit = dnf ? a_.require_top() : a_.require_bottom();
    Elem acc = unit;
    std::vector<Lit> out;
    for (const auto& l : group) {
      if (!l.atom) {
        acc = dnf ? a_.meet(acc, l.cval) : a_.join(acc, l.cval);
        continue;
      }
      bool seen = false;
      for (const auto& o : out) seen = seen || (o.negd == l.negd && o.key == l.key);
      if (!seen) out.push_back(l);
    }
    if (acc == (dnf ? a_.require_bottom() : a_.require_top())) return false;  // absorbed
    if (acc != unit) out.push_back(Lit{nullptr, "#" + a_.label(acc), 0, acc});
    group = std::move(out);
    return true;
  }

  static std::string group_signature(const std::vector<Lit>& group) {
    std::vector<std::string> parts;
    parts.reserve(group.size());
    for (const auto& l : group) parts.push_back(std::to_string(l.negd) + "|" + l.key);
    std::sort(parts.begin(), parts.end());
    std::string sig;
    for (const auto& p : parts) sig += p + ";";
    return sig;
  }

  // Appends group to groups unless an identical group is already present.
  static void push_group(std::vector<std::vector<Lit>>& groups,
                         std::vector<std::string>& signatures, std::vector<Lit>&& group) {
    std::string sig = group_signature(group);
    for (const auto& s : signatures)
      if (s == sig) return;
    signatures.push_back(std::move(sig));
    groups.push_back(std::move(group));
  }

  // Distributes to a list of lists of literals: disjunction of conjunctions
  // when dnf, conjunction of disjunctions otherwise.
  std::vector<std::vector<Lit>> normal_form(const FormulaPtr& f, bool dnf) const {
    switch (f->kind) {
      case Formula::Kind::Atom:
        return {{Lit{f, print_formula(*f), 0, -1}}};
      case Formula::Kind::Const:
        return {{Lit{nullptr, "", 0, a_.elem(f->label)}}};
      case Formula::Kind::Conn: {
        if (f->conn == "not") {
          // after push_neg the negations sit directly on atoms
          int negd = 1;
          FormulaPtr inner = f->children[0];
          while (inner->kind == Formula::Kind::Conn && inner->conn == "not") {
            ++negd;
            inner = inner->children[0];
          }
          if (inner->kind != Formula::Kind::Atom || negd > 2)
            throw internal_error("qe: negation not in normal form");
          return {{Lit{inner, print_formula(*inner), negd, -1}}};
        }
        auto lhs = normal_form(f->children[0], dnf);
        auto rhs = normal_form(f->children[1], dnf);
        bool outer_level = dnf == (f->conn == "or");
        std::vector<std::vector<Lit>> out;
        std::vector<std::string> sigs;
        if (outer_level) {
          // concatenation at the outer connective
          for (auto& g : lhs)
            if (normalize_group(g, dnf)) push_group(out, sigs, std::move(g));
          for (auto& g : rhs)
            if (normalize_group(g, dnf)) push_group(out, sigs, std::move(g));
          return out;
        }
        // cross product at the inner connective; at the outer level the
        // inner identity is the absorbing element, so an empty side (which
        // denotes that identity) absorbs the whole product
        if (lhs.empty() || rhs.empty()) return {};
        for (const auto& gl : lhs)
          for (const auto& gr : rhs) {
            std::vector<Lit> g = gl;
            g.insert(g.end(), gr.begin(), gr.end());
            if (normalize_group(g, dnf)) push_group(out, sigs, std::move(g));
          }
        return out;
      }
      default:
        throw internal_error("qe: unexpected node in normal_form");
    }
  }

  static bool mentions(const Formula& atom, const std::string& var) {
    return std::find(atom.vars.begin(), atom.vars.end(), var) != atom.vars.end();
  }

  // Configuration mask over {plain, not, notnot} with the within-group
  // normalization; returns the substituted constant for groups on the
  // quantified variable.
  Elem group_value(unsigned mask, bool exists) const {
    if (exists) {
      if ((mask & 5u) == 5u) mask &= ~4u;  // v and not not v is v
      switch (mask) {
        case 1: case 2: case 4: return a_.require_top();
        case 3: return e_.eps;
        case 6: return e_.eps_prime;
      }
    } else {
      if ((mask & 5u) == 5u) mask &= ~1u;  // v or not not v is not not v
      switch (mask) {
        case 1: case 2: case 4: return a_.require_bottom();
        case 3: return e_.delta;
        case 6: return e_.delta_prime;
      }
    }
    throw internal_error("qe: impossible literal configuration " + std::to_string(mask));
  }

  FormulaPtr eliminate(bool universal, const std::string& var, const FormulaPtr& body) const {
    bool exists = !universal;
    auto groups = normal_form(push_neg(body, 0), exists);
    // an empty normal form denotes the absorbing constant of the inner level
    if (groups.empty())
      return Formula::constant(a_.label(exists ? a_.require_bottom() : a_.require_top()));
    const char* inner_op = exists ? "and" : "or";
    const char* outer_op = exists ? "or" : "and";
    // meet identity under exists, join identity under forall
    Elem unit = exists ? a_.require_top() : a_.require_bottom();

    std::vector<FormulaPtr> group_formulas;
    for (const auto& group : groups) {
      // fold literal masks per atom
      std::map<std::string, std::pair<FormulaPtr, unsigned>> masks;
      Elem acc = unit;
      auto fold = [&](Elem v) { acc = exists ? a_.meet(acc, v) : a_.join(acc, v); };
      for (const auto& l : group) {
        if (!l.atom) {
          fold(l.cval);
          continue;
        }
        masks[l.key].first = l.atom;
        masks[l.key].second |= 1u << l.negd;
      }
      std::vector<FormulaPtr> parts;
      for (auto& [key, am] : masks) {
        unsigned mask = am.second;
        if (mentions(*am.first, var)) {
          fold(group_value(mask, exists));
          continue;
        }
        // keep the atom, normalized within its group
        if ((mask & 5u) == 5u) mask &= exists ? ~4u : ~1u;
        for (int d = 0; d <= 2; ++d)
          if (mask & (1u << d)) parts.push_back(lit_formula(Lit{am.first, key, d, -1}));
      }
      if (parts.empty() || acc != unit) parts.push_back(Formula::constant(a_.label(acc)));
      FormulaPtr g = parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i) g = Formula::connective(inner_op, {g, parts[i]});
      group_formulas.push_back(g);
    }
    FormulaPtr out = group_formulas.front();
    for (std::size_t i = 1; i < group_formulas.size(); ++i)
      out = Formula::connective(outer_op, {out, group_formulas[i]});
    return out;
  }

  const LatticeAlgebra& a_;
  DeMorganConstants e_;
};

}  // namespace

FormulaPtr simplify_constants(const FormulaPtr& f, const LatticeAlgebra& a) {
  if (f->kind != Formula::Kind::Conn) return f;
  std::vector<FormulaPtr> children;
  children.reserve(f->children.size());
  bool all_const = true;
  for (const auto& c : f->children) {
    children.push_back(simplify_constants(c, a));
    all_const = all_const && children.back()->kind == Formula::Kind::Const;
  }
  if (all_const) {
    std::vector<Elem> args;
    for (const auto& c : children) args.push_back(a.elem(c->label));
    return Formula::constant(a.label(a.apply(f->conn, args)));
  }
  if ((f->conn == "and" || f->conn == "or") && children.size() == 2) {
    bool is_and = f->conn == "and";
    for (int i = 0; i < 2; ++i) {
      if (children[i]->kind != Formula::Kind::Const) continue;
      Elem v = a.elem(children[i]->label);
      if (v == (is_and ? a.require_top() : a.require_bottom())) return children[1 - i];
      if (v == (is_and ? a.require_bottom() : a.require_top())) return children[i];
    }
  }
  return Formula::connective(f->conn, std::move(children));
}

FormulaPtr qe_demorgan(const FormulaPtr& f, const LatticeAlgebra& a, const Limits&) {
  check_signature(*f);
  DeMorganReport report = demorgan_check(a);
  if (!report.ok()) {
    std::string why;
    for (const auto& e : report.conditions)
      if (!e.holds) why += (why.empty() ? "" : "; ") + e.law + " fails at " + e.witness;
    throw input_error("the algebra fails the negation conditions: " + why);
  }
  Eliminator el(a);
  return simplify_constants(el.run(f), a);
}

std::vector<Elem> almost_sure_set_demorgan(const LatticeAlgebra& a) {
  DeMorganConstants e = demorgan_constants(a);
  std::vector<Elem> out{a.require_bottom(), e.eps, e.eps_prime, e.delta, e.delta_prime,
                        a.require_top()};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace mvlaw
