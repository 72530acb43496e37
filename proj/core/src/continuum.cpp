#include "mvlaw/continuum.hpp"

#include <algorithm>
#include <cmath>

#include "mvlaw/description.hpp"
#include "mvlaw/error.hpp"
#include "mvlaw/rng.hpp"

namespace mvlaw {

double IntervalStructure::get(const std::string& rel, std::span<const int> tuple) const {
  auto it = tables.find(rel);
  if (it == tables.end()) throw input_error("structure has no relation " + rel);
  if (static_cast<int>(tuple.size()) != vocab.at(rel).arity)
    throw input_error("tuple arity mismatch for relation " + rel);
  std::size_t idx = 0;
  for (int i : tuple) {
    if (i < 0 || i >= n) throw input_error("domain index out of range");
    idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
  }
  return it->second[idx];
}

double apply_interval(const std::string& conn, std::span<const double> args) {
  auto need = [&](std::size_t k) {
    if (args.size() != k) throw input_error("arity mismatch at connective " + conn);
  };
  if (conn == "not") {
    need(1);
    return 1.0 - args[0];
  }
  need(2);
  if (conn == "and") return std::min(args[0], args[1]);
  if (conn == "or") return std::max(args[0], args[1]);
  if (conn == "imp") return std::min(1.0, 1.0 - args[0] + args[1]);
  if (conn == "oplus") return std::min(1.0, args[0] + args[1]);
  if (conn == "odot") return std::max(0.0, args[0] + args[1] - 1.0);
  if (conn == "prod") return args[0] * args[1];
  throw input_error("unknown [0,1] connective: " + conn);
}

AlgebraPtr continuum_signature() {
  AlgebraSpec spec;
  spec.carrier = {"0", "1"};
  Operation band{2, {0, 0, 0, 1}}, bor{2, {0, 1, 1, 1}}, bimp{2, {1, 1, 0, 1}};
  Operation bnot{1, {1, 0}};
  spec.ops["and"] = band;
  spec.ops["or"] = bor;
  spec.ops["not"] = bnot;
  spec.ops["imp"] = bimp;
  spec.ops["oplus"] = bor;
  spec.ops["odot"] = band;
  spec.ops["prod"] = band;
  spec.bottom = "0";
  spec.top = "1";
  return validate_algebra(spec);
}

namespace {

double ieval(const IntervalStructure& m, const Formula& f,
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
      return m.get(f.rel, tuple);
    }
    case Formula::Kind::Ident:
      return lookup(f.vars[0]) == lookup(f.vars[1]) ? 1.0 : 0.0;
    case Formula::Kind::Const:
      return Rational::parse(f.label).to_double();
    case Formula::Kind::Conn: {
      std::vector<double> args;
      args.reserve(f.children.size());
      for (const auto& c : f.children) args.push_back(ieval(m, *c, env));
      return apply_interval(f.conn, args);
    }
    case Formula::Kind::Quant: {
      env.emplace_back(f.var, 0);
      double acc = f.universal ? 1.0 : 0.0;
      for (int i = 0; i < m.n; ++i) {
        env.back().second = i;
        double v = ieval(m, *f.children[0], env);
        acc = f.universal ? std::min(acc, v) : std::max(acc, v);
      }
      env.pop_back();
      return acc;
    }
    case Formula::Kind::Interval: {
      double v = ieval(m, *f.children[0], env);
      return (v >= f.lo && v <= f.hi) ? 1.0 : 0.0;
    }
  }
  throw internal_error("evaluate_interval: unreachable");
}

}  // namespace

double evaluate_interval(const IntervalStructure& m, const Formula& f,
                         const std::map<std::string, int>& asg) {
  if (m.n < 1) throw input_error("domain must be nonempty");
  std::vector<std::pair<std::string, int>> env;
  for (const auto& [v, i] : asg) env.emplace_back(v, i);
  return ieval(m, f, env);
}

IntervalStructure sample_interval_structure(int n, const Vocabulary& vocab, std::uint64_t seed,
                                            std::uint64_t sample_idx) {
  if (n < 1) throw input_error("domain must be nonempty");
  vocab.validate();
  IntervalStructure m;
  m.n = n;
  m.vocab = vocab;
  std::uint64_t rel_idx = 0;
  for (const auto& rel : vocab.relations) {
    std::size_t cells = 1;
    for (int i = 0; i < rel.arity; ++i) cells *= static_cast<std::size_t>(n);
    std::vector<double> t(cells);
    for (std::size_t c = 0; c < cells; ++c)
      t[c] = u01(counter_hash({seed, sample_idx, rel_idx, c}));
    m.tables[rel.name] = std::move(t);
    ++rel_idx;
  }
  return m;
}

ConcentrationReport estimate_concentration(const FormulaPtr& f, int n, const Vocabulary& vocab,
                                           std::uint64_t samples, int bins, std::uint64_t seed,
                                           double lo, double hi) {
  if (samples < 1) throw input_error("need at least one sample");
  if (bins < 1) throw input_error("need at least one bin");
  if (!is_sentence(*f)) throw input_error("estimation requires a sentence");
  std::vector<double> values;
  values.reserve(samples);
  std::uint64_t inside = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    IntervalStructure m = sample_interval_structure(n, vocab, seed, s);
    double v = evaluate_interval(m, *f);
    values.push_back(v);
    if (lo <= hi && v >= lo && v <= hi) ++inside;
  }
  ConcentrationReport r;
  r.min_value = *std::min_element(values.begin(), values.end());
  r.max_value = *std::max_element(values.begin(), values.end());
  std::vector<std::uint64_t> counts(bins, 0);
  for (double v : values) {
    int b = std::min(bins - 1, static_cast<int>(v * bins));
    ++counts[b];
  }
  for (int b = 0; b < bins; ++b) {
    r.bin_low.push_back(static_cast<double>(b) / bins);
    r.bin_high.push_back(static_cast<double>(b + 1) / bins);
    r.bin_frequency.push_back(static_cast<double>(counts[b]) / static_cast<double>(samples));
  }
  std::sort(values.begin(), values.end());
  r.median = values[values.size() / 2];
  r.mu_in_interval = lo <= hi ? static_cast<double>(inside) / static_cast<double>(samples) : 0.0;
  return r;
}

double eval_term_interval(const Term& t, const std::map<std::string, double>& asg) {
  if (t.kind == Term::Kind::Var) {
    auto it = asg.find(t.var);
    if (it == asg.end()) throw input_error("unbound term variable: " + t.var);
    return it->second;
  }
  std::vector<double> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(eval_term_interval(*a, asg));
  return apply_interval(t.conn, args);
}

namespace {

void count_occurrences(const Term& t, std::map<std::string, int>& occ) {
  if (t.kind == Term::Kind::Var) {
    ++occ[t.var];
    return;
  }
  for (const auto& a : t.args) count_occurrences(*a, occ);
}

double eval_on_point(const Term& t, const std::vector<std::string>& vars,
                     const std::vector<double>& point) {
  std::map<std::string, double> asg;
  for (std::size_t i = 0; i < vars.size(); ++i) asg[vars[i]] = point[i];
  return eval_term_interval(t, asg);
}

}  // namespace

ExtremumResult term_extremum_interval(const Term& t, double tol, const Limits& limits) {
  if (tol <= 0.0) throw input_error("tolerance must be positive");
  const auto vars = term_variables(t);
  const int k = static_cast<int>(vars.size());
  std::map<std::string, int> occ;
  count_occurrences(t, occ);
  double lipschitz = 0.0;
  for (const auto& [_, c] : occ) lipschitz += static_cast<double>(c);
  if (k == 0) {
    // constant-free closed terms do not arise (terms are built from
    // variables), so k = 0 means an internal misuse
    throw input_error("term has no variables");
  }

  ExtremumResult best;
  best.lipschitz = lipschitz;
  std::uint64_t spent = 0;
  for (int divisions = 16;; divisions *= 2) {
    double h = 1.0 / divisions;
    std::uint64_t points = 1;
    for (int i = 0; i < k; ++i) points *= static_cast<std::uint64_t>(divisions) + 1;
    if (spent + points > limits.grid_eval_budget)
      throw budget_error("tolerance unreachable within the grid evaluation budget");
    spent += points;

    best.inf_value = 2.0;
    best.sup_value = -1.0;
    std::vector<int> idx(k, 0);
    std::vector<double> point(k, 0.0);
    for (;;) {
      for (int i = 0; i < k; ++i) point[i] = static_cast<double>(idx[i]) * h;
      double v = eval_on_point(t, vars, point);
      if (v < best.inf_value) {
        best.inf_value = v;
        best.argmin = point;
      }
      if (v > best.sup_value) {
        best.sup_value = v;
        best.argmax = point;
      }
      int i = k - 1;
      while (i >= 0 && ++idx[i] > divisions) idx[i--] = 0;
      if (i < 0) break;
    }
    best.certified_bound = lipschitz * h / 2.0;
    if (best.certified_bound <= tol) return best;
  }
}

bool threshold_event(double value, const Rational& r, bool geq) {
  double rr = r.to_double();
  return geq ? value >= rr : value <= rr;
}

FormulaPtr extension_axiom_interval(int k, int grid_n, const std::vector<int>& g,
                                    const Vocabulary& vocab) {
  if (k < 0 || grid_n < 1) throw input_error("extension axiom needs k >= 0 and a positive grid");
  auto frontier = frontier_atoms(vocab, k);
  if (g.size() != frontier.size())
    throw input_error("expected " + std::to_string(frontier.size()) +
                      " grid assignments, got " + std::to_string(g.size()));
  auto var = [](int i) { return "x" + std::to_string(i + 1); };

  std::vector<FormulaPtr> parts;
  for (int i = 0; i < k; ++i)
    parts.push_back(Formula::connective("not", {Formula::ident(var(k), var(i))}));
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    if (g[i] < 0 || g[i] >= grid_n) throw input_error("grid interval index out of range");
    std::vector<std::string> atom_vars;
    for (int v : frontier[i].tuple) atom_vars.push_back(var(v));
    parts.push_back(Formula::interval(Formula::atom(frontier[i].rel, atom_vars),
                                      static_cast<double>(g[i]) / grid_n,
                                      static_cast<double>(g[i] + 1) / grid_n));
  }
  if (parts.empty()) throw input_error("extension axiom over an empty vocabulary");
  FormulaPtr body = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) body = Formula::connective("and", {body, parts[i]});
  body = Formula::quant(false, var(k), body);
  if (k >= 2) {
    std::vector<FormulaPtr> same;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) same.push_back(Formula::ident(var(i), var(j)));
    FormulaPtr any_same = same.front();
    for (std::size_t i = 1; i < same.size(); ++i)
      any_same = Formula::connective("or", {any_same, same[i]});
    body = Formula::connective("or", {any_same, body});
  }
  for (int i = k - 1; i >= 0; --i) body = Formula::quant(true, var(i), body);
  return body;
}

}  // namespace mvlaw
