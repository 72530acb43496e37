// Command-line front end: every experiment in the toolkit is reachable from
// here with reproducible, seed-driven output.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mvlaw/asymptotic.hpp"
#include "mvlaw/continuum.hpp"
#include "mvlaw/demorgan.hpp"
#include "mvlaw/error.hpp"
#include "mvlaw/evaluate.hpp"
#include "mvlaw/json_io.hpp"
#include "mvlaw/montecarlo.hpp"
#include "mvlaw/parser.hpp"
#include "mvlaw/qe.hpp"
#include "mvlaw/translate.hpp"

namespace {

using namespace mvlaw;
using nlohmann::json;

struct Options {
  std::string algebra = "L3";
  std::string sentence;
  std::string file;
  std::string profile = "none";
  std::string vocab_spec;
  std::string structure_file;
  std::string term;
  std::string dist = "uniform";
  std::string assign;
  std::string interval;
  std::vector<int> n_list{5, 10, 20, 50};
  std::uint64_t samples = 2000;
  std::uint64_t seed = 42;
  double tol = 1e-4;
  double threshold = 0.95;
  int bins = 20;
  int k = 1;
  int grid_n = 4;
  bool explain = false;
  bool axioms = false;
  bool exact = false;
  bool csv = false;
  bool as_json = false;
  bool demorgan = false;
};

std::vector<std::string> read_sentences(const Options& opt) {
  std::vector<std::string> out;
  if (!opt.sentence.empty()) out.push_back(opt.sentence);
  if (!opt.file.empty()) {
    std::istringstream in(read_file(opt.file));
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      out.push_back(line.substr(first));
    }
  }
  if (out.empty()) throw input_error("no sentence given (use --sentence or --file)");
  return out;
}

Vocabulary parse_vocab_spec(const std::string& spec) {
  Vocabulary v;
  std::istringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw input_error("bad vocabulary item '" + item + "' (expected name:arity)");
    v.relations.push_back({item.substr(0, colon), std::stoi(item.substr(colon + 1))});
  }
  v.validate();
  return v;
}

Vocabulary resolve_vocab(const Options& opt, const std::string& text,
                         const LatticeAlgebra& a) {
  Vocabulary v =
      opt.vocab_spec.empty() ? infer_vocabulary(text, a) : parse_vocab_spec(opt.vocab_spec);
  if (opt.profile == "crisp-id") v.has_crisp_identity = true;
  if (opt.vocab_spec.empty() && infer_vocabulary(text, a).has_crisp_identity)
    v.has_crisp_identity = true;
  return v;
}

AtomDistribution resolve_dist(const Options& opt, const Vocabulary& vocab,
                              const LatticeAlgebra& a) {
  if (opt.dist == "uniform") return AtomDistribution::uniform(vocab, a);
  if (opt.dist == "skew") {
    // full-support alternative: probability of element e proportional to e+1
    AtomDistribution d;
    std::int64_t total = static_cast<std::int64_t>(a.size()) * (a.size() + 1) / 2;
    for (const auto& rel : vocab.relations) {
      std::vector<Rational> p;
      for (Elem e = 0; e < a.size(); ++e) p.emplace_back(e + 1, total);
      d.probs[rel.name] = std::move(p);
    }
    return d;
  }
  // otherwise a JSON file {"R": ["1/2", "1/4", "1/4"], ...}
  json j = json::parse(read_file(opt.dist));
  AtomDistribution d;
  for (const auto& [rel, probs] : j.items()) {
    std::vector<Rational> p;
    for (const auto& q : probs) p.push_back(Rational::parse(q.get<std::string>()));
    d.probs[rel] = std::move(p);
  }
  d.validate(vocab, a);
  return d;
}

int cmd_algebra(const std::string& sub, const Options& opt) {
  if (sub == "list") {
    std::cout << "B2  L2 L3 L4 ...  G2 G3 G4 ...  prod(X,Y)\n";
    return 0;
  }
  if (sub == "show") {
    AlgebraPtr a = load_algebra(opt.algebra);
    std::cout << "carrier:";
    for (Elem e = 0; e < a->size(); ++e) std::cout << " " << a->display(e);
    std::cout << "\n";
    if (a->bottom()) std::cout << "bottom: " << a->label(*a->bottom()) << "\n";
    if (a->top()) std::cout << "top: " << a->label(*a->top()) << "\n";
    for (const auto& [name, op] : a->ops()) {
      std::cout << name << " (arity " << op.arity << "):";
      for (std::size_t i = 0; i < op.table.size(); ++i) {
        if (i % a->size() == 0) std::cout << "\n ";
        std::cout << " " << a->label(op.table[i]);
      }
      std::cout << "\n";
    }
    return 0;
  }
  if (sub == "check") {
    AlgebraPtr a = load_algebra(opt.algebra);  // throws with diagnostics if invalid
    std::cout << "valid lattice algebra with " << a->size() << " elements\n";
    if (opt.demorgan) {
      DeMorganReport r = demorgan_check(*a);
      for (const auto& e : r.conditions)
        std::cout << e.law << ": " << (e.holds ? "holds" : "fails at " + e.witness) << "\n";
      for (const auto& e : r.derived)
        std::cout << e.law << ": " << (e.holds ? "holds" : "fails at " + e.witness) << "\n";
      std::cout << "distributive lattice: " << (r.distributive ? "yes" : "no") << "\n";
    }
    return 0;
  }
  throw input_error("unknown algebra subcommand: " + sub);
}

int cmd_parse(const Options& opt) {
  AlgebraPtr a = load_algebra(opt.algebra);
  for (const auto& text : read_sentences(opt)) {
    Vocabulary v = resolve_vocab(opt, text, *a);
    FormulaPtr f = parse_formula(text, v, *a, /*require_sentence=*/false);
    std::cout << print_formula(*f) << "\n";
    auto free = free_variables(*f);
    if (!free.empty()) {
      std::cout << "free variables:";
      for (const auto& x : free) std::cout << " " << x;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_eval(const Options& opt) {
  ConstraintProfile profile = profile_by_name(opt.profile);
  if (opt.structure_file.empty()) throw input_error("eval needs --structure");
  WeightedStructure m = structure_from_json_text(read_file(opt.structure_file), profile);
  std::map<std::string, int> asg;
  if (!opt.assign.empty()) {
    std::istringstream ss(opt.assign);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw input_error("bad assignment '" + item + "' (expected var=index, 1-based)");
      asg[item.substr(0, eq)] = std::stoi(item.substr(eq + 1)) - 1;
    }
  }
  for (const auto& text : read_sentences(opt)) {
    FormulaPtr f = parse_formula(text, m.vocab, *m.algebra, asg.empty());
    std::cout << m.algebra->display(evaluate(m, *f, asg)) << "\n";
  }
  return 0;
}

int cmd_translate(const Options& opt) {
  AlgebraPtr a = load_algebra(opt.algebra);
  ConstraintProfile profile = profile_by_name(opt.profile);
  Limits limits = Limits::from_env();
  for (const auto& text : read_sentences(opt)) {
    Vocabulary v = resolve_vocab(opt, text, *a);
    FormulaPtr f = parse_formula(text, v, *a, /*require_sentence=*/false);
    TranslationBundle b = translate(f, *a, v, limits);
    for (Elem e = 0; e < a->size(); ++e)
      std::cout << a->label(e) << ": " << print_formula(*b.per_value[e]) << "\n";
    if (opt.axioms) {
      std::cout << "axioms:\n";
      for (const auto& ax : partition_axioms(v, *a, profile))
        std::cout << "  " << print_formula(*ax) << "\n";
    }
  }
  return 0;
}

int cmd_asymptotic(const Options& opt) {
  AlgebraPtr a = load_algebra(opt.algebra);
  ConstraintProfile profile = profile_by_name(opt.profile);
  Limits limits = Limits::from_env();
  for (const auto& text : read_sentences(opt)) {
    Vocabulary v = resolve_vocab(opt, text, *a);
    FormulaPtr f = parse_formula(text, v, *a);
    AsymptoticDecider d(a, v, profile, limits);
    d.set_explain(opt.explain);
    Elem value = d.almost_sure_value(f);
    for (const auto& line : d.explanation()) std::cout << line << "\n";
    std::cout << a->display(value) << "\n";
  }
  return 0;
}

int cmd_qe(const Options& opt) {
  AlgebraPtr a = load_algebra(opt.algebra);
  Limits limits = Limits::from_env();
  for (const auto& text : read_sentences(opt)) {
    Vocabulary v = resolve_vocab(opt, text, *a);
    FormulaPtr f = parse_formula(text, v, *a, /*require_sentence=*/false);
    FormulaPtr q = qe_demorgan(f, *a, limits);
    if (q->kind == Formula::Kind::Const)
      std::cout << a->display(a->elem(q->label)) << "\n";
    else
      std::cout << print_formula(*q) << "\n";
  }
  return 0;
}

int cmd_asymset(const Options& opt) {
  AlgebraPtr a = load_algebra(opt.algebra);
  for (Elem e : almost_sure_set_demorgan(*a)) std::cout << a->display(e) << "\n";
  return 0;
}

int cmd_montecarlo(const Options& opt) {
  AlgebraPtr a = load_algebra(opt.algebra);
  ConstraintProfile profile = profile_by_name(opt.profile);
  Limits limits = Limits::from_env();
  for (const auto& text : read_sentences(opt)) {
    Vocabulary v = resolve_vocab(opt, text, *a);
    FormulaPtr f = parse_formula(text, v, *a);
    AtomDistribution dist = resolve_dist(opt, v, *a);
    if (opt.exact) {
      for (int n : opt.n_list) {
        auto mu = exact_mu_small(f, n, a, v, dist, profile, limits);
        for (Elem e = 0; e < a->size(); ++e)
          if (mu[e] != Rational())
            std::cout << n << "," << a->display(e) << "," << mu[e].str() << "\n";
      }
      continue;
    }
    json rows = json::array();
    std::cout << "n,value_label,frequency,ci_low,ci_high\n";
    for (int n : opt.n_list) {
      EmpiricalDistribution d =
          estimate_distribution(f, n, a, v, dist, opt.samples, profile, opt.seed);
      for (Elem e = 0; e < a->size(); ++e) {
        if (d.counts[e] == 0) continue;
        if (opt.as_json) {
          rows.push_back({{"n", n},
                          {"value", a->display(e)},
                          {"frequency", d.frequency[e]},
                          {"ci_low", d.ci_low[e]},
                          {"ci_high", d.ci_high[e]}});
        } else {
          std::cout << n << "," << a->display(e) << "," << d.frequency[e] << "," << d.ci_low[e]
                    << "," << d.ci_high[e] << "\n";
        }
      }
    }
    if (opt.as_json) std::cout << rows.dump(2) << "\n";
  }
  return 0;
}

int cmd_continuum(const std::string& sub, const Options& opt) {
  Limits limits = Limits::from_env();
  // parsing needs a signature carrying all the [0,1] connectives
  AlgebraPtr sig = continuum_signature();
  if (sub == "extremum") {
    if (opt.term.empty()) throw input_error("extremum needs --term");
    TermPtr t = parse_term(opt.term, *sig);
    ExtremumResult r = term_extremum_interval(*t, opt.tol, limits);
    std::cout << "inf," << r.inf_value << "\nsup," << r.sup_value << "\n";
    std::cout << "argmin";
    for (double x : r.argmin) std::cout << "," << x;
    std::cout << "\nargmax";
    for (double x : r.argmax) std::cout << "," << x;
    std::cout << "\nbound," << r.certified_bound << "\nlipschitz," << r.lipschitz << "\n";
    return 0;
  }
  if (sub == "estimate") {
    double lo = 1.0, hi = 0.0;
    if (!opt.interval.empty()) {
      auto colon = opt.interval.find(':');
      if (colon == std::string::npos) throw input_error("--interval expects lo:hi");
      lo = std::stod(opt.interval.substr(0, colon));
      hi = std::stod(opt.interval.substr(colon + 1));
    }
    for (const auto& text : read_sentences(opt)) {
      Vocabulary v = resolve_vocab(opt, text, *sig);
      FormulaPtr f = parse_formula(text, v, *sig);
      ConcentrationReport r = estimate_concentration(f, opt.n_list.back(), v, opt.samples,
                                                     opt.bins, opt.seed, lo, hi);
      std::cout << "bin_low,bin_high,frequency\n";
      for (std::size_t b = 0; b < r.bin_low.size(); ++b)
        std::cout << r.bin_low[b] << "," << r.bin_high[b] << "," << r.bin_frequency[b] << "\n";
      std::cout << "median," << r.median << "\n";
      if (lo <= hi) std::cout << "mu_in_interval," << r.mu_in_interval << "\n";
    }
    return 0;
  }
  if (sub == "ext-axiom") {
    Vocabulary v = opt.vocab_spec.empty() ? Vocabulary{{{"P", 1}}, false}
                                          : parse_vocab_spec(opt.vocab_spec);
    std::vector<int> g;
    std::istringstream ss(opt.assign.empty() ? "1" : opt.assign);
    std::string item;
    while (std::getline(ss, item, ',')) g.push_back(std::stoi(item));
    FormulaPtr ax = extension_axiom_interval(opt.k, opt.grid_n, g, v);
    std::cout << print_formula(*ax) << "\n";
    std::cout << "n,mu_at_least_0.9\n";
    for (int n : opt.n_list) {
      std::uint64_t hits = 0;
      for (std::uint64_t s = 0; s < opt.samples; ++s) {
        IntervalStructure m = sample_interval_structure(n, v, opt.seed, s);
        if (evaluate_interval(m, *ax) >= 0.9) ++hits;
      }
      std::cout << n << "," << static_cast<double>(hits) / static_cast<double>(opt.samples)
                << "\n";
    }
    return 0;
  }
  throw input_error("unknown continuum subcommand: " + sub);
}

int cmd_s5(const Options& opt) {
  AlgebraPtr a = load_algebra(opt.algebra);
  for (const auto& text : read_sentences(opt)) {
    ModalPtr m = parse_modal(text, *a);
    FormulaPtr f = s5_translate(*m);
    std::cout << print_formula(*f) << "\n";
    std::cout << (fully_modal(*m) ? "sentence" : "open (not fully modal)") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"asymptotic truth values of many-valued sentences"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", opt.algebra, "builtin name (B2, L3, G4, prod(G3,L4)) or file");
    cmd->add_option("--sentence", opt.sentence, "formula text");
    cmd->add_option("--file", opt.file, "file with one sentence per line, # comments");
    cmd->add_option("--vocab", opt.vocab_spec, "explicit vocabulary, e.g. P:1,R:2");
    cmd->add_option("--profile", opt.profile, "none, crisp-id, or graph");
  };

  CLI::App* alg = app.add_subcommand("algebra", "list, show, or check algebras");
  alg->require_subcommand(1);
  for (const char* s : {"list", "show", "check"}) {
    CLI::App* sub = alg->add_subcommand(s);
    sub->add_option("--algebra", opt.algebra, "builtin name or file");
    if (std::string(s) == "check")
      sub->add_flag("--demorgan", opt.demorgan, "also report the negation conditions");
  }

  add_common(app.add_subcommand("parse", "parse and print a formula"));

  CLI::App* ev = app.add_subcommand("eval", "evaluate a formula in a structure");
  add_common(ev);
  ev->add_option("--structure", opt.structure_file, "structure JSON file");
  ev->add_option("--assign", opt.assign, "free-variable assignment, e.g. x=1,y=2 (1-based)");

  CLI::App* tr = app.add_subcommand("translate", "classical multi-translation");
  add_common(tr);
  tr->add_flag("--axioms", opt.axioms, "also emit the partition axioms");

  CLI::App* as = app.add_subcommand("asymptotic", "decide the almost-sure value");
  add_common(as);
  as->add_flag("--explain", opt.explain, "print the achieved-value set at each quantifier");

  add_common(app.add_subcommand("qe", "quantifier elimination over {and,or,not}"));

  CLI::App* st = app.add_subcommand("asymset", "almost-sure value set of the fragment");
  st->add_option("--algebra", opt.algebra, "builtin name or file");

  CLI::App* mc = app.add_subcommand("montecarlo", "empirical value distribution");
  add_common(mc);
  mc->add_option("--n", opt.n_list, "domain sizes");
  mc->add_option("--samples", opt.samples, "samples per domain size");
  mc->add_option("--seed", opt.seed, "random seed");
  mc->add_option("--dist", opt.dist, "uniform, skew, or a JSON file");
  mc->add_flag("--exact", opt.exact, "exact enumeration instead of sampling");
  mc->add_flag("--csv", opt.csv, "CSV output (default)");
  mc->add_flag("--json", opt.as_json, "JSON output");

  CLI::App* co = app.add_subcommand("continuum", "[0,1]-valued estimation and extrema");
  for (const char* s : {"estimate", "extremum", "ext-axiom"}) {
    CLI::App* sub = co->add_subcommand(s);
    sub->add_option("--sentence", opt.sentence, "formula text");
    sub->add_option("--file", opt.file, "file with one sentence per line");
    sub->add_option("--vocab", opt.vocab_spec, "explicit vocabulary, e.g. P:1");
    sub->add_option("--n", opt.n_list, "domain sizes (estimate uses the last)");
    sub->add_option("--samples", opt.samples, "sample count");
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--bins", opt.bins, "histogram bins");
    sub->add_option("--interval", opt.interval, "report mu of landing in lo:hi");
    sub->add_option("--term", opt.term, "term for extremum, e.g. 'v | not v'");
    sub->add_option("--tol", opt.tol, "certified tolerance for extremum");
    sub->add_option("--k", opt.k, "existing-tuple size for ext-axiom");
    sub->add_option("--grid-n", opt.grid_n, "grid resolution N for ext-axiom");
    sub->add_option("--assign", opt.assign, "grid interval index per frontier atom, e.g. 1");
  }
  co->require_subcommand(1);

  CLI::App* s5 = app.add_subcommand("s5", "modal-to-first-order translation");
  s5->add_option("--algebra", opt.algebra, "builtin name or file");
  s5->add_option("--sentence", opt.sentence, "modal formula, e.g. 'box (p | not p)'");
  s5->add_option("--file", opt.file, "file with one formula per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (alg->parsed())
      return cmd_algebra(alg->get_subcommands().front()->get_name(), opt);
    if (app.get_subcommand("parse")->parsed()) return cmd_parse(opt);
    if (ev->parsed()) return cmd_eval(opt);
    if (tr->parsed()) return cmd_translate(opt);
    if (as->parsed()) return cmd_asymptotic(opt);
    if (app.get_subcommand("qe")->parsed()) return cmd_qe(opt);
    if (st->parsed()) return cmd_asymset(opt);
    if (mc->parsed()) return cmd_montecarlo(opt);
    if (co->parsed()) return cmd_continuum(co->get_subcommands().front()->get_name(), opt);
    if (s5->parsed()) return cmd_s5(opt);
    throw internal_error("no subcommand dispatched");
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
