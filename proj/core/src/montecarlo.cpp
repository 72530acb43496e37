#include "mvlaw/montecarlo.hpp"

#include <cmath>

#include "mvlaw/asymptotic.hpp"
#include "mvlaw/error.hpp"
#include "mvlaw/evaluate.hpp"
#include "mvlaw/rng.hpp"

namespace mvlaw {

AtomDistribution AtomDistribution::uniform(const Vocabulary& vocab, const LatticeAlgebra& a) {
  AtomDistribution d;
  for (const auto& rel : vocab.relations)
    d.probs[rel.name] = std::vector<Rational>(a.size(), Rational(1, a.size()));
  return d;
}

void AtomDistribution::validate(const Vocabulary& vocab, const LatticeAlgebra& a) const {
  for (const auto& rel : vocab.relations) {
    auto it = probs.find(rel.name);
    if (it == probs.end()) throw input_error("distribution missing relation " + rel.name);
    if (static_cast<int>(it->second.size()) != a.size())
      throw input_error("distribution for " + rel.name + " has the wrong carrier size");
    Rational sum;
    bool any = false;
    for (const auto& q : it->second) {
      if (q < Rational()) throw input_error("negative probability for " + rel.name);
      if (q > Rational()) any = true;
      sum = sum + q;
    }
    if (sum != Rational(1, 1))
      throw input_error("probabilities for " + rel.name + " sum to " + sum.str() + ", not 1");
    if (!any) throw input_error("empty support for " + rel.name);
  }
}

std::vector<Elem> AtomDistribution::support(const std::string& rel) const {
  std::vector<Elem> out;
  auto it = probs.find(rel);
  if (it == probs.end()) throw input_error("distribution missing relation " + rel);
  for (std::size_t e = 0; e < it->second.size(); ++e)
    if (it->second[e] > Rational()) out.push_back(static_cast<Elem>(e));
  return out;
}

ConstraintProfile AtomDistribution::restrict_profile(ConstraintProfile p) const {
  for (const auto& [rel, pr] : probs) {
    std::vector<Elem> sup = support(rel);
    if (static_cast<std::size_t>(sup.size()) == pr.size()) continue;  // full support
    auto it = p.support.find(rel);
    if (it == p.support.end()) {
      p.support[rel] = sup;
    } else {
      std::vector<Elem> merged;
      for (Elem e : sup)
        if (std::find(it->second.begin(), it->second.end(), e) != it->second.end())
          merged.push_back(e);
      it->second = merged;
    }
  }
  return p;
}

namespace {

Elem draw(const std::vector<Rational>& probs, double u) {
  double acc = 0.0;
  for (std::size_t e = 0; e < probs.size(); ++e) {
    acc += probs[e].to_double();
    if (u < acc) return static_cast<Elem>(e);
  }
  return static_cast<Elem>(probs.size() - 1);  // guard against rounding at u ~ 1
}

}  // namespace

WeightedStructure sample_structure(int n, AlgebraPtr algebra, const Vocabulary& vocab,
                                   const AtomDistribution& p, const ConstraintProfile& profile,
                                   std::uint64_t seed, std::uint64_t sample_idx) {
  if (n < 1) throw input_error("domain must be nonempty");
  p.validate(vocab, *algebra);
  std::map<std::string, std::vector<Elem>> tables;
  std::uint64_t rel_idx = 0;
  for (const auto& rel : vocab.relations) {
    const auto& probs = p.probs.at(rel.name);
    std::size_t cells = table_size(n, rel.arity);
    std::vector<Elem> t(cells);
    if (profile.constrains_as_graph(rel.arity)) {
      Elem bot = algebra->require_bottom();
      if (!(probs[bot] > Rational()))
        throw input_error("graph profile conflicts with the distribution: p_" + rel.name +
                          "(bottom) = 0 but diagonal cells are forced to bottom");
      for (int i = 0; i < n; ++i) {
        t[static_cast<std::size_t>(i) * n + i] = bot;
        for (int j = i + 1; j < n; ++j) {
          std::uint64_t cell = static_cast<std::uint64_t>(i) * n + j;
          Elem v = draw(probs, u01(counter_hash({seed, sample_idx, rel_idx, cell})));
          t[static_cast<std::size_t>(i) * n + j] = v;
          t[static_cast<std::size_t>(j) * n + i] = v;
        }
      }
    } else {
      for (std::size_t c = 0; c < cells; ++c)
        t[c] = draw(probs, u01(counter_hash({seed, sample_idx, rel_idx, c})));
    }
    tables[rel.name] = std::move(t);
    ++rel_idx;
  }
  return make_structure(n, std::move(algebra), vocab, std::move(tables), profile);
}

std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t total) {
  if (total == 0) return {0.0, 1.0};
  const double z = 1.959963984540054;
  double nn = static_cast<double>(total);
  double phat = static_cast<double>(hits) / nn;
  double denom = 1.0 + z * z / nn;
  double center = (phat + z * z / (2.0 * nn)) / denom;
  double half = z * std::sqrt(phat * (1.0 - phat) / nn + z * z / (4.0 * nn * nn)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

Elem EmpiricalDistribution::modal_value() const {
  Elem best = 0;
  for (std::size_t e = 1; e < counts.size(); ++e)
    if (counts[e] > counts[best]) best = static_cast<Elem>(e);
  return best;
}

EmpiricalDistribution estimate_distribution(const FormulaPtr& f, int n, AlgebraPtr algebra,
                                            const Vocabulary& vocab, const AtomDistribution& p,
                                            std::uint64_t samples,
                                            const ConstraintProfile& profile,
                                            std::uint64_t seed) {
  if (samples < 1) throw input_error("need at least one sample");
  if (!is_sentence(*f)) throw input_error("estimation requires a sentence");
  EmpiricalDistribution out;
  out.n = n;
  out.samples = samples;
  out.seed = seed;
  out.counts.assign(algebra->size(), 0);
  for (std::uint64_t s = 0; s < samples; ++s) {
    WeightedStructure m = sample_structure(n, algebra, vocab, p, profile, seed, s);
    ++out.counts[evaluate(m, *f)];
  }
  out.frequency.resize(out.counts.size());
  out.ci_low.resize(out.counts.size());
  out.ci_high.resize(out.counts.size());
  for (std::size_t e = 0; e < out.counts.size(); ++e) {
    out.frequency[e] = static_cast<double>(out.counts[e]) / static_cast<double>(samples);
    auto [lo, hi] = wilson_interval(out.counts[e], samples);
    out.ci_low[e] = lo;
    out.ci_high[e] = hi;
  }
  return out;
}

std::vector<Rational> exact_mu_small(const FormulaPtr& f, int n, AlgebraPtr algebra,
                                     const Vocabulary& vocab, const AtomDistribution& p,
                                     const ConstraintProfile& profile, const Limits& limits) {
  if (n < 1) throw input_error("domain must be nonempty");
  if (!is_sentence(*f)) throw input_error("exact enumeration requires a sentence");
  p.validate(vocab, *algebra);

  // free cells: one per table cell, except graph-linked cells
  struct FreeCell {
    std::string rel;
    std::vector<std::size_t> targets;  // flattened indices written by this draw
    std::vector<Elem> values;          // support of the relation
  };
  std::vector<FreeCell> free_cells;
  std::map<std::string, std::vector<Elem>> tables;
  for (const auto& rel : vocab.relations) {
    std::vector<Elem> sup = p.support(rel.name);
    std::size_t cells = table_size(n, rel.arity);
    tables[rel.name] = std::vector<Elem>(cells, 0);
    if (profile.constrains_as_graph(rel.arity)) {
      Elem bot = algebra->require_bottom();
      bool bot_ok = false;
      for (Elem e : sup) bot_ok = bot_ok || e == bot;
      if (!bot_ok)
        throw input_error("graph profile conflicts with the distribution for " + rel.name);
      for (int i = 0; i < n; ++i) {
        tables[rel.name][static_cast<std::size_t>(i) * n + i] = bot;
        for (int j = i + 1; j < n; ++j)
          free_cells.push_back({rel.name,
                                {static_cast<std::size_t>(i) * n + j,
                                 static_cast<std::size_t>(j) * n + i},
                                sup});
      }
    } else {
      for (std::size_t c = 0; c < cells; ++c) free_cells.push_back({rel.name, {c}, sup});
    }
  }

  double log_count = 0.0;
  for (const auto& c : free_cells) log_count += std::log2(static_cast<double>(c.values.size()));
  if (log_count > std::log2(static_cast<double>(limits.model_count_budget)))
    throw budget_error("model space exceeds the enumeration budget");

  std::vector<Rational> mu(algebra->size());
  std::vector<std::size_t> counter(free_cells.size(), 0);
  for (;;) {
    Rational prob(1, 1);
    for (std::size_t i = 0; i < free_cells.size(); ++i) {
      Elem v = free_cells[i].values[counter[i]];
      for (std::size_t t : free_cells[i].targets) tables[free_cells[i].rel][t] = v;
      prob = prob * p.probs.at(free_cells[i].rel)[v];
    }
    WeightedStructure m = make_structure(n, algebra, vocab, tables, profile);
    Elem v = evaluate(m, *f);
    mu[v] = mu[v] + prob;
    int i = static_cast<int>(counter.size()) - 1;
    while (i >= 0 && ++counter[i] == free_cells[i].values.size()) counter[i--] = 0;
    if (i < 0) break;
  }
  return mu;
}

ConvergenceReport convergence_report(const FormulaPtr& f, const std::vector<int>& n_list,
                                     AlgebraPtr algebra, const Vocabulary& vocab,
                                     const AtomDistribution& p, std::uint64_t samples,
                                     const ConstraintProfile& profile, std::uint64_t seed,
                                     double threshold, const Limits& limits) {
  ConvergenceReport r;
  r.n_list = n_list;
  ConstraintProfile decider_profile = p.restrict_profile(profile);
  r.decided = almost_sure_value(f, algebra, vocab, decider_profile, limits);
  for (int n : n_list)
    r.per_n.push_back(estimate_distribution(f, n, algebra, vocab, p, samples, profile, seed));
  if (!r.per_n.empty()) {
    r.final_frequency = r.per_n.back().frequency[r.decided];
    r.converged = r.final_frequency >= threshold;
  }
  return r;
}

}  // namespace mvlaw
