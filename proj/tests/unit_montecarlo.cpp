#include <doctest.h>

#include <cmath>

#include "mvlaw/asymptotic.hpp"
#include "mvlaw/error.hpp"
#include "mvlaw/montecarlo.hpp"
#include "mvlaw/parser.hpp"
#include "support/gen.hpp"

using namespace mvlaw;

namespace {

Rational pow_rational(const Rational& r, int n) {
  Rational out(1, 1);
  for (int i = 0; i < n; ++i) out = out * r;
  return out;
}

}  // namespace

TEST_SUITE("montecarlo") {

TEST_CASE("sampling is deterministic in the seed and varies across seeds") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}, {"R", 2}}, false};
  auto p = AtomDistribution::uniform(vocab, *l3);
  auto a = sample_structure(10, l3, vocab, p, {}, 42, 7);
  auto b = sample_structure(10, l3, vocab, p, {}, 42, 7);
  CHECK(a.tables == b.tables);
  auto c = sample_structure(10, l3, vocab, p, {}, 43, 7);
  auto d = sample_structure(10, l3, vocab, p, {}, 42, 8);
  CHECK(a.tables != c.tables);
  CHECK(a.tables != d.tables);
}

TEST_CASE("support restrictions are honored exactly") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}}, false};
  AtomDistribution p;
  p.probs["P"] = {Rational(1, 2), Rational(0, 1), Rational(1, 2)};  // never 1/2
  p.validate(vocab, *l3);
  CHECK(p.support("P") == std::vector<Elem>{0, 2});
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto m = sample_structure(20, l3, vocab, p, {}, 5, s);
    for (Elem v : m.tables.at("P")) CHECK(v != 1);
  }
  // the induced profile forbids the excluded value
  ConstraintProfile restricted = p.restrict_profile({});
  CHECK(!restricted.allows("P", 1));
  CHECK(restricted.allows("P", 0));
}

TEST_CASE("distributions validate") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}}, false};
  AtomDistribution bad;
  bad.probs["P"] = {Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  CHECK_THROWS_AS(bad.validate(vocab, *l3), input_error);
  AtomDistribution missing;
  CHECK_THROWS_AS(missing.validate(vocab, *l3), input_error);
}

TEST_CASE("graph sampling forces the diagonal and symmetry") {
  auto b2 = algebra_by_name("B2");
  Vocabulary vocab{{{"R", 2}}, false};
  AtomDistribution p;
  p.probs["R"] = {Rational(1, 2), Rational(1, 2)};
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto m = sample_structure(6, b2, vocab, p, profile_by_name("graph"), 9, s);
    for (int i = 0; i < 6; ++i) {
      CHECK(m.get("R", std::vector<int>{i, i}) == b2->require_bottom());
      for (int j = 0; j < 6; ++j)
        CHECK(m.get("R", std::vector<int>{i, j}) == m.get("R", std::vector<int>{j, i}));
    }
  }
  // a graph needs bottom in the support of every binary relation
  AtomDistribution nobottom;
  nobottom.probs["R"] = {Rational(0, 1), Rational(1, 1)};
  CHECK_THROWS_AS(sample_structure(6, b2, vocab, nobottom, profile_by_name("graph"), 9, 0),
                  input_error);
}

TEST_CASE("wilson intervals are sane") {
  auto [lo, hi] = wilson_interval(50, 100);
  CHECK(lo > 0.40);
  CHECK(lo < 0.5);
  CHECK(hi > 0.5);
  CHECK(hi < 0.60);
  auto [alo, ahi] = wilson_interval(100, 100);
  CHECK(alo > 0.9);
  CHECK(ahi == doctest::Approx(1.0));
  auto [zlo, zhi] = wilson_interval(0, 100);
  CHECK(zlo == doctest::Approx(0.0));
  CHECK(zhi < 0.1);
}

TEST_CASE("exact small-model distributions match closed forms") {
  // mu_n(exists x P(x) = 1) = 1 - (1/2)^n over the two-element algebra
  auto b2 = algebra_by_name("B2");
  Vocabulary vocab{{{"P", 1}}, false};
  FormulaPtr f = parse_formula("exists x. P(x)", vocab, *b2);
  auto p = AtomDistribution::uniform(vocab, *b2);
  for (int n = 1; n <= 8; ++n) {
    auto mu = exact_mu_small(f, n, b2, vocab, p);
    Rational half_n = pow_rational(Rational(1, 2), n);
    CHECK(mu[b2->require_top()] == Rational(1, 1) - half_n);
    CHECK(mu[b2->require_bottom()] == half_n);
  }
}

TEST_CASE("exact distributions are consistent with estimates") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}}, false};
  FormulaPtr f = parse_formula("forall x. (P(x) | not P(x))", vocab, *l3);
  auto p = AtomDistribution::uniform(vocab, *l3);
  int n = 5;
  auto mu = exact_mu_small(f, n, l3, vocab, p);
  auto est = estimate_distribution(f, n, l3, vocab, p, 2000, {}, 77);
  for (Elem e = 0; e < l3->size(); ++e) {
    double exact = mu[e].to_double();
    double half_width = (est.ci_high[e] - est.ci_low[e]) / 2.0;
    CHECK(std::abs(est.frequency[e] - exact) <= 3.0 * half_width + 1e-9);
  }
}

TEST_CASE("the model-count budget is enforced") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"R", 2}}, false};
  FormulaPtr f = parse_formula("exists x. R(x,x)", vocab, *l3);
  auto p = AtomDistribution::uniform(vocab, *l3);
  CHECK_THROWS_AS(exact_mu_small(f, 5, l3, vocab, p), budget_error);  // 3^25 models
}

TEST_CASE("empirical modal values match the decider on random sentences") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}, {"Q", 1}}, false};
  auto p = AtomDistribution::uniform(vocab, *l3);
  mvtest::Rng rng(401);
  mvtest::FormulaGenOptions opt;
  opt.conns = {"and", "or", "not", "imp"};
  opt.quantifiers = 2;
  int agreements = 0;
  const int cases = 12;
  for (int i = 0; i < cases; ++i) {
    FormulaPtr f = mvtest::random_sentence(rng, vocab, *l3, opt);
    Elem decided = almost_sure_value(f, l3, vocab);
    auto est = estimate_distribution(f, 40, l3, vocab, p, 400, {}, 500 + i);
    if (est.modal_value() == decided) ++agreements;
  }
  CHECK(agreements >= cases - 1);  // finite-n noise may cost at most one case
}

TEST_CASE("convergence reports cover each requested size") {
  auto b2 = algebra_by_name("B2");
  Vocabulary vocab{{{"P", 1}}, false};
  FormulaPtr f = parse_formula("exists x. P(x)", vocab, *b2);
  auto p = AtomDistribution::uniform(vocab, *b2);
  auto report = convergence_report(f, {5, 10, 20}, b2, vocab, p, 500, {}, 21);
  CHECK(report.per_n.size() == 3);
  CHECK(report.decided == b2->require_top());
  CHECK(report.converged);
  CHECK(report.final_frequency > 0.99);
}

}  // TEST_SUITE
