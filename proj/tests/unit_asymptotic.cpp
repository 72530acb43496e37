#include <doctest.h>

#include "mvlaw/asymptotic.hpp"
#include "mvlaw/description.hpp"
#include "mvlaw/error.hpp"
#include "mvlaw/parser.hpp"
#include "mvlaw/translate.hpp"
#include "support/gen.hpp"

using namespace mvlaw;

TEST_SUITE("asymptotic") {

TEST_CASE("atom bookkeeping is canonical") {
  Vocabulary vocab{{{"P", 1}, {"R", 2}}, false};
  CHECK(atom_count(vocab, 1) == 2);
  CHECK(atom_count(vocab, 2) == 6);  // two P atoms, four R atoms
  auto atoms = atoms_over(vocab, 2);
  REQUIRE(atoms.size() == 6);
  for (std::size_t i = 0; i < atoms.size(); ++i)
    CHECK(atom_index(vocab, 2, atoms[i].rel, atoms[i].tuple) == i);
  // the frontier over one existing variable: every atom using the new one
  auto frontier = frontier_atoms(vocab, 1);
  REQUIRE(frontier.size() == 4);  // P(y), R(x,y), R(y,x), R(y,y)
  CHECK(frontier[0].rel == "P");
  for (const auto& at : frontier) {
    bool uses_new = false;
    for (int v : at.tuple) uses_new |= (v == 1);
    CHECK(uses_new);
  }
}

TEST_CASE("expansion counts match the combinatorial oracles") {
  auto l3 = algebra_by_name("L3");
  // unary P over a one-variable description: |A| choices for P(y)
  {
    Vocabulary vocab{{{"P", 1}}, false};
    CompleteDescription base{1, {0}};
    ExpansionEnumerator e(base, vocab, *l3, {});
    CHECK(e.count() == 3);
    CompleteDescription out;
    int streamed = 0;
    while (e.next(out)) {
      ++streamed;
      CHECK(out.k == 2);
      CHECK(out.values[0] == 0);  // base atoms are preserved
    }
    CHECK(streamed == 3);
  }
  // binary R under the graph profile: R(y,x) tied to R(x,y), R(y,y) pinned,
  // so |A| free choices remain
  {
    Vocabulary vocab{{{"R", 2}}, false};
    CompleteDescription base{1, {0}};
    ExpansionEnumerator e(base, vocab, *l3, profile_by_name("graph"));
    CHECK(e.count() == 3);
    CompleteDescription out;
    while (e.next(out)) {
      CHECK(out.value_of(vocab, "R", std::vector<int>{0, 1}) ==
            out.value_of(vocab, "R", std::vector<int>{1, 0}));
      CHECK(out.value_of(vocab, "R", std::vector<int>{1, 1}) == l3->require_bottom());
    }
  }
  // binary R over B2, unconstrained: 2^3 expansions
  {
    auto b2 = algebra_by_name("B2");
    Vocabulary vocab{{{"R", 2}}, false};
    CompleteDescription base{1, {0}};
    ExpansionEnumerator e(base, vocab, *b2, {});
    CHECK(e.count() == 8);
  }
}

TEST_CASE("known decided values") {
  auto check = [](const char* alg, const char* text, const char* expect) {
    auto a = algebra_by_name(alg);
    Vocabulary vocab{{{"P", 1}}, false};
    FormulaPtr f = parse_formula(text, vocab, *a);
    CHECK(a->label(almost_sure_value(f, a, vocab)) == expect);
  };
  check("B2", "exists x. P(x)", "1");
  check("B2", "forall x. P(x)", "0");
  check("L3", "forall x. (P(x) | not P(x))", "1/2");
  check("L3", "exists x. (P(x) & not P(x))", "1/2");
  check("G3", "forall x. (P(x) | not P(x))", "g1");
  check("L4", "forall x. oplus(pow(P(x),3), not P(x))", "1/3");
}

TEST_CASE("crisp identity is decided correctly") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}}, true};
  auto profile = profile_by_name("crisp-id");
  auto val = [&](const char* text) {
    FormulaPtr f = parse_formula(text, vocab, *l3);
    return l3->label(almost_sure_value(f, l3, vocab, profile));
  };
  CHECK(val("forall x. exists y. (x ~ y)") == "1");
  CHECK(val("forall x. forall y. (x ~ y)") == "0");
  // two distinct elements with any prescribed P values exist almost surely
  CHECK(val("exists x. exists y. (not (x ~ y) & P(x) & not P(x))") == "1/2");
}

TEST_CASE("values are independent of memoization") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}, {"R", 2}}, false};
  mvtest::Rng rng(211);
  mvtest::FormulaGenOptions opt;
  opt.conns = {"and", "or", "not", "imp"};
  opt.quantifiers = 3;
  Limits plain, nomemo;
  nomemo.memoize = false;
  for (int i = 0; i < 40; ++i) {
    FormulaPtr f = mvtest::random_sentence(rng, vocab, *l3, opt);
    CHECK(almost_sure_value(f, l3, vocab, {}, plain) ==
          almost_sure_value(f, l3, vocab, {}, nomemo));
  }
}

TEST_CASE("explanations list one achieved set per quantifier") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}}, false};
  AsymptoticDecider d(l3, vocab);
  d.set_explain(true);
  FormulaPtr f = parse_formula("forall x. exists y. (P(x) & P(y))", vocab, *l3);
  d.almost_sure_value(f);
  // the inner quantifier is re-examined on every outer branch, so there is
  // one leading line for the outer quantifier and at least one for the inner
  REQUIRE(d.explanation().size() >= 2);
  CHECK(d.explanation().front().rfind("forall x", 0) == 0);
  CHECK(d.explanation().back().rfind("exists y", 0) == 0);
}

TEST_CASE("budgets and unsupported profiles are refused") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}}, false};
  std::string deep =
      "forall x1. forall x2. forall x3. forall x4. forall x5. "
      "((((P(x1) & P(x2)) & P(x3)) & P(x4)) & P(x5))";
  FormulaPtr f = parse_formula(deep, vocab, *l3);
  CHECK_THROWS_AS(almost_sure_value(f, l3, vocab), budget_error);

  ConstraintProfile custom;
  custom.kind = ProfileKind::Custom;
  CHECK_THROWS_AS(AsymptoticDecider(l3, vocab, custom), input_error);

  // open formulas are rejected by the sentence-level entry point
  FormulaPtr open = parse_formula("P(x)", vocab, *l3, false);
  CHECK_THROWS_AS(almost_sure_value(open, l3, vocab), input_error);
}

TEST_CASE("generic values respect the description") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}}, false};
  AsymptoticDecider d(l3, vocab);
  // one description variable with P(x1) = 1/2
  CompleteDescription delta{1, {l3->elem("1/2")}};
  FormulaPtr atom = parse_formula("P(x)", vocab, *l3, false);
  CHECK(d.generic_value(atom, delta, {{"x", 0}}) == l3->elem("1/2"));
  FormulaPtr f = parse_formula("exists y. (P(x) & P(y))", vocab, *l3, false);
  CHECK(d.generic_value(f, delta, {{"x", 0}}) == l3->elem("1/2"));
}

TEST_CASE("extension axioms have the documented shape and are almost surely true") {
  auto b2 = algebra_by_name("B2");
  Vocabulary vocab{{{"R", 2}}, true};
  auto frontier = frontier_atoms(vocab, 1);
  REQUIRE(frontier.size() == 3);
  std::vector<Elem> prescribe = {1, 1, 0};  // R(x1,x2), R(x2,x1) true; R(x2,x2) false
  FormulaPtr ext = extension_axiom(1, prescribe, vocab, *b2);
  CHECK(is_sentence(*ext));
  std::string text = print_formula(*ext);
  CHECK(text.find("R^1(x1,x2)") != std::string::npos);
  CHECK(text.find("R^0(x2,x2)") != std::string::npos);
  // decided true over the crisp-identity profile
  Vocabulary cv = classical_vocabulary(vocab, *b2);
  CHECK(almost_sure_value(ext, b2, cv, profile_by_name("crisp-id")) == b2->require_top());
}

TEST_CASE("graph-inconsistent prescriptions are rejected") {
  auto b2 = algebra_by_name("B2");
  Vocabulary vocab{{{"R", 2}}, true};
  // the new element may not have a self-loop under the graph profile
  std::vector<Elem> self_loop = {1, 1, 1};
  CHECK_THROWS_AS(extension_axiom(1, self_loop, vocab, *b2, profile_by_name("graph")),
                  input_error);
  // asymmetric prescriptions contradict symmetry
  std::vector<Elem> asym = {1, 0, 0};
  CHECK_THROWS_AS(extension_axiom(1, asym, vocab, *b2, profile_by_name("graph")), input_error);
}

}  // TEST_SUITE
