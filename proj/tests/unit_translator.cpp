#include <doctest.h>

#include "mvlaw/error.hpp"
#include "mvlaw/evaluate.hpp"
#include "mvlaw/parser.hpp"
#include "mvlaw/translate.hpp"
#include "support/gen.hpp"

using namespace mvlaw;

namespace {

// ||f||^M = a  must hold exactly when the transformed model satisfies the
// a-indexed translation, for every carrier element a.
void check_key_equivalence(const WeightedStructure& m, const FormulaPtr& f,
                           const std::map<std::string, int>& asg = {}) {
  const LatticeAlgebra& a = *m.algebra;
  TranslationBundle bundle = translate(f, a, m.vocab);
  WeightedStructure classical = transform_model(m);
  Elem value = evaluate(m, *f, asg);
  for (Elem e = 0; e < a.size(); ++e) {
    bool holds = classical_evaluate(classical, *bundle.per_value[e], asg);
    CHECK(holds == (value == e));
  }
}

}  // namespace

TEST_SUITE("translator") {

TEST_CASE("classical relation naming and vocabulary") {
  auto l3 = algebra_by_name("L3");
  CHECK(classical_relation_name("R", "1/2") == "R^1/2");
  Vocabulary vocab{{{"P", 1}, {"R", 2}}, true};
  Vocabulary cv = classical_vocabulary(vocab, *l3);
  CHECK(cv.relations.size() == 6);
  CHECK(cv.has_crisp_identity);
  CHECK(cv.at("P^0").arity == 1);
  CHECK(cv.at("R^1/2").arity == 2);
}

TEST_CASE("documented single-atom translation") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}}, false};
  FormulaPtr f = parse_formula("not P(x)", vocab, *l3, false);
  TranslationBundle b = translate(f, *l3, vocab);
  CHECK(print_formula(*b.per_value[l3->elem("0")]) == "P^1(x)");
  CHECK(print_formula(*b.per_value[l3->elem("1/2")]) == "P^1/2(x)");
  CHECK(print_formula(*b.per_value[l3->elem("1")]) == "P^0(x)");
}

TEST_CASE("key equivalence, exhaustive over one-element models") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}, {"R", 2}}, false};
  mvtest::Rng rng(101);
  mvtest::FormulaGenOptions opt;
  opt.conns = {"and", "or", "not", "imp", "oplus"};
  opt.quantifiers = 2;
  std::vector<FormulaPtr> formulas;
  for (int i = 0; i < 60; ++i) formulas.push_back(mvtest::random_sentence(rng, vocab, *l3, opt));
  // all 9 single-element models: P(1) and R(1,1) range over the carrier
  for (Elem p = 0; p < 3; ++p)
    for (Elem r = 0; r < 3; ++r) {
      auto m = make_structure(1, l3, vocab, {{"P", {p}}, {"R", {r}}});
      for (const auto& f : formulas) check_key_equivalence(m, f);
    }
}

TEST_CASE("key equivalence, randomized two-element models") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}, {"R", 2}}, false};
  mvtest::Rng rng(103);
  mvtest::FormulaGenOptions opt;
  opt.conns = {"and", "or", "not", "imp", "oplus"};
  opt.quantifiers = 2;
  for (int i = 0; i < 500; ++i) {
    auto m = mvtest::random_structure(rng, 2, l3, vocab);
    check_key_equivalence(m, mvtest::random_sentence(rng, vocab, *l3, opt));
  }
}

TEST_CASE("key equivalence with free variables and crisp identity") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}}, true};
  mvtest::Rng rng(107);
  mvtest::FormulaGenOptions opt;
  opt.quantifiers = 2;
  opt.use_identity = true;
  for (int i = 0; i < 100; ++i) {
    auto m = mvtest::random_structure(rng, 3, l3, vocab);
    FormulaPtr matrix = mvtest::random_matrix(rng, vocab, *l3, opt, 3);
    FormulaPtr f = Formula::quant(false, "x2", matrix);  // x1 stays free
    for (int v = 0; v < 3; ++v) check_key_equivalence(m, f, {{"x1", v}});
  }
}

TEST_CASE("model transform and its inverse are mutually inverse") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}, {"R", 2}}, false};
  mvtest::Rng rng(109);
  for (int i = 0; i < 20; ++i) {
    auto m = mvtest::random_structure(rng, 3, l3, vocab);
    auto back = inverse_transform(transform_model(m), l3, vocab);
    CHECK(back.tables == m.tables);
  }
}

TEST_CASE("inverse transform rejects non-partitions") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}}, false};
  auto m = make_structure(2, l3, vocab, {{"P", {0, 2}}});
  WeightedStructure classical = transform_model(m);
  // break coverage: element 0 claims no value at all
  classical.tables["P^0"][0] = 0;
  CHECK_THROWS_AS(inverse_transform(classical, l3, vocab), input_error);
  // break exclusivity: element 1 claims two values
  classical.tables["P^0"][0] = 1;
  classical.tables["P^1/2"][1] = 1;
  CHECK_THROWS_AS(inverse_transform(classical, l3, vocab), input_error);
}

TEST_CASE("partition axioms hold in every transformed model") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}, {"R", 2}}, false};
  auto axioms = partition_axioms(vocab, *l3);
  CHECK(axioms.size() == 4);  // coverage and exclusivity per relation
  mvtest::Rng rng(113);
  for (int i = 0; i < 20; ++i) {
    auto m = mvtest::random_structure(rng, 3, l3, vocab);
    WeightedStructure classical = transform_model(m);
    for (const auto& ax : axioms) CHECK(classical_evaluate(classical, *ax));
  }
}

TEST_CASE("graph partition axioms hold on transformed graph models") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"R", 2}}, false};
  auto axioms = partition_axioms(vocab, *l3, profile_by_name("graph"));
  CHECK(axioms.size() > 2);
  auto m = make_structure(3, l3, vocab, {{"R", {0, 2, 1, 2, 0, 0, 1, 0, 0}}},
                          profile_by_name("graph"));
  WeightedStructure classical = transform_model(m);
  for (const auto& ax : axioms) CHECK(classical_evaluate(classical, *ax));
}

TEST_CASE("partition axioms pass the parametric shape check") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}, {"R", 2}}, false};
  for (const auto& profile : {profile_by_name("none"), profile_by_name("graph")})
    for (const auto& ax : partition_axioms(vocab, *l3, profile))
      CHECK(check_parametric(ax).ok);
}

TEST_CASE("the parametric check rejects existentials and partial atoms") {
  auto b2 = algebra_by_name("B2");
  Vocabulary vocab{{{"R", 2}}, true};
  // existential quantifier
  FormulaPtr ex = parse_formula("forall x. exists y. R(x,y)", vocab, *b2);
  CHECK(!check_parametric(ex).ok);
  // an atom that drops a quantified variable
  FormulaPtr partial = parse_formula("forall x. forall y. R(x,x)", vocab, *b2);
  auto verdict = check_parametric(partial);
  CHECK(!verdict.ok);
  CHECK(!verdict.offending.empty());
  // distinctness-guarded universal sentences are fine
  FormulaPtr guarded =
      parse_formula("forall x. forall y. (not (x ~ y) -> R(x,y))", vocab, *b2);
  CHECK(check_parametric(guarded).ok);
}

TEST_CASE("translation refuses oversized carriers") {
  // a carrier larger than the subset-enumeration budget
  Limits limits;
  limits.max_carrier = 3;
  auto l5 = algebra_by_name("L5");
  Vocabulary vocab{{{"P", 1}}, false};
  FormulaPtr f = parse_formula("forall x. P(x)", vocab, *l5);
  CHECK_THROWS_AS(translate(f, *l5, vocab, limits), budget_error);
}

}  // TEST_SUITE
