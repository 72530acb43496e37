#include <doctest.h>

#include "mvlaw/error.hpp"
#include "mvlaw/evaluate.hpp"
#include "mvlaw/modal.hpp"
#include "mvlaw/parser.hpp"
#include "support/gen.hpp"

using namespace mvlaw;

TEST_SUITE("syntax") {

TEST_CASE("printing and re-parsing is the identity on 1000 random formulas") {
  auto l4 = algebra_by_name("L4");
  Vocabulary vocab{{{"P", 1}, {"R", 2}}, true};
  mvtest::Rng rng(20260823);
  mvtest::FormulaGenOptions opt;
  opt.conns = {"and", "or", "not", "imp", "oplus", "odot"};
  opt.depth = 4;
  opt.quantifiers = 3;
  opt.use_identity = true;
  opt.use_constants = true;
  for (int i = 0; i < 1000; ++i) {
    FormulaPtr f = mvtest::random_sentence(rng, vocab, *l4, opt);
    std::string text = print_formula(*f);
    FormulaPtr g = parse_formula(text, vocab, *l4);
    CHECK(equal(*f, *g));
    CHECK(print_formula(*g) == text);
  }
}

TEST_CASE("operator precedence and associativity") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}, {"Q", 1}, {"S", 1}}, false};
  auto parse = [&](const std::string& s) { return parse_formula(s, vocab, *l3, false); };

  // -> binds loosest and associates to the right
  FormulaPtr f = parse("P(x) -> Q(x) -> S(x)");
  REQUIRE(f->kind == Formula::Kind::Conn);
  CHECK(f->conn == "imp");
  CHECK(f->children[1]->conn == "imp");

  // & binds tighter than |
  FormulaPtr g = parse("P(x) | Q(x) & S(x)");
  CHECK(g->conn == "or");
  CHECK(g->children[1]->conn == "and");

  // not binds tighter than &
  FormulaPtr h = parse("not P(x) & Q(x)");
  CHECK(h->conn == "and");
  CHECK(h->children[0]->conn == "not");

  // parentheses override
  FormulaPtr p = parse("not (P(x) & Q(x))");
  CHECK(p->conn == "not");
  CHECK(p->children[0]->conn == "and");
}

TEST_CASE("pow and times expand to odot/oplus chains") {
  auto l4 = algebra_by_name("L4");
  Vocabulary vocab{{{"P", 1}}, false};
  // n = 1: P(1) can be set to each carrier element in turn
  for (Elem v = 0; v < l4->size(); ++v) {
    auto m = make_structure(1, l4, vocab, {{"P", {v}}});
    FormulaPtr f = parse_formula("pow(P(x),3)", vocab, *l4, false);
    Elem expect = l4->apply2("odot", l4->apply2("odot", v, v), v);
    CHECK(evaluate(m, *f, {{"x", 0}}) == expect);

    FormulaPtr g = parse_formula("times(2, P(x))", vocab, *l4, false);
    CHECK(evaluate(m, *g, {{"x", 0}}) == l4->apply2("oplus", v, v));
  }
}

TEST_CASE("constants, identity, and quantifiers parse") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"R", 2}}, true};
  FormulaPtr f = parse_formula("forall x. exists y. ((x ~ y) & (R(x,y) -> #1/2))", vocab, *l3);
  CHECK(is_sentence(*f));
  CHECK(quantifier_depth(*f) == 2);
}

TEST_CASE("parse errors carry positions and throw input_error") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}}, false};
  // free variable in sentence mode
  CHECK_THROWS_AS(parse_formula("P(x)", vocab, *l3), input_error);
  // arity mismatch
  CHECK_THROWS_AS(parse_formula("forall x. P(x,x)", vocab, *l3), input_error);
  // unknown relation
  CHECK_THROWS_AS(parse_formula("forall x. Q(x)", vocab, *l3), input_error);
  // dangling operator
  CHECK_THROWS_AS(parse_formula("forall x. P(x) &", vocab, *l3), input_error);
  // unknown named connective for this algebra
  auto g3 = algebra_by_name("G3");
  CHECK_THROWS_AS(parse_formula("forall x. oplus(P(x),P(x))", vocab, *g3), input_error);
}

TEST_CASE("vocabulary inference finds relations, arities, and identity") {
  auto l3 = algebra_by_name("L3");
  Vocabulary v = infer_vocabulary("forall x. exists y. (R(x,y) & (x ~ y) & P(x))", *l3);
  CHECK(v.has_crisp_identity);
  REQUIRE(v.find("R") != nullptr);
  CHECK(v.at("R").arity == 2);
  CHECK(v.at("P").arity == 1);
  CHECK(v.find("oplus") == nullptr);
  // inconsistent arities are an error
  CHECK_THROWS_AS(infer_vocabulary("forall x. (P(x) & P(x,x))", *l3), input_error);
}

TEST_CASE("terms parse with the same operator syntax") {
  auto l4 = algebra_by_name("L4");
  TermPtr t = parse_term("not v | odot(v,v)", *l4);
  auto vars = term_variables(*t);
  REQUIRE(vars.size() == 1);
  CHECK(vars[0] == "v");
  REQUIRE(t->kind == Term::Kind::App);
  CHECK(t->conn == "or");

  TermPtr u = parse_term("times(2, pow(v,3) | w)", *l4);
  CHECK(term_variables(*u).size() == 2);
}

TEST_CASE("modal formulas parse and translate into one-variable sentences") {
  auto l3 = algebra_by_name("L3");
  ModalPtr m = parse_modal("box (p -> dia p)", *l3);
  CHECK(fully_modal(*m));
  FormulaPtr f = s5_translate(*m);
  CHECK(is_sentence(*f));
  Vocabulary v = s5_vocabulary(*m);
  CHECK(v.relations.size() == 1);
  CHECK(v.relations[0].arity == 1);

  ModalPtr open = parse_modal("p & box p", *l3);
  CHECK(!fully_modal(*open));
}

}  // TEST_SUITE
