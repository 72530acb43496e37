#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "mvlaw/error.hpp"
#include "mvlaw/evaluate.hpp"
#include "mvlaw/json_io.hpp"
#include "mvlaw/parser.hpp"
#include "mvlaw/term.hpp"
#include "mvlaw/translate.hpp"
#include "support/gen.hpp"

using namespace mvlaw;

namespace {

WeightedStructure permuted(const WeightedStructure& m, const std::vector<int>& perm) {
  std::map<std::string, std::vector<Elem>> tables;
  for (const auto& rel : m.vocab.relations) {
    std::vector<Elem> t(table_size(m.n, rel.arity));
    std::vector<int> idx(rel.arity, 0), img(rel.arity, 0);
    for (std::size_t cell = 0; cell < t.size(); ++cell) {
      for (int i = 0; i < rel.arity; ++i) img[i] = perm[idx[i]];
      t[m.cell_index(img)] = m.get(rel.name, idx);
      int i = rel.arity - 1;
      while (i >= 0 && ++idx[i] == m.n) idx[i--] = 0;
    }
    tables[rel.name] = std::move(t);
  }
  return make_structure(m.n, m.algebra, m.vocab, std::move(tables));
}

}  // namespace

TEST_SUITE("semantics") {

TEST_CASE("hand-computed single-point example") {
  auto l4 = algebra_by_name("L4");
  Vocabulary vocab{{{"P", 1}}, false};
  // domain of one element with P = 2/3
  auto m = make_structure(1, l4, vocab, {{"P", {l4->elem("2/3")}}});
  FormulaPtr f = parse_formula("forall x. oplus(pow(P(x),3), not P(x))", vocab, *l4);
  CHECK(l4->label(evaluate(m, *f)) == "1/3");
}

TEST_CASE("two-valued evaluation agrees with the independent classical route") {
  auto b2 = algebra_by_name("B2");
  Vocabulary vocab{{{"P", 1}, {"R", 2}}, true};
  mvtest::Rng rng(7);
  mvtest::FormulaGenOptions opt;
  opt.conns = {"and", "or", "not", "imp"};
  opt.quantifiers = 2;
  opt.use_identity = true;
  for (int i = 0; i < 500; ++i) {
    int n = 1 + mvtest::pick(rng, 4);
    auto m = mvtest::random_structure(rng, n, b2, vocab);
    FormulaPtr f = mvtest::random_sentence(rng, vocab, *b2, opt);
    bool classical = classical_evaluate(m, *f);
    CHECK((evaluate(m, *f) == b2->require_top()) == classical);
  }
}

TEST_CASE("sentence values are invariant under domain permutations") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}, {"R", 2}}, false};
  mvtest::Rng rng(11);
  mvtest::FormulaGenOptions opt;
  opt.conns = {"and", "or", "not", "imp", "oplus"};
  opt.quantifiers = 2;
  for (int i = 0; i < 100; ++i) {
    int n = 2 + mvtest::pick(rng, 4);
    auto m = mvtest::random_structure(rng, n, l3, vocab);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    FormulaPtr f = mvtest::random_sentence(rng, vocab, *l3, opt);
    CHECK(evaluate(m, *f) == evaluate(permuted(m, perm), *f));
  }
}

TEST_CASE("forall is below exists in the lattice order") {
  auto l4 = algebra_by_name("L4");
  Vocabulary vocab{{{"P", 1}}, false};
  mvtest::Rng rng(13);
  mvtest::FormulaGenOptions opt;
  opt.quantifiers = 1;
  for (int i = 0; i < 100; ++i) {
    auto m = mvtest::random_structure(rng, 1 + mvtest::pick(rng, 5), l4, vocab);
    FormulaPtr body = mvtest::random_matrix(rng, vocab, *l4, opt, 3);
    Elem all = evaluate(m, *Formula::quant(true, "x1", body));
    Elem some = evaluate(m, *Formula::quant(false, "x1", body));
    CHECK(l4->leq(all, some));
  }
}

TEST_CASE("the unary fast path matches the general evaluator") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}, {"Q", 1}}, false};
  mvtest::Rng rng(17);
  mvtest::FormulaGenOptions opt;
  opt.quantifiers = 2;
  for (int i = 0; i < 100; ++i) {
    auto m = mvtest::random_structure(rng, 3 + mvtest::pick(rng, 20), l3, vocab);
    FormulaPtr f = mvtest::random_sentence(rng, vocab, *l3, opt);
    Elem fast = evaluate(m, *f);
    // declaring crisp identity disables the distinct-row shortcut without
    // changing the meaning of an identity-free sentence
    WeightedStructure slow = m;
    slow.vocab.has_crisp_identity = true;
    CHECK(fast == evaluate(slow, *f));
  }
}

TEST_CASE("crisp identity is the diagonal") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}}, true};
  mvtest::Rng rng(1);
  auto m = mvtest::random_structure(rng, 3, l3, vocab);
  FormulaPtr refl = parse_formula("forall x. (x ~ x)", vocab, *l3);
  CHECK(evaluate(m, *refl) == l3->require_top());
  FormulaPtr all = parse_formula("forall x. forall y. (x ~ y)", vocab, *l3);
  CHECK(evaluate(m, *all) == l3->require_bottom());
}

TEST_CASE("structures validate their inputs") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"R", 2}}, false};
  CHECK_THROWS_AS(make_structure(0, l3, vocab, {{"R", {}}}), input_error);
  CHECK_THROWS_AS(make_structure(2, l3, vocab, {{"R", {0, 0, 0}}}), input_error);  // short table
  CHECK_THROWS_AS(make_structure(2, l3, vocab, {{"R", {0, 0, 0, 5}}}), input_error);  // bad value
  CHECK_THROWS_AS(make_structure(2, l3, vocab, {{"S", {0, 0, 0, 0}}}), input_error);  // unknown
}

TEST_CASE("graph profile violations are reported with witnesses") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"R", 2}}, false};
  // diagonal not bottom and an asymmetric pair
  auto m = make_structure(2, l3, vocab, {{"R", {1, 2, 0, 0}}});
  auto bad = check_constraints(m, profile_by_name("graph"));
  CHECK(bad.size() >= 2);
  auto good = make_structure(2, l3, vocab, {{"R", {0, 2, 2, 0}}}, profile_by_name("graph"));
  CHECK(check_constraints(good, profile_by_name("graph")).empty());
}

TEST_CASE("structure JSON round-trips") {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}, {"R", 2}}, false};
  mvtest::Rng rng(19);
  auto m = mvtest::random_structure(rng, 3, l3, vocab);
  auto back = structure_from_json_text(structure_to_json_text(m, "L3"));
  CHECK(back.n == m.n);
  CHECK(back.tables == m.tables);
}

TEST_CASE("term evaluation and ranges match the oracle") {
  auto l3 = algebra_by_name("L3");
  mvtest::Rng rng(23);
  std::vector<std::string> conns = {"and", "or", "not", "imp", "oplus", "odot"};
  for (int i = 0; i < 200; ++i) {
    TermPtr t = mvtest::random_term(rng, *l3, conns, 2, 3);
    auto vars = term_variables(*t);
    // exhaustive oracle for the extrema
    Elem lo = l3->require_top(), hi = l3->require_bottom();
    std::vector<Elem> point(vars.size(), 0);
    for (;;) {
      std::map<std::string, Elem> asg;
      for (std::size_t j = 0; j < vars.size(); ++j) asg[vars[j]] = point[j];
      Elem v = mvtest::oracle_eval_term(*l3, *t, asg);
      CHECK(v == eval_term(*l3, *t, asg));
      lo = l3->meet(lo, v);
      hi = l3->join(hi, v);
      std::size_t j = 0;
      while (j < point.size() && ++point[j] == l3->size()) point[j++] = 0;
      if (j == point.size()) break;
    }
    TermRange r = term_range_finite(*l3, *t);
    CHECK(r.min == lo);
    CHECK(r.max == hi);
  }
}

}  // TEST_SUITE
