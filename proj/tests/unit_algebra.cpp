#include <doctest.h>

#include "mvlaw/algebra.hpp"
#include "mvlaw/demorgan.hpp"
#include "mvlaw/error.hpp"
#include "mvlaw/json_io.hpp"

using namespace mvlaw;

namespace {

// Independent oracle for the four negation constants: exhaustive sup/inf of
// the defining one-variable expressions.
DeMorganConstants brute_constants(const LatticeAlgebra& a) {
  Elem eps = a.require_bottom(), epsp = a.require_bottom();
  Elem del = a.require_top(), delp = a.require_top();
  for (Elem v = 0; v < a.size(); ++v) {
    Elem nv = a.apply1("not", v), nnv = a.apply1("not", nv);
    eps = a.join(eps, a.meet(v, nv));
    epsp = a.join(epsp, a.meet(nv, nnv));
    del = a.meet(del, a.join(v, nv));
    delp = a.meet(delp, a.join(nv, nnv));
  }
  return {eps, epsp, del, delp};
}

// Two-element algebra whose negation is the identity map: violates !1 = 0.
AlgebraPtr broken_negation() {
  AlgebraSpec spec;
  spec.carrier = {"0", "1"};
  spec.ops["and"] = {2, {0, 0, 0, 1}};
  spec.ops["or"] = {2, {0, 1, 1, 1}};
  spec.ops["not"] = {1, {0, 1}};
  spec.bottom = "0";
  spec.top = "1";
  return validate_algebra(spec);
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("builtin chains have the expected shape") {
  auto b2 = algebra_by_name("B2");
  CHECK(b2->size() == 2);
  CHECK(b2->label(b2->require_bottom()) == "0");
  CHECK(b2->label(b2->require_top()) == "1");

  auto l4 = algebra_by_name("L4");
  CHECK(l4->size() == 4);
  CHECK(l4->label(1) == "1/3");
  REQUIRE(l4->value(1).has_value());
  CHECK(*l4->value(1) == Rational(1, 3));

  auto g4 = algebra_by_name("G4");
  CHECK(g4->size() == 4);
  CHECK(g4->label(1) == "g1");
  CHECK(g4->label(2) == "g2");
}

TEST_CASE("MV-chain equations hold exhaustively") {
  for (int n = 1; n <= 5; ++n) {
    auto a = make_mv_chain(n);
    for (Elem x = 0; x < a->size(); ++x) {
      CHECK(a->apply1("not", a->apply1("not", x)) == x);  // involution
      for (Elem y = 0; y < a->size(); ++y) {
        // oplus/odot are De Morgan duals
        Elem lhs = a->apply1("not", a->apply2("oplus", x, y));
        Elem rhs = a->apply2("odot", a->apply1("not", x), a->apply1("not", y));
        CHECK(lhs == rhs);
        // imp(x, y) = not x oplus y
        CHECK(a->apply2("imp", x, y) == a->apply2("oplus", a->apply1("not", x), y));
      }
    }
  }
}

TEST_CASE("Goedel negation is imp into bottom") {
  auto g = make_godel_chain(3);
  for (Elem x = 0; x < g->size(); ++x)
    CHECK(g->apply1("not", x) == g->apply2("imp", x, g->require_bottom()));
  // double negation collapses to a two-valued map on a Goedel chain
  CHECK(g->apply1("not", g->apply1("not", 1)) == g->require_top());
  CHECK(g->apply1("not", g->apply1("not", 0)) == g->require_bottom());
}

TEST_CASE("a non-distributive pentagon lattice is still a valid algebra") {
  // N5: 0 < a < c < 1 with b incomparable to both a and c
  AlgebraSpec spec;
  spec.carrier = {"0", "a", "b", "c", "1"};
  spec.ops["and"] = {2, {0, 0, 0, 0, 0,
                         0, 1, 0, 1, 1,
                         0, 0, 2, 0, 2,
                         0, 1, 0, 3, 3,
                         0, 1, 2, 3, 4}};
  spec.ops["or"] = {2, {0, 1, 2, 3, 4,
                        1, 1, 4, 3, 4,
                        2, 4, 2, 4, 4,
                        3, 3, 4, 3, 4,
                        4, 4, 4, 4, 4}};
  spec.bottom = "0";
  spec.top = "1";
  CHECK(algebra_diagnostics(spec).empty());
  auto a = validate_algebra(spec);
  // distributivity genuinely fails: a | (b & c) = a, (a | b) & (a | c) = c
  CHECK(a->join(1, a->meet(2, 3)) == 1);
  CHECK(a->meet(a->join(1, 2), a->join(1, 3)) == 3);
}

TEST_CASE("invalid tables are rejected with diagnostics") {
  AlgebraSpec spec;
  spec.carrier = {"0", "1"};
  spec.ops["and"] = {2, {0, 1, 0, 1}};  // not commutative, not idempotent-compatible
  spec.ops["or"] = {2, {0, 1, 1, 1}};
  CHECK(!algebra_diagnostics(spec).empty());
  CHECK_THROWS_AS(validate_algebra(spec), input_error);
}

TEST_CASE("product is componentwise and strict about signatures") {
  auto l3 = algebra_by_name("L3");
  auto p = product(*l3, *l3);
  CHECK(p->size() == 9);
  // (1/2, 0) and (0, 1) meet componentwise
  Elem x = p->elem("(1/2,0)"), y = p->elem("(0,1)");
  CHECK(p->label(p->meet(x, y)) == "(0,0)");
  CHECK(p->label(p->join(x, y)) == "(1/2,1)");
  CHECK(p->label(p->apply1("not", x)) == "(1/2,1)");

  auto g3 = algebra_by_name("G3");  // no oplus/odot
  CHECK_THROWS_AS(product(*g3, *l3), input_error);
}

TEST_CASE("named products fall back to the common signature") {
  auto p = algebra_by_name("prod(G3,L4)");
  CHECK(p->size() == 12);
  CHECK(p->has_op("not"));
  CHECK(p->has_op("imp"));
  CHECK(!p->has_op("oplus"));
  // nested names resolve too
  CHECK(algebra_by_name("prod(B2,prod(G3,L4))")->size() == 24);
}

TEST_CASE("reduct keeps the lattice and the requested extras") {
  auto l4 = algebra_by_name("L4");
  auto r = reduct(*l4, {"not"});
  CHECK(r->has_op("and"));
  CHECK(r->has_op("or"));
  CHECK(r->has_op("not"));
  CHECK(!r->has_op("oplus"));
  CHECK_THROWS_AS(reduct(*l4, {"xyz"}), input_error);
}

TEST_CASE("negation conditions hold on chains and fail where they should") {
  for (const char* name : {"B2", "L3", "L4", "L5", "G3", "G4", "G5", "prod(G3,L4)"}) {
    auto a = algebra_by_name(name);
    CHECK(demorgan_check(*a).ok());
  }
  CHECK(!demorgan_check(*broken_negation()).ok());
  CHECK_THROWS_AS(demorgan_constants(*broken_negation()), input_error);
}

TEST_CASE("products satisfy the negation conditions iff both factors do") {
  auto good = reduct(*algebra_by_name("B2"), {"not"});  // same signature as the bad one
  auto bad = broken_negation();
  CHECK(demorgan_check(*product(*good, *good)).ok());
  CHECK(!demorgan_check(*product(*good, *bad)).ok());
  CHECK(!demorgan_check(*product(*bad, *good)).ok());
  CHECK(!demorgan_check(*product(*bad, *bad)).ok());
}

TEST_CASE("negation constants match the brute-force sup/inf oracle") {
  for (const char* name : {"B2", "L3", "L4", "L5", "L6", "G3", "G4", "G5", "prod(G3,L4)"}) {
    auto a = algebra_by_name(name);
    auto c = demorgan_constants(*a);
    auto o = brute_constants(*a);
    CHECK(c.eps == o.eps);
    CHECK(c.eps_prime == o.eps_prime);
    CHECK(c.delta == o.delta);
    CHECK(c.delta_prime == o.delta_prime);
  }
  // spot values on the three-element chains
  auto l3 = algebra_by_name("L3");
  auto cl = demorgan_constants(*l3);
  CHECK(l3->label(cl.eps) == "1/2");
  CHECK(l3->label(cl.delta) == "1/2");
  auto g3 = algebra_by_name("G3");
  auto cg = demorgan_constants(*g3);
  CHECK(g3->label(cg.eps) == "0");
  CHECK(g3->label(cg.delta) == "g1");
}

TEST_CASE("algebra JSON round-trips") {
  auto l4 = algebra_by_name("L4");
  auto back = algebra_from_json_text(algebra_to_json_text(*l4));
  CHECK(back->size() == l4->size());
  for (Elem x = 0; x < l4->size(); ++x) {
    CHECK(back->label(x) == l4->label(x));
    for (Elem y = 0; y < l4->size(); ++y) {
      CHECK(back->meet(x, y) == l4->meet(x, y));
      CHECK(back->apply2("oplus", x, y) == l4->apply2("oplus", x, y));
    }
  }
  CHECK(back->require_bottom() == l4->require_bottom());
  CHECK(*back->value(1) == Rational(1, 3));
}

}  // TEST_SUITE
