#include <random>

#include "doctest.h"
#include "support/random_expr.hpp"

using namespace painleve;
using namespace testsupport;

namespace {
MultiPoly P(const char* name) { return MultiPoly::var(Var::of(name)); }
}  // namespace

TEST_CASE("normalize cancels common factors") {
  MultiPoly x = P("x");
  RatExpr r = RatExpr::normalize(x * x - MultiPoly(1), x - MultiPoly(1));
  CHECK(r.num() == x + MultiPoly(1));
  CHECK(r.den().is_one());

  Scalar i = Scalar::imag_unit();
  RatExpr g = RatExpr::normalize(x * x + MultiPoly(1), x - MultiPoly(i));
  CHECK(g.num() == x + MultiPoly(i));
  CHECK(g.den().is_one());

  CHECK_THROWS_AS(RatExpr::normalize(x, MultiPoly()), ZeroDenominator);
}

TEST_CASE("normalize makes the denominator monic") {
  MultiPoly x = P("x");
  RatExpr r = RatExpr::normalize(MultiPoly(3), MultiPoly(2) * x + MultiPoly(4));
  CHECK(r.den() == x + MultiPoly(2));
  CHECK(r.num() == MultiPoly(Scalar::rational(3, 2)));
}

TEST_CASE("composing the reflection x -> x + a2/y with itself cancels") {
  // The reflection also sends a2 -> -a2; applying it twice by hand-substitution
  // must give back x.
  Var x = Var::of("x"), y = Var::of("y"), a2 = Var::of("a2");
  RatExpr image = RatExpr::var(x) + RatExpr::var(a2) / RatExpr::var(y);
  Bindings first{{x, image}, {a2, -RatExpr::var(a2)}};
  RatExpr twice = image.substitute(first);
  CHECK(twice == RatExpr::var(x));
  CHECK(twice.den().is_one());
}

TEST_CASE("substitute clears binding denominators") {
  Var x = Var::of("x");
  RatExpr e = rx("x + y");
  RatExpr s = e.substitute({{x, rx("1/X")}});
  CHECK(s.num() == P("X") * P("y") + MultiPoly(1));
  CHECK(s.den() == P("X"));
  // Unbound variables pass through; the empty binding is the identity.
  CHECK(e.substitute({}) == e);
  CHECK_THROWS_AS(rx("1/(x-y)").substitute({{x, rx("y")}}), ZeroDenominator);
}

TEST_CASE("substitution is simultaneous") {
  Var x = Var::of("x"), y = Var::of("y");
  RatExpr e = rx("x - 2*y");
  CHECK(e.substitute({{x, rx("y")}, {y, rx("x")}}) == rx("y - 2*x"));
}

TEST_CASE("diff examples") {
  Var x = Var::of("x"), y = Var::of("y");
  CHECK(rx("x^3*y^2").diff(y) == rx("2*x^3*y"));
  RatExpr d = rx("1/(x-1)").diff(x);
  CHECK(d.num() == MultiPoly(-1));
  CHECK(d.den() == P("x") * P("x") - MultiPoly(2) * P("x") + MultiPoly(1));
  CHECK(rx("x/t").diff(Var::of("z")).is_zero());
}

TEST_CASE("diff obeys the Leibniz rule") {
  std::mt19937_64 rng(21);
  auto vs = vars_of({"x", "y", "t"});
  Var x = Var::of("x");
  for (int k = 0; k < 40; ++k) {
    RatExpr a = random_ratexpr(rng, vs, 3, 2), b = random_ratexpr(rng, vs, 3, 2);
    CHECK((a * b).diff(x) == a.diff(x) * b + a * b.diff(x));
  }
}

TEST_CASE("normalize is canonical under a common multiplier") {
  std::mt19937_64 rng(22);
  auto vs = vars_of({"x", "y", "t", "a0"});
  for (int k = 0; k < 40; ++k) {
    MultiPoly p = random_poly(rng, vs, 3, 2), q = random_nonzero_poly(rng, vs, 3, 2);
    MultiPoly r = random_nonzero_poly(rng, vs, 2, 2, k % 4 == 0);
    CHECK(RatExpr::normalize(p * r, q * r) == RatExpr::normalize(p, q));
  }
}

TEST_CASE("field operations on rational functions") {
  std::mt19937_64 rng(23);
  auto vs = vars_of({"x", "y", "t"});
  for (int k = 0; k < 30; ++k) {
    RatExpr a = random_ratexpr(rng, vs, 3, 2), b = random_ratexpr(rng, vs, 3, 2), c = random_ratexpr(rng, vs, 2, 2);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a - a == RatExpr());
  }
}

TEST_CASE("infix reader") {
  CHECK(rx("-x^2") == -(rx("x") * rx("x")));
  CHECK(rx("2^-1") == RatExpr::rational(1, 2));
  CHECK(rx("x^(-2)") == rx("1/x^2"));
  CHECK(rx("(1+i)*(1-i)") == RatExpr(2));
  CHECK(rx("sqrt2*sqrt2") == RatExpr(2));
  CHECK_THROWS_AS(rx("x +"), ParseError);
  CHECK_THROWS_AS(rx("2x"), ParseError);
  CHECK_THROWS_AS(rx("1/0"), ParseError);
}

TEST_CASE("s-expression printing") {
  CHECK(rx("0").to_string() == "0");
  CHECK(rx("3/4").to_string() == "3/4");
  CHECK(rx("x^2*y").to_string() == "(* (^ x 2) y)");
  CHECK(rx("1/x").to_string() == "(^ x -1)");
  CHECK(rx("i").to_string() == "i");
  CHECK(rx("i*sqrt2").to_string() == "(* i sqrt2)");
  CHECK(rx("2 - 3*i").to_string() == "(+ 2 (* -3 i))");
}

TEST_CASE("s-expression round trip is the identity on canonical forms") {
  std::mt19937_64 rng(24);
  auto vs = vars_of({"x", "y", "t", "eps", "a2"});
  for (int k = 0; k < 60; ++k) {
    MultiPoly n = random_poly(rng, vs, 4, 3, k % 2 == 0), d = random_nonzero_poly(rng, vs, 3, 2, k % 3 == 0);
    RatExpr e = RatExpr::normalize(n, d);
    std::string s = e.to_string();
    RatExpr back = parse_sexpr(s);
    CHECK(back == e);
    CHECK(back.to_string() == s);
  }
  CHECK_THROWS_AS(parse_sexpr("(+ x"), ParseError);
  CHECK_THROWS_AS(parse_sexpr("(% x y)"), ParseError);
  CHECK_THROWS_AS(parse_sexpr("(^ x 1/2)"), ParseError);
}

TEST_CASE("equality in exact and probabilistic modes") {
  auto both = [](const RatExpr& a, const RatExpr& b) {
    bool e = equal(a, b, EqualityMode::exact());
    bool p = equal(a, b, EqualityMode::probabilistic(5, 6));
    CHECK(e == p);
    return e;
  };
  CHECK(both(rx("(x^2-1)/(x-1)"), rx("x+1")));
  CHECK(both(rx("(x+y)^2"), rx("x^2+2*x*y+y^2")));
  CHECK_FALSE(both(rx("(x+y)^2"), rx("x^2+y^2")));
}

TEST_CASE("probabilistic equality agrees with exact equality on a random corpus") {
  std::mt19937_64 gen(25);
  std::mt19937_64 eval_rng(26);
  auto vs = vars_of({"x", "y", "t", "a1"});
  int identities = 0, non_identities = 0;
  for (int k = 0; k < 120; ++k) {
    RatExpr a = random_ratexpr(gen, vs, 3, 2), b = random_ratexpr(gen, vs, 3, 2);
    // Identity assembled along a different route than the left-hand side.
    RatExpr lhs = (a + b) * (a - b);
    RatExpr rhs = a * a - b * b;
    if (k % 2 == 1) {
      rhs += RatExpr(random_nonzero_poly(gen, vs, 1, 2)) / RatExpr(random_nonzero_poly(gen, vs, 2, 1));
    }
    bool exact = equal(lhs, rhs, EqualityMode::exact());
    bool prob = probably_equal(lhs, rhs, eval_rng, 4);
    CHECK(exact == prob);
    (exact ? identities : non_identities) += 1;
  }
  CHECK(identities >= 50);
  CHECK(non_identities >= 50);
}
