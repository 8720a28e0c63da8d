#include <random>

#include "doctest.h"
#include "support/random_expr.hpp"

using namespace painleve;
using namespace testsupport;

TEST_CASE("scalar multiplication table") {
  Scalar i = Scalar::imag_unit(), s = Scalar::sqrt2();
  CHECK(i * i == Scalar(-1));
  CHECK(s * s == Scalar(2));
  CHECK((i * s) * (i * s) == Scalar(-2));
  CHECK((i * s).d() == 1);
  CHECK(Scalar::rational(6, -4) == Scalar::rational(-3, 2));
  CHECK(Scalar::rational(6, -4).a().get_den() == 2);
}

TEST_CASE("scalar field axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    Scalar a = Scalar::random(rng, true), b = Scalar::random(rng, true), c = Scalar::random(rng, true);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    CHECK(a - a == Scalar(0));
  }
}

TEST_CASE("scalar complex image and residues are homomorphic") {
  std::mt19937_64 rng(12);
  const ModContext& ctx = ModContext::standard();
  CHECK(mulmod(ctx.i, ctx.i, ctx.p) == ctx.p - 1);
  CHECK(mulmod(ctx.sqrt2, ctx.sqrt2, ctx.p) == 2);
  for (int k = 0; k < 50; ++k) {
    Scalar a = Scalar::random(rng, true), b = Scalar::random(rng, true);
    auto ma = a.mod_p(ctx), mb = b.mod_p(ctx), mab = (a * b).mod_p(ctx);
    REQUIRE(ma);
    REQUIRE(mb);
    REQUIRE(mab);
    CHECK(mulmod(*ma, *mb, ctx.p) == *mab);
    auto za = a.to_complex(), zb = b.to_complex(), zab = (a * b).to_complex();
    CHECK(std::abs(za * zb - zab) <= 1e-9 * (1 + std::abs(zab)));
  }
}

TEST_CASE("polynomial arithmetic basics") {
  MultiPoly x = MultiPoly::var(Var::of("x")), y = MultiPoly::var(Var::of("y"));
  MultiPoly sq = (x + y) * (x + y);
  CHECK(sq == x * x + MultiPoly(2) * x * y + y * y);
  CHECK(sq.size() == 3);
  CHECK(sq.total_degree() == 2);
  CHECK((sq - sq).is_zero());
  CHECK(sq / (x + y) == x + y);
  CHECK_FALSE((x * x + MultiPoly(1)).divide_exact(x + MultiPoly(1)));
  CHECK_THROWS_AS(x / y, NotDivisible);
  CHECK(sq.diff(Var::of("x")) == MultiPoly(2) * x + MultiPoly(2) * y);
  auto cs = sq.coefficients(Var::of("x"));
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == y * y);
  CHECK(MultiPoly::from_coefficients(cs, Var::of("x")) == sq);
}

TEST_CASE("grlex order puts higher total degree first, then earlier variables") {
  MultiPoly x = MultiPoly::var(Var::of("x")), y = MultiPoly::var(Var::of("y"));
  MultiPoly p = y + x * y + x + MultiPoly(1) + y * y * y;
  const auto& t = p.terms();
  REQUIRE(t.size() == 5);
  CHECK(t[0].m.deg == 3);
  CHECK(t[1].m.deg == 2);
  CHECK(t[2].m.exp(Var::of("x")) == 1);
  CHECK(t[3].m.exp(Var::of("y")) == 1);
  CHECK(t[4].m.is_one());
}

TEST_CASE("polynomial ring axioms on random inputs") {
  std::mt19937_64 rng(13);
  auto vs = vars_of({"x", "y", "t", "a1"});
  for (int k = 0; k < 40; ++k) {
    MultiPoly a = random_poly(rng, vs, 4, 3, true), b = random_poly(rng, vs, 4, 3), c = random_poly(rng, vs, 3, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
}

TEST_CASE("gcd recovers a planted common factor") {
  std::mt19937_64 rng(14);
  auto all = vars_of({"x", "y", "z", "t"});
  auto left = vars_of({"x", "y"});
  auto right = vars_of({"z", "t"});
  for (int k = 0; k < 30; ++k) {
    MultiPoly f = random_nonzero_poly(rng, all, 3, 2, k % 3 == 0);
    // Disjoint variable sets plus a constant term: cofactors are coprime.
    MultiPoly g = random_poly(rng, left, 3, 2) + MultiPoly(1);
    MultiPoly h = random_poly(rng, right, 3, 2) + MultiPoly(2);
    if (g.is_zero() || h.is_zero()) continue;
    MultiPoly G = gcd(f * g, f * h);
    CHECK(G == f.monic());
  }
}

TEST_CASE("gcd divides both inputs and contains the planted factor") {
  std::mt19937_64 rng(15);
  auto vs = vars_of({"x", "y", "t"});
  for (int k = 0; k < 30; ++k) {
    MultiPoly f = random_nonzero_poly(rng, vs, 3, 2);
    MultiPoly g = random_nonzero_poly(rng, vs, 3, 2), h = random_nonzero_poly(rng, vs, 3, 2);
    MultiPoly a = f * g, b = f * h;
    MultiPoly G = gcd(a, b);
    CHECK(a.divide_exact(G).has_value());
    CHECK(b.divide_exact(G).has_value());
    CHECK(G.divide_exact(f).has_value());
    CHECK(G.leading_coefficient().is_one());
  }
}

TEST_CASE("gcd edge cases") {
  MultiPoly x = MultiPoly::var(Var::of("x")), y = MultiPoly::var(Var::of("y"));
  CHECK(gcd(MultiPoly(), x * y) == x * y);
  CHECK(gcd(MultiPoly(3), x).is_one());
  CHECK(gcd(x * x * y, x * y * y) == x * y);
  CHECK(gcd(x * x - MultiPoly(1), x * x - MultiPoly(2) * x + MultiPoly(1)) == x - MultiPoly(1));
  CHECK(certainly_coprime(x + MultiPoly(1), y + MultiPoly(1)));
  CHECK_FALSE(certainly_coprime(x * x - MultiPoly(1), x + MultiPoly(1)));
}
