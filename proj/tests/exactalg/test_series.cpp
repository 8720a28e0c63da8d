#include <random>

#include "doctest.h"
#include "support/random_expr.hpp"

using namespace painleve;
using namespace testsupport;

namespace {

Var eps() { return Var::of("eps"); }

// Independent oracle: sum_{n} binom(c, n) u^n with u^n formed by repeated
// series multiplication, binom(c, n) = c (c-1) ... (c-n+1) / n!.
EpsSeries binomial_by_sum(const EpsSeries& u, const mpq_class& c, int order) {
  EpsSeries sum = EpsSeries::constant(RatExpr(1), order);
  EpsSeries power = EpsSeries::constant(RatExpr(1), order);
  mpq_class coef = 1;
  for (int n = 1; n <= order; ++n) {
    power = (power * u).truncated(order);
    coef = coef * (c - (n - 1)) / n;
    sum = sum + power.scaled(RatExpr(Scalar(coef)));
  }
  return sum;
}

}  // namespace

TEST_CASE("geometric expansion") {
  EpsSeries s = eps_expand(rx("1/(1+eps*T)"), eps(), 2);
  CHECK(s.order() == 2);
  CHECK(s.coeff(0) == RatExpr(1));
  CHECK(s.coeff(1) == rx("-T"));
  CHECK(s.coeff(2) == rx("T^2"));
  CHECK_THROWS_AS(s.coeff(3), TruncationUnstable);
}

TEST_CASE("Laurent expansion with a pole") {
  EpsSeries s = eps_expand(rx("(1+eps)/(eps^2*(1-eps))"), eps(), 1);
  CHECK(s.min_order() == -2);
  CHECK(s.coeff(-2) == RatExpr(1));
  CHECK(s.coeff(-1) == RatExpr(2));
  CHECK(s.coeff(0) == RatExpr(2));
  CHECK(s.coeff(1) == RatExpr(2));
}

TEST_CASE("binomial series examples") {
  EpsSeries base(0, {RatExpr(1), RatExpr(1)}, 10);
  EpsSeries sq = binomial_series(base, 2, 4);
  CHECK(sq.coeff(0) == RatExpr(1));
  CHECK(sq.coeff(1) == RatExpr(2));
  CHECK(sq.coeff(2) == RatExpr(1));
  CHECK(sq.coeff(3).is_zero());
  CHECK(sq.coeff(4).is_zero());

  // (1 - 2 A1 eps^2)^(-1/2) = 1 + A1 eps^2 + 3/2 A1^2 eps^4 + 5/2 A1^3 eps^6 + ...
  EpsSeries b2 = eps_expand(rx("1 - 2*A1*eps^2"), eps(), 8);
  EpsSeries r = binomial_series(b2, mpq_class(-1, 2), 6);
  CHECK(r.coeff(2) == rx("A1"));
  CHECK(r.coeff(4) == rx("3/2*A1^2"));
  CHECK(r.coeff(6) == rx("5/2*A1^3"));
  CHECK(r.coeff(1).is_zero());

  // (1 + 4 A0 eps^6)^(-1/6) through eps^6.
  EpsSeries b6 = eps_expand(rx("1 + 4*A0*eps^6"), eps(), 8);
  EpsSeries r6 = binomial_series(b6, mpq_class(-1, 6), 6);
  CHECK(r6.order() == 6);
  for (int k = 1; k < 6; ++k) CHECK(r6.coeff(k).is_zero());
  CHECK(r6.coeff(6) == rx("-2/3*A0"));
}

TEST_CASE("binomial series agrees with the direct binomial sum") {
  std::mt19937_64 rng(31);
  auto vs = vars_of({"T", "A0", "A1"});
  const mpq_class exps[] = {mpq_class(-1, 2), mpq_class(1, 3), mpq_class(-1, 6), mpq_class(5, 2), mpq_class(3)};
  for (const auto& c : exps) {
    std::vector<RatExpr> coeffs{RatExpr(1)};
    for (int k = 1; k <= 6; ++k) coeffs.emplace_back(random_poly(rng, vs, 2, 2));
    EpsSeries base(0, coeffs, 6);
    EpsSeries u = base - EpsSeries::constant(RatExpr(1), 6);
    EpsSeries fast = binomial_series(base, c, 6);
    EpsSeries slow = binomial_by_sum(u, c, 6);
    for (int k = 0; k <= 6; ++k) CHECK(fast.coeff(k) == slow.coeff(k));
  }
}

TEST_CASE("binomial series rejects a bad constant term") {
  EpsSeries base(0, {RatExpr(2), RatExpr(1)}, 4);
  CHECK_THROWS_AS(binomial_series(base, mpq_class(1, 2), 4), BadConstantTerm);
  EpsSeries shifted(1, {RatExpr(1)}, 4);
  CHECK_THROWS_AS(binomial_series(shifted, mpq_class(1, 2), 4), BadConstantTerm);
}

TEST_CASE("expansion fails when the denominator vanishes identically as a series") {
  Var sigma = Var::of("sigma");
  std::map<Var, EpsSeries> bind{{sigma, EpsSeries::monomial(RatExpr(1), 1, 12)}};
  CHECK_THROWS_AS(eps_expand(rx("1/(sigma - eps)"), eps(), 2, bind), NotLaurentExpandable);
  // The same binding in a numerator is harmless.
  EpsSeries s = eps_expand(rx("(sigma - eps)/(1 + eps)"), eps(), 3, bind);
  CHECK(s.is_zero_to_order());
}

TEST_CASE("series bindings substitute a known expansion") {
  Var sigma = Var::of("sigma");
  // sigma = eps / (1 + eps) as a series.
  EpsSeries ser = eps_expand(rx("eps/(1+eps)"), eps(), 10);
  std::map<Var, EpsSeries> bind{{sigma, ser}};
  EpsSeries direct = eps_expand(rx("1/(1 - eps/(1+eps))^2"), eps(), 5);
  EpsSeries via = eps_expand(rx("1/(1-sigma)^2"), eps(), 5, bind);
  for (int k = 0; k <= 5; ++k) CHECK(direct.coeff(k) == via.coeff(k));
}

TEST_CASE("expansion is multiplicative up to truncation") {
  std::mt19937_64 rng(32);
  auto vs = vars_of({"eps", "T", "X"});
  for (int k = 0; k < 25; ++k) {
    MultiPoly da = random_nonzero_poly(rng, vs, 2, 2) + MultiPoly(1);
    MultiPoly db = random_nonzero_poly(rng, vs, 2, 2) + MultiPoly(1);
    RatExpr a = RatExpr::normalize(random_poly(rng, vs, 3, 2), da);
    RatExpr b = RatExpr::normalize(random_poly(rng, vs, 3, 2), db);
    EpsSeries lhs = eps_expand(a * b, eps(), 4);
    EpsSeries rhs = (eps_expand(a, eps(), 6) * eps_expand(b, eps(), 6)).truncated(4);
    REQUIRE(rhs.order() >= 4);
    for (int j = std::min(lhs.valuation(), rhs.valuation()); j <= 4; ++j) CHECK(lhs.coeff(j) == rhs.coeff(j));
  }
}

TEST_CASE("series inverse and sum") {
  EpsSeries a = eps_expand(rx("2 + eps*T"), eps(), 6);
  EpsSeries one = a * a.inverse();
  CHECK(one.coeff(0) == RatExpr(1));
  for (int k = 1; k <= 6; ++k) CHECK(one.coeff(k).is_zero());
  EpsSeries s = a + EpsSeries::monomial(RatExpr(1), -1, 3);
  CHECK(s.order() == 3);
  CHECK(s.coeff(-1) == RatExpr(1));
  CHECK(s.to_ratexpr(eps()) == rx("1/eps + 2 + eps*T"));
}
