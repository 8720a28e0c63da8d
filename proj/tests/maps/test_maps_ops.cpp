#include "doctest.h"
#include "painleve/exactalg.hpp"
#include "painleve/maps/flow.hpp"
#include "painleve/maps/library.hpp"

using namespace painleve;

namespace {

const BirationalMap& b3(const char* name) { return generator(SystemId::B3, name); }

BirationalMap word(SystemId id, const char* w) { return evaluate_word(generators(id), Word::parse(w)); }

}  // namespace

TEST_CASE("apply substitutes the images") {
  CHECK(apply(b3("s1"), rx("a1")) == rx("-a1"));
  CHECK(apply(b3("s1"), rx("a2")) == rx("a2+a1"));
  CHECK(apply(b3("s1"), rx("x")) == rx("x"));
  CHECK(apply(b3("s0"), rx("y")) == rx("y-a0/(x-1)"));

  // Zero root: the reflection acts trivially on the variables.
  Bindings zero{{Var::of("a0"), RatExpr()}};
  CHECK(apply(b3("s0"), rx("y")).substitute(zero) == rx("y"));

  // pi twice by hand: x -> x/(x-1) -> (x/(x-1)) / (x/(x-1) - 1) = x.
  RatExpr x1 = rx("x/(x-1)");
  RatExpr again = x1.substitute({{Var::of("x"), x1}});
  CHECK(again == rx("x"));
  const auto& pi = b3("pi");
  CHECK(apply(pi, apply(pi, rx("y"))) == rx("y"));
  CHECK(apply(pi, apply(pi, rx("x"))) == rx("x"));
  CHECK(apply(pi, apply(pi, rx("t"))) == rx("t"));
}

TEST_CASE("compose follows the automorphism product") {
  CHECK(is_identity(compose(b3("s2"), b3("s2"))));
  CHECK(is_identity(word(SystemId::B3, "(s2 s3)^4")));
  CHECK(is_identity(word(SystemId::B3, "(s0 s2)^3")));
  CHECK_FALSE(is_identity(word(SystemId::B3, "(s2 s3)^2")));

  // Letter order: apply(compose(a, b), f) = apply(a, apply(b, f)).
  const auto& a = b3("s2");
  const auto& b = b3("s3");
  RatExpr f = rx("x*y+t*a3");
  CHECK(apply(compose(a, b), f) == apply(a, apply(b, f)));

  CHECK_THROWS_AS(compose(b3("s0"), generator(SystemId::G2, "s0")), IncompatibleComposition);
}

TEST_CASE("w0 w3 on the D4 parameters gives the limit of S3") {
  const auto& d = degeneration("D4toB3");
  BirationalMap w = word(SystemId::PVI_D4, "w0 w3");
  // New parameters written in the old ones (eps = 1/a0).
  std::vector<std::pair<const char*, const char*>> cases = {
      {"a1", "A0"}, {"a4", "A1"}, {"a2", "A2+2*A3"}, {"(a3+a0)/2", "-A3"}, {"1/a0", "-eps"}};
  for (const auto& [old_expr, expected] : cases) {
    CAPTURE(old_expr);
    CHECK(apply(d.substitution, apply(w, rx(old_expr))) == rx(expected));
  }
}

TEST_CASE("is_identity") {
  CHECK(is_identity(BirationalMap::identity(space_of(SystemId::B3))));
  CHECK_FALSE(is_identity(b3("s0")));
  CHECK(is_identity(word(SystemId::B3, "(s0 s2)^3")));
  IdentityCheck c = identity_check(b3("s0"));
  CHECK_FALSE(c.modulo_constraint);
  REQUIRE(c.offending.size() == 3);  // y, a0, a2
}

TEST_CASE("symplectic_check") {
  const auto& r2 = charts(SystemId::B3)[2];
  REQUIRE(r2.name() == "r2");
  CHECK(symplectic_check(r2));
  CHECK(symplectic_check(coincidence("B3toA3").change));
  PhaseSpace s = space_of(SystemId::B3);
  CHECK_FALSE(symplectic_check(BirationalMap::from_strings("double", s, s, {{"x", "2*x"}})));
}

TEST_CASE("poisson_reflection") {
  PhaseSpace s = space_of(SystemId::B3);
  BirationalMap w2 = poisson_reflection(s, rx("y"), rx("a2"));
  CHECK(w2.image(Var::of("x")) == rx("x+a2/y"));
  CHECK(w2.image(Var::of("y")) == rx("y"));
  // {y, x - 1} = -1, so y -> y - a0/(x-1).
  BirationalMap w0 = poisson_reflection(s, rx("x-1"), rx("a0"));
  CHECK(w0.image(Var::of("y")) == rx("y-a0/(x-1)"));
  CHECK(w0.image(Var::of("x")) == rx("x"));
  CHECK(is_identity(poisson_reflection(s, rx("x*y-t"), RatExpr())));
}

TEST_CASE("pullback_hamiltonian") {
  const auto& sys = get_system(SystemId::B3);
  const RatExpr& h = sys.hamiltonian;
  CHECK(pullback_hamiltonian(BirationalMap::identity(space_of(SystemId::B3)), h) == h);

  // K differs from H by a function of t and the parameters only.
  auto differs_by_time_function = [&](const RatExpr& k, const RatExpr& expected_shift) {
    RatExpr d = space_of(SystemId::B3).reduce(k - h - expected_shift);
    return d.is_zero();
  };
  // s0: H = s0(H) - a0 as functions, so K = H + a0 after renaming.
  RatExpr k0 = pullback_hamiltonian(b3("s0"), h);
  CHECK(differs_by_time_function(k0, rx("a0")));
  // s2 carries no correction: the images do not involve t.
  RatExpr k2 = pullback_hamiltonian(b3("s2"), h);
  CHECK(differs_by_time_function(k2, -rx("a2*(a2+2*a3-1+t)/t")));
  // s3 flips t; the drift of y contributes 1/x.
  RatExpr k3 = pullback_hamiltonian(b3("s3"), h);
  CHECK(differs_by_time_function(k3, -rx("a1+2*a2+2*a3*(t+1)/t")));
  RatExpr kpi = pullback_hamiltonian(b3("pi"), h);
  CHECK(differs_by_time_function(kpi, -rx("a2")));
  auto f3 = hamiltonian_field(k3, sys.phase_vars).rhs;
  auto pushed = transform_field(b3("s3"), b3("s3"), vector_field(sys).rhs);
  for (std::size_t i = 0; i < f3.size(); ++i) CHECK(space_of(SystemId::B3).reduce(f3[i] - pushed[i]).is_zero());
}
