#include <algorithm>

#include "doctest.h"
#include "painleve/derive/derive.hpp"
#include "painleve/exactalg.hpp"

using namespace painleve;

namespace {

// Coefficient of each ansatz monomial in a Hamiltonian polynomial in the
// phase variables, by grouping its terms directly.
std::vector<RatExpr> coefficients_of(const Ansatz& a, const RatExpr& h) {
  std::vector<RatExpr> out(a.size());
  for (const auto& t : h.num().terms()) {
    Monomial phase_part, rest = t.m;
    for (Var v : a.phase) {
      phase_part = phase_part * Monomial::of(v, t.m.exp(v));
      rest = rest.without(v);
    }
    auto it = std::find(a.monomials.begin(), a.monomials.end(), phase_part);
    REQUIRE(it != a.monomials.end());
    out[it - a.monomials.begin()] += RatExpr::normalize(MultiPoly::monomial(rest, t.c), h.den());
  }
  return out;
}

RatExpr evaluate(const LinearEquation& eq, const std::vector<RatExpr>& c) {
  RatExpr s = -eq.rhs;
  for (const auto& [k, coef] : eq.lhs) s += coef * c[k];
  return s;
}

}  // namespace

TEST_CASE("ansatz sizes") {
  Ansatz a = build_ansatz(1, 5);
  CHECK(a.size() == 21);
  CHECK(a.monomials.front().is_one());
  CHECK(std::count_if(a.monomials.begin(), a.monomials.end(), [](const Monomial& m) { return !m.is_one(); }) == 20);

  Ansatz lin = build_ansatz(1, 1);
  REQUIRE(lin.size() == 3);
  CHECK(lin.monomial(0) == rx("1"));
  CHECK(lin.monomial(1) == rx("x"));
  CHECK(lin.monomial(2) == rx("y"));

  CHECK(build_ansatz(2, 5).size() == 126);  // C(9, 5)
  CHECK(build_ansatz(2, 6).size() == 210);
  CHECK_THROWS(build_ansatz(3, 5));
  CHECK_THROWS(build_ansatz(1, 0));
}

TEST_CASE("identity chart imposes nothing") {
  Ansatz a = build_ansatz(1, 5);
  ChartFragment f = impose_chart(a, BirationalMap::identity(space_of(SystemId::B3)));
  CHECK(f.equations.empty());
}

TEST_CASE("the catalog Hamiltonian satisfies every chart fragment") {
  for (SystemId id : {SystemId::B3, SystemId::G2, SystemId::D32, SystemId::A22}) {
    CAPTURE(to_string(id));
    const HamiltonianSystem& sys = get_system(id);
    Ansatz a = build_ansatz(sys.phase_vars, sys.degree_bound);
    auto c = coefficients_of(a, sys.hamiltonian);
    PhaseSpace space = space_of(sys);
    for (const auto& chart : charts(id)) {
      CAPTURE(chart.name());
      ChartFragment f = impose_chart(a, chart);
      CHECK_FALSE(f.equations.empty());
      for (const auto& eq : f.equations) CHECK(space.reduce(evaluate(eq, c)).is_zero());
    }
  }
}

TEST_CASE("a time-dependent chart brings the time into the equations") {
  Ansatz a = build_ansatz(1, 5);
  const auto& r3 = charts(SystemId::B3)[3];
  ChartFragment f = impose_chart(a, r3);
  Var t = Var::of("t");
  bool has_t = false;
  for (const auto& eq : f.equations) {
    has_t |= eq.rhs.depends_on(t);
    for (const auto& [k, c] : eq.lhs) has_t |= c.depends_on(t);
  }
  CHECK(has_t);
}

TEST_CASE("rederivation of the dof-1 systems") {
  for (SystemId id : {SystemId::B3, SystemId::G2, SystemId::D32, SystemId::A22}) {
    CAPTURE(to_string(id));
    Derivation d = derive_system(id);
    REQUIRE(d.solution.consistent);
    CHECK(d.dimension() == 1);
    CHECK(d.kernel_phase_free);
    CHECK(d.kernel[0] == rx("1"));
    const HamiltonianSystem& sys = get_system(id);
    RatExpr diff = phase_part(*d.hamiltonian, sys.phase_vars) - phase_part(sys.hamiltonian, sys.phase_vars);
    CHECK(space_of(sys).reduce(diff).is_zero());
    CHECK(verify_rederivation(id).passed());
  }
  CHECK(derive_system(SystemId::A22).ansatz.size() == 28);  // degree 6
}

TEST_CASE("rederivation of the dof-2 systems") {
  for (SystemId id : {SystemId::B5, SystemId::D52}) {
    CAPTURE(to_string(id));
    CheckReport r = verify_rederivation(id);
    CHECK(r.passed());
    CHECK(r.detail.find("126 monomials") != std::string::npos);
  }
}

TEST_CASE("solution does not depend on the chart order") {
  std::vector<BirationalMap> cs = charts(SystemId::G2);
  Ansatz a = build_ansatz(1, 5);
  Derivation fwd = derive("G2", a, cs);
  std::reverse(cs.begin(), cs.end());
  Derivation rev = derive("G2", a, cs);
  REQUIRE(fwd.solution.consistent);
  REQUIRE(rev.solution.consistent);
  CHECK(fwd.solution.particular == rev.solution.particular);
  CHECK(fwd.kernel == rev.kernel);
}

TEST_CASE("a perturbed chart changes the answer") {
  std::vector<BirationalMap> cs = charts(SystemId::B3);
  const BirationalMap& r0 = cs[0];
  Bindings im = r0.images();
  Var x = Var::of("x");
  im[x] = im[x].substitute({{Var::of("a0"), rx("a1")}});
  cs[0] = BirationalMap("r0*", r0.source(), r0.target(), im);
  Derivation d = derive("B3*", build_ansatz(1, 5), cs);
  bool same = d.solution.consistent && d.kernel_phase_free &&
              space_of(SystemId::B3)
                  .reduce(phase_part(*d.hamiltonian, {x, Var::of("y")}) -
                          phase_part(get_system(SystemId::B3).hamiltonian, {x, Var::of("y")}))
                  .is_zero();
  CHECK_FALSE(same);
}

TEST_CASE("posed problems are infeasible with a checkable certificate") {
  for (const char* name : {"G2-4v", "A22-4v"}) {
    CAPTURE(name);
    Derivation d = derive_problem(name);
    CHECK_FALSE(d.solution.consistent);
    CHECK(check_certificate(d.fragments, d.solution));
    LinearSolution tampered = d.solution;
    tampered.certificate.erase(tampered.certificate.begin());
    CHECK_FALSE(check_certificate(d.fragments, tampered));
  }
  CheckReport r = verify_infeasible("G2-4v");
  CHECK(r.passed());
  CHECK(r.detail.find("still infeasible at degree 6") != std::string::npos);
}

TEST_CASE("phase_part drops time-only terms") {
  std::vector<Var> xy = {Var::of("x"), Var::of("y")};
  CHECK(phase_part(rx("x*y/t+t^2+a0"), xy) == rx("x*y/t"));
  CHECK_THROWS(phase_part(rx("1/x"), xy));
}
