#include <cmath>

#include "doctest.h"
#include "painleve/error.hpp"
#include "painleve/maps/library.hpp"
#include "painleve/numerics/flow.hpp"

using namespace painleve;

namespace {

// Independent oracle: classical RK4 with n and 2n steps combined by
// Richardson extrapolation (fifth order).
CVec rk4_richardson(const Rhs& f, cplx t0, cplx t1, CVec y0, int n) {
  auto run = [&](int steps) {
    CVec y = y0, k1, k2, k3, k4, tmp(y0.size());
    cplx h = (t1 - t0) / double(steps);
    for (int s = 0; s < steps; ++s) {
      cplx t = t0 + double(s) * h;
      f(t, y, k1);
      for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
      f(t + 0.5 * h, tmp, k2);
      for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
      f(t + 0.5 * h, tmp, k3);
      for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + h * k3[i];
      f(t + h, tmp, k4);
      for (std::size_t i = 0; i < y.size(); ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return y;
  };
  CVec a = run(n), b = run(2 * n);
  for (std::size_t i = 0; i < a.size(); ++i) b[i] = b[i] + (b[i] - a[i]) / 15.0;
  return b;
}

double gap(const CVec& a, const CVec& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("zero field keeps the state") {
  Rhs zero = [](cplx, const CVec& y, CVec& dy) { dy.assign(y.size(), 0); };
  Trajectory tr = dopri45(zero, 0.0, 1.0, {1.0, cplx(2, 3)});
  CHECK_FALSE(tr.failed);
  CHECK(tr.final_state()[0] == cplx(1.0));
  CHECK(tr.final_state()[1] == cplx(2, 3));
}

TEST_CASE("exponential along a complex segment") {
  Rhs f = [](cplx, const CVec& y, CVec& dy) { dy = {y[0]}; };
  cplx t1(0.3, 1.2);
  Trajectory tr = dopri45(f, 0.0, t1, {1.0});
  CHECK(std::abs(tr.final_state()[0] - std::exp(t1)) < 1e-9);
  CHECK(tr.final_time() == t1);
}

TEST_CASE("A1 flow from a generic point agrees with an independent integrator") {
  FlowConfig cfg = random_config(SystemId::A1, 11, 0.0, 1.0);
  Trajectory tr = integrate(cfg);
  REQUIRE_FALSE(tr.failed);
  CHECK(tr.accepted_fraction() >= 0.99);
  CVec ref = rk4_richardson(system_rhs(SystemId::A1, cfg.params), cfg.t0, cfg.t1, cfg.state, 2000);
  CHECK(gap(tr.final_state(), ref) < 1e-8);
}

TEST_CASE("samples are hit exactly and dense output is close") {
  FlowConfig cfg = random_config(SystemId::B3, 5, 1.0, 1.5);
  Trajectory tr = integrate(cfg, {0.25, 0.5, 0.75});
  REQUIRE(tr.samples.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) CHECK(gap(tr.interpolate(tr.sample_s[k]), tr.samples[k]) < 1e-12);
  // Between nodes the cubic Hermite interpolant is a few orders less accurate.
  Trajectory fine = integrate(cfg, {0.123});
  CHECK(gap(tr.interpolate(0.123), fine.samples[0]) < 1e-6);
}

TEST_CASE("time paths through a singular time are refused") {
  FlowConfig cfg = random_config(SystemId::B3, 1, -1.0, 1.0);
  CHECK_THROWS_AS(integrate(cfg), SingularityEncountered);
  FlowConfig pvi = random_config(SystemId::PVI_D4, 1, 0.5, 1.5);
  CHECK_THROWS_AS(integrate(pvi), SingularityEncountered);
}

TEST_CASE("configurations respect the constraint") {
  for (SystemId id : all_system_ids()) {
    CAPTURE(to_string(id));
    FlowConfig a = random_config(id, 99);
    CHECK(constraint_residual(a) < 1e-12);
    FlowConfig b = random_config(id, 99);
    CHECK(a.state == b.state);
    CHECK(a.params == b.params);
  }
  FlowConfig bad = random_config(SystemId::B3, 1);
  bad.params[0] += 0.1;
  CHECK_THROWS_AS(integrate(bad), BadConstantTerm);
}

TEST_CASE("Backlund maps commute with the flow") {
  FlowConfig cfg = random_config(SystemId::B3, 42, 1.0, 2.0);
  CHECK(flow_commutation(generator(SystemId::B3, "s2"), cfg).deviation <= 1e-6);
  CHECK(flow_commutation(BirationalMap::identity(space_of(SystemId::B3)), cfg).deviation <= 1e-12);
  FlowConfig b5 = random_config(SystemId::B5, 42, 1.0, 1.5);
  CHECK(flow_commutation(generator(SystemId::B5, "s3"), b5).deviation <= 1e-6);
  // time -> -i t: the mapped leg runs along the rotated ray.
  FlowConfig g2 = random_config(SystemId::G2, 42, 1.0, 1.5);
  CHECK(generator(SystemId::G2, "s2").time_image() != RatExpr::var("t"));
  CHECK(flow_commutation(generator(SystemId::G2, "s2"), g2).deviation <= 1e-6);
}

TEST_CASE("a wrong map does not commute") {
  FlowConfig cfg = random_config(SystemId::B3, 42, 1.0, 2.0);
  const BirationalMap& s0 = generator(SystemId::B3, "s0");
  Bindings im = s0.images();
  im[Var::of("y")] = im[Var::of("y")].substitute({{Var::of("a0"), RatExpr::var("a1")}});
  BirationalMap broken("s0*", s0.source(), s0.target(), im);
  CHECK(flow_commutation(broken, cfg).deviation > 1e-4);
}

TEST_CASE("commutation error follows the tolerance") {
  FlowConfig cfg = random_config(SystemId::B3, 42, 1.0, 2.0);
  cfg.integrator.rtol = cfg.integrator.atol = 1e-8;
  double loose = flow_commutation(generator(SystemId::B3, "s3"), cfg).deviation;
  cfg.integrator.rtol = cfg.integrator.atol = 1e-10;
  double tight = flow_commutation(generator(SystemId::B3, "s3"), cfg).deviation;
  CAPTURE(loose);
  CAPTURE(tight);
  CHECK(loose / tight > 10);
  CHECK(loose / tight < 1000);
}

TEST_CASE("fixed-step scheme has order five") {
  FlowConfig cfg = random_config(SystemId::A1, 42, 0.0, 1.0);
  double p = observed_order(cfg, 2);
  CHECK(p >= 4.5);
  CHECK(p <= 5.5);
}

TEST_CASE("scalar residuals shrink like h^2") {
  for (const char* name : {"PIV", "PIII", "PII"}) {
    CAPTURE(name);
    const ScalarReduction& red = scalar_reduction(name);
    FlowConfig cfg = random_config(red.system, 3);
    double r1 = scalar_residual(red, cfg, 1.0, 1.3, 40).max_residual;
    double r2 = scalar_residual(red, cfg, 1.0, 1.3, 80).max_residual;
    CHECK(r1 / r2 > 3.5);
    CHECK(r1 / r2 < 4.5);
  }
  // A wrong constant leaves an O(1) residual.
  ScalarReduction red = scalar_reduction("PII");
  red.rhs = "2*q^3+tau*q+b1";
  FlowConfig cfg = random_config(red.system, 3);
  CHECK(scalar_residual(red, cfg, 1.0, 1.3, 80).max_residual > 0.4);
}
