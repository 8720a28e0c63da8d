#pragma once

#include <cstdint>
#include <vector>

#include "painleve/maps/birational.hpp"
#include "painleve/numerics/integrator.hpp"
#include "painleve/verify/reduction.hpp"

namespace painleve {

struct FlowConfig {
  SystemId system = SystemId::B3;
  CVec params;  // in the system's parameter order
  CVec state;   // in the system's phase-variable order
  cplx t0 = 1.0, t1 = 2.0;
  IntegratorOptions integrator;
  std::uint64_t seed = 0;  // recorded only
};

// Parameters and initial data from a seeded complex ball, away from the
// divisors x in {0, 1}, y = 0, z in {0, 1}, w = 0, x = z; the eliminated
// parameter is solved from the constraint.
FlowConfig random_config(SystemId id, std::uint64_t seed, cplx t0 = 1.0, cplx t1 = 2.0);
double constraint_residual(const FlowConfig& cfg);

// Hamilton's equations with the parameters of `cfg` bound.
Rhs system_rhs(SystemId id, const CVec& params);

// Throws SingularityEncountered when the segment meets a zero of the
// field's time denominators (e.g. t = 0) or BadConstantTerm when the
// parameters violate the constraint by more than 1e-12.
Trajectory integrate(const FlowConfig& cfg, std::vector<double> sample_s = {});

// Coordinates of m's target (phase, time, params) at a source point.
struct MappedPoint {
  CVec state;
  cplx time;
  CVec params;
};
MappedPoint apply_numeric(const BirationalMap& m, const CVec& state, cplx t, const CVec& params);

struct Commutation {
  double deviation = 0;  // max |a - b| / max(1, |a|)
  CVec flow_then_map;
  CVec map_then_flow;
};
// Flow u0 over [t0, t1] then map, against map at t0 then flow over
// [tau(t0), tau(t1)] with the mapped parameters. Throws
// SingularityEncountered (with the last good time) when either leg fails.
Commutation flow_commutation(const BirationalMap& m, const FlowConfig& cfg);

// Convergence rate of the fixed-step fifth-order scheme on cfg from
// successive step halvings starting at base_steps.
double observed_order(const FlowConfig& cfg, int base_steps);

// q'' by central differences on a uniform tau grid against the scalar
// equation's right-hand side. The trajectory starts from cfg.state at
// T(tau0).
struct ScalarResidual {
  double max_residual = 0;
  double h = 0;
  std::size_t samples = 0;
};
ScalarResidual scalar_residual(const ScalarReduction& red, const FlowConfig& cfg, double tau0, double tau1,
                               int intervals);

}  // namespace painleve
