#pragma once

#include <functional>
#include <string>
#include <vector>

#include "painleve/numerics/compiled.hpp"

namespace painleve {

// dy/dt at complex time t.
using Rhs = std::function<void(cplx t, const CVec& y, CVec& dy)>;

struct IntegratorOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  std::size_t max_steps = 200000;
  double min_fraction = 1e-13;  // smallest step as a fraction of the segment
};

// Solution along the straight segment t0 -> t1, parametrised by
// s in [0, 1]. Every accepted step is kept (with its derivative) for
// cubic Hermite dense output; requested sample fractions are hit exactly.
struct Trajectory {
  cplx t0, t1;
  std::vector<double> nodes;  // s at accepted step ends, starting with 0
  std::vector<CVec> states;
  std::vector<CVec> slopes;   // dy/ds at the nodes
  std::vector<double> sample_s;
  std::vector<CVec> samples;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  bool failed = false;
  std::string message;

  const CVec& final_state() const { return states.back(); }
  cplx final_time() const { return t0 + nodes.back() * (t1 - t0); }
  double accepted_fraction() const;
  // Cubic Hermite interpolation between the bracketing nodes.
  CVec interpolate(double s) const;
};

// Adaptive Dormand-Prince 5(4) with local extrapolation. Fails (never
// throws) on step-size underflow or non-finite values, keeping the last
// good state.
Trajectory dopri45(const Rhs& f, cplx t0, cplx t1, const CVec& y0, const IntegratorOptions& opts = {},
                   std::vector<double> sample_s = {});

// The same fifth-order stages with `steps` equal steps and no control.
CVec dopri_fixed(const Rhs& f, cplx t0, cplx t1, const CVec& y0, int steps);
// All steps + 1 states of the same scheme.
std::vector<CVec> dopri_fixed_path(const Rhs& f, cplx t0, cplx t1, const CVec& y0, int steps);

}  // namespace painleve
