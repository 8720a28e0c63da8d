#pragma once

#include <string>
#include <vector>

#include "painleve/catalog/system.hpp"
#include "painleve/verify/report.hpp"

namespace painleve {

// Second-order scalar equation obtained from a 2x2 system by q = q(u, T)
// and T = T(tau). The right-hand side is written in q, p = dq/dtau, tau and
// the system parameters.
struct ScalarReduction {
  std::string name;
  SystemId system;
  std::string q;            // in the phase variables and the system time
  std::string time_of_tau;  // T as a function of tau; empty for T = tau
  std::string rhs;
  std::string constants;    // human-readable constants used in rhs
};

const std::vector<ScalarReduction>& scalar_reductions();
const ScalarReduction& scalar_reduction(std::string_view name);

// d^2q/dtau^2 with the momentum eliminated, as a function of (q, p, tau).
RatExpr eliminated_rhs(const ScalarReduction& red);

// Pass iff eliminated_rhs equals the stated rhs modulo the constraint. On
// failure the detail carries the engine's right-hand side.
CheckReport verify_scalar_reduction(const ScalarReduction& red);

}  // namespace painleve
