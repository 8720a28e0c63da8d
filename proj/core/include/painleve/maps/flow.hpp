#pragma once

#include <vector>

#include "painleve/maps/birational.hpp"

namespace painleve {

// The field induced on the target phase variables, written in source
// coordinates: (sum_u dV/du F_u + dV/dt) / (dT/dt) for each target phase V.
std::vector<RatExpr> pushforward_in_source(const BirationalMap& m, const std::vector<RatExpr>& field);

// Same field rewritten in target coordinates through `inv`.
std::vector<RatExpr> transform_field(const BirationalMap& m, const BirationalMap& inv,
                                     const std::vector<RatExpr>& field);

// pushforward - target_field(images), each reduced modulo the source
// constraint. All zero exactly when m carries solutions of `field` to
// solutions of `target_field`.
std::vector<RatExpr> equivariance_residual(const BirationalMap& m, const std::vector<RatExpr>& field,
                                           const std::vector<RatExpr>& target_field);

// A Hamiltonian K in target coordinates for the transformed flow of H. Adds
// the correction coming from explicit time dependence of the images and
// divides by dT/dt. Throws NotClosedCorrection when the correction has no
// rational potential and Error when the result fails Hamilton's equations
// (the map is not symplectic).
RatExpr pullback_hamiltonian(const BirationalMap& m, const RatExpr& h);

// Rational potential R with dR/dp = g_q, dR/dq = -g_p for each canonical
// pair (q, p); nullopt when none exists.
std::optional<RatExpr> hamiltonian_potential(const std::vector<Var>& phase, const std::vector<RatExpr>& field);

}  // namespace painleve
