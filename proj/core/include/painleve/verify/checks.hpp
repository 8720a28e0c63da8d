#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "painleve/maps/library.hpp"
#include "painleve/verify/report.hpp"

namespace painleve {

// Pushforward of the source field through m minus the target field at the
// images, modulo the source constraint. Pass iff every component is zero.
CheckReport verify_equivariance(const BirationalMap& m, const std::vector<RatExpr>& source_field,
                                const std::vector<RatExpr>& target_field);
// m is a symmetry of sys (source and target both sys).
CheckReport verify_backlund(const HamiltonianSystem& sys, const BirationalMap& m);

struct RelationOptions {
  bool allow_probabilistic = true;
  std::size_t probabilistic_above = 6;  // word length above which points are pushed instead
  std::uint64_t seed = 1;
  int trials = 6;
};

// One report per relation; ids are <prefix>.<label without spaces>.
std::vector<CheckReport> verify_relations(const GroupPresentation& pres, const std::vector<BirationalMap>& gens,
                                          const std::string& prefix, const RelationOptions& opts = {});

// Transformed field polynomial in the chart's phase variables. The detail
// says whether the transformed Hamiltonian is polynomial as well.
CheckReport verify_holomorphy(const HamiltonianSystem& sys, const BirationalMap& chart);

// Field carried onto the target system's field and constraint onto
// constraint.
CheckReport verify_coincidence(const Coincidence& c);
// Target generator equals the conjugate of its word in source generators.
CheckReport verify_induced(const Coincidence& c, const std::string& target_gen, const Word& w);

// phi agrees with the target diagram automorphism pulled back through the
// coincidence change (either pi or its inverse).
CheckReport verify_phi_conjugation(SystemId id);

std::string compact_label(const std::string& label);

}  // namespace painleve
