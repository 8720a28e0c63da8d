#pragma once

#include <optional>
#include <string>
#include <vector>

#include "painleve/catalog/system.hpp"

namespace painleve {

// Coordinates a map can act on: canonical phase pairs, the time, the
// parameters and any extra symbols (the degeneration parameter eps).
struct PhaseSpace {
  std::string name;
  std::vector<Var> phase;
  Var time;
  std::vector<Var> params;
  std::vector<Var> extra;
  std::optional<ParamConstraint> constraint;

  int dof() const { return static_cast<int>(phase.size() / 2); }
  std::vector<Var> coordinates() const;
  bool has(Var v) const;
  // Reduce modulo the parameter constraint (identity when there is none).
  RatExpr reduce(const RatExpr& e) const;
};

PhaseSpace space_of(SystemId id);
PhaseSpace space_of(const HamiltonianSystem& sys);

}  // namespace painleve
