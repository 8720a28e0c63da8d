#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "painleve/exactalg/ratexpr.hpp"

namespace painleve {

enum class SystemId { PVI_D4, B3, G2, D32, A22, A3, A2, C2, A1, B5, D5, D52, B4 };

const std::vector<SystemId>& all_system_ids();
std::string to_string(SystemId id);
// Accepts the identifiers printed by to_string; throws UnknownSystem.
SystemId parse_system_id(std::string_view name);

// Affine relation sum_k c_k p_k = rhs among the parameters. One parameter is
// marked as the one to eliminate when reducing modulo the relation.
struct ParamConstraint {
  std::vector<std::pair<Var, Scalar>> terms;
  Scalar rhs;
  Var eliminated;

  RatExpr lhs() const;
  // Value of `eliminated` forced by the relation.
  RatExpr eliminated_value() const;
  Bindings elimination() const { return {{eliminated, eliminated_value()}}; }
  RatExpr reduce(const RatExpr& e) const;
  std::string to_string() const;
};

struct NamedPart {
  std::string name;
  RatExpr expr;
};

struct VectorField {
  std::vector<Var> vars;
  std::vector<RatExpr> rhs;
};

struct HamiltonianSystem {
  SystemId id;
  std::string label;
  int dof = 1;
  std::vector<Var> phase_vars;  // (x, y) or (x, y, z, w); pairs are canonical
  Var time_var;
  std::vector<Var> params;
  RatExpr hamiltonian;
  ParamConstraint constraint;
  int degree_bound = 5;
  std::vector<RatExpr> displayed_field;  // as stated, one entry per phase var
  bool field_is_displayed = true;        // false when only H is stated
  std::vector<NamedPart> decomposition;  // coupled systems: two base parts and R
  bool characterized = false;            // has a holomorphy chart list

  VarMask phase_mask() const;
  VarMask param_mask() const;
};

const HamiltonianSystem& get_system(SystemId id);
const HamiltonianSystem& get_system(std::string_view name);

// Hamilton's equations: (dH/dy, -dH/dx[, dH/dw, -dH/dz]).
VectorField hamiltonian_field(const RatExpr& h, const std::vector<Var>& phase_vars);
VectorField vector_field(const HamiltonianSystem& sys);

// Total degree of the numerator in the phase variables; nullopt when the
// denominator involves a phase variable.
std::optional<unsigned> phase_degree(const HamiltonianSystem& sys);
bool check_degree(const HamiltonianSystem& sys);

}  // namespace painleve
