#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "painleve/maps/birational.hpp"
#include "painleve/maps/presentation.hpp"

namespace painleve {

// Node annotation of a Dynkin diagram: the divisor a reflection is attached
// to. `expr` is empty for the formal "x - infinity".
struct DivisorLabel {
  std::string name;
  std::optional<RatExpr> expr;
  std::string text;
};

// Backlund generators (reflections and diagram automorphisms) of a system.
const std::vector<BirationalMap>& generators(SystemId id);
const BirationalMap& generator(SystemId id, std::string_view name);

// Holomorphy charts; empty for systems without a chart list.
const std::vector<BirationalMap>& charts(SystemId id);

// The extra birational symmetry phi (B3, G2, B5 only).
std::optional<BirationalMap> phi_map(SystemId id);

std::vector<DivisorLabel> divisor_labels(SystemId id);

// Relation list stated for the system's generators, or the one derived
// from the parameter action when none is stated.
GroupPresentation presentation(SystemId id);

struct Coincidence {
  std::string name;
  SystemId source;
  SystemId target;
  BirationalMap change;  // images of target coordinates in source coordinates
  // target generator -> word in the source generators it corresponds to
  std::vector<std::pair<std::string, Word>> induced;
};

const std::vector<Coincidence>& coincidences();
const Coincidence& coincidence(std::string_view name);

// A generator of the subgroup that converges to the target group.
struct SubgroupGenerator {
  std::string name;
  Word word;             // in the source generators
  std::string limit_of;  // target generator it converges to
  Scalar zeta;           // branch: sigma = zeta * eps * (rho / zeta^k)^(1/k)
  // Stated images in new coordinates; may use the symbol u for the power
  // series u_base^u_exponent.
  std::vector<std::pair<std::string, std::string>> expected;
  std::string u_base;
  mpq_class u_exponent;
  // Images stated without their eps corrections; only the eps^0 part is
  // compared.
  std::vector<std::pair<std::string, std::string>> limit_expected = {};
};

struct Degeneration {
  std::string name;
  SystemId source;
  SystemId target;
  // New coordinates: X, Y[, Z, W], T, A0.., and eps.
  PhaseSpace new_space;
  // Old coordinates written in new ones.
  BirationalMap substitution;
  Var eps;
  int eps_power = 1;   // eps^eps_power = eps_value (in old parameters)
  RatExpr eps_value;
  std::vector<SubgroupGenerator> subgroup;
};

const std::vector<Degeneration>& degenerations();
const Degeneration& degeneration(std::string_view name);
// New coordinate names -> target system names (X -> x, A_i -> a_i, T -> t).
Bindings target_renaming(const Degeneration& d);

// Systems in extra variables posed without a Hamiltonian: generators,
// relations and the charts a candidate must be polynomial in.
struct ProblemSpec {
  std::string name;
  PhaseSpace space;
  std::vector<BirationalMap> generators;
  std::vector<BirationalMap> charts;
  GroupPresentation presentation;
  int degree_bound = 5;
};

const std::vector<ProblemSpec>& problems();
const ProblemSpec& problem(std::string_view name);

}  // namespace painleve
