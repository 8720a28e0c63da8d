#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "painleve/exactalg/linsolve.hpp"
#include "painleve/exactalg/monomial.hpp"
#include "painleve/maps/library.hpp"
#include "painleve/verify/report.hpp"

namespace painleve {

// Polynomial Hamiltonian with one unknown coefficient per monomial of total
// degree <= degree_bound in the phase variables. Coefficient k multiplies
// monomials[k]; the unknowns live in the field of rational functions of the
// time and the parameters.
struct Ansatz {
  std::vector<Var> phase;
  int degree_bound = 0;
  std::vector<Monomial> monomials;  // by total degree, then lex; constant first

  std::size_t size() const { return monomials.size(); }
  RatExpr monomial(std::size_t k) const;
  // sum_k values[k] * monomials[k].
  RatExpr hamiltonian(const std::vector<RatExpr>& values) const;
};

// dof 1 uses (x, y), dof 2 uses (x, y, z, w).
Ansatz build_ansatz(int dof, int degree_bound);
Ansatz build_ansatz(const std::vector<Var>& phase, int degree_bound);

// Equations killing every pole of the ansatz field in the chart's phase
// variables, one per (component, Laurent monomial with a negative exponent).
// Coefficients are reduced modulo the source parameter constraint.
struct ChartFragment {
  std::string chart;
  std::vector<LinearEquation> equations;
};
ChartFragment impose_chart(const Ansatz& a, const BirationalMap& chart);

LinearSolution solve(const std::vector<ChartFragment>& fragments, int unknowns);

// sum_j certificate[j] * eq_j has zero left side and the certificate value
// on the right, recomputed from the equations alone.
bool check_certificate(const std::vector<ChartFragment>& fragments, const LinearSolution& s);

struct Derivation {
  std::string name;
  Ansatz ansatz;
  std::vector<ChartFragment> fragments;
  LinearSolution solution;
  std::optional<RatExpr> hamiltonian;  // particular solution when consistent
  // Nullspace directions written as Hamiltonians; phase-free ones only
  // shift H by a function of t.
  std::vector<RatExpr> kernel;
  bool kernel_phase_free = true;

  int equation_count() const;
  int dimension() const { return static_cast<int>(kernel.size()); }
};

Derivation derive(std::string name, const Ansatz& a, const std::vector<BirationalMap>& charts, unsigned jobs = 1);
// Over the system's chart list at its degree bound.
Derivation derive_system(SystemId id, unsigned jobs = 1);
// Over a posed problem's charts (G2-4v, A22-4v).
Derivation derive_problem(std::string_view name, unsigned jobs = 1);

// Pass iff the solution space is {H + g(t)}: consistent, every kernel
// direction free of the phase variables and the particular solution equal
// to the catalog Hamiltonian up to phase-free terms.
CheckReport verify_rederivation(SystemId id, unsigned jobs = 1);
// Pass iff the linear system is inconsistent and its certificate checks.
CheckReport verify_infeasible(std::string_view problem_name, unsigned jobs = 1);

// Drop every term free of the given phase variables.
RatExpr phase_part(const RatExpr& h, const std::vector<Var>& phase);

}  // namespace painleve
