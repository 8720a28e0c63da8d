#include "painleve/verify/reduction.hpp"

#include "painleve/exactalg.hpp"
#include "painleve/maps/birational.hpp"

namespace painleve {

const std::vector<ScalarReduction>& scalar_reductions() {
  static const std::vector<ScalarReduction> all = {
      {"PV", SystemId::A3, "1-1/X", "",
       "(1/(2*q)+1/(q-1))*p^2-p/tau+(q-1)^2/tau^2*(b1^2/2*q-b3^2/(2*q))+(b0-b2)*q/tau-q*(q+1)/(2*(q-1))",
       "a=b1^2/2, b=-b3^2/2, c=b0-b2, d=-1/2"},
      {"PIV", SystemId::A2, "X", "", "p^2/(2*q)+3/2*q^3+4*tau*q^2+2*(tau^2-(1-b1-2*b2))*q-2*b1^2/q",
       "a=1-b1-2*b2, b=-2*b1^2"},
      {"PIII", SystemId::C2, "X/tau", "tau^2", "p^2/q-p/tau+(4*(b0-b2)*q^2-4*(b0+b2-1))/tau+4*q^3-4/q",
       "a=4*(b0-b2), b=-4*(b0+b2-1), c=4, d=-4"},
      {"PII", SystemId::A1, "X", "", "2*q^3+tau*q+(b1-1/2)", "coefficient b1-1/2"},
      {"A22-q", SystemId::A22, "x", "", "2/q*p^2-a0*q^2-tau*q+q^2/2-2/q", "as stated"},
  };
  return all;
}

const ScalarReduction& scalar_reduction(std::string_view name) {
  for (const auto& r : scalar_reductions())
    if (r.name == name) return r;
  throw UnknownName("no scalar reduction named " + std::string(name));
}

RatExpr eliminated_rhs(const ScalarReduction& red) {
  const HamiltonianSystem& sys = get_system(red.system);
  if (sys.dof != 1) throw EliminationFailed(red.name + ": only two-dimensional systems reduce to one equation");
  Var tau = Var::of("tau");
  RatExpr t_of_tau = red.time_of_tau.empty() ? RatExpr::var(tau) : parse_infix(red.time_of_tau);
  Bindings retime{{sys.time_var, t_of_tau}};
  std::vector<RatExpr> field;
  for (const auto& f : vector_field(sys).rhs) field.push_back(f.substitute(retime));
  RatExpr dt = t_of_tau.diff(tau);
  auto deriv = [&](const RatExpr& f) {
    RatExpr s = f.diff(tau);
    for (std::size_t k = 0; k < field.size(); ++k) s += dt * f.diff(sys.phase_vars[k]) * field[k];
    return s;
  };
  RatExpr q = parse_infix(red.q).substitute(retime);
  RatExpr p = deriv(q);
  RatExpr qpp = deriv(p);

  PhaseSpace src;
  src.name = to_string(red.system) + "[tau]";
  src.phase = sys.phase_vars;
  src.time = tau;
  src.params = sys.params;
  src.constraint = sys.constraint;
  PhaseSpace dst = src;
  dst.name = red.name;
  dst.phase = {Var::of("q"), Var::of("p")};
  BirationalMap m(red.name, src, dst, {{Var::of("q"), q}, {Var::of("p"), p}});
  BirationalMap inv;
  try {
    inv = inverse(m);
  } catch (const NotInvertible& e) {
    throw EliminationFailed(red.name + ": " + e.what());
  }
  return sys.constraint.reduce(apply(inv, qpp));
}

CheckReport verify_scalar_reduction(const ScalarReduction& red) {
  CheckReport r;
  const HamiltonianSystem& sys = get_system(red.system);
  RatExpr engine = eliminated_rhs(red);
  RatExpr stated = sys.constraint.reduce(parse_infix(red.rhs));
  RatExpr diff = sys.constraint.reduce(engine - stated);
  if (diff.is_zero()) {
    r.detail = red.constants;
    return r;
  }
  r.status = Status::fail;
  r.residual = diff;
  r.detail = "stated equation does not follow; eliminant gives q'' = " + engine.to_string();
  return r;
}

}  // namespace painleve
