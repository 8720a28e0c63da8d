#include "painleve/catalog/system.hpp"

#include <map>
#include <mutex>

#include "painleve/error.hpp"
#include "painleve/exactalg/infix.hpp"

namespace painleve {

namespace {

std::vector<Var> vars(std::initializer_list<const char*> names) {
  std::vector<Var> out;
  for (auto n : names) out.push_back(Var::of(n));
  return out;
}

std::vector<Var> params(const char* prefix, int n) {
  std::vector<Var> out;
  for (int k = 0; k < n; ++k) out.push_back(Var::of(std::string(prefix) + std::to_string(k)));
  return out;
}

ParamConstraint constraint(std::initializer_list<std::pair<const char*, long>> terms, Scalar rhs,
                           const char* eliminated) {
  ParamConstraint c;
  for (auto [n, k] : terms) c.terms.emplace_back(Var::of(n), Scalar(k));
  c.rhs = std::move(rhs);
  c.eliminated = Var::of(eliminated);
  return c;
}

std::vector<RatExpr> field(std::initializer_list<const char*> rows) {
  std::vector<RatExpr> out;
  for (auto r : rows) out.push_back(parse_infix(r));
  return out;
}

RatExpr subst(const RatExpr& e, std::initializer_list<std::pair<const char*, const char*>> b) {
  Bindings bind;
  for (auto [v, ex] : b) bind.emplace(Var::of(v), parse_infix(ex));
  return e.substitute(bind);
}

// Hamiltonians of the base systems, reused by the coupled ones.
const char* kHB3 = "-(-t*y + x^3*y^2 - x^2*y^2 + (a1+2*a2)*x^2*y + (t-1+2*a3)*x*y + (a1+a2)*a2*x)/t";
const char* kHA3 = "(Y*(Y+T)*X*(X-1) + b2*X*T - b3*X*Y - b1*Y*(X-1))/T";
const char* kHD32 = "(x^2*y*(y-t) - (2*a0*y + t*a1)*x + y)/t";
const char* kHC2 = "(X^2*Y*(Y-1) + X*((b0+b2)*Y - b0) + T*Y)/T";

std::map<SystemId, HamiltonianSystem> build_catalog() {
  std::map<SystemId, HamiltonianSystem> m;
  auto xy = vars({"x", "y"});
  auto xyzw = vars({"x", "y", "z", "w"});
  auto XY = vars({"X", "Y"});
  auto XYZW = vars({"X", "Y", "Z", "W"});
  Var t = Var::of("t"), T = Var::of("T");

  {
    HamiltonianSystem s;
    s.id = SystemId::PVI_D4;
    s.label = "D4^(1) (sixth Painleve)";
    s.phase_vars = xy;
    s.time_var = t;
    s.params = params("a", 5);
    s.hamiltonian = parse_infix(
        "(y^2*(x-t)*(x-1)*x - ((a0-1)*(x-1)*x + a3*(x-t)*x + a4*(x-t)*(x-1))*y + a2*(a1+a2)*x)/(t*(t-1))");
    s.constraint = constraint({{"a0", 1}, {"a1", 1}, {"a2", 2}, {"a3", 1}, {"a4", 1}}, 1, "a1");
    // Only H is stated; the field below was expanded by hand.
    s.displayed_field = field({
        "(2*y*(x-t)*(x-1)*x - ((a0-1)*(x-1)*x + a3*(x-t)*x + a4*(x-t)*(x-1)))/(t*(t-1))",
        "-(y^2*((x-1)*x + (x-t)*x + (x-t)*(x-1)) - ((a0-1)*(2*x-1) + a3*(2*x-t) + a4*(2*x-t-1))*y"
        " + a2*(a1+a2))/(t*(t-1))",
    });
    s.field_is_displayed = false;
    m.emplace(s.id, std::move(s));
  }
  {
    HamiltonianSystem s;
    s.id = SystemId::B3;
    s.label = "B3^(1)";
    s.phase_vars = xy;
    s.time_var = t;
    s.params = params("a", 4);
    s.hamiltonian = parse_infix(kHB3);
    s.constraint = constraint({{"a0", 1}, {"a1", 1}, {"a2", 2}, {"a3", 2}}, 1, "a0");
    s.displayed_field = field({
        "(-2*x^3*y+2*x^2*y-(a1+2*a2)*x^2-(t-1+2*a3)*x+t)/t",
        "(3*x^2*y^2-2*x*y^2+2*(a1+2*a2)*x*y+(t-1+2*a3)*y+(a1+a2)*a2)/t",
    });
    s.characterized = true;
    m.emplace(s.id, std::move(s));
  }
  {
    HamiltonianSystem s;
    s.id = SystemId::G2;
    s.label = "G2^(1)";
    s.phase_vars = xy;
    s.time_var = t;
    s.params = params("a", 3);
    // a2 is a declared parameter but does not occur in H.
    s.hamiltonian = parse_infix("2*x^3*y^2+2*(a0+2*a1)*x^2*y+2*t*x*y+2*a1*(a0+a1)*x+y");
    s.constraint = constraint({{"a0", 1}, {"a1", 2}, {"a2", 3}}, 1, "a2");
    s.displayed_field = field({
        "4*x^3*y+2*(a0+2*a1)*x^2+2*t*x+1",
        "-6*x^2*y^2-4*(a0+2*a1)*x*y-2*t*y-2*a1*(a0+a1)",
    });
    s.characterized = true;
    m.emplace(s.id, std::move(s));
  }
  {
    HamiltonianSystem s;
    s.id = SystemId::D32;
    s.label = "D3^(2)";
    s.phase_vars = xy;
    s.time_var = t;
    s.params = params("a", 3);
    s.hamiltonian = parse_infix(kHD32);
    s.constraint = constraint({{"a0", 1}, {"a1", 1}, {"a2", 1}}, Scalar::rational(1, 2), "a2");
    s.displayed_field = field({
        "2*x^2*y/t - x^2 - 2*a0*x/t + 1/t",
        "-2*x*y^2/t + 2*x*y + 2*a0*y/t + a1",
    });
    s.characterized = true;
    m.emplace(s.id, std::move(s));
  }
  {
    HamiltonianSystem s;
    s.id = SystemId::A22;
    s.label = "A2^(2)";
    s.phase_vars = xy;
    s.time_var = t;
    s.params = params("a", 2);
    s.hamiltonian = parse_infix("x^4*y^2/2 + a0*x^3*y + t*x^2*y/2 + a0^2*x^2/2 + a0*t*x/2 + y");
    s.constraint = constraint({{"a0", 2}, {"a1", 1}}, 1, "a1");
    s.degree_bound = 6;
    s.displayed_field = field({
        "x^4*y+a0*x^3+t*x^2/2+1",
        "-2*x^3*y^2-3*a0*x^2*y-t*x*y-a0^2*x-a0*t/2",
    });
    s.characterized = true;
    m.emplace(s.id, std::move(s));
  }
  {
    HamiltonianSystem s;
    s.id = SystemId::A3;
    s.label = "A3^(1)";
    s.phase_vars = XY;
    s.time_var = T;
    s.params = params("b", 4);
    s.hamiltonian = parse_infix(kHA3);
    s.constraint = constraint({{"b0", 1}, {"b1", 1}, {"b2", 1}, {"b3", 1}}, 1, "b0");
    s.displayed_field = field({
        "2*X^2*Y/T+X^2-2*X*Y/T-(1+(b1+b3)/T)*X+b1/T",
        "-2*X*Y^2/T+Y^2/T-2*X*Y+(1+(b1+b3)/T)*Y-b2",
    });
    m.emplace(s.id, std::move(s));
  }
  {
    HamiltonianSystem s;
    s.id = SystemId::A2;
    s.label = "A2^(1)";
    s.phase_vars = XY;
    s.time_var = T;
    s.params = params("b", 3);
    s.hamiltonian = parse_infix("-2*T*X*Y-X^2*Y+2*X*Y^2-2*b1*Y-b2*X");
    s.constraint = constraint({{"b0", 1}, {"b1", 1}, {"b2", 1}}, 1, "b0");
    s.displayed_field = field({
        "-X^2+4*X*Y-2*T*X-2*b1",
        "-2*Y^2+2*X*Y+2*T*Y+b2",
    });
    m.emplace(s.id, std::move(s));
  }
  {
    HamiltonianSystem s;
    s.id = SystemId::C2;
    s.label = "C2^(1)";
    s.phase_vars = XY;
    s.time_var = T;
    s.params = params("b", 3);
    s.hamiltonian = parse_infix(kHC2);
    s.constraint = constraint({{"b0", 1}, {"b1", 2}, {"b2", 1}}, 1, "b1");
    s.displayed_field = field({
        "2*X^2*Y/T-X^2/T+(b0+b2)*X/T+1",
        "-2*X*Y^2/T+2*X*Y/T-(b0+b2)*Y/T+b0/T",
    });
    m.emplace(s.id, std::move(s));
  }
  {
    HamiltonianSystem s;
    s.id = SystemId::A1;
    s.label = "A1^(1)";
    s.phase_vars = XY;
    s.time_var = T;
    s.params = params("b", 2);
    s.hamiltonian = parse_infix("Y^2/2-(X^2+T/2)*Y-b1*X");
    s.constraint = constraint({{"b0", 1}, {"b1", 1}}, 1, "b0");
    s.displayed_field = field({"-X^2+Y-T/2", "2*X*Y+b1"});
    m.emplace(s.id, std::move(s));
  }
  {
    HamiltonianSystem s;
    s.id = SystemId::B5;
    s.label = "B5^(1)";
    s.dof = 2;
    s.phase_vars = xyzw;
    s.time_var = t;
    s.params = params("a", 6);
    RatExpr hb3 = parse_infix(kHB3);
    RatExpr p1 = subst(hb3, {{"a3", "a3+a4+a5"}});
    RatExpr p2 = subst(hb3, {{"x", "z"}, {"y", "w"}, {"a1", "a1+2*a2+a3"}, {"a2", "a4"}, {"a3", "a5"}});
    RatExpr r = parse_infix("-2*(x-1)*y*z*(z*w+a4)/t");
    s.decomposition = {{"H_B3(x,y,t;a1,a2,a3+a4+a5)", p1}, {"H_B3(z,w,t;a1+2*a2+a3,a4,a5)", p2}, {"R", r}};
    s.hamiltonian = p1 + p2 + r;
    s.constraint = constraint({{"a0", 1}, {"a1", 1}, {"a2", 2}, {"a3", 2}, {"a4", 2}, {"a5", 2}}, 1, "a0");
    s.displayed_field = field({
        "-(2*x^3*y-2*x^2*y+(a1+2*a2)*x^2+(t-1+2*a3+2*a4+2*a5)*x-t)/t - 2*(x-1)*z*(z*w+a4)/t",
        "(3*x^2*y^2-2*x*y^2+2*(a1+2*a2)*x*y+(t-1+2*a3+2*a4+2*a5)*y+a2*(a1+a2))/t + 2*y*z*(z*w+a4)/t",
        "-(2*z^3*w-2*z^2*w+(a1+2*a2+a3+2*a4)*z^2+(t-1+2*a5)*z-t)/t - 2*(x-1)*y*z^2/t",
        "(3*z^2*w^2-2*z*w^2+2*(a1+2*a2+a3+2*a4)*z*w+(t-1+2*a5)*w)/t"
        " + (a4*(a1+2*a2+a3+a4)+2*(x-1)*y*(2*z*w+a4))/t",
    });
    s.characterized = true;
    m.emplace(s.id, std::move(s));
  }
  {
    HamiltonianSystem s;
    s.id = SystemId::D5;
    s.label = "D5^(1)";
    s.dof = 2;
    s.phase_vars = XYZW;
    s.time_var = T;
    s.params = params("b", 6);
    RatExpr ha3 = parse_infix(kHA3);
    RatExpr p1 = subst(ha3, {{"b1", "b2+b5"}, {"b2", "b1"}, {"b3", "b2+2*b3+b4"}});
    RatExpr p2 = subst(ha3, {{"X", "Z"}, {"Y", "W"}, {"b1", "b5"}, {"b2", "b3"}, {"b3", "b4"}});
    RatExpr r = parse_infix("2*Y*Z*((Z-1)*W+b3)/T");
    s.decomposition = {{"H_A3(X,Y,T;b2+b5,b1,b2+2*b3+b4)", p1}, {"H_A3(Z,W,T;b5,b3,b4)", p2}, {"R", r}};
    s.hamiltonian = p1 + p2 + r;
    s.constraint =
        constraint({{"b0", 1}, {"b1", 1}, {"b2", 2}, {"b3", 2}, {"b4", 1}, {"b5", 1}}, 1, "b0");
    s.displayed_field = field({
        "2*X^2*Y/T+X^2-2*X*Y/T-(1+(2*b2+2*b3+b5+b4)/T)*X+(b2+b5)/T+2*Z*((Z-1)*W+b3)/T",
        "-2*X*Y^2/T+Y^2/T-2*X*Y+(1+(2*b2+2*b3+b5+b4)/T)*Y-b1",
        "2*Z^2*W/T+Z^2-2*Z*W/T-(1+(b5+b4)/T)*Z+b5/T+2*Y*Z*(Z-1)/T",
        "-2*Z*W^2/T+W^2/T-2*Z*W+(1+(b5+b4)/T)*W-b3-2*Y*(-W+2*Z*W+b3)/T",
    });
    m.emplace(s.id, std::move(s));
  }
  {
    HamiltonianSystem s;
    s.id = SystemId::D52;
    s.label = "D5^(2)";
    s.dof = 2;
    s.phase_vars = xyzw;
    s.time_var = t;
    s.params = params("a", 5);
    RatExpr hd = parse_infix(kHD32);
    RatExpr p1 = subst(hd, {{"a0", "a2+a3+a4"}, {"a1", "a1"}, {"a2", "-1/2+a0"}});
    RatExpr p2 = subst(hd, {{"x", "z"}, {"y", "w"}, {"a0", "a4"}, {"a1", "a3"}, {"a2", "1/2-a3-a4"}});
    RatExpr r = parse_infix("2*y*z*(z*w+a3)/t");
    s.decomposition = {{"H_D32(x,y,t;a2+a3+a4,a1,-1/2+a0)", p1}, {"H_D32(z,w,t;a4,a3,1/2-a3-a4)", p2}, {"R", r}};
    s.hamiltonian = p1 + p2 + r;
    s.constraint =
        constraint({{"a0", 1}, {"a1", 1}, {"a2", 1}, {"a3", 1}, {"a4", 1}}, Scalar::rational(1, 2), "a0");
    s.displayed_field = field({
        "2*x^2*y/t-x^2-2*(a2+a3+a4)*x/t+1/t+2*z*(z*w+a3)/t",
        "-2*x*y^2/t+2*x*y+2*(a2+a3+a4)*y/t+a1",
        "2*z^2*w/t-z^2-2*a4*z/t+1/t+2*y*z^2/t",
        "-2*z*w^2/t+2*z*w+2*a4*w/t+a3-2*y*(2*z*w+a3)/t",
    });
    s.characterized = true;
    m.emplace(s.id, std::move(s));
  }
  {
    HamiltonianSystem s;
    s.id = SystemId::B4;
    s.label = "B4^(1)";
    s.dof = 2;
    s.phase_vars = XYZW;
    s.time_var = T;
    s.params = params("b", 5);
    // The expanded form is authoritative. The stated two-part split swaps the
    // first and third C2 parameters in both parts; the corrected split is kept.
    s.hamiltonian = parse_infix(
        "(X^2*Y*(Y-1)+X*((b0+b1)*Y-b1)+T*Y)/T + (Z^2*W*(W-1)+Z*((1-2*b4)*W-b3)+T*W)/T + 2*Y*Z*(Z*W+b3)/T");
    RatExpr hc2 = parse_infix(kHC2);
    RatExpr p1 = subst(hc2, {{"b0", "b1"}, {"b1", "(1-b0-b1)/2"}, {"b2", "b0"}});
    RatExpr p2 = subst(hc2, {{"X", "Z"}, {"Y", "W"}, {"b0", "b3"}, {"b1", "b4"}, {"b2", "b0+b1+2*b2+b3"}});
    RatExpr r = parse_infix("2*Y*Z*(Z*W+b3)/T");
    s.decomposition = {{"H_C2(X,Y,T;b1,(1-b0-b1)/2,b0)", p1}, {"H_C2(Z,W,T;b3,b4,b0+b1+2*b2+b3)", p2}, {"R", r}};
    s.constraint = constraint({{"b0", 1}, {"b1", 1}, {"b2", 2}, {"b3", 2}, {"b4", 2}}, 1, "b2");
    s.displayed_field = field({
        "(2*X^2*Y-X^2+(b0+b1)*X+2*b3*Z+2*Z^2*W)/T+1",
        "(-2*X*Y^2+2*X*Y-(b0+b1)*Y+b1)/T",
        "(2*Z^2*W-Z^2+(1-2*b4)*Z+2*Y*Z^2)/T+1",
        "(-2*Z*W^2+2*Z*W-(1-2*b4)*W-2*b3*Y-4*Y*Z*W+b3)/T",
    });
    m.emplace(s.id, std::move(s));
  }
  return m;
}

const std::map<SystemId, HamiltonianSystem>& catalog() {
  static const std::map<SystemId, HamiltonianSystem> c = build_catalog();
  return c;
}

}  // namespace

const std::vector<SystemId>& all_system_ids() {
  static const std::vector<SystemId> ids = {SystemId::PVI_D4, SystemId::B3, SystemId::G2, SystemId::D32,
                                            SystemId::A22,    SystemId::A3, SystemId::A2, SystemId::C2,
                                            SystemId::A1,     SystemId::B5, SystemId::D5, SystemId::D52,
                                            SystemId::B4};
  return ids;
}

std::string to_string(SystemId id) {
  switch (id) {
    case SystemId::PVI_D4: return "PVI_D4";
    case SystemId::B3: return "B3";
    case SystemId::G2: return "G2";
    case SystemId::D32: return "D32";
    case SystemId::A22: return "A22";
    case SystemId::A3: return "A3";
    case SystemId::A2: return "A2";
    case SystemId::C2: return "C2";
    case SystemId::A1: return "A1";
    case SystemId::B5: return "B5";
    case SystemId::D5: return "D5";
    case SystemId::D52: return "D52";
    case SystemId::B4: return "B4";
  }
  return "?";
}

SystemId parse_system_id(std::string_view name) {
  for (SystemId id : all_system_ids())
    if (to_string(id) == name) return id;
  if (name == "D4" || name == "PVI") return SystemId::PVI_D4;
  throw UnknownSystem("'" + std::string(name) + "'");
}

RatExpr ParamConstraint::lhs() const {
  RatExpr s;
  for (const auto& [v, c] : terms) s += RatExpr(c) * RatExpr::var(v);
  return s;
}

RatExpr ParamConstraint::eliminated_value() const {
  Scalar ce;
  RatExpr rest(rhs);
  for (const auto& [v, c] : terms) {
    if (v == eliminated) {
      ce = c;
    } else {
      rest -= RatExpr(c) * RatExpr::var(v);
    }
  }
  if (ce.is_zero()) throw Error("constraint does not involve its eliminated parameter");
  return rest * RatExpr(ce.inverse());
}

RatExpr ParamConstraint::reduce(const RatExpr& e) const {
  if (terms.empty() || !e.depends_on(eliminated)) return e;
  return e.substitute(elimination());
}

std::string ParamConstraint::to_string() const {
  return lhs().to_string() + " = " + rhs.to_string();
}

VarMask HamiltonianSystem::phase_mask() const {
  VarMask m = 0;
  for (Var v : phase_vars) m |= mask_of(v);
  return m;
}

VarMask HamiltonianSystem::param_mask() const {
  VarMask m = 0;
  for (Var v : params) m |= mask_of(v);
  return m;
}

const HamiltonianSystem& get_system(SystemId id) {
  auto it = catalog().find(id);
  if (it == catalog().end()) throw UnknownSystem(to_string(id));
  return it->second;
}

const HamiltonianSystem& get_system(std::string_view name) { return get_system(parse_system_id(name)); }

VectorField hamiltonian_field(const RatExpr& h, const std::vector<Var>& phase_vars) {
  if (phase_vars.size() % 2) throw Error("phase variables must come in canonical pairs");
  VectorField f;
  f.vars = phase_vars;
  for (std::size_t k = 0; k < phase_vars.size(); k += 2) {
    f.rhs.push_back(h.diff(phase_vars[k + 1]));
    f.rhs.push_back(-h.diff(phase_vars[k]));
  }
  return f;
}

VectorField vector_field(const HamiltonianSystem& sys) { return hamiltonian_field(sys.hamiltonian, sys.phase_vars); }

std::optional<unsigned> phase_degree(const HamiltonianSystem& sys) {
  VarMask pm = sys.phase_mask();
  if (sys.hamiltonian.den().vars() & pm) return std::nullopt;
  return sys.hamiltonian.num().degree_in(pm);
}

bool check_degree(const HamiltonianSystem& sys) {
  auto d = phase_degree(sys);
  return d && *d <= static_cast<unsigned>(sys.degree_bound);
}

}  // namespace painleve
