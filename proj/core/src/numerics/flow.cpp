#include "painleve/numerics/flow.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "painleve/error.hpp"
#include "painleve/exactalg/gcd.hpp"
#include "painleve/exactalg/infix.hpp"

namespace painleve {

namespace {

Env bind_params(const HamiltonianSystem& sys, const CVec& params) {
  Env env{};
  for (std::size_t k = 0; k < sys.params.size() && k < params.size(); ++k) env[sys.params[k].id()] = params[k];
  return env;
}

cplx random_in_ball(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  for (;;) {
    cplx z(u(rng), u(rng));
    if (std::abs(z) <= radius) return z;
  }
}

bool away_from_divisors(const HamiltonianSystem& sys, const CVec& s, double margin) {
  auto far = [&](cplx a, cplx b) { return std::abs(a - b) > margin; };
  for (std::size_t k = 0; k < sys.phase_vars.size(); ++k) {
    bool position = k % 2 == 0;
    if (!far(s[k], 0)) return false;
    if (position && !far(s[k], 1)) return false;
  }
  if (s.size() == 4 && !far(s[0], s[2])) return false;
  return true;
}

// Zeros in t shared by every denominator term: t-values where the field is
// singular for all phase points.
std::vector<cplx> time_singularities(const HamiltonianSystem& sys, const CVec& params) {
  std::vector<cplx> roots;
  Env env = bind_params(sys, params);
  Var t = sys.time_var;
  for (const auto& f : vector_field(sys).rhs) {
    MultiPoly c = f.den();
    for (Var v : sys.phase_vars) c = content_in(c, v);
    if (c.degree(t) == 0) continue;
    auto coeffs = c.coefficients(t);  // ascending powers
    std::vector<cplx> a;
    for (const auto& p : coeffs) a.push_back(CompiledExpr(RatExpr(p))(env));
    while (a.size() > 1 && std::abs(a.back()) == 0) a.pop_back();
    std::size_t n = a.size() - 1;
    if (n == 0) continue;
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(Eigen::Index(n), Eigen::Index(n));
    for (std::size_t i = 1; i < n; ++i) comp(Eigen::Index(i), Eigen::Index(i - 1)) = 1;
    for (std::size_t i = 0; i < n; ++i) comp(Eigen::Index(i), Eigen::Index(n - 1)) = -a[i] / a[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) roots.push_back(es.eigenvalues()(i));
  }
  return roots;
}

double segment_distance(cplx p, cplx a, cplx b) {
  cplx d = b - a;
  double s = std::norm(d) > 0 ? std::clamp(((p - a) * std::conj(d)).real() / std::norm(d), 0.0, 1.0) : 0.0;
  return std::abs(p - (a + s * d));
}

constexpr double kRoundoffFloor = 1e-14;

std::string show(cplx z) { return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")"; }

double relative_gap(const CVec& a, const CVec& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]) / std::max(1.0, std::abs(a[i])));
  return d;
}

}  // namespace

FlowConfig random_config(SystemId id, std::uint64_t seed, cplx t0, cplx t1) {
  const HamiltonianSystem& sys = get_system(id);
  std::mt19937_64 rng(seed);
  FlowConfig cfg;
  cfg.system = id;
  cfg.t0 = t0;
  cfg.t1 = t1;
  cfg.seed = seed;
  cfg.params.resize(sys.params.size());
  for (auto& p : cfg.params) p = random_in_ball(rng, 0.5);
  // Solve the constraint for the eliminated parameter.
  Env env = bind_params(sys, cfg.params);
  cplx forced = CompiledExpr(sys.constraint.eliminated_value())(env);
  for (std::size_t k = 0; k < sys.params.size(); ++k)
    if (sys.params[k] == sys.constraint.eliminated) cfg.params[k] = forced;
  do {
    cfg.state.assign(sys.phase_vars.size(), 0);
    for (auto& s : cfg.state) s = cplx(0.5, 0) + random_in_ball(rng, 0.6);
  } while (!away_from_divisors(sys, cfg.state, 0.2));
  return cfg;
}

double constraint_residual(const FlowConfig& cfg) {
  const HamiltonianSystem& sys = get_system(cfg.system);
  Env env = bind_params(sys, cfg.params);
  return std::abs(CompiledExpr(sys.constraint.lhs() - RatExpr(sys.constraint.rhs))(env));
}

Rhs system_rhs(SystemId id, const CVec& params) {
  const HamiltonianSystem& sys = get_system(id);
  std::vector<CompiledExpr> field;
  for (const auto& f : vector_field(sys).rhs) field.emplace_back(f);
  Env base = bind_params(sys, params);
  std::vector<Var> phase = sys.phase_vars;
  Var t = sys.time_var;
  return [field = std::move(field), base, phase, t](cplx time, const CVec& y, CVec& dy) {
    Env env = base;
    env[t.id()] = time;
    for (std::size_t k = 0; k < phase.size(); ++k) env[phase[k].id()] = y[k];
    dy.resize(field.size());
    for (std::size_t k = 0; k < field.size(); ++k) dy[k] = field[k](env);
  };
}

Trajectory integrate(const FlowConfig& cfg, std::vector<double> sample_s) {
  const HamiltonianSystem& sys = get_system(cfg.system);
  if (cfg.params.size() != sys.params.size() || cfg.state.size() != sys.phase_vars.size())
    throw Error("integrate: configuration does not match " + to_string(cfg.system));
  if (constraint_residual(cfg) > 1e-12) throw BadConstantTerm("parameters violate the constraint");
  for (cplx r : time_singularities(sys, cfg.params))
    if (segment_distance(r, cfg.t0, cfg.t1) < 1e-9 * (1 + std::abs(r)))
      throw SingularityEncountered("time path " + show(cfg.t0) + " -> " + show(cfg.t1) + " meets t = " + show(r));
  return dopri45(system_rhs(cfg.system, cfg.params), cfg.t0, cfg.t1, cfg.state, cfg.integrator, std::move(sample_s));
}

MappedPoint apply_numeric(const BirationalMap& m, const CVec& state, cplx t, const CVec& params) {
  const PhaseSpace& src = m.source();
  const PhaseSpace& dst = m.target();
  Env env{};
  for (std::size_t k = 0; k < src.phase.size(); ++k) env[src.phase[k].id()] = state[k];
  env[src.time.id()] = t;
  for (std::size_t k = 0; k < src.params.size(); ++k) env[src.params[k].id()] = params[k];
  MappedPoint out;
  for (Var v : dst.phase) out.state.push_back(CompiledExpr(m.image(v))(env));
  out.time = CompiledExpr(m.image(dst.time))(env);
  for (Var v : dst.params) out.params.push_back(CompiledExpr(m.image(v))(env));
  return out;
}

Commutation flow_commutation(const BirationalMap& m, const FlowConfig& cfg) {
  if (m.target().phase.size() != cfg.state.size()) throw Error("flow_commutation: map and system differ");
  Trajectory a = integrate(cfg);
  if (a.failed) throw SingularityEncountered("flow leg: " + a.message + "; last good t = " + show(a.final_time()));
  MappedPoint end = apply_numeric(m, a.final_state(), cfg.t1, cfg.params);

  MappedPoint start = apply_numeric(m, cfg.state, cfg.t0, cfg.params);
  FlowConfig moved = cfg;
  moved.state = start.state;
  moved.params = start.params;
  moved.t0 = start.time;
  moved.t1 = end.time;
  Trajectory b = integrate(moved);
  if (b.failed) throw SingularityEncountered("mapped leg: " + b.message + "; last good t = " + show(b.final_time()));

  Commutation c;
  c.flow_then_map = end.state;
  c.map_then_flow = b.final_state();
  c.deviation = relative_gap(c.flow_then_map, c.map_then_flow);
  return c;
}

double observed_order(const FlowConfig& cfg, int base_steps) {
  // Richardson differences d_k between n_k and 2 n_k steps, taken as the
  // largest gap over the coarse grid (a single endpoint can sit on a near
  // cancellation of the error terms). The rate is read at the finest pair
  // whose smaller difference is still above the roundoff floor.
  Rhs f = system_rhs(cfg.system, cfg.params);
  std::vector<std::vector<CVec>> paths;
  for (int n = base_steps; n <= 512 * base_steps; n *= 2)
    paths.push_back(dopri_fixed_path(f, cfg.t0, cfg.t1, cfg.state, n));
  std::vector<double> d;
  for (std::size_t k = 0; k + 1 < paths.size(); ++k) {
    double g = 0;
    for (std::size_t j = 0; j < paths[k].size(); ++j) g = std::max(g, relative_gap(paths[k][j], paths[k + 1][2 * j]));
    d.push_back(g);
  }
  std::optional<std::size_t> pick;
  for (std::size_t k = 0; k + 1 < d.size(); ++k)
    if (d[k + 1] > kRoundoffFloor) pick = k;
  if (!pick) throw Error("observed_order: differences are at roundoff from the first halving");
  return std::log2(d[*pick] / d[*pick + 1]);
}

ScalarResidual scalar_residual(const ScalarReduction& red, const FlowConfig& cfg, double tau0, double tau1,
                               int intervals) {
  const HamiltonianSystem& sys = get_system(red.system);
  Var tau = Var::of("tau");
  RatExpr t_of_tau = red.time_of_tau.empty() ? RatExpr::var(tau) : parse_infix(red.time_of_tau);
  CompiledExpr time_at(t_of_tau), q_of(parse_infix(red.q)), rhs(parse_infix(red.rhs));

  double h = (tau1 - tau0) / intervals;
  Env env = bind_params(sys, cfg.params);
  auto t_at = [&](double s) {
    env[tau.id()] = s;
    return time_at(env);
  };
  FlowConfig run = cfg;
  run.t0 = t_at(tau0);
  run.t1 = t_at(tau1);
  std::vector<double> fractions;
  for (int j = 0; j <= intervals; ++j) {
    cplx tj = t_at(tau0 + j * h);
    fractions.push_back(((tj - run.t0) / (run.t1 - run.t0)).real());
  }
  Trajectory tr = integrate(run, fractions);
  if (tr.failed) throw SingularityEncountered(red.name + ": " + tr.message);

  std::vector<cplx> q(tr.samples.size());
  for (std::size_t j = 0; j < q.size(); ++j) {
    env[sys.time_var.id()] = t_at(tau0 + double(j) * h);
    for (std::size_t k = 0; k < sys.phase_vars.size(); ++k) env[sys.phase_vars[k].id()] = tr.samples[j][k];
    q[j] = q_of(env);
  }
  ScalarResidual out;
  out.h = h;
  Var qv = Var::of("q"), pv = Var::of("p");
  for (std::size_t j = 1; j + 1 < q.size(); ++j) {
    cplx qpp = (q[j + 1] - 2.0 * q[j] + q[j - 1]) / (h * h);
    env[qv.id()] = q[j];
    env[pv.id()] = (q[j + 1] - q[j - 1]) / (2 * h);
    env[tau.id()] = tau0 + double(j) * h;
    out.max_residual = std::max(out.max_residual, std::abs(qpp - rhs(env)));
    ++out.samples;
  }
  return out;
}

}  // namespace painleve
