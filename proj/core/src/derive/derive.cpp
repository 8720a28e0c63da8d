#include "painleve/derive/derive.hpp"

#include <atomic>
#include <map>
#include <thread>

#include "painleve/error.hpp"
#include "painleve/maps/flow.hpp"

namespace painleve {

namespace {

void enumerate(const std::vector<Var>& phase, std::size_t pos, unsigned left, Monomial cur,
               std::vector<Monomial>& out) {
  if (pos == phase.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  for (unsigned k = left + 1; k-- > 0;) enumerate(phase, pos + 1, left - k, cur * Monomial::of(phase[pos], k), out);
}

VarMask mask_of_all(const std::vector<Var>& vs) {
  VarMask m = 0;
  for (Var v : vs) m |= mask_of(v);
  return m;
}

Monomial strip(const Monomial& m, const std::vector<Var>& phase) {
  Monomial r = m;
  for (Var v : phase) r = r.without(v);
  return r;
}

using LaurentKey = std::vector<int>;

// e = N / (q * phase monomial) split into Laurent terms in the phase
// variables with coefficients in the time and parameters.
std::map<LaurentKey, RatExpr> laurent_terms(const RatExpr& e, const std::vector<Var>& phase) {
  const MultiPoly& den = e.den();
  std::vector<unsigned> shift(phase.size());
  for (std::size_t i = 0; i < phase.size(); ++i) {
    shift[i] = den.min_degree(phase[i]);
    if (den.degree(phase[i]) != shift[i])
      throw Error("chart pole along a non-monomial divisor in " + phase[i].name());
  }
  MultiPoly q;
  Monomial dm;
  for (std::size_t i = 0; i < phase.size(); ++i) dm = dm * Monomial::of(phase[i], shift[i]);
  q = den.divided_by_monomial(dm);

  std::map<LaurentKey, std::vector<Term>> grouped;
  for (const auto& t : e.num().terms()) {
    LaurentKey k(phase.size());
    for (std::size_t i = 0; i < phase.size(); ++i) k[i] = int(t.m.exp(phase[i])) - int(shift[i]);
    grouped[k].push_back({strip(t.m, phase), t.c});
  }
  std::map<LaurentKey, RatExpr> out;
  for (auto& [k, terms] : grouped) out[k] = RatExpr::normalize(MultiPoly::from_terms(std::move(terms)), q);
  return out;
}

bool has_negative(const LaurentKey& k) {
  for (int x : k)
    if (x < 0) return true;
  return false;
}

}  // namespace

RatExpr Ansatz::monomial(std::size_t k) const { return RatExpr(MultiPoly::monomial(monomials[k])); }

RatExpr Ansatz::hamiltonian(const std::vector<RatExpr>& values) const {
  RatExpr h;
  for (std::size_t k = 0; k < monomials.size() && k < values.size(); ++k)
    if (!values[k].is_zero()) h += values[k] * monomial(k);
  return h;
}

Ansatz build_ansatz(const std::vector<Var>& phase, int degree_bound) {
  if (degree_bound < 1 || phase.empty()) throw Error("build_ansatz: need phase variables and degree >= 1");
  Ansatz a;
  a.phase = phase;
  a.degree_bound = degree_bound;
  for (int d = 0; d <= degree_bound; ++d) enumerate(phase, 0, unsigned(d), Monomial::one(), a.monomials);
  return a;
}

Ansatz build_ansatz(int dof, int degree_bound) {
  if (dof == 1) return build_ansatz({Var::of("x"), Var::of("y")}, degree_bound);
  if (dof == 2) return build_ansatz({Var::of("x"), Var::of("y"), Var::of("z"), Var::of("w")}, degree_bound);
  throw Error("build_ansatz: dof must be 1 or 2");
}

ChartFragment impose_chart(const Ansatz& a, const BirationalMap& chart) {
  ChartFragment frag{chart.name(), {}};
  const PhaseSpace& src = chart.source();
  if (chart.time_image() != RatExpr::var(src.time)) throw Error("impose_chart: charts must keep the time");
  BirationalMap inv = inverse_of(chart);
  const std::vector<Var>& cphase = chart.target().phase;
  auto reduce = [&](const RatExpr& e) { return src.reduce(e); };

  // Zero field: only the explicit time dependence of the chart remains.
  std::vector<RatExpr> zero(a.phase.size());
  auto drift = transform_field(chart, inv, zero);

  // (component, Laurent key) -> row
  std::map<std::pair<std::size_t, LaurentKey>, LinearEquation> rows;
  for (std::size_t i = 0; i < drift.size(); ++i)
    for (auto& [k, c] : laurent_terms(reduce(drift[i]), cphase))
      if (has_negative(k)) rows[{i, k}].rhs = -c;
  for (std::size_t m = 0; m < a.size(); ++m) {
    auto field = hamiltonian_field(a.monomial(m), a.phase).rhs;
    bool trivial = true;
    for (const auto& f : field) trivial &= f.is_zero();
    if (trivial) continue;
    auto moved = transform_field(chart, inv, field);
    for (std::size_t i = 0; i < moved.size(); ++i)
      for (auto& [k, c] : laurent_terms(reduce(moved[i] - drift[i]), cphase))
        if (has_negative(k) && !c.is_zero()) rows[{i, k}].lhs[int(m)] = c;
  }
  for (auto& [key, eq] : rows)
    if (!eq.lhs.empty() || !eq.rhs.is_zero()) frag.equations.push_back(std::move(eq));
  return frag;
}

LinearSolution solve(const std::vector<ChartFragment>& fragments, int unknowns) {
  LinearSolver s(unknowns);
  for (const auto& f : fragments)
    for (const auto& eq : f.equations)
      if (!s.add(eq)) return s.solution();
  return s.solution();
}

bool check_certificate(const std::vector<ChartFragment>& fragments, const LinearSolution& s) {
  if (s.consistent) return false;
  std::vector<const LinearEquation*> flat;
  for (const auto& f : fragments)
    for (const auto& eq : f.equations) flat.push_back(&eq);
  SparseRow lhs;
  RatExpr rhs;
  for (const auto& [j, mult] : s.certificate) {
    if (j < 0 || std::size_t(j) >= flat.size()) return false;
    for (const auto& [col, c] : flat[j]->lhs) lhs[col] += mult * c;
    rhs += mult * flat[j]->rhs;
  }
  for (const auto& [col, c] : lhs)
    if (!c.is_zero()) return false;
  return !rhs.is_zero() && rhs == s.certificate_value;
}

int Derivation::equation_count() const {
  int n = 0;
  for (const auto& f : fragments) n += int(f.equations.size());
  return n;
}

Derivation derive(std::string name, const Ansatz& a, const std::vector<BirationalMap>& charts, unsigned jobs) {
  Derivation d;
  d.name = std::move(name);
  d.ansatz = a;
  d.fragments.resize(charts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < charts.size();) d.fragments[k] = impose_chart(a, charts[k]);
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < std::min<std::size_t>(jobs, charts.size()); ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  d.solution = solve(d.fragments, int(a.size()));
  if (!d.solution.consistent) return d;
  d.hamiltonian = a.hamiltonian(d.solution.particular);
  VarMask phase = mask_of_all(a.phase);
  for (const auto& v : d.solution.nullspace) {
    RatExpr h = a.hamiltonian(v);
    d.kernel_phase_free &= (h.vars() & phase) == 0;
    d.kernel.push_back(h);
  }
  return d;
}

Derivation derive_system(SystemId id, unsigned jobs) {
  const HamiltonianSystem& sys = get_system(id);
  if (!sys.characterized) throw UnknownName(to_string(id) + " has no chart list");
  return derive(to_string(id), build_ansatz(sys.phase_vars, sys.degree_bound), charts(id), jobs);
}

Derivation derive_problem(std::string_view name, unsigned jobs) {
  const ProblemSpec& p = problem(name);
  return derive(p.name, build_ansatz(p.space.phase, p.degree_bound), p.charts, jobs);
}

RatExpr phase_part(const RatExpr& h, const std::vector<Var>& phase) {
  VarMask m = mask_of_all(phase);
  if (h.den().vars() & m) throw Error("phase_part: denominator involves a phase variable");
  std::vector<Term> kept;
  for (const auto& t : h.num().terms())
    if (t.m.vars() & m) kept.push_back(t);
  return RatExpr::normalize(MultiPoly::from_terms(std::move(kept)), h.den());
}

CheckReport verify_rederivation(SystemId id, unsigned jobs) {
  CheckReport r;
  const HamiltonianSystem& sys = get_system(id);
  Derivation d = derive_system(id, jobs);
  std::string shape = std::to_string(d.ansatz.size()) + " monomials, " + std::to_string(d.equation_count()) +
                      " equations, rank " + std::to_string(d.solution.rank);
  if (!d.solution.consistent) {
    r.status = Status::fail;
    r.residual = d.solution.certificate_value;
    r.detail = shape + "; inconsistent, the catalog Hamiltonian is not in the solution space";
    return r;
  }
  if (!d.kernel_phase_free) {
    r.status = Status::fail;
    for (const auto& k : d.kernel)
      if (k.vars() & mask_of_all(sys.phase_vars)) r.residual = k;
    r.detail = shape + "; solution space has " + std::to_string(d.dimension()) +
               " directions, some depend on the phase variables";
    return r;
  }
  const PhaseSpace space = space_of(sys);
  RatExpr diff = space.reduce(phase_part(*d.hamiltonian, sys.phase_vars) - phase_part(sys.hamiltonian, sys.phase_vars));
  if (!diff.is_zero()) {
    r.status = Status::fail;
    r.residual = diff;
    r.detail = shape + "; solved Hamiltonian differs from the catalog one";
    return r;
  }
  r.detail = shape + "; unique up to " + std::to_string(d.dimension()) + " phase-free direction(s)";
  return r;
}

CheckReport verify_infeasible(std::string_view problem_name, unsigned jobs) {
  CheckReport r;
  Derivation d = derive_problem(problem_name, jobs);
  std::string shape = std::to_string(d.ansatz.size()) + " monomials, " + std::to_string(d.equation_count()) +
                      " equations";
  if (d.solution.consistent) {
    r.status = Status::fail;
    r.residual = *d.hamiltonian;
    r.detail = shape + "; a polynomial Hamiltonian of degree <= " + std::to_string(d.ansatz.degree_bound) +
               " exists (" + std::to_string(d.dimension()) + " free directions)";
    return r;
  }
  if (!check_certificate(d.fragments, d.solution)) {
    r.status = Status::fail;
    r.residual = d.solution.certificate_value;
    r.detail = shape + "; inconsistent but the certificate does not recombine";
    return r;
  }
  r.detail = shape + "; no ansatz member of degree <= " + std::to_string(d.ansatz.degree_bound) +
             " is polynomial in every chart (certificate of " + std::to_string(d.solution.certificate.size()) +
             " equations checked)";
  // Separate "nothing at all" from "only above the degree bound".
  const ProblemSpec& p = problem(problem_name);
  Derivation up = derive(p.name, build_ansatz(p.space.phase, p.degree_bound + 1), p.charts, jobs);
  r.detail += up.solution.consistent ? "; a solution exists at degree " + std::to_string(p.degree_bound + 1)
                                     : "; still infeasible at degree " + std::to_string(p.degree_bound + 1);
  return r;
}

}  // namespace painleve
