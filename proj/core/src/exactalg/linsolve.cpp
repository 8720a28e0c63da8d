#include "painleve/exactalg/linsolve.hpp"

#include <algorithm>

#include "painleve/exactalg/gcd.hpp"

namespace painleve {

namespace {

void axpy(SparseRow& dst, const RatExpr& f, const SparseRow& src) {
  for (const auto& [c, v] : src) {
    auto it = dst.find(c);
    if (it == dst.end()) {
      dst.emplace(c, -(f * v));
    } else {
      it->second -= f * v;
      if (it->second.is_zero()) dst.erase(it);
    }
  }
}

}  // namespace

bool LinearSolver::add(const LinearEquation& eq) {
  int index = seen_++;
  if (!consistent_) return false;
  Row r;
  for (const auto& [c, v] : eq.lhs)
    if (!v.is_zero()) r.coeffs.emplace(c, v);
  r.rhs = eq.rhs;
  r.combo.emplace(index, RatExpr(1));

  std::vector<int> hits;
  for (const auto& [c, v] : r.coeffs)
    if (pivots_.count(c)) hits.push_back(c);
  for (int c : hits) {
    RatExpr f = r.coeffs.at(c);
    const Row& p = pivots_.at(c);
    axpy(r.coeffs, f, p.coeffs);
    r.rhs -= f * p.rhs;
    axpy(r.combo, f, p.combo);
  }
  if (r.coeffs.empty()) {
    if (r.rhs.is_zero()) return true;
    consistent_ = false;
    failure_ = std::move(r);
    return false;
  }

  // Smallest coefficient as pivot keeps the fill-in expressions small.
  int col = r.coeffs.begin()->first;
  std::size_t best = r.coeffs.begin()->second.size();
  for (const auto& [c, v] : r.coeffs) {
    if (v.size() < best) {
      best = v.size();
      col = c;
    }
  }
  RatExpr inv = r.coeffs.at(col).inverse();
  for (auto& [c, v] : r.coeffs) v *= inv;
  r.rhs *= inv;
  for (auto& [c, v] : r.combo) v *= inv;

  for (auto& [pc, p] : pivots_) {
    auto it = p.coeffs.find(col);
    if (it == p.coeffs.end()) continue;
    RatExpr f = it->second;
    axpy(p.coeffs, f, r.coeffs);
    p.rhs -= f * r.rhs;
    axpy(p.combo, f, r.combo);
  }
  pivots_.emplace(col, std::move(r));
  return true;
}

LinearSolution LinearSolver::solution() const {
  LinearSolution s;
  s.unknowns = n_;
  s.rank = rank();
  s.consistent = consistent_;
  if (!consistent_) {
    s.certificate = failure_.combo;
    s.certificate_value = failure_.rhs;
    return s;
  }
  s.particular.assign(static_cast<std::size_t>(n_), RatExpr());
  for (const auto& [c, row] : pivots_) s.particular[static_cast<std::size_t>(c)] = row.rhs;
  for (int f = 0; f < n_; ++f) {
    if (pivots_.count(f)) continue;
    s.free_columns.push_back(f);
    std::vector<RatExpr> v(static_cast<std::size_t>(n_));
    v[static_cast<std::size_t>(f)] = RatExpr(1);
    for (const auto& [c, row] : pivots_) {
      auto it = row.coeffs.find(f);
      if (it != row.coeffs.end()) v[static_cast<std::size_t>(c)] = -it->second;
    }
    s.nullspace.push_back(std::move(v));
  }
  return s;
}

LinearSolution solve_linear(const std::vector<LinearEquation>& eqs, int unknowns) {
  LinearSolver solver(unknowns);
  for (const auto& e : eqs)
    if (!solver.add(e)) break;
  return solver.solution();
}

std::optional<RatExpr> rational_antiderivative(const RatExpr& e, Var v) {
  if (e.is_zero()) return RatExpr();
  if (!e.depends_on(v)) return e * RatExpr::var(v);
  const MultiPoly& p = e.num();
  const MultiPoly& q = e.den();
  if (!(q.vars() & mask_of(v))) {
    std::vector<RatExpr> cs = coefficients_in(e, v);
    RatExpr out;
    RatExpr x = RatExpr::var(v);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (cs[k].is_zero()) continue;
      out += cs[k] * x.pow(static_cast<int>(k + 1)) * RatExpr::rational(1, static_cast<long>(k + 1));
    }
    return out;
  }
  // Any rational antiderivative has the form A / B with B = gcd(q, dq/dv).
  MultiPoly b = gcd(q, q.diff(v));
  if (!(b.vars() & mask_of(v))) return std::nullopt;
  int n = static_cast<int>(p.degree(v)) - static_cast<int>(q.degree(v)) + static_cast<int>(b.degree(v)) + 1;
  if (n < 0) return std::nullopt;
  MultiPoly bv = b.diff(v);
  MultiPoly x = MultiPoly::var(v);
  // (A' B - A B') q = p B^2, A = sum_j c_j v^j.
  std::map<unsigned, SparseRow> rows;
  for (int j = 0; j <= n; ++j) {
    MultiPoly vj = x.pow(static_cast<unsigned>(j));
    MultiPoly term = -(vj * bv);
    if (j > 0) term += x.pow(static_cast<unsigned>(j - 1)).scaled(Scalar(static_cast<long>(j))) * b;
    term = term * q;
    auto cs = term.coefficients(v);
    for (std::size_t k = 0; k < cs.size(); ++k)
      if (!cs[k].is_zero()) rows[static_cast<unsigned>(k)][j] = RatExpr(cs[k]);
  }
  auto rhs = (p * b * b).coefficients(v);
  std::size_t top = rhs.size();
  for (const auto& [k, r] : rows) top = std::max<std::size_t>(top, k + 1);
  std::vector<LinearEquation> eqs;
  for (std::size_t k = 0; k < top; ++k) {
    LinearEquation eq;
    if (rows.count(static_cast<unsigned>(k))) eq.lhs = rows[static_cast<unsigned>(k)];
    if (k < rhs.size()) eq.rhs = RatExpr(rhs[k]);
    eqs.push_back(std::move(eq));
  }
  LinearSolution sol = solve_linear(eqs, n + 1);
  if (!sol.consistent) return std::nullopt;
  RatExpr a;
  RatExpr xv = RatExpr::var(v);
  for (int j = 0; j <= n; ++j) a += sol.particular[static_cast<std::size_t>(j)] * xv.pow(j);
  RatExpr f = a / RatExpr(b);
  if (f.diff(v) != e) return std::nullopt;
  return f;
}

}  // namespace painleve
