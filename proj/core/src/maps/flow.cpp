#include "painleve/maps/flow.hpp"

#include "painleve/error.hpp"
#include "painleve/exactalg/linsolve.hpp"

namespace painleve {

std::vector<RatExpr> pushforward_in_source(const BirationalMap& m, const std::vector<RatExpr>& field) {
  const PhaseSpace& src = m.source();
  if (field.size() != src.phase.size()) throw Error("field dimension does not match " + src.name);
  RatExpr dtau = m.time_image().diff(src.time);
  if (dtau.is_zero()) throw Error("time image of " + m.name() + " does not depend on time");
  std::vector<RatExpr> out;
  for (Var v : m.target().phase) {
    const RatExpr& img = m.image(v);
    RatExpr s = img.diff(src.time);
    for (std::size_t k = 0; k < src.phase.size(); ++k) {
      if (!img.depends_on(src.phase[k])) continue;
      s += img.diff(src.phase[k]) * field[k];
    }
    out.push_back(s / dtau);
  }
  return out;
}

std::vector<RatExpr> transform_field(const BirationalMap& m, const BirationalMap& inv,
                                     const std::vector<RatExpr>& field) {
  auto pushed = pushforward_in_source(m, field);
  for (auto& e : pushed) e = m.target().reduce(apply(inv, e));
  return pushed;
}

std::vector<RatExpr> equivariance_residual(const BirationalMap& m, const std::vector<RatExpr>& field,
                                           const std::vector<RatExpr>& target_field) {
  auto pushed = pushforward_in_source(m, field);
  std::vector<RatExpr> out;
  for (std::size_t k = 0; k < pushed.size(); ++k)
    out.push_back(m.source().reduce(pushed[k] - apply(m, target_field[k])));
  return out;
}

std::optional<RatExpr> hamiltonian_potential(const std::vector<Var>& phase, const std::vector<RatExpr>& field) {
  // Required partial derivatives, integrated one variable at a time.
  std::vector<std::pair<Var, RatExpr>> need;
  for (std::size_t p = 0; p + 1 < phase.size(); p += 2) {
    need.emplace_back(phase[p + 1], field[p]);
    need.emplace_back(phase[p], -field[p + 1]);
  }
  RatExpr r;
  for (const auto& [v, g] : need) {
    auto piece = rational_antiderivative(g - r.diff(v), v);
    if (!piece) return std::nullopt;
    r += *piece;
  }
  for (const auto& [v, g] : need)
    if (r.diff(v) != g) return std::nullopt;
  return r;
}

RatExpr pullback_hamiltonian(const BirationalMap& m, const RatExpr& h) {
  BirationalMap inv = inverse_of(m);
  const PhaseSpace& src = m.source();
  const PhaseSpace& dst = m.target();
  // Velocity of the target coordinates at fixed source phase point.
  std::vector<RatExpr> drift;
  for (Var v : dst.phase) drift.push_back(apply(inv, m.image(v).diff(src.time)));
  auto correction = hamiltonian_potential(dst.phase, drift);
  if (!correction) throw NotClosedCorrection("time-dependent part of " + m.name() + " has no rational Hamiltonian");
  RatExpr dtau = apply(inv, m.time_image().diff(src.time));
  RatExpr k = (apply(inv, h) + *correction) / dtau;

  auto expected = transform_field(m, inv, hamiltonian_field(h, src.phase).rhs);
  auto got = hamiltonian_field(k, dst.phase).rhs;
  for (std::size_t i = 0; i < got.size(); ++i)
    if (dst.reduce(got[i]) != dst.reduce(expected[i]))
      throw Error("pullback_hamiltonian: " + m.name() + " does not preserve the symplectic form");
  return k;
}

}  // namespace painleve
