#include "painleve/maps/space.hpp"

#include <algorithm>

namespace painleve {

std::vector<Var> PhaseSpace::coordinates() const {
  std::vector<Var> out = phase;
  out.push_back(time);
  out.insert(out.end(), params.begin(), params.end());
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

bool PhaseSpace::has(Var v) const {
  auto c = coordinates();
  return std::find(c.begin(), c.end(), v) != c.end();
}

RatExpr PhaseSpace::reduce(const RatExpr& e) const { return constraint ? constraint->reduce(e) : e; }

PhaseSpace space_of(const HamiltonianSystem& sys) {
  PhaseSpace s;
  s.name = to_string(sys.id);
  s.phase = sys.phase_vars;
  s.time = sys.time_var;
  s.params = sys.params;
  s.constraint = sys.constraint;
  return s;
}

PhaseSpace space_of(SystemId id) { return space_of(get_system(id)); }

}  // namespace painleve
