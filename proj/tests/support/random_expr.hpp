#pragma once

#include <random>
#include <vector>

#include "painleve/exactalg.hpp"

namespace testsupport {

using namespace painleve;

inline Scalar small_scalar(std::mt19937_64& rng, bool full = false) {
  std::uniform_int_distribution<long> n(-5, 5), d(1, 4);
  Scalar s = Scalar::rational(n(rng), d(rng));
  if (full) {
    s += Scalar::rational(n(rng), d(rng)) * Scalar::imag_unit();
    s += Scalar::rational(n(rng), d(rng)) * Scalar::sqrt2();
  }
  return s;
}

// Random polynomial with `terms` terms of degree <= maxdeg in `vars`.
inline MultiPoly random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int terms, int maxdeg,
                             bool full = false) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(vars.size()) - 1);
  std::uniform_int_distribution<int> deg(0, maxdeg);
  MultiPoly p;
  for (int k = 0; k < terms; ++k) {
    MultiPoly m(small_scalar(rng, full));
    int d = deg(rng);
    for (int j = 0; j < d; ++j) m *= MultiPoly::var(vars[static_cast<std::size_t>(pick(rng))]);
    p += m;
  }
  return p;
}

inline MultiPoly random_nonzero_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int terms, int maxdeg,
                                     bool full = false) {
  while (true) {
    MultiPoly p = random_poly(rng, vars, terms, maxdeg, full);
    if (!p.is_zero()) return p;
  }
}

inline RatExpr random_ratexpr(std::mt19937_64& rng, const std::vector<Var>& vars, int terms, int maxdeg) {
  return RatExpr::normalize(random_poly(rng, vars, terms, maxdeg), random_nonzero_poly(rng, vars, terms, maxdeg));
}

inline std::vector<Var> vars_of(std::initializer_list<const char*> names) {
  std::vector<Var> out;
  for (auto n : names) out.push_back(Var::of(n));
  return out;
}

}  // namespace testsupport
