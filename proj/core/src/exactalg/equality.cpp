#include "painleve/exactalg/equality.hpp"

#include "painleve/error.hpp"

namespace painleve {

Point random_point(VarMask mask, std::mt19937_64& rng) {
  Point pt;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (mask >> i & 1) pt.v[i] = Scalar::random(rng, false);
  return pt;
}

bool probably_equal(const RatExpr& a, const RatExpr& b, std::mt19937_64& rng, int trials) {
  VarMask mask = a.vars() | b.vars();
  if (!mask) return a == b;
  for (int trial = 0; trial < trials; ++trial) {
    int redraws = 0;
    while (true) {
      Point pt = random_point(mask, rng);
      Scalar da = a.den().eval(pt), db = b.den().eval(pt);
      if (da.is_zero() || db.is_zero()) {
        if (++redraws > kMaxResamples) throw EvaluationExhausted("denominators keep vanishing at random points");
        continue;
      }
      // Cross-multiplied so a single division is avoided.
      if (a.num().eval(pt) * db != b.num().eval(pt) * da) return false;
      break;
    }
  }
  return true;
}

bool equal(const RatExpr& a, const RatExpr& b, const EqualityMode& mode) {
  if (mode.kind == EqualityKind::exact) return a == b;
  std::mt19937_64 rng(mode.seed);
  return probably_equal(a, b, rng, mode.trials);
}

}  // namespace painleve
