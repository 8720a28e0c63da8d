#pragma once

#include <array>
#include <complex>
#include <vector>

#include "painleve/exactalg/ratexpr.hpp"

namespace painleve {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;
// Values indexed by Var id.
using Env = std::array<cplx, kMaxVars>;

// A rational expression flattened for repeated floating-point evaluation.
class CompiledExpr {
 public:
  CompiledExpr() = default;
  explicit CompiledExpr(const RatExpr& e);

  cplx operator()(const Env& env) const;

 private:
  struct Factor {
    std::uint16_t var;
    std::uint8_t exp;
  };
  struct Term {
    cplx c;
    std::vector<Factor> factors;
  };
  static std::vector<Term> flatten(const MultiPoly& p);
  static cplx eval(const std::vector<Term>& terms, const Env& env);

  std::vector<Term> num_;
  std::vector<Term> den_;
  bool den_one_ = true;
};

}  // namespace painleve
