#include "painleve/numerics/compiled.hpp"

namespace painleve {

CompiledExpr::CompiledExpr(const RatExpr& e)
    : num_(flatten(e.num())), den_(flatten(e.den())), den_one_(e.den().is_one()) {}

std::vector<CompiledExpr::Term> CompiledExpr::flatten(const MultiPoly& p) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Term term{t.c.to_complex(), {}};
    for (std::size_t v = 0; v < kMaxVars; ++v)
      if (t.m.e[v]) term.factors.push_back({std::uint16_t(v), t.m.e[v]});
    out.push_back(std::move(term));
  }
  return out;
}

cplx CompiledExpr::eval(const std::vector<Term>& terms, const Env& env) {
  cplx s = 0;
  for (const auto& t : terms) {
    cplx p = t.c;
    for (const auto& f : t.factors) {
      cplx b = env[f.var];
      for (unsigned k = 0; k < f.exp; ++k) p *= b;
    }
    s += p;
  }
  return s;
}

cplx CompiledExpr::operator()(const Env& env) const {
  cplx n = eval(num_, env);
  return den_one_ ? n : n / eval(den_, env);
}

}  // namespace painleve
