#include "painleve/exactalg/ratexpr.hpp"

#include "painleve/error.hpp"
#include "painleve/exactalg/gcd.hpp"

namespace painleve {

std::vector<Var> vars_in(VarMask m) {
  std::vector<Var> out;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (m >> i & 1) out.emplace_back(static_cast<std::uint16_t>(i));
  return out;
}

RatExpr RatExpr::from_reduced(MultiPoly num, MultiPoly den) {
  RatExpr r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RatExpr RatExpr::normalize(MultiPoly num, MultiPoly den) {
  if (den.is_zero()) throw ZeroDenominator("normalize with zero denominator");
  if (num.is_zero()) return RatExpr();
  if (den.is_constant()) return from_reduced(num.scaled(den.leading_coefficient().inverse()), MultiPoly(1));
  MultiPoly g = gcd(num, den);
  if (!g.is_one()) {
    num = num / g;
    den = den / g;
  }
  if (!den.leading_coefficient().is_one()) {
    Scalar inv = den.leading_coefficient().inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return from_reduced(std::move(num), std::move(den));
}

std::optional<Scalar> RatExpr::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return num_.constant_term();
}

RatExpr RatExpr::operator-() const { return from_reduced(-num_, den_); }

RatExpr& RatExpr::operator+=(const RatExpr& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    MultiPoly n = num_ + o.num_;
    if (n.is_zero()) return *this = RatExpr();
    MultiPoly g = gcd(n, den_);
    if (g.is_one()) {
      num_ = std::move(n);
    } else {
      num_ = n / g;
      den_ = den_ / g;
    }
    return *this;
  }
  MultiPoly g = (den_.is_one() || o.den_.is_one()) ? MultiPoly(1) : gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = MultiPoly(1);
    return *this;
  }
  MultiPoly b1 = den_ / g, d1 = o.den_ / g;
  MultiPoly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return *this = RatExpr();
  MultiPoly g2 = gcd(n, g);
  if (!g2.is_one()) {
    n = n / g2;
    g = g / g2;
  }
  num_ = std::move(n);
  den_ = b1 * d1 * g;
  return *this;
}

RatExpr& RatExpr::operator-=(const RatExpr& o) { return *this += -o; }

RatExpr& RatExpr::operator*=(const RatExpr& o) {
  if (is_zero() || o.is_zero()) return *this = RatExpr();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  MultiPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_one()) {
    MultiPoly g1 = gcd(a, d);
    if (!g1.is_one()) {
      a = a / g1;
      d = d / g1;
    }
  }
  if (!b.is_one()) {
    MultiPoly g2 = gcd(c, b);
    if (!g2.is_one()) {
      c = c / g2;
      b = b / g2;
    }
  }
  num_ = a * c;
  den_ = b * d;
  return *this;
}

RatExpr RatExpr::inverse() const {
  if (is_zero()) throw ZeroDenominator("inverse of zero");
  Scalar lc = num_.leading_coefficient();
  if (lc.is_one()) return from_reduced(den_, num_);
  Scalar inv = lc.inverse();
  return from_reduced(den_.scaled(inv), num_.scaled(inv));
}

RatExpr& RatExpr::operator/=(const RatExpr& o) { return *this *= o.inverse(); }

RatExpr RatExpr::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  // Powers of reduced fractions stay reduced.
  return from_reduced(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
}

RatExpr RatExpr::diff(Var v) const {
  if (!depends_on(v)) return RatExpr();
  if (!(den_.vars() & mask_of(v))) return normalize(num_.diff(v), den_);
  MultiPoly dd = den_.diff(v);
  MultiPoly g = gcd(den_, dd);
  MultiPoly d1 = den_ / g, e1 = dd / g;
  MultiPoly m = num_.diff(v) * d1 - num_ * e1;
  if (m.is_zero()) return RatExpr();
  MultiPoly out_den = d1 * den_;
  if (!g.is_one()) {
    MultiPoly g3 = gcd(m, g);
    if (!g3.is_one()) {
      m = m / g3;
      out_den = out_den / g3;
    }
  }
  if (!out_den.leading_coefficient().is_one()) return normalize(std::move(m), std::move(out_den));
  return from_reduced(std::move(m), std::move(out_den));
}

namespace {

struct BoundVar {
  Var v;
  MultiPoly num, den;
  unsigned degree;
  std::vector<MultiPoly> num_pow, den_pow;
};

MultiPoly horner(const MultiPoly& q, std::vector<BoundVar>& bound, std::size_t idx) {
  if (q.is_zero()) return q;
  if (idx == bound.size()) return q;
  BoundVar& bv = bound[idx];
  std::vector<MultiPoly> coeffs = q.coefficients(bv.v);
  MultiPoly sum;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    MultiPoly inner = horner(coeffs[k], bound, idx + 1);
    MultiPoly factor = bv.num_pow[k];
    if (!bv.den.is_one()) factor = factor * bv.den_pow[bv.degree - k];
    sum += inner * factor;
  }
  return sum;
}

std::vector<BoundVar> prepare(const MultiPoly& p, const Bindings& b) {
  std::vector<BoundVar> bound;
  VarMask used = p.vars();
  for (const auto& [v, val] : b) {
    if (!(used & mask_of(v))) continue;
    BoundVar bv{v, val.num(), val.den(), p.degree(v), {}, {}};
    bv.num_pow.reserve(bv.degree + 1);
    bv.num_pow.emplace_back(1);
    for (unsigned k = 1; k <= bv.degree; ++k) bv.num_pow.push_back(bv.num_pow.back() * bv.num);
    if (!bv.den.is_one()) {
      bv.den_pow.reserve(bv.degree + 1);
      bv.den_pow.emplace_back(1);
      for (unsigned k = 1; k <= bv.degree; ++k) bv.den_pow.push_back(bv.den_pow.back() * bv.den);
    }
    bound.push_back(std::move(bv));
  }
  return bound;
}

}  // namespace

std::pair<MultiPoly, MultiPoly> substitute_poly(const MultiPoly& p, const Bindings& b) {
  auto bound = prepare(p, b);
  if (bound.empty()) return {p, MultiPoly(1)};
  MultiPoly n = horner(p, bound, 0);
  MultiPoly d(1);
  for (auto& bv : bound)
    if (!bv.den.is_one()) d *= bv.den_pow[bv.degree];
  return {std::move(n), std::move(d)};
}

RatExpr RatExpr::substitute(const Bindings& b) const {
  VarMask used = vars();
  bool any = false;
  for (const auto& [v, val] : b) {
    if (used & mask_of(v)) {
      any = true;
      break;
    }
  }
  if (!any) return *this;
  auto bn = prepare(num_, b);
  auto bd = prepare(den_, b);
  MultiPoly n = bn.empty() ? num_ : horner(num_, bn, 0);
  MultiPoly d = bd.empty() ? den_ : horner(den_, bd, 0);
  if (d.is_zero()) throw ZeroDenominator("substitution annihilates a denominator");
  // Balance the cleared binding denominators: factor D_v^(deg_v den - deg_v num).
  for (const auto& [v, val] : b) {
    if (!(used & mask_of(v)) || val.den().is_one()) continue;
    int e = static_cast<int>(den_.degree(v)) - static_cast<int>(num_.degree(v));
    if (e > 0) n *= val.den().pow(static_cast<unsigned>(e));
    if (e < 0) d *= val.den().pow(static_cast<unsigned>(-e));
  }
  return normalize(std::move(n), std::move(d));
}

Scalar RatExpr::eval(const Point& pt) const {
  Scalar d = den_.eval(pt);
  if (d.is_zero()) throw ZeroDenominator("denominator vanishes at evaluation point");
  return num_.eval(pt) / d;
}

std::string RatExpr::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string inv = "(^ " + den_.to_string() + " -1)";
  if (num_.is_one()) return inv;
  return "(* " + num_.to_string() + " " + inv + ")";
}

std::vector<RatExpr> coefficients_in(const RatExpr& e, Var v) {
  if (e.den().vars() & mask_of(v)) throw Error("coefficients_in: denominator depends on " + v.name());
  std::vector<RatExpr> out;
  for (auto& c : e.num().coefficients(v)) out.push_back(RatExpr::normalize(std::move(c), e.den()));
  return out;
}

}  // namespace painleve
