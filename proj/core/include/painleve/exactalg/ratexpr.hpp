#pragma once

#include <map>
#include <string>
#include <vector>

#include "painleve/exactalg/multipoly.hpp"

namespace painleve {

class RatExpr;
using Bindings = std::map<Var, RatExpr>;

// Reduced quotient num/den: gcd(num, den) = 1 and den is monic in the grlex
// order, so two equal rational functions have identical representations.
class RatExpr {
 public:
  RatExpr() : den_(1) {}
  RatExpr(const Scalar& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatExpr(long c) : num_(Scalar(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatExpr(MultiPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)

  static RatExpr var(Var v) { return RatExpr(MultiPoly::var(v)); }
  static RatExpr var(const char* name) { return var(Var::of(name)); }
  static RatExpr rational(long p, long q) { return RatExpr(Scalar::rational(p, q)); }
  // Full normalization; throws ZeroDenominator.
  static RatExpr normalize(MultiPoly num, MultiPoly den);
  // Trusted constructor: caller guarantees the invariants.
  static RatExpr from_reduced(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  std::optional<Scalar> constant_value() const;
  VarMask vars() const { return num_.vars() | den_.vars(); }
  bool depends_on(Var v) const { return (vars() & mask_of(v)) != 0; }
  std::size_t size() const { return num_.size() + den_.size(); }

  RatExpr operator-() const;
  RatExpr& operator+=(const RatExpr& o);
  RatExpr& operator-=(const RatExpr& o);
  RatExpr& operator*=(const RatExpr& o);
  RatExpr& operator/=(const RatExpr& o);
  friend RatExpr operator+(RatExpr a, const RatExpr& b) { return a += b; }
  friend RatExpr operator-(RatExpr a, const RatExpr& b) { return a -= b; }
  friend RatExpr operator*(RatExpr a, const RatExpr& b) { return a *= b; }
  friend RatExpr operator/(RatExpr a, const RatExpr& b) { return a /= b; }

  RatExpr inverse() const;
  RatExpr pow(int k) const;
  RatExpr diff(Var v) const;
  // Simultaneous substitution; unbound indeterminates pass through.
  RatExpr substitute(const Bindings& b) const;

  Scalar eval(const Point& pt) const;

  bool operator==(const RatExpr& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatExpr& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  MultiPoly num_;
  MultiPoly den_;
};

// Substitute bindings into a polynomial. Returns (N, D) with p(bindings) =
// N / D before any cancellation.
std::pair<MultiPoly, MultiPoly> substitute_poly(const MultiPoly& p, const Bindings& b);

// Coefficient of v^k in a RatExpr whose denominator is free of v.
std::vector<RatExpr> coefficients_in(const RatExpr& e, Var v);

std::vector<Var> vars_in(VarMask m);

}  // namespace painleve
