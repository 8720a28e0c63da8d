#pragma once

#include <map>
#include <string>
#include <vector>

#include "painleve/exactalg/ratexpr.hpp"

namespace painleve {

// Truncated Laurent series in one small parameter. Coefficients of
// eps^min_order .. eps^order are known; anything above `order` is unknown
// (not zero).
class EpsSeries {
 public:
  EpsSeries() = default;
  EpsSeries(int min_order, std::vector<RatExpr> coeffs, int order);

  static EpsSeries constant(const RatExpr& c, int order);
  // c * eps^k known through `order`.
  static EpsSeries monomial(const RatExpr& c, int k, int order);

  int min_order() const { return min_order_; }
  int order() const { return order_; }
  const std::vector<RatExpr>& coeffs() const { return coeffs_; }
  // Coefficient of eps^k; throws when k is past the truncation order.
  RatExpr coeff(int k) const;
  bool is_zero_to_order() const { return coeffs_.empty(); }
  // Exponent of the first nonzero coefficient (order + 1 when none is known).
  int valuation() const { return coeffs_.empty() ? order_ + 1 : min_order_; }

  EpsSeries truncated(int order) const;
  EpsSeries operator-() const;
  EpsSeries operator+(const EpsSeries& o) const;
  EpsSeries operator-(const EpsSeries& o) const;
  EpsSeries operator*(const EpsSeries& o) const;
  EpsSeries operator/(const EpsSeries& o) const;
  EpsSeries scaled(const RatExpr& c) const;
  EpsSeries inverse() const;
  EpsSeries pow(int k) const;
  // Apply `f` to every coefficient.
  template <class F>
  EpsSeries map(F f) const {
    std::vector<RatExpr> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(f(x));
    return EpsSeries(min_order_, std::move(c), order_);
  }

  // Sum of the known terms as a RatExpr in eps.
  RatExpr to_ratexpr(Var eps) const;
  std::string to_string(Var eps) const;

 private:
  void normalize();

  int min_order_ = 0;
  int order_ = 0;
  std::vector<RatExpr> coeffs_;
};

// (1 + u)^c for base = 1 + u, u of positive valuation, through `order`.
EpsSeries binomial_series(const EpsSeries& base, const mpq_class& c, int order);

// Laurent expansion of e in `eps` through `order`. Symbols in
// `series_bindings` are replaced by the given series (e.g. a transformed
// small parameter known only as a series).
EpsSeries eps_expand(const RatExpr& e, Var eps, int order, const std::map<Var, EpsSeries>& series_bindings = {});

inline EpsSeries eps_expand(const RatExpr& e, int order) { return eps_expand(e, Var::of("eps"), order); }

}  // namespace painleve
