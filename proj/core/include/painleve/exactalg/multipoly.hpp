#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "painleve/exactalg/monomial.hpp"
#include "painleve/exactalg/scalar.hpp"

namespace painleve {

struct Term {
  Monomial m;
  Scalar c;
};

// Assignment of Scalar values to (some of) the indeterminates.
struct Point {
  std::array<std::optional<Scalar>, kMaxVars> v;
  void set(Var x, Scalar s) { v[x.id()] = std::move(s); }
  const Scalar& at(Var x) const;
  bool has(Var x) const { return v[x.id()].has_value(); }
};

// Assignment of residues mod p to every indeterminate.
using ModPoint = std::array<std::uint64_t, kMaxVars>;

// Upper bound on the number of terms any single polynomial may reach.
std::size_t monomial_budget();
void set_monomial_budget(std::size_t n);

// Canonical sparse multivariate polynomial over Q(i, sqrt2). Terms are kept
// sorted by descending grlex order with no zero coefficients, so structural
// equality is mathematical equality.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly var(Var v);
  static MultiPoly monomial(const Monomial& m, Scalar c = Scalar(1));
  static MultiPoly from_terms(std::vector<Term> terms);
  // Caller guarantees canonical order and nonzero coefficients.
  static MultiPoly from_sorted(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Scalar constant_term() const;
  const Term& leading() const { return terms_.front(); }
  const Scalar& leading_coefficient() const { return terms_.front().c; }

  VarMask vars() const;
  unsigned degree(Var v) const;
  unsigned min_degree(Var v) const;
  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().m.deg; }
  unsigned degree_in(VarMask mask) const;
  Monomial min_monomial() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned k) const;
  MultiPoly scaled(const Scalar& s) const;
  MultiPoly shifted(const Monomial& m) const;
  MultiPoly divided_by_monomial(const Monomial& m) const;
  MultiPoly monic() const;
  MultiPoly diff(Var v) const;

  // Coefficients as a polynomial in v: result[k] multiplies v^k.
  std::vector<MultiPoly> coefficients(Var v) const;
  static MultiPoly from_coefficients(const std::vector<MultiPoly>& c, Var v);

  // Quotient if b divides *this exactly, nullopt otherwise.
  std::optional<MultiPoly> divide_exact(const MultiPoly& b) const;
  // Throws NotDivisible when the division is not exact.
  MultiPoly operator/(const MultiPoly& b) const;

  Scalar eval(const Point& pt) const;
  std::optional<std::uint64_t> eval_mod(const ModPoint& pt, const ModContext& ctx) const;

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  std::string to_string() const;
  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

void check_budget(std::size_t n, const char* where);

}  // namespace painleve
