#pragma once

#include <map>
#include <optional>
#include <vector>

#include "painleve/exactalg/ratexpr.hpp"

namespace painleve {

// Sparse row: column index -> coefficient.
using SparseRow = std::map<int, RatExpr>;

struct LinearEquation {
  SparseRow lhs;
  RatExpr rhs;
};

struct LinearSolution {
  bool consistent = true;
  int unknowns = 0;
  int rank = 0;
  // Solution with every free column set to zero (only when consistent).
  std::vector<RatExpr> particular;
  // Basis of the homogeneous solution space, one dense vector per free column.
  std::vector<std::vector<RatExpr>> nullspace;
  std::vector<int> free_columns;
  // When inconsistent: multipliers on the input equations whose combination
  // has zero left side and right side `certificate_value` != 0.
  std::map<int, RatExpr> certificate;
  RatExpr certificate_value;
};

// Incremental Gauss-Jordan over the field of rational functions. Stops at the
// first inconsistency.
class LinearSolver {
 public:
  explicit LinearSolver(int unknowns) : n_(unknowns) {}

  // Returns false once the system is known to be inconsistent.
  bool add(const LinearEquation& eq);
  bool consistent() const { return consistent_; }
  int rank() const { return static_cast<int>(pivots_.size()); }
  int equations_seen() const { return seen_; }
  LinearSolution solution() const;

 private:
  struct Row {
    SparseRow coeffs;
    RatExpr rhs;
    std::map<int, RatExpr> combo;  // input equation -> multiplier
  };

  int n_;
  int seen_ = 0;
  bool consistent_ = true;
  std::map<int, Row> pivots_;  // pivot column -> row with unit pivot
  Row failure_;
};

LinearSolution solve_linear(const std::vector<LinearEquation>& eqs, int unknowns);

// Rational antiderivative of e with respect to v, or nullopt when none
// exists (a logarithmic part is needed).
std::optional<RatExpr> rational_antiderivative(const RatExpr& e, Var v);

}  // namespace painleve
