#pragma once

#include <vector>

#include "painleve/exactalg/multipoly.hpp"

namespace painleve {

// Monic greatest common divisor (1 when coprime, the monic other operand when
// one side is zero).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

// gcd of the coefficients of p viewed as a polynomial in v.
MultiPoly content_in(const MultiPoly& p, Var v);

// Rigorous modular shortcut: true means a and b are certainly coprime; false
// means "unknown".
bool certainly_coprime(const MultiPoly& a, const MultiPoly& b);

}  // namespace painleve
