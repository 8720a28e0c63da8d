#pragma once

#include <string>
#include <string_view>

#include "painleve/exactalg/ratexpr.hpp"

namespace painleve {

// Reads the canonical s-expression text written by Scalar/MultiPoly/RatExpr
// to_string(). Also accepts any well-formed nesting of (+ ...), (* ...) and
// (^ e k); the result is normalized, so print(parse(s)) == s for canonical s.
RatExpr parse_sexpr(std::string_view text);
Scalar parse_scalar_sexpr(std::string_view text);

}  // namespace painleve
