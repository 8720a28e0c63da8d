#pragma once

#include <string_view>

#include "painleve/exactalg/ratexpr.hpp"

namespace painleve {

// Infix reader used for transcribing formulas: + - * / ^, parentheses,
// integer literals, identifiers, and the constants i and sqrt2. Exponents
// must be (possibly negated) integer literals. No implicit multiplication.
RatExpr parse_infix(std::string_view text);

// Shorthand used heavily in data tables.
inline RatExpr rx(std::string_view text) { return parse_infix(text); }

}  // namespace painleve
