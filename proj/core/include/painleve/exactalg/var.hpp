#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace painleve {

// Hard cap on distinct indeterminates; monomials store a dense exponent array
// of this width.
inline constexpr std::size_t kMaxVars = 56;

// Interned indeterminate. The id doubles as the position in the global
// variable order used for canonical monomial ordering (smaller id = more
// significant in lex comparisons).
class Var {
 public:
  constexpr Var() = default;
  constexpr explicit Var(std::uint16_t id) : id_(id) {}

  // Look up (or register) a variable by name. The fixed universe is
  // registered first, in a documented order, so ids are stable across runs.
  static Var of(std::string_view name);
  // Lookup only; throws UnknownName for unregistered names.
  static Var lookup(std::string_view name);
  static bool exists(std::string_view name);

  std::uint16_t id() const { return id_; }
  const std::string& name() const;

  auto operator<=>(const Var&) const = default;

 private:
  std::uint16_t id_ = 0;
};

// Names of the fixed universe, in canonical order.
const std::vector<std::string>& fixed_variable_names();

// Scratch variables used internally (map inversion, series placeholders).
Var scratch_var(int k);

}  // namespace painleve
