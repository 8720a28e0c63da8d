#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <functional>

#include "painleve/exactalg/var.hpp"

namespace painleve {

using VarMask = std::uint64_t;
static_assert(kMaxVars <= 64, "VarMask must cover every variable");

inline VarMask mask_of(Var v) { return VarMask{1} << v.id(); }

// Dense exponent vector plus cached total degree.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  static Monomial one() { return {}; }
  static Monomial of(Var v, unsigned k = 1);

  unsigned exp(Var v) const { return e[v.id()]; }
  bool is_one() const { return deg == 0; }
  VarMask vars() const;

  bool operator==(const Monomial& o) const {
    return deg == o.deg && std::memcmp(e.data(), o.e.data(), kMaxVars) == 0;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  Monomial operator*(const Monomial& o) const;
  // Componentwise o divides *this.
  bool divisible_by(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  Monomial without(Var v) const;
  Monomial with(Var v, unsigned k) const;
};

// Graded lexicographic comparison: positive if a > b. Lex ties are broken by
// comparing exponents in variable-id order; memcmp on unsigned bytes does
// exactly that.
inline int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  return std::memcmp(a.e.data(), b.e.data(), kMaxVars);
}

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ULL;
    const auto* p = reinterpret_cast<const unsigned char*>(m.e.data());
    for (std::size_t i = 0; i < kMaxVars; i += 8) {
      std::uint64_t chunk = 0;
      std::memcpy(&chunk, p + i, std::min<std::size_t>(8, kMaxVars - i));
      h = (h ^ chunk) * 1099511628211ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace painleve
