#pragma once

#include <cstdint>
#include <random>

#include "painleve/exactalg/ratexpr.hpp"

namespace painleve {

enum class EqualityKind { exact, probabilistic };

struct EqualityMode {
  EqualityKind kind = EqualityKind::exact;
  std::uint64_t seed = 0;
  int trials = 8;

  static EqualityMode exact() { return {}; }
  static EqualityMode probabilistic(std::uint64_t seed, int trials = 8) {
    return {EqualityKind::probabilistic, seed, trials};
  }
};

// Points whose denominators vanish are redrawn; after this many redraws for
// a single trial the test gives up with EvaluationExhausted.
inline constexpr int kMaxResamples = 64;

// Random evaluation point for the indeterminates in `mask`. Values are
// rationals n/d with |n| <= 997 and 1 <= d <= 61.
Point random_point(VarMask mask, std::mt19937_64& rng);

// One-sided test: false is definitive, true may be wrong with probability
// at most (total degree / sample-set size) per trial.
bool probably_equal(const RatExpr& a, const RatExpr& b, std::mt19937_64& rng, int trials);

bool equal(const RatExpr& a, const RatExpr& b, const EqualityMode& mode);

}  // namespace painleve
