#pragma once

#include <string>
#include <vector>

#include "painleve/exactalg/series.hpp"
#include "painleve/maps/library.hpp"
#include "painleve/verify/report.hpp"

namespace painleve {

inline constexpr int kDefaultOrder = 8;
inline constexpr int kStabilityOrder = 10;

// Source field rewritten in the new coordinates (exact, eps symbolic).
std::vector<RatExpr> degenerated_field(const Degeneration& d);

// The rewritten field has no negative powers of eps and its eps^0 part is
// the target field. Evaluated at `order` and again at `stability_order`;
// differing verdicts raise TruncationUnstable.
CheckReport verify_degeneration(const Degeneration& d, int order = kDefaultOrder,
                                int stability_order = kStabilityOrder);

// Action of a subgroup word conjugated into the new coordinates, as eps
// series through `order`, one per new coordinate (eps included).
struct ConjugatedAction {
  std::vector<Var> coords;
  std::vector<EpsSeries> images;
  EpsSeries sigma;  // image of eps
};
ConjugatedAction conjugated_action(const Degeneration& d, const SubgroupGenerator& g, int order);

// Stated images reproduced to `order` and the eps -> 0 limit equal to the
// target generator.
CheckReport verify_weyl_generator(const Degeneration& d, const SubgroupGenerator& g, int order = kDefaultOrder);

}  // namespace painleve
