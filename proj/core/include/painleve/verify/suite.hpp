#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "painleve/verify/report.hpp"

namespace painleve {

enum class Suite { transcription, backlund, relations, holomorphy, phi, coincidence, degeneration, weyl, reduction, derivation };

const std::vector<Suite>& all_suites();
std::string to_string(Suite s);
// Comma-separated names or "all"; throws UnknownName.
std::vector<Suite> parse_suites(std::string_view list);

struct SuiteOptions {
  CheckMode mode = CheckMode::exact;  // probabilistic allows point testing of long relation words
  std::uint64_t seed = 1;
  int order = 8;            // eps truncation order
  int stability_order = 10;
  unsigned jobs = 1;
};

// Targets are system ids or problem names (G2-4v, A22-4v). Degenerations
// and their subgroups belong to the target system, coincidences and scalar
// reductions to the source. Reports come back in a fixed order whatever the
// number of jobs.
std::vector<CheckReport> run_suites(std::string_view target, const std::vector<Suite>& suites,
                                    const SuiteOptions& opts = {});

// Every system id followed by every problem name.
std::vector<std::string> suite_targets();

}  // namespace painleve
