#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace painleve::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

inline constexpr const char* kToolVersion = "0.1.0";

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// One documented command per checked claim.
struct CoverageItem {
  std::string claim;
  std::string command;
};
const std::vector<CoverageItem>& coverage_manifest();

}  // namespace painleve::cli
