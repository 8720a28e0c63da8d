#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "painleve/exactalg/ratexpr.hpp"

namespace painleve {

enum class Status { pass, fail, inconclusive };
enum class CheckMode { exact, probabilistic };

std::string to_string(Status s);
std::string to_string(CheckMode m);

struct CheckReport {
  std::string check_id;  // <system>.<suite>.<item>
  Status status = Status::pass;
  CheckMode mode = CheckMode::exact;
  std::optional<RatExpr> residual;  // first nonzero difference on failure
  std::string detail;
  double seconds = 0;
  std::uint64_t seed = 0;

  bool passed() const { return status == Status::pass; }
};

// {check_id, status, mode, residual, detail, seed[, seconds]}.
nlohmann::ordered_json to_json(const CheckReport& r, bool with_timing = true);
nlohmann::ordered_json to_json(const std::vector<CheckReport>& rs, bool with_timing = true);

bool all_passed(const std::vector<CheckReport>& rs);

// Runs `body` and stamps the elapsed time; exceptions derived from Error
// become an inconclusive report carrying the message.
template <class F>
CheckReport timed_check(std::string id, F body);

}  // namespace painleve

#include "painleve/verify/report_impl.hpp"
