#include "painleve/verify/report.hpp"

#include <algorithm>

namespace painleve {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(CheckMode m) { return m == CheckMode::exact ? "exact" : "probabilistic"; }

nlohmann::ordered_json to_json(const CheckReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  j["status"] = to_string(r.status);
  j["mode"] = to_string(r.mode);
  j["residual"] = r.residual ? nlohmann::ordered_json(r.residual->to_string()) : nlohmann::ordered_json(nullptr);
  j["detail"] = r.detail;
  j["seed"] = r.seed;
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<CheckReport>& rs, bool with_timing) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(to_json(r, with_timing));
  return arr;
}

bool all_passed(const std::vector<CheckReport>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const CheckReport& r) { return r.passed(); });
}

}  // namespace painleve
