#pragma once

#include <chrono>

#include "painleve/error.hpp"

namespace painleve {

template <class F>
CheckReport timed_check(std::string id, F body) {
  auto start = std::chrono::steady_clock::now();
  CheckReport r;
  try {
    r = body();
  } catch (const Error& e) {
    r = CheckReport{};
    r.status = Status::inconclusive;
    r.detail = e.what();
  }
  r.check_id = std::move(id);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace painleve
