#include "painleve/exactalg/var.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "painleve/error.hpp"

namespace painleve {

namespace {

constexpr int kScratch = 16;

struct Registry {
  std::shared_mutex mu;
  std::deque<std::string> names;
  std::unordered_map<std::string, std::uint16_t> index;

  Registry() {
    for (const auto& n : fixed_variable_names()) add(n);
    for (int k = 0; k < kScratch; ++k) add("_u" + std::to_string(k));
  }

  std::uint16_t add(const std::string& n) {
    if (names.size() >= kMaxVars) throw ExpressionTooLarge("indeterminate universe exhausted at " + n);
    auto id = static_cast<std::uint16_t>(names.size());
    names.push_back(n);
    index.emplace(n, id);
    return id;
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

const std::vector<std::string>& fixed_variable_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v = {"x", "y", "z", "w", "t", "X", "Y", "Z", "W", "T", "eps"};
    for (int k = 0; k <= 5; ++k) v.push_back("a" + std::to_string(k));
    for (int k = 0; k <= 5; ++k) v.push_back("b" + std::to_string(k));
    for (int k = 0; k <= 4; ++k) v.push_back("A" + std::to_string(k));
    for (const char* n : {"q", "p", "tau", "sigma", "u"}) v.emplace_back(n);
    return v;
  }();
  return names;
}

Var Var::of(std::string_view name) {
  auto& r = registry();
  std::string key(name);
  {
    std::shared_lock lock(r.mu);
    auto it = r.index.find(key);
    if (it != r.index.end()) return Var(it->second);
  }
  std::unique_lock lock(r.mu);
  auto it = r.index.find(key);
  if (it != r.index.end()) return Var(it->second);
  return Var(r.add(key));
}

Var Var::lookup(std::string_view name) {
  auto& r = registry();
  std::shared_lock lock(r.mu);
  auto it = r.index.find(std::string(name));
  if (it == r.index.end()) throw UnknownName("indeterminate '" + std::string(name) + "'");
  return Var(it->second);
}

bool Var::exists(std::string_view name) {
  auto& r = registry();
  std::shared_lock lock(r.mu);
  return r.index.count(std::string(name)) != 0;
}

const std::string& Var::name() const {
  auto& r = registry();
  std::shared_lock lock(r.mu);
  return r.names.at(id_);
}

Var scratch_var(int k) {
  if (k < 0 || k >= kScratch) throw Error("scratch variable index out of range");
  return Var::lookup("_u" + std::to_string(k));
}

}  // namespace painleve
