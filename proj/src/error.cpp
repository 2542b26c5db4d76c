#include "spinl/error.hpp"

#include <cstdlib>
#include <sstream>

namespace spinl {

unsigned long long enumeration_budget() {
  constexpr unsigned long long kDefault = 1ULL << 32;
  const char* env = std::getenv("SPINL_ENUM_BUDGET");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0)
    throw Error("config_error", "SPINL_ENUM_BUDGET must be a positive integer", {{"value", env}});
  return v;
}

void check_budget(long double required, unsigned long long budget, const std::string& what) {
  if (required > static_cast<long double>(budget)) {
    std::ostringstream req;
    req.precision(0);
    req << std::fixed << required;
    throw Error("budget_exceeded", what + ": enumeration exceeds budget",
                {{"required", req.str()}, {"budget", std::to_string(budget)}});
  }
}

}  // namespace spinl
