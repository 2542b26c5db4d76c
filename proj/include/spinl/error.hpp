#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace spinl {

// Domain error carrying a machine-readable code and a small context map.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message,
        std::map<std::string, std::string> context = {})
      : std::runtime_error(message), code_(std::move(code)), context_(std::move(context)) {}

  const std::string& code() const { return code_; }
  const std::map<std::string, std::string>& context() const { return context_; }

 private:
  std::string code_;
  std::map<std::string, std::string> context_;
};

// Default cap on enumerated residue classes; SPINL_ENUM_BUDGET overrides it.
unsigned long long enumeration_budget();

// Throws budget_exceeded when `required` classes exceed `budget`.
void check_budget(long double required, unsigned long long budget, const std::string& what);

}  // namespace spinl
