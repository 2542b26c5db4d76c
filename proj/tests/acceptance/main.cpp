#include <cstdio>

#include "criteria.hpp"

int main() {
  int failed = 0;
  for (const auto& c : spinl::checks::criteria()) {
    auto r = spinl::checks::run_criterion(c);
    std::printf("%s criterion %d: %s (%.2f s) - %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(spinl::checks::criteria().size()) - failed,
              spinl::checks::criteria().size());
  return failed == 0 ? 0 : 1;
}
