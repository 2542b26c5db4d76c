#pragma once

#include <string>

#include "spinl/cyclo.hpp"

namespace spinl {

// rational_part * pi^pi_exponent * i^i_exponent. pi stays symbolic; i is
// folded into rational_part only by fold_i().
struct GradedConstant {
  CycloValue rational_part{1};
  long pi_exponent = 0;
  int i_exponent = 0;  // in [0, 4)

  GradedConstant() = default;
  GradedConstant(CycloValue value, long pi_exp = 0, int i_exp = 0);

  GradedConstant fold_i() const;
  GradedConstant inverse() const;
  GradedConstant pow(long e) const;
  std::string to_string() const;

  friend GradedConstant operator*(const GradedConstant& a, const GradedConstant& b);
  friend GradedConstant operator/(const GradedConstant& a, const GradedConstant& b) {
    return a * b.inverse();
  }
  // Structural equality: same rational part and exponents, no folding.
  friend bool operator==(const GradedConstant& a, const GradedConstant& b);
};

inline GradedConstant graded_mul(const GradedConstant& a, const GradedConstant& b) { return a * b; }

}  // namespace spinl
