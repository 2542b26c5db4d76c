#include "spinl/graded.hpp"

#include <sstream>

namespace spinl {

GradedConstant::GradedConstant(CycloValue value, long pi_exp, int i_exp)
    : rational_part(std::move(value)), pi_exponent(pi_exp), i_exponent(static_cast<int>(mod_floor(i_exp, 4))) {}

GradedConstant GradedConstant::fold_i() const {
  CycloValue factor = i_exponent % 2 == 0 ? CycloValue(i_exponent == 0 ? 1 : -1)
                                          : CycloValue::zeta(4, i_exponent);
  return GradedConstant(rational_part * factor, pi_exponent, 0);
}

GradedConstant GradedConstant::inverse() const {
  return GradedConstant(rational_part.inverse(), -pi_exponent, -i_exponent);
}

GradedConstant GradedConstant::pow(long e) const {
  return GradedConstant(rational_part.pow(e), pi_exponent * e,
                        static_cast<int>(mod_floor(static_cast<long>(i_exponent) * e, 4)));
}

std::string GradedConstant::to_string() const {
  std::ostringstream os;
  if (rational_part.is_rational())
    os << spinl::to_string(rational_part.rational_value());
  else
    os << "<cyclotomic n=" << rational_part.conductor() << ">";
  os << " * pi^" << pi_exponent << " * i^" << i_exponent;
  return os.str();
}

GradedConstant operator*(const GradedConstant& a, const GradedConstant& b) {
  return GradedConstant(a.rational_part * b.rational_part, a.pi_exponent + b.pi_exponent,
                        a.i_exponent + b.i_exponent);
}

bool operator==(const GradedConstant& a, const GradedConstant& b) {
  return a.rational_part == b.rational_part && a.pi_exponent == b.pi_exponent &&
         a.i_exponent == b.i_exponent;
}

}  // namespace spinl
