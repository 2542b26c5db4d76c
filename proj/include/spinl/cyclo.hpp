#pragma once

#include <complex>
#include <vector>

#include "spinl/rational.hpp"

namespace spinl {

// n-th cyclotomic polynomial, coefficients from degree 0 upward. Cached.
const std::vector<Integer>& cyclotomic_polynomial(unsigned long n);

// Element of Q(zeta_n) in the power basis of Q[x]/Phi_n, always reduced.
// Values with different conductors are compared and combined in Q(zeta_lcm).
class CycloValue {
 public:
  CycloValue();  // zero in Q
  CycloValue(const Rational& q);  // NOLINT: rationals embed implicitly
  CycloValue(long v) : CycloValue(Rational(v)) {}  // NOLINT

  // cyclo_reduce: raw[k] is the coefficient of x^k, any length.
  static CycloValue reduce(const std::vector<Rational>& raw, unsigned long n);
  static CycloValue zeta(unsigned long n, long k = 1);

  unsigned long conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws domain_error when the value is not rational.
  Rational rational_value() const;

  CycloValue lift(unsigned long multiple) const;
  // sigma_a: zeta_n -> zeta_n^a, gcd(a, n) = 1.
  CycloValue galois(long a) const;
  CycloValue conj() const { return galois(-1); }
  CycloValue inverse() const;
  // True when the value lies in Q(zeta_d).
  bool in_subfield(unsigned long d) const;

  std::complex<double> to_complex() const;

  CycloValue operator-() const;
  friend CycloValue operator+(const CycloValue& a, const CycloValue& b);
  friend CycloValue operator-(const CycloValue& a, const CycloValue& b);
  friend CycloValue operator*(const CycloValue& a, const CycloValue& b);
  friend CycloValue operator/(const CycloValue& a, const CycloValue& b);
  CycloValue& operator+=(const CycloValue& o) { return *this = *this + o; }
  CycloValue& operator-=(const CycloValue& o) { return *this = *this - o; }
  CycloValue& operator*=(const CycloValue& o) { return *this = *this * o; }
  friend bool operator==(const CycloValue& a, const CycloValue& b);
  friend bool operator!=(const CycloValue& a, const CycloValue& b) { return !(a == b); }

  CycloValue pow(long e) const;

 private:
  unsigned long n_ = 1;
  std::vector<Rational> coeffs_;
};

}  // namespace spinl
