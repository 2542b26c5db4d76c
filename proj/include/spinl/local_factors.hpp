#pragma once

#include <string>
#include <vector>

#include "spinl/dirichlet.hpp"
#include "spinl/jordan.hpp"

namespace spinl {

// [lambda]_m = l^{min(m, val)}; pass kInfiniteValuation for lambda = 0.
Integer bracket(unsigned long ell, int val, unsigned m);

struct ValProfile {
  int rank = 0;
  unsigned long ell = 2;
  std::vector<int> vals;  // ascending, length rank

  static ValProfile make(int rank, unsigned long ell, std::vector<int> vals);
  int total() const;
};

// Elementary-divisor valuations of the rank-j upper-left block of h. Diagonal
// blocks are read directly. Otherwise, for l not dividing D_B, the valuations
// come from the contents val(h), val(h#) (or val(N_2) for j = 2) and val(N).
ValProfile profile_of(const QuatAlgebra& alg, const HermQ& h, int j, unsigned long ell);

// Polynomial in u with coefficients in Q(chi).
struct UPoly {
  std::vector<CycloValue> coeffs;

  static UPoly from_integers(const std::vector<Integer>& c);
  static UPoly one() { return from_integers({Integer(1)}); }
  void trim();
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  CycloValue coeff(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : CycloValue(0); }
  CycloValue evaluate(const CycloValue& u) const;
  // "1 + 2u + 4u^2"; coefficients must be rational.
  std::string to_string() const;
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b);
};

// Rank-2 kernel alpha''_n for valuations (v1, v2); zero for n < 0.
Rational alpha2(unsigned long ell, int n, int v1, int v2);
// l^{2m} (alpha''_m - alpha''_{m-1}): the rank-2 interior sum.
Rational alpha2_prime(unsigned long ell, int m, int v1, int v2);
// Rank-3 kernel alpha'''_m built from alpha''; vals ascending (tau first).
Rational alpha3(unsigned long ell, int m, const std::vector<int>& vals);

// P_l(h, u): rank 1 sum l^m u^m; rank 2 double sum; rank 3 l^{4m} alpha'''_m.
UPoly p_poly(const ValProfile& profile);
// prod_{1 <= iota < j} (1 - l^{2 iota} u) P(u): predicted interior sums I_m.
UPoly interior_closed_form(const ValProfile& profile);
// prod_{0 <= iota < j} (1 - l^{2 iota} u) P(u).
UPoly s_poly(const ValProfile& profile);

struct LocalFactorResult {
  int rank;
  unsigned long ell;
  std::vector<int> vals;
  long r;
  UPoly p;
  UPoly s;
  CycloValue u;        // chi(l) l^{-2r}
  CycloValue p_value;  // P(u)
  CycloValue value;    // S_l^{(j)}
};

LocalFactorResult s_factor(const ValProfile& profile, long r, const DirichletChar& chi);
LocalFactorResult s_factor(const QuatAlgebra& alg, const HermQ& h, int j, long r,
                           const DirichletChar& chi, unsigned long ell);

// Sum over X in H_j(B_0)/l^m with the rank-j congruence conditions of
// zeta_{l^m}^{tr(X, h)}. h must lie in the dual of H_j(B_0) and vanish
// outside the j x j block. Result is a rational integer.
Integer interior_sum_oracle(const QuatAlgebra& alg, int j, unsigned long ell, unsigned m, const HermQ& h,
                            unsigned long long budget = enumeration_budget());

// sum_{x in B_0 / l^m} zeta_{l^m}^{lambda n(x)}.
Integer lem1_sum(const QuatAlgebra& alg, unsigned long ell, unsigned m, const Integer& lambda,
                 unsigned long long budget = enumeration_budget());

}  // namespace spinl
