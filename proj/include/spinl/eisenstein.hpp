#pragma once

#include <vector>

#include "spinl/graded.hpp"
#include "spinl/local_factors.hpp"

namespace spinl {

// prod_{iota < j} (2 pi i)^alpha pi^{-2 iota} Gamma(alpha - 2 iota).
GradedConstant gamma_j_symbolic(int j, long alpha);

// L(j) = (2i)^{-j(j-1)} prod_{iota < j} Gamma(2r-2iota) L(chi, 2r-2iota) / (2 pi i)^{2r-2iota}.
CycloValue l_normalizer(int j, long r, const DirichletChar& chi);

// pi^{-(3s+3r-6)} Gamma(s+r) Gamma(s+r-2) Gamma(s+r-4).
GradedConstant c_infinity(long s, long r);

struct KernelCoeff {
  HermQ h;
  int j = 0;
  CycloValue value;              // element of Q(chi)
  GradedConstant normalization;  // C_inf,h prod_l S_l = value * normalization
  CycloValue l_inverse;          // L(j)^{-1}
  Rational nj_power;             // N_j(h)^{2r-2j-1}
  Rational dual_volume;          // Vol(H_j(B_0)^v)
  std::vector<LocalFactorResult> local;  // one per prime dividing N_j(h)
};

// L(j)^{-1} N_j(h)^{2r-2j-1} Vol(H_j(B_0)^v) prod_{l | N_j(h)} P_l(h, chi(l) l^{-2r}),
// for h supported on its upper-left j x j block with N_j(h) != 0.
KernelCoeff kernel_coeff(const QuatAlgebra& alg, const HermQ& h, long r, const DirichletChar& chi);

// Eigenvalue of Delta on exp(2 pi i tr(Z, h)).
Rational delta_on_exponential(const QuatAlgebra& alg, const HermQ& h);

// D_B^r C_inf(r,r) L(chi,2r) L^{(D_B)}(chi,2r-2) L(chi,2r-4), with each Gamma L
// product folded into its Bernoulli ratio: E coefficients = G coefficients * this.
GradedConstant normalization_bridge(const QuatAlgebra& alg, long r, const DirichletChar& chi);

}  // namespace spinl
