#pragma once

#include <map>
#include <optional>
#include <vector>

#include "spinl/dirichlet.hpp"
#include "spinl/graded.hpp"
#include "spinl/local_factors.hpp"
#include "spinl/restriction.hpp"

namespace spinl {

struct SatakeParams {
  CycloValue b0{1}, b1{1}, b2{1}, b3{1};
};

// prod_{J in {1,2,3}} (1 - chi(q) b0 prod_{j in J} b_j X), as a polynomial in X.
UPoly spin_euler_factor(const SatakeParams& p, const CycloValue& chi_q);
// The eight roots chi(q) b0 prod_J b_j, indexed by the bitmask of J.
std::vector<CycloValue> spin_roots(const SatakeParams& p, const CycloValue& chi_q);

// prod over primes q <= bound, q not dividing M, of 1 / factor(q^{-s}).
CycloValue partial_euler_product(const std::map<unsigned long, SatakeParams>& params, const DirichletChar& chi, long s,
                                 unsigned long bound, unsigned long level);

// Gamma_C(s+r-4) Gamma_C(s+r-3) Gamma_C(s+r-2) Gamma_C(s+3r-5), Gamma_C(x) = 2 (2 pi)^{-x} Gamma(x).
GradedConstant spin_gamma(long s, long r);

// det(m) m^{-t}.
Matrix cofactor(const Matrix& m);
// m^{-1} T c(m).
Matrix evdokimov_index(const Matrix& t, const Matrix& m);
// Integer diagonal and half-integer off-diagonal entries.
bool is_half_integral(const Matrix& s);

struct HnfClass {
  Matrix m;
  long det = 0;
  bool xi = false;
};
enum class HnfFilter { none, xi };

// Lower-triangular column Hermite forms, one per class m SL_3(Z), 1 <= det <= bound:
// positive diagonal and 0 <= m_ij < m_ii for j < i.
std::vector<HnfClass> hnf_classes(long det_bound, const Matrix& t, HnfFilter filter = HnfFilter::none);

Rational psi_weight(const Rational& lambda, unsigned long level);

struct CoeffOracle {
  std::map<Matrix, Rational, MatrixLess> values;
  std::optional<Rational> fallback;

  Rational at(const Matrix& t) const;
};

// Truncated sum over lambda <= lambda_bound prime to M and Xi-passing classes of det <= det_bound
// of a(lambda m^{-1} T c(m)) chi(lambda det m) / (lambda^s det(m)^{s-2r+3}).
CycloValue evdokimov_partial(const Matrix& t, const CoeffOracle& oracle, const DirichletChar& chi, long s, long r,
                             long lambda_bound, long det_bound, unsigned long level);

// (-1)^{Omega(M)} M^{-2s}, M squarefree.
Rational l_correction(unsigned long level, long s);
// det(T)^3.
Rational implicit_constant(const Matrix& t);

}  // namespace spinl
