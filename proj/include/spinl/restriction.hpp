#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinl/cyclo.hpp"
#include "spinl/jordan.hpp"

namespace spinl {

// Lexicographic on diagonals, then order coordinates of a1, a2, a3.
struct HermLess {
  bool operator()(const HermQ& x, const HermQ& y) const;
};
struct MatrixLess {
  bool operator()(const Matrix& x, const Matrix& y) const;
};

// 3x3 symmetric rational t of the Siegel expansion.
using SiegelIndex = Matrix;

// t_ij read off from h: diagonals, then half the reduced trace of each off-diagonal.
SiegelIndex symmetrize(const HermQ& h);

// Elements x of (1/M) O^v with x + x* = 2 re and n(x) <= bound, where O^v is the
// trace dual of the order.
std::vector<QuatQ> dual_ball(const QuatAlgebra& alg, unsigned long level, const Rational& re, const Rational& bound);

// All positive semidefinite h in (1/M) H_3(B_0)^v with symmetrize(h) = t.
std::vector<HermQ> fiber_over_t(const QuatAlgebra& alg, const SiegelIndex& t, unsigned long level);

enum class MissingPolicy { strict, zero_fill };

using HermExpansion = std::map<HermQ, CycloValue, HermLess>;
using SiegelExpansion = std::map<SiegelIndex, CycloValue, MatrixLess>;

struct RestrictionResult {
  SiegelExpansion coeffs;
  std::vector<std::string> warnings;
};

RestrictionResult restrict_expansion(const QuatAlgebra& alg, const HermExpansion& coeffs,
                                     const std::vector<SiegelIndex>& targets, unsigned long level,
                                     MissingPolicy policy = MissingPolicy::strict);

std::string herm_key(const QuatAlgebra& alg, const HermQ& h);
std::string siegel_key(const SiegelIndex& t);

}  // namespace spinl
