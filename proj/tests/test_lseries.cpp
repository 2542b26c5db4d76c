#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "spinl/lseries.hpp"

using namespace spinl;

namespace {

CycloValue rnd(std::mt19937_64& rng) {
  Rational v = 0;
  while (v == 0) v = oracles::small_rational(rng, 5, 4);
  return CycloValue(v);
}

SatakeParams random_params(std::mt19937_64& rng) { return SatakeParams{rnd(rng), rnd(rng), rnd(rng), rnd(rng)}; }

}  // namespace

TEST_CASE("Spin Euler factor") {
  UPoly f = spin_euler_factor(SatakeParams{}, CycloValue(1));
  REQUIRE(f.degree() == 8);
  for (unsigned k = 0; k <= 8; ++k)
    CHECK(f.coeff(k) == CycloValue(Rational(binomial(8, k)) * (k % 2 ? -1 : 1)));

  CycloValue b0(Rational(3, 2));
  UPoly g = spin_euler_factor(SatakeParams{b0, 1, 1, 1}, CycloValue(1));
  for (unsigned k = 0; k <= 8; ++k)
    CHECK(g.coeff(k) == CycloValue(Rational(binomial(8, k)) * (k % 2 ? -1 : 1)) * b0.pow(k));

  std::mt19937_64 rng(71);
  CycloValue chi_q = CycloValue::zeta(4);
  for (int k = 0; k < 100; ++k) {
    SatakeParams p = random_params(rng);
    UPoly h = spin_euler_factor(p, chi_q);
    CHECK(h.coeff(0) == CycloValue(1));
    CHECK(h.coeff(8) == (chi_q * p.b0).pow(8) * (p.b1 * p.b2 * p.b3).pow(4));
    auto roots = spin_roots(p, chi_q);
    REQUIRE(roots.size() == 8);
    CycloValue pair = chi_q * chi_q * p.b0 * p.b0 * p.b1 * p.b2 * p.b3;
    for (unsigned mask = 0; mask < 8; ++mask) CHECK(roots[mask] * roots[7 - mask] == pair);
  }
}

TEST_CASE("partial Euler products") {
  const auto& one = DirichletChar::trivial();
  CHECK(partial_euler_product({}, one, 12, 100, 1) == CycloValue(1));
  CycloValue single = partial_euler_product({{2, SatakeParams{}}}, one, 12, 100, 1);
  CHECK(single == CycloValue(rpow(1 - rpow(2, -12), -8)));

  std::mt19937_64 rng(72);
  for (int k = 0; k < 10; ++k) {
    SatakeParams p2 = random_params(rng), p3 = random_params(rng), p5 = random_params(rng);
    CycloValue a = partial_euler_product({{2, p2}, {3, p3}}, one, 8, 10, 1);
    CycloValue b = partial_euler_product({{5, p5}}, one, 8, 10, 1);
    CHECK(partial_euler_product({{2, p2}, {3, p3}, {5, p5}}, one, 8, 10, 1) == a * b);
    CHECK(partial_euler_product({{2, p2}, {3, p3}, {5, p5}}, one, 8, 10, 5) == a);
    CHECK(partial_euler_product({{2, p2}, {3, p3}, {5, p5}}, one, 8, 3, 1) == a);
  }
  try {
    partial_euler_product({{2, SatakeParams{CycloValue(2), 1, 1, 1}}}, one, 1, 10, 1);
    FAIL("expected a pole");
  } catch (const Error& e) {
    CHECK(e.code() == "pole");
    CHECK(e.context().at("q") == "2");
  }
  CHECK_THROWS_AS(partial_euler_product({{4, SatakeParams{}}}, one, 8, 10, 1), Error);
}

TEST_CASE("Spin Gamma factor") {
  GradedConstant g = spin_gamma(4, 6);
  Rational want = rpow(2, 4) * rpow(2, -38) * Rational(factorial(5) * factorial(6) * factorial(7) * factorial(16));
  CHECK(g.rational_part == CycloValue(want));
  CHECK(g.pi_exponent == -38);
  for (long r = 6; r <= 20; ++r)
    for (long s = 4; s <= r - 2; ++s) CHECK(spin_gamma(s, r).pi_exponent == -(4 * s + 6 * r - 14));
  CHECK_NOTHROW(spin_gamma(3, 6));
  CHECK_THROWS_AS(spin_gamma(0, 4), Error);
}

TEST_CASE("Hermite normal form classes") {
  Matrix t = Matrix::identity(3);
  auto d1 = hnf_classes(1, t);
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].m == Matrix::identity(3));
  CHECK(d1[0].xi);
  for (long p : {2, 3, 5}) {
    long count = 0;
    for (const auto& c : hnf_classes(p, t))
      if (c.det == p) ++count;
    CHECK(count == 1 + p + p * p);
    if (p < 5) CHECK(count == oracles::sublattice_count(p));
  }
  long count4 = 0;
  for (const auto& c : hnf_classes(4, t))
    if (c.det == 4) ++count4;
  CHECK(count4 == oracles::sublattice_count(4));
  for (const auto& c : hnf_classes(4, t, HnfFilter::xi)) CHECK(is_half_integral(evdokimov_index(t, c.m)));
}

TEST_CASE("cofactor and Evdokimov index") {
  Matrix m = Matrix::identity(3);
  m(1, 1) = 2;
  m(2, 0) = 1;
  m(2, 2) = 3;
  CHECK(m * cofactor(m).transpose() == determinant(m) * Matrix::identity(3));
  CHECK(evdokimov_index(Matrix::identity(3), Matrix::identity(3)) == Matrix::identity(3));
  Matrix half = Matrix::identity(3);
  half(0, 1) = half(1, 0) = Rational(1, 2);
  CHECK(is_half_integral(half));
  half(0, 0) = Rational(1, 2);
  CHECK_FALSE(is_half_integral(half));
}

TEST_CASE("Psi weights") {
  for (unsigned long p : {2ul, 3ul, 7ul}) {
    CHECK(psi_weight(1, p) == 1 - Rational(1, p));
    CHECK(psi_weight(Rational(1, p), p) == -1);
    CHECK(psi_weight(Rational(1, p * p), p) == 0);
  }
  CHECK(psi_weight(Rational(1, 3), 2) == 0);
  CHECK(psi_weight(3, 1) == Rational(1, 3));
}

TEST_CASE("Evdokimov partial sums") {
  const auto& one = DirichletChar::trivial();
  Matrix t = Matrix::identity(3);
  CoeffOracle delta;
  delta.values[t] = 1;
  delta.fallback = Rational(0);
  CHECK(evdokimov_partial(t, delta, one, 8, 6, 1, 1, 1) == CycloValue(1));
  // lambda m^{-1} T c(m) = lambda det(m) (m^t m)^{-1} cannot be 1_3 again for
  // lambda, det(m) <= 2 unless both are 1.
  CHECK(evdokimov_partial(t, delta, one, 8, 6, 2, 2, 1) == CycloValue(1));

  CoeffOracle zero;
  zero.fallback = Rational(0);
  CHECK(evdokimov_partial(t, zero, one, 8, 6, 3, 3, 1).is_zero());

  CoeffOracle constant;
  constant.fallback = Rational(1);
  // Only classes passing the integrality filter contribute; at lambda = det = 1 that is one term.
  CHECK(evdokimov_partial(t, constant, one, 8, 6, 1, 1, 1) == CycloValue(1));
  CycloValue two = evdokimov_partial(t, constant, one, 8, 6, 2, 1, 1);
  CHECK(two == CycloValue(1 + rpow(2, -8)));
  CHECK(evdokimov_partial(t, constant, one, 8, 6, 2, 1, 2) == CycloValue(1));

  CoeffOracle empty;
  try {
    evdokimov_partial(t, empty, one, 8, 6, 1, 1, 1);
    FAIL("expected missing_coefficient");
  } catch (const Error& e) {
    CHECK(e.code() == "missing_coefficient");
  }
}

TEST_CASE("level correction and implicit constant") {
  CHECK(l_correction(6, 1) == Rational(1, 36));
  CHECK(l_correction(2, 0) == -1);
  CHECK(l_correction(1, 5) == 1);
  CHECK(l_correction(30, 1) == Rational(-1, 900));
  CHECK_THROWS_AS(l_correction(4, 1), Error);
  Matrix t = Matrix::identity(3);
  t(0, 0) = 2;
  CHECK(implicit_constant(t) == 8);
  for (unsigned long m : {1ul, 2ul, 6ul, 30ul, 42ul})
    CHECK(l_correction(m, 0) == (oracles::omega(m) % 2 ? -1 : 1));
}
