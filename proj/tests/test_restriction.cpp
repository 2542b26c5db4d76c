#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "spinl/restriction.hpp"

using namespace spinl;

namespace {

Matrix scalar3(long s) { return Rational(s) * Matrix::identity(3); }

// Congruence by the antidiagonal permutation followed by conjugation.
HermQ reversed(const HermQ& h) {
  HermQ r;
  r.c = {h.c[2], h.c[1], h.c[0]};
  r.a = {QuatAlgebra::conj(h.a[2]), QuatAlgebra::conj(h.a[1]), QuatAlgebra::conj(h.a[0])};
  return r;
}

HermQ conjugated(const HermQ& h) {
  HermQ r = h;
  for (auto& a : r.a) a = QuatAlgebra::conj(a);
  return r;
}

}  // namespace

TEST_CASE("symmetrize") {
  const auto& H = QuatAlgebra::hamilton();
  HermQ h = HermQ::diag(1, 2, 3);
  h.a[0] = QuatQ(Rational(1, 2), 1, 0, 0);
  h.a[2] = QuatQ(-1, 0, 0, 1);
  Matrix t = symmetrize(h);
  CHECK(t(0, 0) == 1);
  CHECK(t(2, 2) == 3);
  CHECK(t(1, 2) == Rational(1, 2));
  CHECK(t(2, 1) == Rational(1, 2));
  CHECK(t(0, 1) == -1);
  CHECK(t(0, 2) == 0);
  CHECK(siegel_key(t) == "[[1,-1,0],[-1,2,1/2],[0,1/2,3]]");
  CHECK(herm_key(H, HermQ::identity()).size() > 0);
}

TEST_CASE("dual ball") {
  const auto& H = QuatAlgebra::hamilton();
  auto ball = dual_ball(H, 1, 0, 1);
  for (const auto& x : ball) {
    CHECK(QuatAlgebra::trace(x) == 0);
    CHECK(H.norm(x) <= 1);
  }
  CHECK(dual_ball(H, 1, 0, -1).empty());
}

TEST_CASE("small fibers") {
  const auto& H = QuatAlgebra::hamilton();
  auto f0 = fiber_over_t(H, scalar3(0), 1);
  REQUIRE(f0.size() == 1);
  CHECK(f0[0].is_zero());
  Matrix neg = Matrix::identity(3);
  neg(0, 0) = -1;
  CHECK(fiber_over_t(H, neg, 1).empty());
  Matrix asym = Matrix::identity(3);
  asym(0, 1) = 1;
  CHECK_THROWS_AS(fiber_over_t(H, asym, 1), Error);
}

TEST_CASE("fiber over the identity") {
  for (const QuatAlgebra* alg : {&QuatAlgebra::hamilton(), &QuatAlgebra::disc7()}) {
    Matrix t = scalar3(1);
    auto fiber = fiber_over_t(*alg, t, 1);
    CHECK(fiber.size() == (alg->discriminant() == 2 ? 967u : 21187u));
    auto lat = herm_lattice(*alg, 3);
    std::set<HermQ, HermLess> set(fiber.begin(), fiber.end());
    CHECK(set.size() == fiber.size());
    int conj_psd = 0;
    for (const auto& h : fiber) {
      CHECK(symmetrize(h) == t);
      CHECK(psd_test(*alg, h));
      CHECK(in_dual(*alg, lat, h));
      CHECK(set.count(reversed(h)) == 1);
      if (psd_test(*alg, conjugated(h))) ++conj_psd;
    }
    // Entrywise conjugation is not a congruence and does not preserve psd.
    if (alg->discriminant() == 2) CHECK(conj_psd == 487);
  }
}

TEST_CASE("fiber against brute force at level 2") {
  const auto& H = QuatAlgebra::hamilton();
  Matrix t = Rational(1, 2) * Matrix::identity(3);
  t(0, 1) = t(1, 0) = Rational(1, 4);
  auto fiber = fiber_over_t(H, t, 2);
  std::set<oracles::FiberKey> got;
  for (const auto& h : fiber) got.insert(oracles::fiber_key(H, h, 2));
  auto brute = oracles::fiber_brute_force(H, t, 2);
  std::set<oracles::FiberKey> want(brute.begin(), brute.end());
  CHECK(got == want);
  CHECK(!fiber.empty());
}

TEST_CASE("restricting expansions") {
  const auto& H = QuatAlgebra::hamilton();
  HermExpansion zero_only{{HermQ(), CycloValue(1)}};
  auto r0 = restrict_expansion(H, zero_only, {scalar3(0)}, 1);
  CHECK(r0.coeffs.at(scalar3(0)) == CycloValue(1));
  CHECK(r0.warnings.empty());

  HermExpansion diag_only{{HermQ::identity(), CycloValue(5)}};
  try {
    restrict_expansion(H, diag_only, {scalar3(1)}, 1);
    FAIL("expected missing_coefficient");
  } catch (const Error& e) {
    CHECK(e.code() == "missing_coefficient");
    CHECK(e.context().count("h") == 1);
  }
  auto filled = restrict_expansion(H, diag_only, {scalar3(1)}, 1, MissingPolicy::zero_fill);
  CHECK(filled.coeffs.at(scalar3(1)) == CycloValue(5));
  CHECK(filled.warnings.size() == 966);

  HermExpansion full;
  Rational total = 0;
  long k = 1;
  for (const auto& h : fiber_over_t(H, scalar3(1), 1)) {
    Rational a(k % 7, 3);
    full[h] = CycloValue(a);
    total += a;
    ++k;
  }
  auto rf = restrict_expansion(H, full, {scalar3(1)}, 1);
  CHECK(rf.coeffs.at(scalar3(1)).is_rational());
  CHECK(rf.coeffs.at(scalar3(1)) == CycloValue(total));
}
