#include <cmath>
#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "spinl/cyclo.hpp"
#include "spinl/dirichlet.hpp"
#include "spinl/graded.hpp"

using namespace spinl;

namespace {

Rational q(const char* s) { return parse_rational(s); }

const DirichletChar& chi4() {
  static const DirichletChar c = DirichletChar::parse("4:2:3=1");
  return c;
}
const DirichletChar& chi5() {
  static const DirichletChar c = DirichletChar::parse("5:4:2=1");
  return c;
}

std::vector<Rational> random_poly(std::mt19937_64& rng, std::size_t len) {
  std::vector<Rational> p(len);
  for (auto& v : p) v = oracles::small_rational(rng, 5, 3);
  return p;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> p(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
  return p;
}

}  // namespace

TEST_CASE("cyclo_reduce examples") {
  CHECK(CycloValue::reduce({0, 0, 1, 0}, 4) == CycloValue(-1));
  CHECK(CycloValue::reduce({0, 1}, 2) == CycloValue(-1));
  for (unsigned long n : {2ul, 4ul, 8ul, 9ul, 25ul})
    CHECK(CycloValue::reduce(std::vector<Rational>(n, Rational(1)), n).is_zero());
  CHECK(CycloValue::zeta(12, 12) == CycloValue(1));
  CHECK(CycloValue::zeta(3).conductor() == 3);
}

TEST_CASE("cyclo_reduce is a ring map and idempotent") {
  std::mt19937_64 rng(11);
  for (unsigned long n : {3ul, 4ul, 5ul, 8ul, 12ul}) {
    for (int k = 0; k < 40; ++k) {
      auto a = random_poly(rng, 2 * n);
      auto b = random_poly(rng, n + 3);
      CycloValue ra = CycloValue::reduce(a, n), rb = CycloValue::reduce(b, n);
      CHECK(CycloValue::reduce(poly_mul(a, b), n) == ra * rb);
      CHECK(CycloValue::reduce(ra.coeffs(), n) == ra);
      std::vector<Rational> sum(std::max(a.size(), b.size()));
      for (std::size_t i = 0; i < a.size(); ++i) sum[i] += 3 * a[i];
      for (std::size_t i = 0; i < b.size(); ++i) sum[i] += b[i];
      CHECK(CycloValue::reduce(sum, n) == CycloValue(3) * ra + rb);
    }
  }
}

TEST_CASE("cyclotomic values across conductors") {
  CycloValue i = CycloValue::zeta(4);
  CHECK(i * i == CycloValue(-1));
  CHECK((CycloValue::zeta(3) * CycloValue::zeta(4)) == CycloValue::zeta(12, 7));
  CHECK(i.inverse() == i.conj());
  CHECK_FALSE(i.is_rational());
  CHECK_THROWS_AS(i.rational_value(), Error);
  CHECK(CycloValue::zeta(8).pow(2).in_subfield(4));
}

TEST_CASE("char_eval examples") {
  CHECK(chi4()(3) == CycloValue(-1));
  CHECK(chi4()(4).is_zero());
  CHECK(chi5()(5).is_zero());
  CHECK(chi5()(4) == CycloValue(-1));
  CHECK(chi5()(2) == CycloValue::zeta(4));
  CHECK(DirichletChar::trivial()(7) == CycloValue(1));
  CHECK_FALSE(chi4().is_even());
  CHECK_FALSE(chi5().is_even());
  CHECK(DirichletChar::parse("5:2:2=1").is_even());
  CHECK(DirichletChar::parse("trivial:6").conductor() == 1);
  CHECK(chi5().conductor() == 5);
  CHECK_THROWS_AS(DirichletChar::parse("5:3:2=1"), Error);
}

TEST_CASE("characters are multiplicative") {
  std::mt19937_64 rng(12);
  std::vector<DirichletChar> chars = {chi4(), chi5(), DirichletChar::parse("5:2:2=1"),
                                      DirichletChar::parse("7:6:3=1"), DirichletChar::trivial(3)};
  {
    std::map<unsigned long, long> images;
    for (const auto& g : unit_generators(15)) images[g.value] = 4 / static_cast<long>(g.order);
    chars.emplace_back(15, 4, images);
  }
  for (const auto& chi : chars) {
    const long m = static_cast<long>(chi.modulus());
    int done = 0;
    while (done < 500) {
      long a = static_cast<long>(rng() % 1000) - 500, b = static_cast<long>(rng() % 1000) - 500;
      if (gcd_ul(mod_floor(a, m), m) != 1 || gcd_ul(mod_floor(b, m), m) != 1) continue;
      CHECK(chi(a * b) == chi(a) * chi(b));
      ++done;
    }
  }
}

TEST_CASE("generalized Bernoulli numbers") {
  CHECK(gen_bernoulli(DirichletChar::trivial(), 12) == CycloValue(q("-691/2730")));
  CHECK(gen_bernoulli(DirichletChar::trivial(), 3).is_zero());
  CHECK(gen_bernoulli(chi4(), 1) == CycloValue(q("-1/2")));
  // The generating function sum_{a=1}^{M} gives B_1 = +1/2; the recurrence
  // uses the other sign convention.
  CHECK(gen_bernoulli(DirichletChar::trivial(), 1) == CycloValue(q("1/2")));
  for (unsigned n = 0; n <= 24; ++n)
    if (n != 1) CHECK(gen_bernoulli(DirichletChar::trivial(), n) == CycloValue(oracles::bernoulli_recurrence(n)));
}

TEST_CASE("l_value_ratio at even integers") {
  const auto& one = DirichletChar::trivial();
  CHECK(l_value_ratio(one, 12) == CycloValue(q("691/65520")));
  CHECK(l_value_ratio(one, 8) == CycloValue(q("1/480")));
  CHECK_THROWS_AS(l_value_ratio(one, 3), Error);
  CHECK_THROWS_AS(l_value_ratio(chi4(), 2), Error);

  // Gamma(n) zeta(n) / (2 pi)^n with i^n = 1 for n = 0 mod 4, or -1 otherwise.
  for (unsigned n = 2; n <= 16; n += 2) {
    double zeta = 0;
    const int terms = 100000;
    for (int k = terms; k >= 1; --k) zeta += std::pow(static_cast<double>(k), -static_cast<double>(n));
    // Euler-Maclaurin tail.
    zeta += std::pow(terms, 1.0 - n) / (n - 1) - std::pow(terms, -static_cast<double>(n)) / 2 +
            n * std::pow(terms, -1.0 - n) / 12;
    double expect = std::tgamma(n) * zeta / std::pow(2 * M_PI, n) * (n % 4 == 0 ? 1 : -1);
    double got = l_value_ratio(one, n).rational_value().get_d();
    CHECK(std::abs(got - expect) <= 1e-12 * std::abs(expect));
  }
}

TEST_CASE("l_value_ratio for real characters") {
  // L(chi_4, 1) = pi/4 and L(chi_4, 3) = pi^3/32.
  CHECK(l_value_ratio(chi4(), 1) == CycloValue(q("-1/8")) * CycloValue::zeta(4));
  CHECK(l_value_ratio(chi4(), 3) == CycloValue(q("1/128")) * CycloValue::zeta(4));
  // Rational only up to the Gauss sum once chi is nontrivial.
  const DirichletChar quad5 = DirichletChar::parse("5:2:2=1");
  for (unsigned n : {1u, 3u, 5u, 7u}) {
    CHECK_FALSE(l_value_ratio(chi4(), n).is_rational());
    CHECK((l_value_ratio(chi4(), n) / gauss_sum(chi4())).is_rational());
  }
  for (unsigned n : {2u, 4u, 6u}) CHECK((l_value_ratio(quad5, n) / gauss_sum(quad5)).is_rational());
  for (unsigned n : {2u, 4u, 6u, 8u, 10u, 12u}) CHECK(l_value_ratio(DirichletChar::trivial(), n).is_rational());
}

TEST_CASE("graded constants") {
  GradedConstant one;
  CHECK(one * one == one);
  CHECK(GradedConstant(2, -3, 1) * GradedConstant(3, -1, 3) == GradedConstant(6, -4, 0));
  CHECK(GradedConstant(1, 0, 2).fold_i() == GradedConstant(-1, 0, 0));
  GradedConstant g(CycloValue(q("5/7")), 4, 3);
  CHECK(g * g.inverse() == one);
  CHECK(g.pow(2) == GradedConstant(CycloValue(q("25/49")), 8, 2));
}
