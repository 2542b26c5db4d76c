#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "spinl/jordan.hpp"

using namespace spinl;

namespace {

template <class K>
bool is_scalar_matrix(const std::array<std::array<Quat<K>, 3>, 3>& m, const K& s) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (m[i][j] != (i == j ? Quat<K>::scalar(s) : Quat<K>())) return false;
  return true;
}

HermQ with_a3(const QuatQ& a3, Rational c1, Rational c2) {
  HermQ h = HermQ::diag(c1, c2, 0);
  h.a[2] = a3;
  return h;
}

}  // namespace

TEST_CASE("norm, adjoint and trace examples") {
  const auto& H = QuatAlgebra::hamilton();
  HermQ one = HermQ::identity();
  CHECK(norm(H, one) == 1);
  CHECK(sharp(H, one) == one);
  CHECK(trace(one) == 3);
  HermQ d = HermQ::diag(2, 3, 5);
  CHECK(norm(H, d) == 30);
  CHECK(sharp(H, d) == HermQ::diag(15, 10, 6));
  CHECK(trace(d) == 10);
}

TEST_CASE("adjoint identities over Q and Q(i)") {
  std::mt19937_64 rng(31);
  for (const QuatAlgebra* alg : {&QuatAlgebra::hamilton(), &QuatAlgebra::disc7()}) {
    for (int k = 0; k < 250; ++k) {
      HermQ h = oracles::random_herm(*alg, rng);
      Rational n = norm(*alg, h);
      HermQ s = sharp(*alg, h);
      CHECK(is_scalar_matrix(matrix_product(*alg, h, s), n));
      CHECK(is_scalar_matrix(matrix_product(*alg, s, h), n));
      CHECK(sharp(*alg, s) == n * h);
      CHECK(norm(*alg, s) == n * n);

      auto z = oracles::random_gaussian_herm(*alg, rng);
      Gaussian nz = norm(*alg, z);
      auto sz = sharp(*alg, z);
      CHECK(is_scalar_matrix(matrix_product(*alg, z, sz), nz));
      CHECK(sharp(*alg, sz) == nz * z);
    }
  }
}

TEST_CASE("adjoint identity with a formal variable") {
  const auto& H = QuatAlgebra::hamilton();
  std::mt19937_64 rng(32);
  HermQ x0 = oracles::random_herm(H, rng), x1 = oracles::random_herm(H, rng);
  HermMatrix<QPoly> h = base_change<QPoly>(x0) + QPoly::x() * base_change<QPoly>(x1);
  QPoly n = norm(H, h);
  CHECK(n.degree() <= 3);
  CHECK(is_scalar_matrix(matrix_product(H, h, sharp(H, h)), n));
}

TEST_CASE("pairing and cross product") {
  const auto& H = QuatAlgebra::hamilton();
  std::mt19937_64 rng(33);
  HermQ one = HermQ::identity();
  CHECK(cross(H, one, one) == Rational(2) * one);
  for (int k = 0; k < 200; ++k) {
    HermQ x = oracles::random_herm(H, rng), y = oracles::random_herm(H, rng);
    CHECK(pair(H, one, x) == trace(x));
    CHECK(pair(H, x, y) == pair(H, y, x));
    CHECK(cross(H, x, y) == cross(H, y, x));
    CHECK(cross(H, x, x) == Rational(2) * sharp(H, x));
    CHECK(sharp(H, x + y) == sharp(H, x) + cross(H, x, y) + sharp(H, y));
  }
}

TEST_CASE("rank") {
  const auto& H = QuatAlgebra::hamilton();
  CHECK(rank(H, HermQ()) == 0);
  CHECK(rank(H, HermQ::diag(1, 0, 0)) == 1);
  CHECK(rank(H, HermQ::diag(1, 1, 0)) == 2);
  CHECK(rank(H, HermQ::identity()) == 3);
  CHECK(rank(H, HermQ::diag(1, -1, 0)) == 2);
  CHECK(rank(H, with_a3(QuatQ(0, 1, 0, 0), 1, 1)) == 1);
  CHECK(rank(H, with_a3(H.order_element(3), 1, 1)) == 1);
}

TEST_CASE("kappa") {
  const auto& H = QuatAlgebra::hamilton();
  CHECK(kappa(H, HermQ::identity()) == 1);
  CHECK(kappa(H, HermQ()) == 1);
  CHECK(kappa(H, HermQ::diag(Rational(1, 2), 0, 0)) == 2);
  CHECK(kappa(H, Rational(1, 2) * HermQ::identity()) == 8);

  std::mt19937_64 rng(34);
  const long dens[] = {1, 2, 3, 4, 5, 6, 10, 15};
  for (int k = 0; k < 100; ++k) {
    HermQ x;
    for (int i = 0; i < 3; ++i) {
      x.c[i] = Rational(static_cast<long>(rng() % 9) - 4, dens[rng() % 8]);
      std::array<Rational, 4> oc;
      for (auto& v : oc) v = Rational(static_cast<long>(rng() % 9) - 4, dens[rng() % 8]);
      x.a[i] = H.from_order_coords(oc);
    }
    for (auto& v : x.c) v.canonicalize();
    Integer prod = kappa_at(H, x, 2) * kappa_at(H, x, 3) * kappa_at(H, x, 5);
    CHECK(kappa(H, x) == prod);
  }
}

TEST_CASE("lattice duals and volumes") {
  const auto& H = QuatAlgebra::hamilton();
  auto l1 = herm_lattice(H, 1);
  auto d1 = lattice_dual(H, l1);
  CHECK(l1.basis.size() == 1);
  CHECK(d1.vol == 1);
  CHECK(d1.index == 1);
  CHECK(d1.dual_basis[0] == HermQ::diag(1, 0, 0));

  CHECK(herm_lattice(H, 2).basis.size() == 6);
  CHECK(herm_lattice(H, 3).basis.size() == 15);
  CHECK(lattice_dual(H, herm_lattice(H, 3)).vol == Rational(1, 8));
  CHECK(lattice_dual(QuatAlgebra::disc7(), herm_lattice(QuatAlgebra::disc7(), 3)).vol == Rational(343, 64));

  for (const QuatAlgebra* alg : {&QuatAlgebra::hamilton(), &QuatAlgebra::disc7()})
    for (int j = 1; j <= 3; ++j) {
      auto lat = herm_lattice(*alg, j);
      auto dual = lattice_dual(*alg, lat);
      const std::size_t n = lat.basis.size();
      Matrix gram(n, n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) gram(a, b) = pair(*alg, lat.basis[a], lat.basis[b]);
      Rational det = determinant(gram);
      CHECK(dual.index == abs(det));
      CHECK(dual.dual_vol * dual.index == dual.vol);
      for (std::size_t a = 0; a < n; ++a) {
        CHECK(in_dual(*alg, lat, dual.dual_basis[a]));
        for (std::size_t b = 0; b < n; ++b)
          CHECK(pair(*alg, dual.dual_basis[a], lat.basis[b]) == (a == b ? 1 : 0));
      }
    }
}

TEST_CASE("psd test") {
  const auto& H = QuatAlgebra::hamilton();
  CHECK(psd_test(H, HermQ::identity()));
  CHECK_FALSE(psd_test(H, HermQ::diag(1, 1, -1)));
  CHECK_FALSE(psd_test(H, with_a3(QuatQ(1, 1, 0, 0), 1, 1)));
  CHECK(psd_test(H, with_a3(QuatQ(0, 1, 0, 0), 1, 1)));
  CHECK(psd_test(H, HermQ()));

  std::mt19937_64 rng(35);
  for (int k = 0; k < 200; ++k) {
    Rational c1 = static_cast<long>(rng() % 7) - 3, c2 = static_cast<long>(rng() % 7) - 3,
             c3 = static_cast<long>(rng() % 7) - 3;
    CHECK(psd_test(H, HermQ::diag(c1, c2, c3)) == (c1 >= 0 && c2 >= 0 && c3 >= 0));
    HermQ h = oracles::random_herm(H, rng);
    if (psd_test(H, h)) CHECK(psd_test(H, h + Rational(1, 3) * HermQ::identity()));
  }
}
