#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace spinl::oracles {

Rational bernoulli_recurrence(unsigned n) {
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    Rational s = 0;
    for (unsigned j = 0; j < k; ++j) s += Rational(binomial(k + 1, j)) * b[j];
    b[k] = -s / Rational(k + 1);
  }
  return b[n];
}

Rational small_rational(Rng& rng, int num_range, int den_range) {
  long num = static_cast<long>(rng() % (2 * num_range + 1)) - num_range;
  long den = 1 + static_cast<long>(rng() % den_range);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

HermQ random_herm(const QuatAlgebra& alg, Rng& rng) {
  HermQ h;
  for (int i = 0; i < 3; ++i) {
    h.c[i] = small_rational(rng, 5, 3);
    std::array<Rational, 4> x;
    for (auto& v : x) v = small_rational(rng, 3, 2);
    h.a[i] = alg.from_order_coords(x);
  }
  return h;
}

HermMatrix<Gaussian> random_gaussian_herm(const QuatAlgebra& alg, Rng& rng) {
  HermQ x = random_herm(alg, rng), y = random_herm(alg, rng);
  HermMatrix<Gaussian> z;
  for (int i = 0; i < 3; ++i) {
    z.c[i] = Gaussian(x.c[i], y.c[i]);
    for (int k = 0; k < 4; ++k) z.a[i][k] = Gaussian(x.a[i][k], y.a[i][k]);
  }
  return z;
}

Matrix random_gsp6(Rng& rng) {
  auto sym = [&] {
    Matrix s(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) s(i, j) = s(j, i) = small_rational(rng, 2, 2);
    return s;
  };
  Matrix m(3, 3);
  do {
    for (auto& v : m.data) v = small_rational(rng, 2, 1);
  } while (determinant(m) == 0);
  Rational lambda;
  do lambda = small_rational(rng, 3, 2);
  while (lambda == 0);
  Matrix g = levi6(lambda, m) * unipotent6(sym(), false) * unipotent6(sym(), true);
  if (rng() % 2) g = g * j6();
  return g;
}

WQ random_w(const QuatAlgebra& alg, Rng& rng) {
  std::vector<Rational> x(kWDim);
  for (auto& v : x) v = small_rational(rng, 4, 3);
  return from_coords(alg, x);
}

std::array<std::array<Gaussian, 3>, 3> random_siegel_point(Rng& rng) {
  std::array<std::array<Gaussian, 3>, 3> z{};
  // y = diagonally dominant, hence positive definite.
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Rational x = small_rational(rng, 3, 2);
      Rational y = i == j ? Rational(3 + static_cast<long>(rng() % 3)) : small_rational(rng, 1, 2);
      z[i][j] = z[j][i] = Gaussian(x, y);
    }
  return z;
}

HermMatrix<Gaussian> embed_siegel_point(const std::array<std::array<Gaussian, 3>, 3>& z) {
  HermMatrix<Gaussian> h;
  for (int i = 0; i < 3; ++i) h.c[i] = z[i][i];
  h.a[0][0] = z[1][2];
  h.a[1][0] = z[2][0];
  h.a[2][0] = z[0][1];
  return h;
}

Gaussian det3(const std::array<std::array<Gaussian, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

namespace {

long scale_of(const QuatAlgebra& alg, unsigned long level) { return static_cast<long>(level * alg.discriminant()); }

// Order-coordinate integer arithmetic at scale L: x = X / L.
using V = std::array<long long, 4>;

long long norm_l2(const QuatAlgebra& alg, const V& x) {  // L^2 n(x)
  long long s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += x[i] * alg.gram()[i][j] * x[j];
  return s / 2;
}

long long trace_l(const QuatAlgebra& alg, const V& x) {  // L tr(x)
  long long s = 0;
  for (int i = 0; i < 4; ++i) s += alg.trace_form()[i] * x[i];
  return s;
}

V mul_l2(const QuatAlgebra& alg, const V& x, const V& y) {  // L^2 xy
  V out{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (x[i] && y[j])
        for (int k = 0; k < 4; ++k) out[k] += x[i] * y[j] * alg.mult_table()[i][j][k];
  return out;
}

// x / L in (1/M) times the trace dual of the order: tr(M x conj(e_j)) / L in Z for all
// j, i.e. L / M = D_B divides (X^t gram)_j.
bool in_dual_l(const QuatAlgebra& alg, const V& x, long l) {
  for (int j = 0; j < 4; ++j) {
    long long s = 0;
    for (int i = 0; i < 4; ++i) s += x[i] * alg.gram()[i][j];
    if (s % l != 0) return false;
  }
  return true;
}

std::vector<V> slot_candidates(const QuatAlgebra& alg, long l, unsigned long level, const Rational& re,
                               const Rational& bound) {
  std::vector<V> out;
  if (bound < 0) return out;
  // max |y_k| on {y^t G y / 2 <= B} is sqrt(2 B (G^{-1})_kk).
  Matrix g(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = alg.gram()[i][j];
  Matrix gi = inverse(g);
  std::array<long, 4> rad;
  for (int k = 0; k < 4; ++k) rad[k] = static_cast<long>(std::ceil(std::sqrt(Rational(2 * bound * gi(k, k)).get_d()) * l)) + 1;
  Rational bound_l2 = bound * l * l, tr_l = 2 * re * l;
  V x;
  for (x[0] = -rad[0]; x[0] <= rad[0]; ++x[0])
    for (x[1] = -rad[1]; x[1] <= rad[1]; ++x[1])
      for (x[2] = -rad[2]; x[2] <= rad[2]; ++x[2])
        for (x[3] = -rad[3]; x[3] <= rad[3]; ++x[3]) {
          if (Rational(static_cast<long>(trace_l(alg, x))) != tr_l) continue;
          if (Rational(static_cast<long>(norm_l2(alg, x))) > bound_l2) continue;
          if (in_dual_l(alg, x, l / static_cast<long>(level))) out.push_back(x);
        }
  return out;
}

}  // namespace

FiberKey fiber_key(const QuatAlgebra& alg, const HermQ& h, unsigned long level) {
  long l = scale_of(alg, level);
  FiberKey k{};
  for (int i = 0; i < 3; ++i) {
    Rational c = h.c[i] * l;
    if (!is_integer(c)) throw Error("domain_error", "entry outside the scaled lattice");
    k[i] = c.get_num().get_si();
    auto x = alg.order_coords(h.a[i]);
    for (int j = 0; j < 4; ++j) {
      Rational v = x[j] * l;
      if (!is_integer(v)) throw Error("domain_error", "entry outside the scaled lattice");
      k[3 + 4 * i + j] = v.get_num().get_si();
    }
  }
  return k;
}

bool key_psd(const QuatAlgebra& alg, const FiberKey& k) {
  // With all entries scaled by L: L^3 N = C1 C2 C3 - sum C_i n_i + tr(A1 A2 A3).
  std::array<long long, 3> c{k[0], k[1], k[2]};
  std::array<V, 3> a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) a[i][j] = k[3 + 4 * i + j];
  for (auto v : c)
    if (v < 0) return false;
  long long n[3] = {norm_l2(alg, a[0]), norm_l2(alg, a[1]), norm_l2(alg, a[2])};
  if (c[1] * c[2] < n[0] || c[0] * c[2] < n[1] || c[0] * c[1] < n[2]) return false;
  V p = mul_l2(alg, a[0], a[1]);
  // tr(p a3) with p at scale L^2 and a3 at scale L.
  V q = mul_l2(alg, p, a[2]);
  return c[0] * c[1] * c[2] - c[0] * n[0] - c[1] * n[1] - c[2] * n[2] + trace_l(alg, q) >= 0;
}

std::vector<FiberKey> fiber_brute_force(const QuatAlgebra& alg, const Matrix& t, unsigned long level) {
  std::vector<FiberKey> out;
  long l = scale_of(alg, level);
  for (int i = 0; i < 3; ++i)
    if (t(i, i) < 0 || !is_integer(t(i, i) * level)) return out;
  // Slot a1 sits at (1,2), a2 at (2,0), a3 at (0,1).
  const int rows[3][2] = {{1, 2}, {2, 0}, {0, 1}};
  std::array<std::vector<V>, 3> cand;
  for (int s = 0; s < 3; ++s) {
    int p = rows[s][0], q = rows[s][1];
    cand[s] = slot_candidates(alg, l, level, t(p, q), t(p, p) * t(q, q));
  }
  FiberKey k{};
  for (int i = 0; i < 3; ++i) k[i] = Rational(t(i, i) * l).get_num().get_si();
  for (const auto& a1 : cand[0])
    for (const auto& a2 : cand[1])
      for (const auto& a3 : cand[2]) {
        for (int j = 0; j < 4; ++j) {
          k[3 + j] = a1[j];
          k[7 + j] = a2[j];
          k[11 + j] = a3[j];
        }
        if (key_psd(alg, k)) out.push_back(k);
      }
  std::sort(out.begin(), out.end());
  return out;
}

long sublattice_count(long n) {
  // Every index-n sublattice contains n Z^3 and has a basis with entries in [0, n],
  // so it is determined by its image in (Z/n)^3.
  std::set<std::vector<int>> seen;
  std::array<long, 9> e{};
  long total = 1;
  for (int i = 0; i < 9; ++i) total *= n + 1;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < 9; ++i) e[i] = c % (n + 1), c /= n + 1;
    long det = e[0] * (e[4] * e[8] - e[5] * e[7]) - e[1] * (e[3] * e[8] - e[5] * e[6]) +
               e[2] * (e[3] * e[7] - e[4] * e[6]);
    if (det != n && det != -n) continue;
    std::vector<int> span(n * n * n, 0);
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b)
        for (long d = 0; d < n; ++d) {
          long v[3];
          for (int r = 0; r < 3; ++r) v[r] = ((a * e[3 * r] + b * e[3 * r + 1] + d * e[3 * r + 2]) % n + n) % n;
          span[(v[0] * n + v[1]) * n + v[2]] = 1;
        }
    seen.insert(span);
  }
  return static_cast<long>(seen.size());
}

int omega(unsigned long n) {
  int count = 0;
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ++count;
      while (n % p == 0) n /= p;
    }
  return count + (n > 1 ? 1 : 0);
}

}  // namespace spinl::oracles
