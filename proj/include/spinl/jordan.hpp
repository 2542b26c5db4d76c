#pragma once

#include <array>
#include <vector>

#include "spinl/linalg.hpp"
#include "spinl/quaternion.hpp"

namespace spinl {

// [[c1, a3, a2*], [a3*, c2, a1], [a2, a1*, c3]] with c_i in K, a_i in B (x) K.
template <class K>
struct HermMatrix {
  std::array<K, 3> c{K(0), K(0), K(0)};
  std::array<Quat<K>, 3> a{};

  static HermMatrix identity() { return diag(K(1), K(1), K(1)); }
  static HermMatrix diag(K c1, K c2, K c3) {
    HermMatrix h;
    h.c = {std::move(c1), std::move(c2), std::move(c3)};
    return h;
  }

  // Matrix entry (i, j), 0-based.
  Quat<K> entry(int i, int j) const {
    if (i == j) return Quat<K>::scalar(c[i]);
    if (i == 0 && j == 1) return a[2];
    if (i == 1 && j == 0) return QuatAlgebra::conj(a[2]);
    if (i == 1 && j == 2) return a[0];
    if (i == 2 && j == 1) return QuatAlgebra::conj(a[0]);
    if (i == 2 && j == 0) return a[1];
    return QuatAlgebra::conj(a[1]);  // (0, 2)
  }
  // Inverse of entry(): reads the upper triangle plus (2,0).
  static HermMatrix from_entries(const std::array<std::array<Quat<K>, 3>, 3>& e) {
    HermMatrix h;
    for (int i = 0; i < 3; ++i) h.c[i] = e[i][i][0];
    h.a[0] = e[1][2];
    h.a[1] = e[2][0];
    h.a[2] = e[0][1];
    return h;
  }

  bool is_zero() const {
    for (const auto& x : c)
      if (!spinl::is_zero(x)) return false;
    for (const auto& q : a)
      if (!q.is_zero()) return false;
    return true;
  }

  HermMatrix operator-() const {
    HermMatrix h;
    for (int i = 0; i < 3; ++i) {
      h.c[i] = -c[i];
      h.a[i] = -a[i];
    }
    return h;
  }
  friend HermMatrix operator+(const HermMatrix& x, const HermMatrix& y) {
    HermMatrix h;
    for (int i = 0; i < 3; ++i) {
      h.c[i] = x.c[i] + y.c[i];
      h.a[i] = x.a[i] + y.a[i];
    }
    return h;
  }
  friend HermMatrix operator-(const HermMatrix& x, const HermMatrix& y) { return x + (-y); }
  friend HermMatrix operator*(const K& s, const HermMatrix& x) {
    HermMatrix h;
    for (int i = 0; i < 3; ++i) {
      h.c[i] = s * x.c[i];
      h.a[i] = s * x.a[i];
    }
    return h;
  }
  friend bool operator==(const HermMatrix& x, const HermMatrix& y) { return x.c == y.c && x.a == y.a; }
  friend bool operator!=(const HermMatrix& x, const HermMatrix& y) { return !(x == y); }
};

using HermQ = HermMatrix<Rational>;

template <class K>
HermMatrix<K> base_change(const HermQ& h) {
  HermMatrix<K> out;
  for (int i = 0; i < 3; ++i) {
    out.c[i] = K(h.c[i]);
    out.a[i] = base_change<K>(h.a[i]);
  }
  return out;
}

template <class K>
K trace(const HermMatrix<K>& h) {
  return h.c[0] + h.c[1] + h.c[2];
}

template <class K>
K norm(const QuatAlgebra& alg, const HermMatrix<K>& h) {
  const auto& [c1, c2, c3] = h.c;
  const auto& [a1, a2, a3] = h.a;
  return c1 * c2 * c3 - c1 * alg.norm(a1) - c2 * alg.norm(a2) - c3 * alg.norm(a3) +
         QuatAlgebra::trace(alg.mul(alg.mul(a1, a2), a3));
}

template <class K>
HermMatrix<K> sharp(const QuatAlgebra& alg, const HermMatrix<K>& h) {
  const auto& [c1, c2, c3] = h.c;
  const auto& [a1, a2, a3] = h.a;
  auto cj = [](const Quat<K>& q) { return QuatAlgebra::conj(q); };
  HermMatrix<K> s;
  s.c = {c2 * c3 - alg.norm(a1), c1 * c3 - alg.norm(a2), c1 * c2 - alg.norm(a3)};
  s.a[0] = alg.mul(cj(a3), cj(a2)) - c1 * a1;
  s.a[1] = alg.mul(cj(a1), cj(a3)) - c2 * a2;
  s.a[2] = alg.mul(cj(a2), cj(a1)) - c3 * a3;
  return s;
}

// tr(x, y) = sum c_i c'_i + sum tr_B(a_i a'_i*).
template <class K>
K pair(const QuatAlgebra& alg, const HermMatrix<K>& x, const HermMatrix<K>& y) {
  K s = x.c[0] * y.c[0] + x.c[1] * y.c[1] + x.c[2] * y.c[2];
  for (int i = 0; i < 3; ++i) s += QuatAlgebra::trace(alg.mul(x.a[i], QuatAlgebra::conj(y.a[i])));
  return s;
}

template <class K>
HermMatrix<K> cross(const QuatAlgebra& alg, const HermMatrix<K>& x, const HermMatrix<K>& y) {
  return sharp(alg, x + y) - sharp(alg, x) - sharp(alg, y);
}

// Partial norms of the upper-left j x j block: N_0 = 1, N_1 = c1, N_2 = c1c2 - n(a3), N_3 = N.
template <class K>
K partial_norm(const QuatAlgebra& alg, const HermMatrix<K>& h, int j) {
  switch (j) {
    case 0: return K(1);
    case 1: return h.c[0];
    case 2: return h.c[0] * h.c[1] - alg.norm(h.a[2]);
    case 3: return norm(alg, h);
    default: throw Error("domain_error", "partial norm index must be in 0..3");
  }
}

// Full 3x3 quaternionic product of the matrices (not the Jordan product).
template <class K>
std::array<std::array<Quat<K>, 3>, 3> matrix_product(const QuatAlgebra& alg, const HermMatrix<K>& x,
                                                     const HermMatrix<K>& y) {
  std::array<std::array<Quat<K>, 3>, 3> p{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) p[i][j] += alg.mul(x.entry(i, k), y.entry(k, j));
  return p;
}

// Rank from the vanishing of h, h#, N(h); exact.
int rank(const QuatAlgebra& alg, const HermQ& h);

// Valuation min over the c_i and the order coordinates of the a_i.
int herm_valuation(const QuatAlgebra& alg, const HermQ& h, unsigned long ell);
bool is_integral(const QuatAlgebra& alg, const HermQ& h);

// prod_v v^{-min(0, val X, val X#, val N(X))}.
Integer kappa(const QuatAlgebra& alg, const HermQ& x);
// The l-part of kappa alone.
Integer kappa_at(const QuatAlgebra& alg, const HermQ& x, unsigned long ell);

bool psd_test(const QuatAlgebra& alg, const HermQ& h);

struct HermLattice {
  int rank = 3;
  std::vector<HermQ> basis;
  Matrix gram;
};

// Z-basis of H_j(B_0): E_ii for i < j, then order-basis multiples in the
// off-diagonal slots of the upper-left block (a3, then a2, a1).
HermLattice herm_lattice(const QuatAlgebra& alg, int j);

struct LatticeDual {
  std::vector<HermQ> dual_basis;
  Rational index;     // |det Gram| = [L^v : L]
  Rational vol;       // (D_B / 4)^{j(j-1)/2}
  Rational dual_vol;  // vol / index
};
LatticeDual lattice_dual(const QuatAlgebra& alg, const HermLattice& lattice);

// tr(h, e) in Z for every basis vector e of the lattice.
bool in_dual(const QuatAlgebra& alg, const HermLattice& lattice, const HermQ& h);

// Coordinates of h in the lattice basis (h must lie in the span).
std::vector<Rational> lattice_coords(const QuatAlgebra& alg, const HermLattice& lattice, const HermQ& h);

}  // namespace spinl
