#pragma once

#include <functional>
#include <vector>

#include "spinl/jordan.hpp"
#include "spinl/linalg.hpp"

namespace spinl {

constexpr std::size_t kWDim = 32;

// (a, b, c, d) in K + H3 + H3 + K.
template <class K>
struct WVector {
  K a{0};
  HermMatrix<K> b, c;
  K d{0};

  static WVector e() { WVector w; w.a = K(1); return w; }
  static WVector f() { WVector w; w.d = K(1); return w; }

  friend WVector operator+(const WVector& x, const WVector& y) {
    return WVector{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend WVector operator*(const K& s, const WVector& x) {
    return WVector{s * x.a, s * x.b, s * x.c, s * x.d};
  }
  friend bool operator==(const WVector& x, const WVector& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

using WQ = WVector<Rational>;

// Coordinates: a; b as c1,c2,c3 then a1,a2,a3 in order coordinates; c likewise; d.
template <class K>
std::vector<K> to_coords(const QuatAlgebra& alg, const WVector<K>& w) {
  std::vector<K> x;
  x.reserve(kWDim);
  x.push_back(w.a);
  for (const HermMatrix<K>* h : {&w.b, &w.c}) {
    for (int i = 0; i < 3; ++i) x.push_back(h->c[i]);
    for (int i = 0; i < 3; ++i)
      for (const auto& v : alg.order_coords(h->a[i])) x.push_back(v);
  }
  x.push_back(w.d);
  return x;
}

template <class K>
WVector<K> from_coords(const QuatAlgebra& alg, const std::vector<K>& x) {
  WVector<K> w;
  std::size_t p = 0;
  w.a = x[p++];
  for (HermMatrix<K>* h : {&w.b, &w.c}) {
    for (int i = 0; i < 3; ++i) h->c[i] = x[p++];
    for (int i = 0; i < 3; ++i) {
      std::array<K, 4> oc{x[p], x[p + 1], x[p + 2], x[p + 3]};
      p += 4;
      h->a[i] = alg.from_order_coords(oc);
    }
  }
  w.d = x[p];
  return w;
}

WQ basis_vector(const QuatAlgebra& alg, std::size_t k);

// <u, v> = a d' - tr(b, c') + tr(c, b') - d a'.
template <class K>
K symplectic(const QuatAlgebra& alg, const WVector<K>& u, const WVector<K>& v) {
  return u.a * v.d - pair(alg, u.b, v.c) + pair(alg, u.c, v.b) - u.d * v.a;
}

// Q(w) = (ad - tr(b, c))^2 + 4 a N(c) + 4 d N(b) - 4 tr(b#, c#).
template <class K>
K quartic(const QuatAlgebra& alg, const WVector<K>& w) {
  K t = w.a * w.d - pair(alg, w.b, w.c);
  return t * t + K(4) * w.a * norm(alg, w.c) + K(4) * w.d * norm(alg, w.b) -
         K(4) * pair(alg, sharp(alg, w.b), sharp(alg, w.c));
}

// Gram matrix of <,> on the coordinate basis.
const Matrix& symplectic_gram(const QuatAlgebra& alg);

// r(Z) = e n(-Z) = (1, -Z, Z#, -N(Z)).
template <class K>
WVector<K> r_of(const QuatAlgebra& alg, const HermMatrix<K>& z) {
  return WVector<K>{K(1), -z, sharp(alg, z), -norm(alg, z)};
}

// An element of G(Q) acting on the right on coordinate row vectors.
class GElement {
 public:
  // Verifies invertibility, <ug, vg> = nu <u, v> on all basis pairs and
  // Q(ug) = nu^2 Q(u) on the basis plus a fixed batch of mixed vectors.
  GElement(const QuatAlgebra& alg, Matrix action, Matrix inverse_action, Rational nu);

  const QuatAlgebra& algebra() const { return *alg_; }
  const Matrix& action() const { return mat_; }
  const Matrix& inverse_action() const { return inv_; }
  const Rational& nu() const { return nu_; }

  GElement inverse() const;
  GElement scaled(const Rational& s) const;  // scalar s in G, similitude s^2
  friend GElement operator*(const GElement& g, const GElement& h);  // w (g h) = (w g) h

  template <class K>
  WVector<K> apply(const WVector<K>& w) const { return act(w, mat_); }
  template <class K>
  WVector<K> apply_inverse(const WVector<K>& w) const { return act(w, inv_); }

  // Form checks on arbitrary vectors, for property tests.
  bool preserves(const WQ& u, const WQ& v) const;
  bool preserves_quartic(const WQ& w) const;

 private:
  GElement(const QuatAlgebra* alg, Matrix m, Matrix inv, Rational nu, bool)
      : alg_(alg), mat_(std::move(m)), inv_(std::move(inv)), nu_(std::move(nu)) {}
  template <class K>
  WVector<K> act(const WVector<K>& w, const Matrix& m) const {
    auto x = to_coords(*alg_, w);
    std::vector<K> y(kWDim, K(0));
    for (std::size_t i = 0; i < kWDim; ++i) {
      if (spinl::is_zero(x[i])) continue;
      for (std::size_t j = 0; j < kWDim; ++j)
        if (m(i, j) != 0) y[j] += x[i] * K(m(i, j));
    }
    return from_coords(*alg_, y);
  }

  const QuatAlgebra* alg_;
  Matrix mat_, inv_;
  Rational nu_;
};

// Build from a map on W given as a function on basis vectors.
GElement g_from_map(const QuatAlgebra& alg, const std::function<WQ(const WQ&)>& f,
                    const std::function<WQ(const WQ&)>& f_inv, const Rational& nu);

GElement identity_element(const QuatAlgebra& alg);
GElement n_embed(const QuatAlgebra& alg, const HermQ& x);
GElement nbar_embed(const QuatAlgebra& alg, const HermQ& x);

// 6x6 helpers in the basis e1, e2, e3, f1, f2, f3.
Matrix j6();
// Returns nu with g J g^t = nu J, or throws not_symplectic.
Rational gsp6_similitude(const Matrix& g);
Matrix levi6(const Rational& lambda, const Matrix& m3);  // diag(m, lambda m^{-t})
Matrix unipotent6(const Matrix& s3, bool lower);          // [[1, s], [0, 1]] or [[1, 0], [s, 1]]

// Action of g on wedge^3 W6 (x) nu^{-1} (x) B, read back on W.
GElement embed_gsp6(const QuatAlgebra& alg, const Matrix& g6);

Matrix iota6(int j);
GElement iota(const QuatAlgebra& alg, int j);
// (a, b, c, d) -> (-d, M c, -M^2 b, M^3 a); equals M * embed([[0, M], [-1, 0]]).
GElement w_m(const QuatAlgebra& alg, const Integer& m);

struct JFactor {
  Gaussian j;
  HermMatrix<Gaussian> gz;
};
// j(g, Z) = <r(Z) g^{-1}, f> and gZ from r(Z) g^{-1} = j r(gZ).
JFactor j_factor(const QuatAlgebra& alg, const GElement& g, const HermMatrix<Gaussian>& z);

}  // namespace spinl
