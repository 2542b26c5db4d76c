#include "spinl/group_w.hpp"

#include <map>
#include <mutex>

namespace spinl {

WQ basis_vector(const QuatAlgebra& alg, std::size_t k) {
  std::vector<Rational> x(kWDim);
  x[k] = 1;
  return from_coords(alg, x);
}

const Matrix& symplectic_gram(const QuatAlgebra& alg) {
  static std::mutex mu;
  static std::map<const QuatAlgebra*, Matrix> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(&alg);
  if (it != cache.end()) return it->second;
  Matrix g(kWDim, kWDim);
  std::vector<WQ> basis;
  for (std::size_t k = 0; k < kWDim; ++k) basis.push_back(basis_vector(alg, k));
  for (std::size_t i = 0; i < kWDim; ++i)
    for (std::size_t j = 0; j < kWDim; ++j) g(i, j) = symplectic(alg, basis[i], basis[j]);
  return cache.emplace(&alg, std::move(g)).first->second;
}

namespace {

std::vector<WQ> quartic_probe_vectors(const QuatAlgebra& alg) {
  std::vector<WQ> out;
  for (std::size_t k = 0; k < kWDim; ++k) out.push_back(basis_vector(alg, k));
  for (long t = 0; t < 6; ++t) {
    std::vector<Rational> x(kWDim);
    for (std::size_t k = 0; k < kWDim; ++k) x[k] = (static_cast<long>(k) * 7 + t * 3) % 5 - 2;
    out.push_back(from_coords(alg, x));
  }
  return out;
}

}  // namespace

GElement::GElement(const QuatAlgebra& alg, Matrix action, Matrix inverse_action, Rational nu)
    : alg_(&alg), mat_(std::move(action)), inv_(std::move(inverse_action)), nu_(std::move(nu)) {
  if (mat_.rows != kWDim || mat_.cols != kWDim || inv_.rows != kWDim || inv_.cols != kWDim)
    throw Error("domain_error", "G element must be a 32x32 matrix");
  if (nu_ == 0) throw Error("not_in_group", "similitude must be nonzero");
  if (mat_ * inv_ != Matrix::identity(kWDim))
    throw Error("not_in_group", "supplied inverse does not invert the action");
  const Matrix& omega = symplectic_gram(alg);
  if (mat_ * omega * mat_.transpose() != nu_ * omega)
    throw Error("not_in_group", "symplectic form not preserved up to the similitude");
  for (const auto& w : quartic_probe_vectors(alg))
    if (!preserves_quartic(w)) throw Error("not_in_group", "quartic form not preserved");
}

GElement GElement::inverse() const { return GElement(alg_, inv_, mat_, 1 / nu_, true); }

GElement GElement::scaled(const Rational& s) const {
  if (s == 0) throw Error("domain_error", "scalar must be nonzero");
  return GElement(alg_, s * mat_, (1 / s) * inv_, nu_ * s * s, true);
}

GElement operator*(const GElement& g, const GElement& h) {
  if (!g.alg_->same_as(*h.alg_)) throw Error("algebra_mismatch", "G elements over different algebras");
  return GElement(*g.alg_, g.mat_ * h.mat_, h.inv_ * g.inv_, g.nu_ * h.nu_);
}

bool GElement::preserves(const WQ& u, const WQ& v) const {
  return symplectic(*alg_, apply(u), apply(v)) == nu_ * symplectic(*alg_, u, v);
}

bool GElement::preserves_quartic(const WQ& w) const {
  return quartic(*alg_, apply(w)) == nu_ * nu_ * quartic(*alg_, w);
}

GElement g_from_map(const QuatAlgebra& alg, const std::function<WQ(const WQ&)>& f,
                    const std::function<WQ(const WQ&)>& f_inv, const Rational& nu) {
  Matrix m(kWDim, kWDim), inv(kWDim, kWDim);
  for (std::size_t k = 0; k < kWDim; ++k) {
    WQ u = basis_vector(alg, k);
    auto row = to_coords(alg, f(u));
    auto irow = to_coords(alg, f_inv(u));
    for (std::size_t j = 0; j < kWDim; ++j) {
      m(k, j) = row[j];
      inv(k, j) = irow[j];
    }
  }
  return GElement(alg, std::move(m), std::move(inv), nu);
}

GElement identity_element(const QuatAlgebra& alg) {
  auto id = [](const WQ& w) { return w; };
  return g_from_map(alg, id, id, 1);
}

namespace {

WQ apply_n(const QuatAlgebra& alg, const HermQ& x, const WQ& w) {
  HermQ xs = sharp(alg, x);
  return WQ{w.a, w.b + w.a * x, w.c + cross(alg, w.b, x) + w.a * xs,
            w.d + pair(alg, w.c, x) + pair(alg, w.b, xs) + w.a * norm(alg, x)};
}

WQ apply_nbar(const QuatAlgebra& alg, const HermQ& x, const WQ& w) {
  HermQ xs = sharp(alg, x);
  return WQ{w.a + pair(alg, w.b, x) + pair(alg, w.c, xs) + w.d * norm(alg, x),
            w.b + cross(alg, w.c, x) + w.d * xs, w.c + w.d * x, w.d};
}

}  // namespace

GElement n_embed(const QuatAlgebra& alg, const HermQ& x) {
  return g_from_map(alg, [&](const WQ& w) { return apply_n(alg, x, w); },
                    [&](const WQ& w) { return apply_n(alg, -x, w); }, 1);
}

GElement nbar_embed(const QuatAlgebra& alg, const HermQ& x) {
  return g_from_map(alg, [&](const WQ& w) { return apply_nbar(alg, x, w); },
                    [&](const WQ& w) { return apply_nbar(alg, -x, w); }, 1);
}

Matrix j6() {
  Matrix j(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    j(i, i + 3) = 1;
    j(i + 3, i) = -1;
  }
  return j;
}

Rational gsp6_similitude(const Matrix& g) {
  if (g.rows != 6 || g.cols != 6) throw Error("not_symplectic", "expected a 6x6 matrix");
  Matrix j = j6();
  Matrix p = g * j * g.transpose();
  Rational nu = p(0, 3);
  if (nu == 0 || p != nu * j) throw Error("not_symplectic", "g J g^t is not a multiple of J");
  return nu;
}

Matrix levi6(const Rational& lambda, const Matrix& m3) {
  Matrix g(6, 6);
  Matrix mit = inverse(m3).transpose();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      g(i, k) = m3(i, k);
      g(i + 3, k + 3) = lambda * mit(i, k);
    }
  return g;
}

Matrix unipotent6(const Matrix& s3, bool lower) {
  Matrix g = Matrix::identity(6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      if (lower)
        g(i + 3, k) = s3(i, k);
      else
        g(i, k + 3) = s3(i, k);
    }
  return g;
}

namespace {

using Triple = std::array<int, 3>;

const std::vector<Triple>& triples() {
  static const std::vector<Triple> t = [] {
    std::vector<Triple> v;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int c = b + 1; c < 6; ++c) v.push_back({a, b, c});
    return v;
  }();
  return t;
}

int triple_index(Triple t) {
  const auto& all = triples();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == t) return static_cast<int>(i);
  throw Error("internal_error", "bad triple");
}

// Slot and sign of e_i* ^ f_j (first = true) or f_i* ^ e_j in sorted coordinates.
std::pair<int, int> slot(bool b_part, int i, int j) {
  int p = (i + 1) % 3, q = (i + 2) % 3;
  int sign = p < q ? 1 : -1;
  if (p > q) std::swap(p, q);
  if (b_part) return {triple_index({p, q, 3 + j}), sign};
  return {triple_index({j, 3 + p, 3 + q}), sign};
}

std::vector<QuatQ> to_wedge(const WQ& w) {
  std::vector<QuatQ> x(20);
  x[triple_index({0, 1, 2})] = QuatQ::scalar(w.a);
  x[triple_index({3, 4, 5})] = QuatQ::scalar(w.d);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto [sb, gb] = slot(true, i, j);
      x[sb] += Rational(gb) * w.b.entry(i, j);
      auto [sc, gc] = slot(false, i, j);
      x[sc] += Rational(gc) * w.c.entry(i, j);
    }
  return x;
}

bool is_scalar(const QuatQ& q) { return q[1] == 0 && q[2] == 0 && q[3] == 0; }

HermQ read_herm(const std::vector<QuatQ>& y, bool b_part) {
  std::array<std::array<QuatQ, 3>, 3> e;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto [s, g] = slot(b_part, i, j);
      e[i][j] = Rational(g) * y[s];
    }
  HermQ h = HermQ::from_entries(e);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (h.entry(i, j) != e[i][j])
        throw Error("embedding_error", "wedge image is not Hermitian");
  return h;
}

WQ from_wedge(const std::vector<QuatQ>& y) {
  const QuatQ& a = y[triple_index({0, 1, 2})];
  const QuatQ& d = y[triple_index({3, 4, 5})];
  if (!is_scalar(a) || !is_scalar(d)) throw Error("embedding_error", "wedge image has non-scalar ends");
  return WQ{a[0], read_herm(y, true), read_herm(y, false), d[0]};
}

Matrix wedge3(const Matrix& g) {
  const auto& t = triples();
  Matrix m(20, 20);
  Matrix sub(3, 3);
  for (std::size_t r = 0; r < 20; ++r)
    for (std::size_t c = 0; c < 20; ++c) {
      for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) sub(x, y) = g(t[r][x], t[c][y]);
      m(r, c) = determinant(sub);
    }
  return m;
}

WQ act_wedge(const Matrix& lam, const Rational& nu, const WQ& w) {
  auto x = to_wedge(w);
  std::vector<QuatQ> y(20);
  for (std::size_t i = 0; i < 20; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < 20; ++j)
      if (lam(i, j) != 0) y[j] += (lam(i, j) / nu) * x[i];
  }
  return from_wedge(y);
}

}  // namespace

GElement embed_gsp6(const QuatAlgebra& alg, const Matrix& g6) {
  Rational nu = gsp6_similitude(g6);
  Matrix lam = wedge3(g6);
  Matrix lam_inv = wedge3(inverse(g6));
  return g_from_map(alg, [&](const WQ& w) { return act_wedge(lam, nu, w); },
                    [&](const WQ& w) { return act_wedge(lam_inv, 1 / nu, w); }, nu);
}

Matrix iota6(int j) {
  if (j < 0 || j > 3) throw Error("domain_error", "iota index must be in 0..3");
  // iota_j swaps e_k -> f_k, f_k -> -e_k for the last j indices.
  Matrix g(6, 6);
  for (int k = 0; k < 3; ++k) {
    if (k >= 3 - j) {
      g(k, k + 3) = 1;
      g(k + 3, k) = -1;
    } else {
      g(k, k) = 1;
      g(k + 3, k + 3) = 1;
    }
  }
  return g;
}

GElement iota(const QuatAlgebra& alg, int j) { return embed_gsp6(alg, iota6(j)); }

GElement w_m(const QuatAlgebra& alg, const Integer& m) {
  if (m < 1) throw Error("domain_error", "M must be positive");
  Rational mq(m);
  auto f = [&](const WQ& w) {
    return WQ{-w.d, mq * w.c, -(mq * mq) * w.b, mq * mq * mq * w.a};
  };
  auto finv = [&](const WQ& w) {
    return WQ{w.d / (mq * mq * mq), -(1 / (mq * mq)) * w.c, (1 / mq) * w.b, -w.a};
  };
  return g_from_map(alg, f, finv, mq * mq * mq);
}

JFactor j_factor(const QuatAlgebra& alg, const GElement& g, const HermMatrix<Gaussian>& z) {
  auto v = g.apply_inverse(r_of(alg, z));
  if (v.a.is_zero()) throw Error("singular_position", "Z in singular position for g");
  JFactor out;
  out.j = v.a;
  out.gz = (-v.a.inverse()) * v.b;
  if (out.j * r_of(alg, out.gz) != v)
    throw Error("singular_position", "r(Z) g^{-1} is not a multiple of r(gZ)");
  return out;
}

}  // namespace spinl
