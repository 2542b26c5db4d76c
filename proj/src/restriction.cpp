#include "spinl/restriction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace spinl {

namespace {

bool quat_less(const QuatQ& x, const QuatQ& y) {
  for (int i = 0; i < 4; ++i)
    if (x[i] != y[i]) return x[i] < y[i];
  return false;
}

double to_double(const Rational& q) { return q.get_d(); }

void check_symmetric(const SiegelIndex& t) {
  if (t.rows != 3 || t.cols != 3) throw Error("domain_error", "Siegel index must be 3x3");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j)
      if (t(i, j) != t(j, i)) throw Error("domain_error", "Siegel index must be symmetric");
}

}  // namespace

bool HermLess::operator()(const HermQ& x, const HermQ& y) const {
  for (int i = 0; i < 3; ++i)
    if (x.c[i] != y.c[i]) return x.c[i] < y.c[i];
  for (int i = 0; i < 3; ++i) {
    if (quat_less(x.a[i], y.a[i])) return true;
    if (quat_less(y.a[i], x.a[i])) return false;
  }
  return false;
}

bool MatrixLess::operator()(const Matrix& x, const Matrix& y) const {
  if (x.rows != y.rows) return x.rows < y.rows;
  if (x.cols != y.cols) return x.cols < y.cols;
  for (std::size_t i = 0; i < x.data.size(); ++i)
    if (x.data[i] != y.data[i]) return x.data[i] < y.data[i];
  return false;
}

SiegelIndex symmetrize(const HermQ& h) {
  SiegelIndex t(3, 3);
  for (int i = 0; i < 3; ++i) t(i, i) = h.c[i];
  // a3 sits at (0,1), a1 at (1,2), a2 at (2,0).
  const int slot[3][2] = {{1, 2}, {2, 0}, {0, 1}};
  for (int k = 0; k < 3; ++k) {
    Rational re = QuatAlgebra::trace(h.a[k]) / 2;
    t(slot[k][0], slot[k][1]) = re;
    t(slot[k][1], slot[k][0]) = re;
  }
  return t;
}

std::vector<QuatQ> dual_ball(const QuatAlgebra& alg, unsigned long level, const Rational& re, const Rational& bound) {
  std::vector<QuatQ> out;
  if (bound < 0) return out;
  // Dual basis f = G^{-1} e; for x = (y . f) / M, n(x) = y^t G^{-1} y / (2 M^2).
  Matrix g(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = alg.gram()[i][j];
  Matrix ginv = inverse(g);
  std::array<QuatQ, 4> f{};
  for (int k = 0; k < 4; ++k)
    for (int c = 0; c < 4; ++c) f[k] = f[k] + ginv(k, c) * alg.order_element(c);
  Rational m(level);
  Matrix q = Rational(1) / (2 * m * m) * ginv;

  // q(y) = sum_i d_i (y_i + sum_{j<i} mu_ji y_j)^2, eliminating from the last index down,
  // so coordinates are fixed from the first index up.
  std::array<Rational, 4> d;
  std::array<std::array<Rational, 4>, 4> mu{};
  Matrix w = q;
  for (int i = 3; i >= 0; --i) {
    d[i] = w(i, i);
    for (int j = 0; j < i; ++j) mu[j][i] = w(j, i) / d[i];
    for (int a = 0; a < i; ++a)
      for (int b = 0; b < i; ++b) w(a, b) -= mu[a][i] * mu[b][i] * d[i];
  }

  std::array<long, 4> y{};
  std::function<void(int, const Rational&)> rec = [&](int i, const Rational& used) {
    if (i == 4) {
      QuatQ x;
      for (int k = 0; k < 4; ++k) x = x + Rational(y[k]) / m * f[k];
      if (QuatAlgebra::trace(x) == 2 * re && alg.norm(x) <= bound) out.push_back(x);
      return;
    }
    Rational center = 0;
    for (int j = 0; j < i; ++j) center += mu[j][i] * y[j];
    Rational room = bound - used;
    if (room < 0) return;
    double radius = std::sqrt(to_double(room / d[i])) + 1.0;
    double c = -to_double(center);
    long lo = static_cast<long>(std::floor(c - radius)), hi = static_cast<long>(std::ceil(c + radius));
    for (long v = lo; v <= hi; ++v) {
      Rational s = Rational(v) + center;
      Rational next = used + d[i] * s * s;
      if (next > bound) continue;
      y[i] = v;
      rec(i + 1, next);
    }
  };
  rec(0, Rational(0));
  std::sort(out.begin(), out.end(), quat_less);
  return out;
}

std::vector<HermQ> fiber_over_t(const QuatAlgebra& alg, const SiegelIndex& t, unsigned long level) {
  check_symmetric(t);
  if (level == 0) throw Error("domain_error", "level must be positive");
  std::vector<HermQ> out;
  Rational m(level);
  for (int i = 0; i < 3; ++i)
    if (t(i, i) < 0 || !is_integer(t(i, i) * m)) return out;
  const int slot[3][2] = {{1, 2}, {2, 0}, {0, 1}};
  std::array<std::vector<QuatQ>, 3> balls;
  for (int k = 0; k < 3; ++k) {
    int p = slot[k][0], r = slot[k][1];
    balls[k] = dual_ball(alg, level, t(p, r), t(p, p) * t(r, r));
    if (balls[k].empty()) return out;
  }
  // Each slot already lies in (1/M) O^v with its 2x2 minor nonnegative, so only
  // N(h) >= 0 remains. Scale everything by a common denominator L and test
  // L^3 N(h) = L^3 (c1 c2 c3 - sum c_i n(a_i)) + tr(La1 La2 La3) in integers.
  if (!is_integer(alg.a()) || !is_integer(alg.b())) throw Error("domain_error", "algebra parameters must be integers");
  using I = __int128;
  const I A = alg.a().get_num().get_si(), B = alg.b().get_num().get_si();
  Integer l(level);
  for (const auto& ball : balls)
    for (const auto& x : ball)
      for (int i = 0; i < 4; ++i) l = lcm(l, Integer(x[i].get_den()));
  using V = std::array<I, 4>;
  auto scaled = [&](const QuatQ& x) {
    V v;
    for (int i = 0; i < 4; ++i) v[i] = Integer(x[i] * Rational(l)).get_si();
    return v;
  };
  auto mul = [&](const V& p, const V& q) {
    return V{p[0] * q[0] + A * p[1] * q[1] + B * p[2] * q[2] - A * B * p[3] * q[3],
             p[0] * q[1] + p[1] * q[0] - B * p[2] * q[3] + B * p[3] * q[2],
             p[0] * q[2] + p[2] * q[0] + A * p[1] * q[3] - A * p[3] * q[1],
             p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1]};
  };
  auto nrm = [&](const V& p) { return p[0] * p[0] - A * p[1] * p[1] - B * p[2] * p[2] + A * B * p[3] * p[3]; };
  std::array<I, 3> cl;
  for (int i = 0; i < 3; ++i) cl[i] = Integer(t(i, i) * Rational(l)).get_si();
  std::array<std::vector<V>, 3> iv;
  std::array<std::vector<I>, 3> in;
  for (int k = 0; k < 3; ++k)
    for (const auto& x : balls[k]) {
      iv[k].push_back(scaled(x));
      in[k].push_back(nrm(iv[k].back()));
    }
  const I base = cl[0] * cl[1] * cl[2];
  for (std::size_t i1 = 0; i1 < iv[0].size(); ++i1)
    for (std::size_t i2 = 0; i2 < iv[1].size(); ++i2) {
      V p = mul(iv[0][i1], iv[1][i2]);
      I partial = base - cl[0] * in[0][i1] - cl[1] * in[1][i2];
      for (std::size_t i3 = 0; i3 < iv[2].size(); ++i3) {
        const V& q = iv[2][i3];
        I tr = 2 * (p[0] * q[0] + A * p[1] * q[1] + B * p[2] * q[2] - A * B * p[3] * q[3]);
        if (partial - cl[2] * in[2][i3] + tr < 0) continue;
        HermQ h = HermQ::diag(t(0, 0), t(1, 1), t(2, 2));
        h.a = {balls[0][i1], balls[1][i2], balls[2][i3]};
        out.push_back(std::move(h));
      }
    }
  // Balls are sorted, so the loop order already yields HermLess order.
  return out;
}

std::string herm_key(const QuatAlgebra& alg, const HermQ& h) {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) s += (i ? "," : "") + to_string(h.c[i]);
  for (int i = 0; i < 3; ++i) {
    auto x = alg.order_coords(h.a[i]);
    s += ";";
    for (int k = 0; k < 4; ++k) s += (k ? "," : "") + to_string(x[k]);
  }
  return s + "]";
}

std::string siegel_key(const SiegelIndex& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.rows; ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < t.cols; ++j) s += (j ? "," : "") + to_string(t(i, j));
    s += "]";
  }
  return s + "]";
}

RestrictionResult restrict_expansion(const QuatAlgebra& alg, const HermExpansion& coeffs,
                                     const std::vector<SiegelIndex>& targets, unsigned long level,
                                     MissingPolicy policy) {
  RestrictionResult res;
  std::vector<std::string> missing;
  for (const auto& t : targets) {
    CycloValue sum(0);
    for (const auto& h : fiber_over_t(alg, t, level)) {
      auto it = coeffs.find(h);
      if (it == coeffs.end()) {
        missing.push_back(herm_key(alg, h));
        continue;
      }
      sum += it->second;
    }
    res.coeffs[t] = sum;
  }
  if (!missing.empty()) {
    if (policy == MissingPolicy::strict) {
      std::string list;
      for (const auto& k : missing) list += (list.empty() ? "" : " ") + k;
      throw Error("missing_coefficient", "coefficients absent for fiber members", {{"h", list}});
    }
    for (const auto& k : missing) res.warnings.push_back("zero-filled coefficient at " + k);
  }
  return res;
}

}  // namespace spinl
