#include "spinl/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "spinl/error.hpp"

namespace spinl {

namespace {

using QPolyVec = std::vector<Rational>;

void trim(QPolyVec& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials, b monic.
std::vector<Integer> exact_div(std::vector<Integer> a, const std::vector<Integer>& b) {
  std::vector<Integer> q(a.size() - b.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = a[i + b.size() - 1];
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  return q;
}

// Remainder modulo the monic integer polynomial phi.
void reduce_mod(QPolyVec& p, const std::vector<Integer>& phi) {
  std::size_t d = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > d;) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    for (std::size_t j = 0; j <= d; ++j) p[i - d + j] -= c * phi[j];
  }
  p.resize(d);
}

QPolyVec poly_mul(const QPolyVec& a, const QPolyVec& b) {
  if (a.empty() || b.empty()) return {};
  QPolyVec c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Polynomial division over Q: a = q*b + r.
void poly_divmod(QPolyVec a, const QPolyVec& b, QPolyVec& q, QPolyVec& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  for (std::size_t i = q.size(); i-- > 0;) {
    Rational c = a[i + b.size() - 1] / b.back();
    q[i] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  a.resize(std::min(a.size(), b.size() - 1));
  trim(a);
  r = a;
}

QPolyVec poly_sub(const QPolyVec& a, const QPolyVec& b) {
  QPolyVec c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

std::pair<CycloValue, CycloValue> common(const CycloValue& a, const CycloValue& b) {
  if (a.conductor() == b.conductor()) return {a, b};
  unsigned long n = lcm_ul(a.conductor(), b.conductor());
  return {a.lift(n), b.lift(n)};
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned long n) {
  static std::recursive_mutex mu;
  static std::map<unsigned long, std::vector<Integer>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Integer> p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (unsigned long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = exact_div(p, cyclotomic_polynomial(d));
  }
  return cache.emplace(n, std::move(p)).first->second;
}

CycloValue::CycloValue() : n_(1), coeffs_(1, Rational(0)) {}

CycloValue::CycloValue(const Rational& q) : n_(1), coeffs_(1, q) {}

CycloValue CycloValue::reduce(const std::vector<Rational>& raw, unsigned long n) {
  if (n == 0) throw Error("domain_error", "cyclotomic conductor must be positive");
  const auto& phi = cyclotomic_polynomial(n);
  QPolyVec folded(n);
  for (std::size_t k = 0; k < raw.size(); ++k) folded[k % n] += raw[k];
  reduce_mod(folded, phi);
  CycloValue v;
  v.n_ = n;
  v.coeffs_ = std::move(folded);
  return v;
}

CycloValue CycloValue::zeta(unsigned long n, long k) {
  std::vector<Rational> raw(n);
  raw[static_cast<std::size_t>(mod_floor(k, static_cast<long>(n)))] = 1;
  return reduce(raw, n);
}

bool CycloValue::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloValue::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CycloValue::rational_value() const {
  if (!is_rational()) throw Error("domain_error", "cyclotomic value is not rational");
  return coeffs_[0];
}

CycloValue CycloValue::lift(unsigned long multiple) const {
  if (multiple % n_ != 0) throw Error("domain_error", "lift target is not a multiple of the conductor");
  if (multiple == n_) return *this;
  unsigned long step = multiple / n_;
  std::vector<Rational> raw(coeffs_.size() * step);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) raw[k * step] = coeffs_[k];
  return reduce(raw, multiple);
}

CycloValue CycloValue::galois(long a) const {
  long n = static_cast<long>(n_);
  if (gcd_ul(static_cast<unsigned long>(mod_floor(a, n)), n_) != 1 && n_ > 1)
    throw Error("domain_error", "Galois exponent not a unit");
  std::vector<Rational> raw(n_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    raw[static_cast<std::size_t>(mod_floor(a * static_cast<long>(k), n))] += coeffs_[k];
  return reduce(raw, n_);
}

CycloValue CycloValue::inverse() const {
  if (is_zero()) throw Error("domain_error", "inverse of zero");
  if (n_ == 1 || is_rational()) {
    CycloValue v = *this;
    for (auto& c : v.coeffs_) c = 0;
    v.coeffs_[0] = 1 / coeffs_[0];
    return v;
  }
  // Extended Euclid in Q[x]: s*a + t*phi = 1.
  const auto& phi_int = cyclotomic_polynomial(n_);
  QPolyVec phi(phi_int.begin(), phi_int.end());
  QPolyVec r0 = phi, r1 = coeffs_, s0, s1{Rational(1)};
  trim(r1);
  while (!(r1.size() == 1)) {
    QPolyVec q, r;
    poly_divmod(r0, r1, q, r);
    QPolyVec s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
    if (r1.empty()) throw Error("domain_error", "non-invertible cyclotomic element");
  }
  Rational c = r1[0];
  for (auto& x : s1) x /= c;
  return reduce(s1, n_);
}

bool CycloValue::in_subfield(unsigned long d) const {
  unsigned long g = gcd_ul(d, n_);
  for (unsigned long a = 1; a < n_; ++a) {
    if (gcd_ul(a, n_) != 1 || a % g != 1 % g) continue;
    if (galois(static_cast<long>(a)) != *this) return false;
  }
  return true;
}

std::complex<double> CycloValue::to_complex() const {
  std::complex<double> s = 0;
  const double two_pi = 2 * std::acos(-1.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    s += coeffs_[k].get_d() * std::polar(1.0, two_pi * static_cast<double>(k) / static_cast<double>(n_));
  return s;
}

CycloValue CycloValue::operator-() const {
  CycloValue v = *this;
  for (auto& c : v.coeffs_) c = -c;
  return v;
}

CycloValue operator+(const CycloValue& a, const CycloValue& b) {
  auto [x, y] = common(a, b);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

CycloValue operator-(const CycloValue& a, const CycloValue& b) { return a + (-b); }

CycloValue operator*(const CycloValue& a, const CycloValue& b) {
  if (a.n_ == 1) {
    CycloValue v = b;
    for (auto& c : v.coeffs_) c *= a.coeffs_[0];
    return v;
  }
  if (b.n_ == 1) return b * a;
  auto [x, y] = common(a, b);
  return CycloValue::reduce(poly_mul(x.coeffs_, y.coeffs_), x.n_);
}

CycloValue operator/(const CycloValue& a, const CycloValue& b) { return a * b.inverse(); }

bool operator==(const CycloValue& a, const CycloValue& b) {
  auto [x, y] = common(a, b);
  return x.coeffs_ == y.coeffs_;
}

CycloValue CycloValue::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloValue result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace spinl
