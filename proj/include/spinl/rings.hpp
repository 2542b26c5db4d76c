#pragma once

#include <string>
#include <vector>

#include "spinl/error.hpp"
#include "spinl/rational.hpp"

namespace spinl {

// Q(i) with i central; the complex unit of B (x) C, not the quaternion i.
struct Gaussian {
  Rational re, im;

  Gaussian() = default;
  Gaussian(const Rational& r, const Rational& i = 0) : re(r), im(i) {}  // NOLINT
  Gaussian(long r) : re(r), im(0) {}  // NOLINT

  static Gaussian unit() { return Gaussian(0, 1); }

  Gaussian conj() const { return Gaussian(re, -im); }
  Rational norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }
  Gaussian inverse() const {
    if (is_zero()) throw Error("domain_error", "inverse of zero");
    Rational n = norm();
    return Gaussian(re / n, -im / n);
  }

  Gaussian operator-() const { return Gaussian(-re, -im); }
  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) { return a * b.inverse(); }
  Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
  Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
  Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

  std::string to_string() const { return spinl::to_string(re) + "+" + spinl::to_string(im) + "i"; }
};

// Q[x], used as a formal coefficient ring.
struct QPoly {
  std::vector<Rational> c;  // c[k] multiplies x^k; no trailing zeros

  QPoly() = default;
  QPoly(const Rational& r) { if (r != 0) c.push_back(r); }  // NOLINT
  QPoly(long r) : QPoly(Rational(r)) {}  // NOLINT
  static QPoly x() { QPoly p; p.c = {Rational(0), Rational(1)}; return p; }

  void trim() { while (!c.empty() && c.back() == 0) c.pop_back(); }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  QPoly operator-() const { QPoly p = *this; for (auto& v : p.c) v = -v; return p; }
  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly p;
    p.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t k = 0; k < a.c.size(); ++k) p.c[k] += a.c[k];
    for (std::size_t k = 0; k < b.c.size(); ++k) p.c[k] += b.c[k];
    p.trim();
    return p;
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly p;
    if (a.is_zero() || b.is_zero()) return p;
    p.c.resize(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) p.c[i + j] += a.c[i] * b.c[j];
    p.trim();
    return p;
  }
  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }
};

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const Gaussian& g) { return g.is_zero(); }
inline bool is_zero(const QPoly& p) { return p.is_zero(); }

}  // namespace spinl
