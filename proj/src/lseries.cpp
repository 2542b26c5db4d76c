#include "spinl/lseries.hpp"

#include <algorithm>

namespace spinl {

std::vector<CycloValue> spin_roots(const SatakeParams& p, const CycloValue& chi_q) {
  if (p.b0.is_zero()) throw Error("domain_error", "Satake parameter b0 must be nonzero");
  const CycloValue b[3] = {p.b1, p.b2, p.b3};
  std::vector<CycloValue> roots;
  for (int mask = 0; mask < 8; ++mask) {
    CycloValue r = chi_q * p.b0;
    for (int j = 0; j < 3; ++j)
      if (mask & (1 << j)) r *= b[j];
    roots.push_back(r);
  }
  return roots;
}

UPoly spin_euler_factor(const SatakeParams& p, const CycloValue& chi_q) {
  UPoly f = UPoly::one();
  for (const auto& root : spin_roots(p, chi_q)) {
    UPoly lin;
    lin.coeffs = {CycloValue(1), -root};
    f = f * lin;
  }
  return f;
}

CycloValue partial_euler_product(const std::map<unsigned long, SatakeParams>& params, const DirichletChar& chi, long s,
                                 unsigned long bound, unsigned long level) {
  CycloValue prod(1);
  for (const auto& [q, p] : params) {
    if (q > bound || (level != 0 && level % q == 0)) continue;
    if (!is_prime(q)) throw Error("domain_error", "Satake parameters must be indexed by primes", {{"q", std::to_string(q)}});
    CycloValue f = spin_euler_factor(p, chi(static_cast<long>(q))).evaluate(CycloValue(rpow(Rational(q), -s)));
    if (f.is_zero()) throw Error("pole", "Euler factor vanishes at the evaluation point", {{"q", std::to_string(q)}});
    prod = prod / f;
  }
  return prod;
}

GradedConstant spin_gamma(long s, long r) {
  Rational v = 1;
  long pi = 0;
  for (long x : {s + r - 4, s + r - 3, s + r - 2, s + 3 * r - 5}) {
    if (x < 1) throw Error("domain_error", "Gamma_C at a nonpositive integer", {{"argument", std::to_string(x)}});
    v *= Rational(2) * rpow(Rational(2), -x) * Rational(factorial(x - 1));
    pi -= x;
  }
  return GradedConstant(CycloValue(v), pi, 0);
}

Matrix cofactor(const Matrix& m) { return determinant(m) * inverse(m).transpose(); }

Matrix evdokimov_index(const Matrix& t, const Matrix& m) { return inverse(m) * t * cofactor(m); }

bool is_half_integral(const Matrix& s) {
  for (std::size_t i = 0; i < s.rows; ++i)
    for (std::size_t j = 0; j < s.cols; ++j)
      if (!is_integer(i == j ? s(i, j) : 2 * s(i, j))) return false;
  return true;
}

std::vector<HnfClass> hnf_classes(long det_bound, const Matrix& t, HnfFilter filter) {
  if (det_bound < 1) throw Error("domain_error", "determinant bound must be positive");
  std::vector<HnfClass> out;
  for (long det = 1; det <= det_bound; ++det)
    for (unsigned long d0 : divisors(static_cast<unsigned long>(det))) {
      long rest = det / static_cast<long>(d0);
      for (unsigned long d1 : divisors(static_cast<unsigned long>(rest))) {
        long d2 = rest / static_cast<long>(d1);
        for (long m10 = 0; m10 < static_cast<long>(d1); ++m10)
          for (long m20 = 0; m20 < d2; ++m20)
            for (long m21 = 0; m21 < d2; ++m21) {
              Matrix m(3, 3);
              m(0, 0) = d0;
              m(1, 1) = d1;
              m(2, 2) = d2;
              m(1, 0) = m10;
              m(2, 0) = m20;
              m(2, 1) = m21;
              bool xi = is_half_integral(evdokimov_index(t, m));
              if (filter == HnfFilter::xi && !xi) continue;
              out.push_back({m, det, xi});
            }
      }
    }
  return out;
}

Rational psi_weight(const Rational& lambda, unsigned long level) {
  if (lambda == 0) throw Error("domain_error", "Psi is evaluated at nonzero lambda");
  Rational out = 1;
  std::vector<unsigned long> primes = prime_divisors(lambda.get_num());
  for (unsigned long p : prime_divisors(lambda.get_den())) primes.push_back(p);
  for (unsigned long p : prime_divisors(Integer(level)))
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  for (unsigned long v : primes) {
    long val = valuation(lambda, v);
    Rational abs_v = rpow(Rational(v), -val);
    if (level % v == 0) {
      if (val >= 0) out *= (1 - Rational(1, v)) * abs_v;
      else if (val == -1) out *= -1;
      else return 0;
    } else {
      if (val < 0) return 0;
      out *= abs_v;
    }
  }
  return out;
}

Rational CoeffOracle::at(const Matrix& t) const {
  auto it = values.find(t);
  if (it != values.end()) return it->second;
  if (fallback) return *fallback;
  throw Error("missing_coefficient", "oracle has no coefficient at the queried index", {{"t", siegel_key(t)}});
}

CycloValue evdokimov_partial(const Matrix& t, const CoeffOracle& oracle, const DirichletChar& chi, long s, long r,
                             long lambda_bound, long det_bound, unsigned long level) {
  CycloValue sum(0);
  std::vector<HnfClass> classes = hnf_classes(det_bound, t, HnfFilter::xi);
  for (long lambda = 1; lambda <= lambda_bound; ++lambda) {
    if (gcd_ul(lambda, level) != 1) continue;
    for (const auto& c : classes) {
      Rational a = oracle.at(Rational(lambda) * evdokimov_index(t, c.m));
      if (a == 0) continue;
      CycloValue term = chi(lambda * c.det) * CycloValue(a * rpow(Rational(lambda), -s) *
                                                         rpow(Rational(c.det), -(s - 2 * r + 3)));
      sum += term;
    }
  }
  return sum;
}

Rational l_correction(unsigned long level, long s) {
  if (level == 0 || !is_squarefree(level))
    throw Error("domain_error", "level must be squarefree", {{"M", std::to_string(level)}});
  Rational v = rpow(Rational(level), -2 * s);
  if (prime_divisors(Integer(level)).size() % 2 == 1) v = -v;
  return v;
}

Rational implicit_constant(const Matrix& t) { return rpow(determinant(t), 3); }

}  // namespace spinl
