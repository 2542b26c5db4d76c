#include "spinl/rational.hpp"

#include <numeric>

#include "spinl/error.hpp"

namespace spinl {

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') return false;
  std::string body(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(body, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t slash = text.find('/');
  Integer num, den(1);
  bool ok = parse_integer(text.substr(0, slash), num);
  if (ok && slash != std::string_view::npos) ok = parse_integer(text.substr(slash + 1), den);
  if (!ok || den == 0)
    throw Error("parse_error", "malformed rational", {{"text", std::string(text)}});
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str(10);
}

std::string to_string(const Integer& z) { return z.get_str(10); }

int valuation(const Integer& z, unsigned long p) {
  if (z == 0) return kInfiniteValuation;
  Integer t = abs(z);
  int v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++v;
  }
  return v;
}

int valuation(const Rational& q, unsigned long p) {
  if (q == 0) return kInfiniteValuation;
  return valuation(Integer(q.get_num()), p) - valuation(Integer(q.get_den()), p);
}

Rational rpow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error("domain_error", "zero to a negative power");
    Rational inv = 1 / base;
    return rpow(inv, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer ipow(unsigned long base, unsigned long exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n) {
  std::vector<std::pair<unsigned long, unsigned>> out;
  for (unsigned long d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<unsigned long> prime_divisors(const Integer& z) {
  Integer t = abs(z);
  std::vector<unsigned long> out;
  if (t == 0) return out;
  for (unsigned long d = 2; Integer(d) * d <= t; ++d) {
    if (mpz_divisible_ui_p(t.get_mpz_t(), d) != 0) {
      out.push_back(d);
      while (mpz_divisible_ui_p(t.get_mpz_t(), d) != 0) mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), d);
    }
  }
  if (t > 1) {
    if (!t.fits_ulong_p()) throw Error("domain_error", "prime factor too large", {{"value", z.get_str()}});
    out.push_back(t.get_ui());
  }
  return out;
}

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

unsigned long gcd_ul(unsigned long a, unsigned long b) { return std::gcd(a, b); }
unsigned long lcm_ul(unsigned long a, unsigned long b) { return std::lcm(a, b); }

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

bool is_squarefree(unsigned long n) {
  if (n == 0) return false;
  for (auto [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

unsigned long primitive_root(unsigned long p, unsigned e) {
  unsigned long pe = 1;
  for (unsigned i = 0; i < e; ++i) pe *= p;
  unsigned long phi = pe / p * (p - 1);
  auto fac = factorize(phi);
  for (unsigned long g = 2; g < pe; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (auto [q, k] : fac) {
      Integer r;
      Integer base(g), mod(pe);
      mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), phi / q, mod.get_mpz_t());
      if (r == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error("domain_error", "no primitive root", {{"modulus", std::to_string(pe)}});
}

}  // namespace spinl
