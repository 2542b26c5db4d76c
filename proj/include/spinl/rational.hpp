#pragma once

#include <gmpxx.h>

#include <climits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spinl {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "-p", "p/q"; the result is canonical.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

constexpr int kInfiniteValuation = INT_MAX;

// p-adic valuation; kInfiniteValuation for zero.
int valuation(const Integer& z, unsigned long p);
int valuation(const Rational& q, unsigned long p);

Rational rpow(const Rational& base, long exponent);
Integer ipow(unsigned long base, unsigned long exponent);
Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

bool is_integer(const Rational& q);

// Small-integer number theory.
bool is_prime(unsigned long n);
std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n);
std::vector<unsigned long> prime_divisors(const Integer& z);
std::vector<unsigned long> divisors(unsigned long n);
unsigned long euler_phi(unsigned long n);
unsigned long gcd_ul(unsigned long a, unsigned long b);
unsigned long lcm_ul(unsigned long a, unsigned long b);
long mod_floor(long a, long m);
bool is_squarefree(unsigned long n);
// Smallest primitive root modulo an odd prime power p^e.
unsigned long primitive_root(unsigned long p, unsigned e);

}  // namespace spinl
