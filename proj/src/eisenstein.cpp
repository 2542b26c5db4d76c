#include "spinl/eisenstein.hpp"

#include <algorithm>

namespace spinl {

GradedConstant gamma_j_symbolic(int j, long alpha) {
  if (j < 0 || j > 3) throw Error("domain_error", "rank must be in 0..3");
  if (j > 0 && alpha - 2 * (j - 1) < 1)
    throw Error("domain_error", "Gamma at a nonpositive integer", {{"alpha", std::to_string(alpha)}});
  Rational value = 1;
  for (int iota = 0; iota < j; ++iota)
    value *= Rational(ipow(2, alpha) * factorial(alpha - 2 * iota - 1));
  return GradedConstant(CycloValue(value), j * alpha - j * (j - 1), static_cast<int>(mod_floor(j * alpha, 4)));
}

CycloValue l_normalizer(int j, long r, const DirichletChar& chi) {
  if (2 * r <= 10) throw Error("domain_error", "weight must satisfy 2r > 10", {{"r", std::to_string(r)}});
  if (j < 0 || j > 3) throw Error("domain_error", "rank must be in 0..3");
  CycloValue v(1);
  for (int iota = 0; iota < j; ++iota) v *= l_value_ratio(chi, static_cast<unsigned long>(2 * r - 2 * iota));
  // (2i)^{-j(j-1)} with j(j-1) in {0, 2, 6}: i^{-j(j-1)} = (-1)^{j(j-1)/2}.
  int e = j * (j - 1);
  Rational two = rpow(Rational(2), -e);
  if ((e / 2) % 2 == 1) two = -two;
  return v * CycloValue(two);
}

GradedConstant c_infinity(long s, long r) {
  if (s + r - 4 < 1) throw Error("domain_error", "Gamma at a nonpositive integer");
  Rational g = Rational(factorial(s + r - 1) * factorial(s + r - 3) * factorial(s + r - 5));
  return GradedConstant(CycloValue(g), -(3 * s + 3 * r - 6), 0);
}

namespace {

int block_rank(const HermQ& h) {
  if (h.is_zero()) return 0;
  if (h.c[1] == 0 && h.c[2] == 0 && h.a[0].is_zero() && h.a[1].is_zero() && h.a[2].is_zero()) return 1;
  if (h.c[2] == 0 && h.a[0].is_zero() && h.a[1].is_zero()) return 2;
  return 3;
}

}  // namespace

KernelCoeff kernel_coeff(const QuatAlgebra& alg, const HermQ& h, long r, const DirichletChar& chi) {
  if (2 * r <= 10) throw Error("domain_error", "weight must satisfy 2r > 10", {{"r", std::to_string(r)}});
  KernelCoeff k;
  k.h = h;
  k.j = block_rank(h);
  if (k.j == 0) {
    k.value = CycloValue(1);
    k.l_inverse = CycloValue(1);
    k.nj_power = 1;
    k.dual_volume = 1;
    return k;
  }
  Rational nj = partial_norm(alg, h, k.j);
  if (nj == 0 || rank(alg, h) != k.j)
    throw Error("rank_mismatch", "h is not of full rank in its block", {{"j", std::to_string(k.j)}});
  HermLattice lattice = herm_lattice(alg, k.j);
  if (!in_dual(alg, lattice, h)) throw Error("not_in_dual", "h is not in the dual lattice");
  k.l_inverse = l_normalizer(k.j, r, chi).inverse();
  k.nj_power = rpow(nj, 2 * r - 2 * k.j - 1);
  k.dual_volume = lattice_dual(alg, lattice).dual_vol;
  CycloValue value = k.l_inverse * CycloValue(k.nj_power * k.dual_volume);
  std::vector<unsigned long> primes = prime_divisors(nj.get_num());
  for (unsigned long p : prime_divisors(nj.get_den()))
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  for (unsigned long p : primes) {
    // Rank 1 sums involve no quaternions, so they hold at every prime.
    if (k.j >= 2 && alg.discriminant() % p == 0)
      throw Error("unsupported_prime", "closed forms are asserted only for primes not dividing D_B",
                  {{"ell", std::to_string(p)}});
    LocalFactorResult lf = s_factor(profile_of(alg, h, k.j, p), r, chi);
    value *= lf.p_value;
    k.local.push_back(std::move(lf));
  }
  k.value = value;
  // C_inf,h = N Vol / Gamma_j(2r) and prod_l S_l = prod P / prod L(chi, 2r-2iota), while
  // Gamma_j(2r) prod L = L(j) (2i)^{4rj} pi^{4rj - 2j(j-1)}.
  long e = 4 * r * k.j;
  k.normalization = GradedConstant(CycloValue(rpow(Rational(2), -e)), -(e - 2 * k.j * (k.j - 1)), 0);
  return k;
}

Rational delta_on_exponential(const QuatAlgebra& alg, const HermQ& h) { return norm(alg, h); }

GradedConstant normalization_bridge(const QuatAlgebra& alg, long r, const DirichletChar& chi) {
  if (2 * r <= 10) throw Error("domain_error", "weight must satisfy 2r > 10", {{"r", std::to_string(r)}});
  // Gamma(k) L(chi, k) = ratio_k (2 pi i)^k for k = 2r, 2r-2, 2r-4; the pi^{6r-6}
  // cancels C_inf(r, r), leaving 2^{6r-6} i^{6r-6}.
  CycloValue v(rpow(Rational(alg.discriminant()), r) * rpow(Rational(2), 6 * r - 6));
  for (long k : {2 * r, 2 * r - 2, 2 * r - 4}) v *= l_value_ratio(chi, static_cast<unsigned long>(k));
  for (unsigned long p : prime_divisors(Integer(alg.discriminant())))
    v *= CycloValue(1) - chi(static_cast<long>(p)) * CycloValue(rpow(Rational(p), -(2 * r - 2)));
  return GradedConstant(v, 0, static_cast<int>(mod_floor(6 * r - 6, 4)));
}

}  // namespace spinl
