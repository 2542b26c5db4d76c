#include "spinl/jordan.hpp"

#include <set>

namespace spinl {

int rank(const QuatAlgebra& alg, const HermQ& h) {
  if (norm(alg, h) != 0) return 3;
  if (!sharp(alg, h).is_zero()) return 2;
  return h.is_zero() ? 0 : 1;
}

int herm_valuation(const QuatAlgebra& alg, const HermQ& h, unsigned long ell) {
  int v = kInfiniteValuation;
  for (const auto& c : h.c) v = std::min(v, valuation(c, ell));
  for (const auto& q : h.a)
    if (!q.is_zero()) v = std::min(v, quat_valuation(alg, q, ell));
  return v;
}

bool is_integral(const QuatAlgebra& alg, const HermQ& h) {
  for (const auto& c : h.c)
    if (!is_integer(c)) return false;
  for (const auto& q : h.a)
    if (!alg.in_order(q)) return false;
  return true;
}

namespace {

void collect_denominator_primes(const QuatAlgebra& alg, const HermQ& h, std::set<unsigned long>& out) {
  auto add = [&](const Rational& q) {
    for (unsigned long p : prime_divisors(q.get_den())) out.insert(p);
  };
  for (const auto& c : h.c) add(c);
  for (const auto& q : h.a)
    for (const auto& x : alg.order_coords(q)) add(x);
}

}  // namespace

Integer kappa_at(const QuatAlgebra& alg, const HermQ& x, unsigned long ell) {
  int v = std::min(0, herm_valuation(alg, x, ell));
  v = std::min(v, herm_valuation(alg, sharp(alg, x), ell));
  v = std::min(v, valuation(norm(alg, x), ell));
  return ipow(ell, static_cast<unsigned long>(-v));
}

Integer kappa(const QuatAlgebra& alg, const HermQ& x) {
  // Denominators of X# and N(X) only involve primes already in X.
  std::set<unsigned long> primes;
  collect_denominator_primes(alg, x, primes);
  Integer k = 1;
  for (unsigned long p : primes) k *= kappa_at(alg, x, p);
  return k;
}

bool psd_test(const QuatAlgebra& alg, const HermQ& h) {
  for (const auto& c : h.c)
    if (c < 0) return false;
  HermQ s = sharp(alg, h);
  for (const auto& c : s.c)
    if (c < 0) return false;
  return norm(alg, h) >= 0;
}

HermLattice herm_lattice(const QuatAlgebra& alg, int j) {
  if (j < 1 || j > 3) throw Error("domain_error", "lattice rank must be 1, 2 or 3");
  HermLattice L;
  L.rank = j;
  for (int i = 0; i < j; ++i) {
    HermQ e;
    e.c[i] = 1;
    L.basis.push_back(e);
  }
  // Off-diagonal slots inside the j x j block: a3 = (1,2), a2 = (1,3), a1 = (2,3).
  std::vector<int> slots;
  if (j >= 2) slots.push_back(2);
  if (j == 3) {
    slots.push_back(1);
    slots.push_back(0);
  }
  for (int slot : slots)
    for (std::size_t k = 0; k < 4; ++k) {
      HermQ e;
      e.a[slot] = alg.order_element(k);
      L.basis.push_back(e);
    }
  std::size_t n = L.basis.size();
  L.gram = Matrix(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) L.gram(r, c) = pair(alg, L.basis[r], L.basis[c]);
  return L;
}

LatticeDual lattice_dual(const QuatAlgebra& alg, const HermLattice& lattice) {
  Rational det = determinant(lattice.gram);
  if (det == 0) throw Error("domain_error", "degenerate Gram matrix");
  Matrix inv = inverse(lattice.gram);
  LatticeDual d;
  std::size_t n = lattice.basis.size();
  for (std::size_t r = 0; r < n; ++r) {
    HermQ e;
    for (std::size_t c = 0; c < n; ++c)
      if (inv(r, c) != 0) e = e + inv(r, c) * lattice.basis[c];
    d.dual_basis.push_back(e);
  }
  d.index = abs(det);
  d.vol = rpow(Rational(alg.discriminant(), 4), lattice.rank * (lattice.rank - 1) / 2);
  d.dual_vol = d.vol / d.index;
  return d;
}

bool in_dual(const QuatAlgebra& alg, const HermLattice& lattice, const HermQ& h) {
  for (const auto& e : lattice.basis)
    if (!is_integer(pair(alg, h, e))) return false;
  return true;
}

std::vector<Rational> lattice_coords(const QuatAlgebra& alg, const HermLattice& lattice, const HermQ& h) {
  std::vector<Rational> rhs(lattice.basis.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = pair(alg, h, lattice.basis[i]);
  // pair(h, e_i) = sum_k x_k gram(k, i), i.e. x * gram = rhs.
  return solve_left(lattice.gram, rhs);
}

}  // namespace spinl
