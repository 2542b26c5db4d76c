#include "spinl/local_factors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace spinl {

Integer bracket(unsigned long ell, int val, unsigned m) {
  int e = val == kInfiniteValuation ? static_cast<int>(m) : std::min<int>(static_cast<int>(m), val);
  if (e < 0) throw Error("domain_error", "bracket needs a nonnegative valuation");
  return ipow(ell, static_cast<unsigned long>(e));
}

ValProfile ValProfile::make(int rank, unsigned long ell, std::vector<int> vals) {
  if (rank < 0 || rank > 3) throw Error("domain_error", "rank must be in 0..3");
  if (static_cast<int>(vals.size()) != rank)
    throw Error("domain_error", "profile needs one valuation per rank",
                {{"rank", std::to_string(rank)}, {"given", std::to_string(vals.size())}});
  if (!is_prime(ell)) throw Error("domain_error", "ell must be prime");
  for (int v : vals)
    if (v < 0) throw Error("domain_error", "valuations must be nonnegative");
  std::sort(vals.begin(), vals.end());
  ValProfile p;
  p.rank = rank;
  p.ell = ell;
  p.vals = std::move(vals);
  return p;
}

int ValProfile::total() const {
  int s = 0;
  for (int v : vals) s += v;
  return s;
}

namespace {

void require_block(const HermQ& h, int j) {
  bool ok = true;
  for (int i = j; i < 3; ++i) ok = ok && h.c[i] == 0;
  // a3 sits in the 2x2 block, a1 and a2 only in the 3x3 one.
  if (j < 2) ok = ok && h.a[2].is_zero();
  if (j < 3) ok = ok && h.a[0].is_zero() && h.a[1].is_zero();
  if (!ok) throw Error("rank_mismatch", "h has entries outside the rank-j block", {{"j", std::to_string(j)}});
}

bool block_diagonal(const HermQ& h) {
  return h.a[0].is_zero() && h.a[1].is_zero() && h.a[2].is_zero();
}

}  // namespace

ValProfile profile_of(const QuatAlgebra& alg, const HermQ& h, int j, unsigned long ell) {
  if (j < 0 || j > 3) throw Error("domain_error", "rank must be in 0..3");
  require_block(h, j);
  if (j == 0) return ValProfile::make(0, ell, {});
  if (partial_norm(alg, h, j) == 0)
    throw Error("rank_mismatch", "block is not of full rank", {{"j", std::to_string(j)}});
  std::vector<int> vals;
  if (block_diagonal(h)) {
    for (int i = 0; i < j; ++i) vals.push_back(valuation(h.c[i], ell));
    return ValProfile::make(j, ell, vals);
  }
  if (alg.discriminant() % ell == 0)
    throw Error("unsupported_profile", "non-diagonal profile at a prime dividing D_B",
                {{"ell", std::to_string(ell)}});
  int tau = herm_valuation(alg, h, ell);
  if (j == 2) {
    int s = valuation(partial_norm(alg, h, 2), ell);
    return ValProfile::make(2, ell, {tau, s - tau});
  }
  int two = herm_valuation(alg, sharp(alg, h), ell);
  int all = valuation(norm(alg, h), ell);
  return ValProfile::make(3, ell, {tau, two - tau, all - two});
}

UPoly UPoly::from_integers(const std::vector<Integer>& c) {
  UPoly p;
  for (const auto& x : c) p.coeffs.emplace_back(Rational(x));
  p.trim();
  return p;
}

void UPoly::trim() {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

CycloValue UPoly::evaluate(const CycloValue& u) const {
  CycloValue s;
  for (std::size_t k = coeffs.size(); k-- > 0;) s = s * u + coeffs[k];
  return s;
}

std::string UPoly::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    Rational c = coeffs[k].rational_value();
    bool neg = c < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    Rational a = abs(c);
    if (k == 0 || a != 1) os << spinl::to_string(a);
    if (k >= 1) os << "u";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly p;
  if (a.coeffs.empty() || b.coeffs.empty()) return p;
  p.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, CycloValue(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) p.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  p.trim();
  return p;
}

bool operator==(const UPoly& a, const UPoly& b) {
  std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  for (std::size_t k = 0; k < n; ++k)
    if (a.coeff(k) != b.coeff(k)) return false;
  return true;
}

Rational alpha2(unsigned long ell, int n, int v1, int v2) {
  if (n < 0) return 0;
  int top = std::min(n, v1) + std::min(n, v2) - n;
  if (top < 0) return 0;
  Rational s = 0;
  for (int j = 0; j <= top; ++j) s += rpow(Rational(ell), 2 * j);
  return rpow(Rational(ell), n) * s;
}

Rational alpha2_prime(unsigned long ell, int m, int v1, int v2) {
  return rpow(Rational(ell), 2 * m) * (alpha2(ell, m, v1, v2) - alpha2(ell, m - 1, v1, v2));
}

Rational alpha3(unsigned long ell, int m, const std::vector<int>& vals) {
  if (vals.size() != 3) throw Error("domain_error", "alpha3 needs three valuations");
  if (m < 0) return 0;
  const Rational l(ell);
  int tau = std::min(m, vals[0]);
  Rational s = 0;
  for (int j = 0; j <= tau; ++j)
    for (int xi = std::max(0, j - m + tau); xi <= j; ++xi)
      s += rpow(l, 4 * j - 5 * xi) * alpha2(ell, m - 2 * j + xi, vals[1] + xi - j, vals[2] + xi - j);
  for (int j = 1; j <= tau; ++j)
    for (int xi = std::max(0, j - m + tau); xi <= j - 1; ++xi)
      s -= rpow(l, 4 * j - 2 - 5 * xi) * alpha2(ell, m - 2 * j + xi, vals[1] + xi - j, vals[2] + xi - j);
  return rpow(l, 2 * tau) * s;
}

UPoly p_poly(const ValProfile& profile) {
  const unsigned long ell = profile.ell;
  const auto& v = profile.vals;
  std::vector<Integer> c;
  switch (profile.rank) {
    case 0:
      c = {1};
      break;
    case 1:
      for (int m = 0; m <= v[0]; ++m) c.push_back(ipow(ell, m));
      break;
    case 2: {
      c.assign(v[0] + v[1] + 1, 0);
      for (int j = 0; j <= v[0]; ++j)
        for (int m = j; m <= v[0] + v[1] - j; ++m) c[m] += ipow(ell, 2 * j) * ipow(ell, 3 * m);
      break;
    }
    case 3: {
      int top = profile.total();
      for (int m = 0; m <= top + 1; ++m) {
        Rational x = rpow(Rational(ell), 4 * m) * alpha3(ell, m, v);
        if (!is_integer(x)) throw Error("internal_error", "non-integral rank-3 coefficient");
        if (m == top + 1) {
          if (x != 0) throw Error("internal_error", "rank-3 series does not terminate at the valuation budget");
          break;
        }
        c.push_back(x.get_num());
      }
      break;
    }
    default:
      throw Error("domain_error", "rank must be in 0..3");
  }
  return UPoly::from_integers(c);
}

namespace {

UPoly elementary(unsigned long ell, int from, int to) {
  UPoly p = UPoly::one();
  for (int iota = from; iota < to; ++iota) p = p * UPoly::from_integers({1, -ipow(ell, 2 * iota)});
  return p;
}

}  // namespace

UPoly interior_closed_form(const ValProfile& profile) {
  return elementary(profile.ell, 1, profile.rank) * p_poly(profile);
}

UPoly s_poly(const ValProfile& profile) { return elementary(profile.ell, 0, profile.rank) * p_poly(profile); }

LocalFactorResult s_factor(const ValProfile& profile, long r, const DirichletChar& chi) {
  if (2 * r <= 10) throw Error("domain_error", "weight must satisfy 2r > 10", {{"r", std::to_string(r)}});
  LocalFactorResult out{profile.rank, profile.ell, profile.vals, r, p_poly(profile), s_poly(profile), {}, {}, {}};
  out.u = chi(static_cast<long>(profile.ell)) * CycloValue(rpow(Rational(profile.ell), -2 * r));
  out.p_value = out.p.evaluate(out.u);
  out.value = out.s.evaluate(out.u);
  return out;
}

LocalFactorResult s_factor(const QuatAlgebra& alg, const HermQ& h, int j, long r, const DirichletChar& chi,
                           unsigned long ell) {
  if (j > 0 && alg.discriminant() % ell == 0)
    throw Error("unsupported_prime", "closed forms are asserted only for primes not dividing D_B",
                {{"ell", std::to_string(ell)}});
  return s_factor(profile_of(alg, h, j, ell), r, chi);
}

namespace {

// Integer quaternion arithmetic in order coordinates, reduced mod `mod`.
struct IntQuat {
  using V = std::array<long, 4>;
  const QuatAlgebra& alg;
  long mod;

  long red(long x) const {
    x %= mod;
    return x < 0 ? x + mod : x;
  }
  V mul(const V& x, const V& y) const {
    const auto& t = alg.mult_table();
    V z{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < 4; ++j) {
        if (y[j] == 0) continue;
        long p = x[i] * y[j];
        for (int k = 0; k < 4; ++k) z[k] += p * t[i][j][k];
      }
    }
    for (auto& v : z) v = red(v);
    return z;
  }
  V conj(const V& x) const {
    const auto& c = alg.conj_table();
    V z{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) z[k] += x[i] * c[i][k];
    for (auto& v : z) v = red(v);
    return z;
  }
  long norm(const V& x) const {
    const auto& g = alg.gram();
    long s = 0;
    for (int i = 0; i < 4; ++i) {
      s += g[i][i] / 2 * x[i] * x[i];
      for (int j = i + 1; j < 4; ++j) s += g[i][j] * x[i] * x[j];
    }
    return red(s);
  }
  long trace(const V& x) const {
    const auto& t = alg.trace_form();
    long s = 0;
    for (int i = 0; i < 4; ++i) s += t[i] * x[i];
    return red(s);
  }
};

std::vector<long> dual_weights(const QuatAlgebra& alg, int j, const HermQ& h, long q) {
  HermLattice lat = herm_lattice(alg, j);
  std::vector<long> w;
  for (const auto& e : lat.basis) {
    Rational t = pair(alg, e, h);
    if (!is_integer(t)) throw Error("not_in_dual", "h is not in the dual lattice");
    w.push_back(mod_floor(Integer(t.get_num() % q).get_si(), q));
  }
  return w;
}

Integer reduce_counts(const std::vector<long long>& counts, long q) {
  std::vector<Rational> raw;
  for (long long c : counts) raw.emplace_back(Integer(std::to_string(c)));
  CycloValue v = CycloValue::reduce(raw, static_cast<unsigned long>(q));
  if (!v.is_rational() || !is_integer(v.rational_value()))
    throw Error("non_galois_invariant", "non-Galois-invariant sum");
  return v.rational_value().get_num();
}

bool all_zero_mod(const std::array<long, 4>& x, long q) {
  for (long v : x)
    if (v % q != 0) return false;
  return true;
}

void rank3_sweep(const QuatAlgebra& alg, long q, const std::vector<long>& w, std::vector<long long>& counts) {
  using V = IntQuat::V;
  const long q2 = q * q;
  IntQuat Z{alg, q2};
  std::vector<V> all;
  for (long x0 = 0; x0 < q; ++x0)
    for (long x1 = 0; x1 < q; ++x1)
      for (long x2 = 0; x2 < q; ++x2)
        for (long x3 = 0; x3 < q; ++x3) all.push_back({x0, x1, x2, x3});
  // Lattice coordinate order: c1, c2, c3, a3 (4), a2 (4), a1 (4).
  auto lin = [&](const V& x, std::size_t off) {
    long s = 0;
    for (int k = 0; k < 4; ++k) s += x[k] * w[off + k];
    return s;
  };
  std::vector<long> na(all.size()), ta3(all.size()), ta2(all.size()), ta1(all.size());
  std::vector<V> ca(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    na[i] = Z.norm(all[i]);
    ca[i] = Z.conj(all[i]);
    ta3[i] = lin(all[i], 3);
    ta2[i] = lin(all[i], 7);
    ta1[i] = lin(all[i], 11);
  }
  for (long c1 = 0; c1 < q; ++c1)
    for (long c2 = 0; c2 < q; ++c2)
      for (std::size_t i3 = 0; i3 < all.size(); ++i3) {
        if ((c1 * c2 - na[i3]) % q != 0) continue;
        const V& a3 = all[i3];
        for (std::size_t i2 = 0; i2 < all.size(); ++i2) {
          const V& a2 = all[i2];
          V p32 = Z.mul(ca[i3], ca[i2]);  // a3* a2*
          for (std::size_t i1 = 0; i1 < all.size(); ++i1) {
            const V& a1 = all[i1];
            V a1p;
            for (int k = 0; k < 4; ++k) a1p[k] = p32[k] - c1 * a1[k];
            if (!all_zero_mod(a1p, q)) continue;
            V p13 = Z.mul(ca[i1], ca[i3]);  // a1* a3*
            V a2p;
            for (int k = 0; k < 4; ++k) a2p[k] = p13[k] - c2 * a2[k];
            if (!all_zero_mod(a2p, q)) continue;
            V p21 = Z.mul(ca[i2], ca[i1]);  // a2* a1*
            long t123 = Z.trace(Z.mul(Z.mul(a1, a2), a3));
            for (long c3 = 0; c3 < q; ++c3) {
              if ((c2 * c3 - na[i1]) % q != 0 || (c1 * c3 - na[i2]) % q != 0) continue;
              V a3p;
              for (int k = 0; k < 4; ++k) a3p[k] = p21[k] - c3 * a3[k];
              if (!all_zero_mod(a3p, q)) continue;
              long n = c1 * c2 * c3 - c1 * na[i1] - c2 * na[i2] - c3 * na[i3] + t123;
              if (n % q2 != 0) continue;
              long t = c1 * w[0] + c2 * w[1] + c3 * w[2] + ta3[i3] + ta2[i2] + ta1[i1];
              ++counts[static_cast<std::size_t>(mod_floor(t, q))];
            }
          }
        }
      }
}

}  // namespace

Integer interior_sum_oracle(const QuatAlgebra& alg, int j, unsigned long ell, unsigned m, const HermQ& h,
                            unsigned long long budget) {
  if (j < 1 || j > 3) throw Error("domain_error", "oracle rank must be 1, 2 or 3");
  if (!is_prime(ell)) throw Error("domain_error", "ell must be prime");
  require_block(h, j);
  const int dim = j == 1 ? 1 : (j == 2 ? 6 : 15);
  Integer qz = ipow(ell, m);
  // Rank 2 tallies a3 by (norm, trace) instead of sweeping all q^6 classes.
  long double qd = qz.get_d();
  long double work = j == 2 ? std::pow(qd, 4) + std::pow(qd, 3) : std::pow(qd, dim);
  check_budget(work, budget, "interior sum classes");
  const long q = qz.get_si();
  std::vector<long> w = dual_weights(alg, j, h, q);
  if (m == 0) return 1;
  std::vector<long long> counts(static_cast<std::size_t>(q), 0);
  if (j == 1) {
    for (long c = 0; c < q; ++c) ++counts[static_cast<std::size_t>(mod_floor(c * w[0], q))];
  } else if (j == 2) {
    // Tally a3 by (n(a3) mod q, trace contribution mod q), then pair with (c1, c2).
    IntQuat Z{alg, q};
    std::vector<long long> table(static_cast<std::size_t>(q * q), 0);
    IntQuat::V x{0, 0, 0, 0};
    for (x[0] = 0; x[0] < q; ++x[0])
      for (x[1] = 0; x[1] < q; ++x[1])
        for (x[2] = 0; x[2] < q; ++x[2])
          for (x[3] = 0; x[3] < q; ++x[3]) {
            long t = 0;
            for (int k = 0; k < 4; ++k) t += x[k] * w[2 + k];
            ++table[static_cast<std::size_t>(Z.norm(x) * q + mod_floor(t, q))];
          }
    for (long c1 = 0; c1 < q; ++c1)
      for (long c2 = 0; c2 < q; ++c2) {
        long n = mod_floor(c1 * c2, q);
        long base = c1 * w[0] + c2 * w[1];
        for (long t = 0; t < q; ++t) {
          long long k = table[static_cast<std::size_t>(n * q + t)];
          if (k) counts[static_cast<std::size_t>(mod_floor(base + t, q))] += k;
        }
      }
  } else {
    rank3_sweep(alg, q, w, counts);
  }
  return reduce_counts(counts, q);
}

Integer lem1_sum(const QuatAlgebra& alg, unsigned long ell, unsigned m, const Integer& lambda,
                 unsigned long long budget) {
  OrderResidues residues = order_residues(alg, ell, m, budget);
  const long q = residues.modulus();
  long lam = mod_floor(Integer(lambda % q).get_si(), q);
  std::vector<long long> counts(static_cast<std::size_t>(q), 0);
  for (const auto& x : residues) ++counts[static_cast<std::size_t>(mod_floor(lam * residues.norm_mod(x), q))];
  return reduce_counts(counts, q);
}

}  // namespace spinl
