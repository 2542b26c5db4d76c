#include "spinl/quaternion.hpp"

#include <sstream>

namespace spinl {

namespace {

Integer squarefree_scaled(const Rational& q) {
  // q * den^2 is an integer in the same square class.
  return q.get_num() * q.get_den();
}

int legendre(const Integer& u, unsigned long p) {
  return mpz_legendre(u.get_mpz_t(), Integer(p).get_mpz_t());
}

int hilbert_int(Integer a, Integer b, unsigned long p) {
  int alpha = 0, beta = 0;
  while (mpz_divisible_ui_p(a.get_mpz_t(), p)) { a /= p; ++alpha; }
  while (mpz_divisible_ui_p(b.get_mpz_t(), p)) { b /= p; ++beta; }
  if (p != 2) {
    int s = ((alpha * beta) % 2 == 1 && p % 4 == 3) ? -1 : 1;
    if (beta % 2 == 1) s *= legendre(a, p);
    if (alpha % 2 == 1) s *= legendre(b, p);
    return s;
  }
  auto mod8 = [](const Integer& x) {
    Integer r = x % 8;
    if (r < 0) r += 8;
    return r.get_si();
  };
  long u = mod8(a), v = mod8(b);
  auto eps = [](long x) { return ((x - 1) / 2) % 2; };
  auto omega = [](long x) { return ((x * x - 1) / 8) % 2; };
  long e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
  return e % 2 == 0 ? 1 : -1;
}

long to_long_checked(const Rational& q, const char* what) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw Error("invalid_algebra", std::string("order is not closed: non-integral ") + what);
  return q.get_num().get_si();
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, unsigned long p) {
  if (a == 0 || b == 0) throw Error("domain_error", "Hilbert symbol of zero");
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  return hilbert_int(squarefree_scaled(a), squarefree_scaled(b), p);
}

QuatAlgebra::QuatAlgebra(Rational a, Rational b, unsigned long discriminant, Matrix order_basis)
    : a_(std::move(a)), b_(std::move(b)), disc_(discriminant), basis_(std::move(order_basis)) {
  if (!(a_ < 0 && b_ < 0)) throw Error("invalid_algebra", "algebra must be definite (a < 0, b < 0)");
  if (basis_.rows != 4 || basis_.cols != 4) throw Error("invalid_algebra", "order basis must be 4x4");
  if (determinant(basis_) == 0) throw Error("invalid_algebra", "order basis is singular");
  inv_basis_ = inverse(basis_);
  if (!in_order(QuatQ::scalar(1))) throw Error("invalid_algebra", "order does not contain 1");
  for (std::size_t i = 0; i < 4; ++i) {
    QuatQ ei = order_element(i);
    trace_[i] = to_long_checked(trace(ei), "trace");
    auto cc = order_coords(conj(ei));
    for (std::size_t k = 0; k < 4; ++k) conj_[i][k] = to_long_checked(cc[k], "conjugate");
    for (std::size_t j = 0; j < 4; ++j) {
      QuatQ ej = order_element(j);
      auto pc = order_coords(mul(ei, ej));
      for (std::size_t k = 0; k < 4; ++k) mult_[i][j][k] = to_long_checked(pc[k], "product");
      gram_[i][j] = to_long_checked(trace(mul(ei, conj(ej))), "trace pairing");
    }
  }
  if (disc_ == 0 || !is_squarefree(disc_)) throw Error("invalid_algebra", "D_B must be squarefree");
  // Ramified finite primes all divide 2ab.
  Integer probe = 2 * squarefree_scaled(a_) * squarefree_scaled(b_);
  unsigned long ramified = 1;
  for (unsigned long p : prime_divisors(probe))
    if (hilbert_symbol(a_, b_, p) == -1) ramified *= p;
  if (ramified != disc_)
    throw Error("invalid_algebra", "D_B does not match the ramified primes",
                {{"D_B", std::to_string(disc_)}, {"ramified", std::to_string(ramified)}});
  Matrix g(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = gram_[i][j];
  Rational d = determinant(g);
  if (abs(d) != Rational(disc_) * Rational(disc_))
    throw Error("invalid_algebra", "order is not maximal (discriminant mismatch)",
                {{"det_gram", to_string(d)}});
}

const QuatAlgebra& QuatAlgebra::hamilton() {
  static const QuatAlgebra alg = [] {
    Matrix m(4, 4);
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 2) = 1;
    for (std::size_t j = 0; j < 4; ++j) m(3, j) = Rational(1, 2);
    return QuatAlgebra(Rational(-1), Rational(-1), 2, m);
  }();
  return alg;
}

const QuatAlgebra& QuatAlgebra::disc7() {
  static const QuatAlgebra alg = [] {
    Matrix m(4, 4);
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 0) = Rational(1, 2);
    m(2, 2) = Rational(1, 2);
    m(3, 1) = Rational(1, 2);
    m(3, 3) = Rational(1, 2);
    return QuatAlgebra(Rational(-1), Rational(-7), 7, m);
  }();
  return alg;
}

QuatQ QuatAlgebra::order_element(std::size_t i) const {
  return QuatQ(basis_(i, 0), basis_(i, 1), basis_(i, 2), basis_(i, 3));
}

bool QuatAlgebra::in_order(const QuatQ& p) const {
  for (const auto& x : order_coords(p))
    if (!is_integer(x)) return false;
  return true;
}

std::string QuatAlgebra::describe() const {
  std::ostringstream os;
  os << "B(" << to_string(a_) << "," << to_string(b_) << "), D_B=" << disc_;
  return os.str();
}

int quat_valuation(const QuatAlgebra& alg, const QuatQ& x, unsigned long ell) {
  if (x.is_zero()) throw Error("domain_error", "valuation of zero");
  int v = kInfiniteValuation;
  for (const auto& c : alg.order_coords(x)) v = std::min(v, valuation(c, ell));
  return v;
}

OrderResidues::iterator& OrderResidues::iterator::operator++() {
  for (std::size_t i = 4; i-- > 0;) {
    if (++idx_.coords[i] < modulus_) return *this;
    idx_.coords[i] = 0;
  }
  done_ = true;
  return *this;
}

OrderResidues::OrderResidues(const QuatAlgebra& alg, unsigned long ell, unsigned m,
                             unsigned long long budget)
    : alg_(&alg), ell_(ell), m_(m) {
  if (!is_prime(ell)) throw Error("domain_error", "ell must be prime");
  Integer mod = ipow(ell, m);
  Integer count = mod * mod * mod * mod;
  check_budget(count.get_d(), budget, "order residues");
  modulus_ = mod.get_si();
  count_ = count.get_ui();
}

OrderResidues::iterator OrderResidues::begin() const {
  ResidueIndex r{ell_, m_, {0, 0, 0, 0}};
  return iterator(r, modulus_, false);
}

OrderResidues::iterator OrderResidues::end() const {
  return iterator(ResidueIndex{ell_, m_, {0, 0, 0, 0}}, modulus_, true);
}

QuatQ OrderResidues::lift(const ResidueIndex& r) const {
  std::array<Rational, 4> x;
  for (std::size_t i = 0; i < 4; ++i) x[i] = r.coords[i];
  return alg_->from_order_coords(x);
}

long OrderResidues::norm_mod(const ResidueIndex& r) const {
  const auto& g = alg_->gram();
  long s = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    s += g[i][i] / 2 * r.coords[i] * r.coords[i];
    for (std::size_t j = i + 1; j < 4; ++j) s += g[i][j] * r.coords[i] * r.coords[j];
    s %= modulus_;
  }
  return mod_floor(s, modulus_);
}

OrderResidues order_residues(const QuatAlgebra& alg, unsigned long ell, unsigned m,
                             unsigned long long budget) {
  return OrderResidues(alg, ell, m, budget);
}

}  // namespace spinl
