#pragma once

#include <array>
#include <iterator>
#include <string>

#include "spinl/error.hpp"
#include "spinl/linalg.hpp"
#include "spinl/rings.hpp"

namespace spinl {

// Coefficients (w, x, y, z) of w + x i + y j + z k over a commutative ring K.
template <class K>
struct Quat {
  std::array<K, 4> c{K(0), K(0), K(0), K(0)};

  Quat() = default;
  Quat(K w, K x, K y, K z) : c{std::move(w), std::move(x), std::move(y), std::move(z)} {}
  static Quat scalar(const K& s) { return Quat(s, K(0), K(0), K(0)); }

  const K& operator[](std::size_t i) const { return c[i]; }
  K& operator[](std::size_t i) { return c[i]; }

  bool is_zero() const {
    for (const auto& v : c)
      if (!spinl::is_zero(v)) return false;
    return true;
  }
  Quat operator-() const { return Quat(-c[0], -c[1], -c[2], -c[3]); }
  friend Quat operator+(const Quat& a, const Quat& b) {
    return Quat(a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]);
  }
  friend Quat operator-(const Quat& a, const Quat& b) { return a + (-b); }
  friend Quat operator*(const K& s, const Quat& a) {
    return Quat(s * a.c[0], s * a.c[1], s * a.c[2], s * a.c[3]);
  }
  Quat& operator+=(const Quat& o) { return *this = *this + o; }
  Quat& operator-=(const Quat& o) { return *this = *this - o; }
  friend bool operator==(const Quat& a, const Quat& b) { return a.c == b.c; }
  friend bool operator!=(const Quat& a, const Quat& b) { return !(a == b); }
};

using QuatQ = Quat<Rational>;

template <class K>
Quat<K> base_change(const QuatQ& q) {
  return Quat<K>(K(q[0]), K(q[1]), K(q[2]), K(q[3]));
}

// Hilbert symbol (a, b)_p over Q; p = 0 means the real place.
int hilbert_symbol(const Rational& a, const Rational& b, unsigned long p);

// Definite quaternion algebra B(a, b) with a fixed maximal order.
class QuatAlgebra {
 public:
  // Validates definiteness, order closure, 1 in the order, squarefree D_B
  // equal to the product of finite ramified primes, and reduced
  // discriminant D_B of the order.
  QuatAlgebra(Rational a, Rational b, unsigned long discriminant, Matrix order_basis);

  // B(-1,-1) with the Hurwitz order {1, i, j, (1+i+j+k)/2}; D_B = 2.
  static const QuatAlgebra& hamilton();
  // B(-1,-7) with the order {1, i, (1+j)/2, (i+k)/2}; D_B = 7, split at 2 and 3.
  static const QuatAlgebra& disc7();

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  unsigned long discriminant() const { return disc_; }
  const Matrix& order_basis() const { return basis_; }
  bool same_as(const QuatAlgebra& o) const {
    return this == &o || (a_ == o.a_ && b_ == o.b_ && basis_ == o.basis_);
  }

  template <class K>
  Quat<K> mul(const Quat<K>& p, const Quat<K>& q) const {
    const K A(a_), B(b_), AB(a_ * b_);
    return Quat<K>(p[0] * q[0] + A * p[1] * q[1] + B * p[2] * q[2] - AB * p[3] * q[3],
                   p[0] * q[1] + p[1] * q[0] - B * p[2] * q[3] + B * p[3] * q[2],
                   p[0] * q[2] + p[2] * q[0] + A * p[1] * q[3] - A * p[3] * q[1],
                   p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1]);
  }
  template <class K>
  static Quat<K> conj(const Quat<K>& p) { return Quat<K>(p[0], -p[1], -p[2], -p[3]); }
  template <class K>
  K norm(const Quat<K>& p) const {
    const K A(a_), B(b_), AB(a_ * b_);
    return p[0] * p[0] - A * p[1] * p[1] - B * p[2] * p[2] + AB * p[3] * p[3];
  }
  template <class K>
  static K trace(const Quat<K>& p) { return K(2) * p[0]; }

  // Coordinates with respect to the order basis, and back.
  template <class K>
  std::array<K, 4> order_coords(const Quat<K>& p) const {
    std::array<K, 4> out{K(0), K(0), K(0), K(0)};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (inv_basis_(j, i) != 0) out[i] += K(inv_basis_(j, i)) * p[j];
    return out;
  }
  template <class K>
  Quat<K> from_order_coords(const std::array<K, 4>& x) const {
    Quat<K> p;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (basis_(i, j) != 0) p[j] += K(basis_(i, j)) * x[i];
    return p;
  }
  QuatQ order_element(std::size_t i) const;
  bool in_order(const QuatQ& p) const;

  // Integer structure in order coordinates.
  // e_i e_j = sum_k mult[i][j][k] e_k.
  const std::array<std::array<std::array<long, 4>, 4>, 4>& mult_table() const { return mult_; }
  // gram[i][j] = tr(e_i conj(e_j)); n(x) = x^t gram x / 2.
  const std::array<std::array<long, 4>, 4>& gram() const { return gram_; }
  const std::array<long, 4>& trace_form() const { return trace_; }
  // conj(e_i) = sum_k conj_table[i][k] e_k.
  const std::array<std::array<long, 4>, 4>& conj_table() const { return conj_; }

  std::string describe() const;

 private:
  Rational a_, b_;
  unsigned long disc_;
  Matrix basis_, inv_basis_;
  std::array<std::array<std::array<long, 4>, 4>, 4> mult_{};
  std::array<std::array<long, 4>, 4> gram_{};
  std::array<long, 4> trace_{};
  std::array<std::array<long, 4>, 4> conj_{};
};

// Checked element: carries its algebra and refuses to mix algebras.
template <class K>
class QuatElement {
 public:
  QuatElement(const QuatAlgebra& alg, Quat<K> v) : alg_(&alg), v_(std::move(v)) {}

  const QuatAlgebra& algebra() const { return *alg_; }
  const Quat<K>& value() const { return v_; }

  QuatElement conj() const { return QuatElement(*alg_, QuatAlgebra::conj(v_)); }
  K norm() const { return alg_->norm(v_); }
  K trace() const { return QuatAlgebra::trace(v_); }

  friend QuatElement operator*(const QuatElement& x, const QuatElement& y) {
    x.check(y);
    return QuatElement(*x.alg_, x.alg_->mul(x.v_, y.v_));
  }
  friend QuatElement operator+(const QuatElement& x, const QuatElement& y) {
    x.check(y);
    return QuatElement(*x.alg_, x.v_ + y.v_);
  }
  friend QuatElement operator-(const QuatElement& x, const QuatElement& y) {
    x.check(y);
    return QuatElement(*x.alg_, x.v_ - y.v_);
  }
  friend bool operator==(const QuatElement& x, const QuatElement& y) {
    return x.alg_->same_as(*y.alg_) && x.v_ == y.v_;
  }

 private:
  void check(const QuatElement& o) const {
    if (!alg_->same_as(*o.alg_)) throw Error("algebra_mismatch", "quaternions from different algebras");
  }
  const QuatAlgebra* alg_;
  Quat<K> v_;
};

// min over order coordinates of the l-adic valuation. Throws on zero.
int quat_valuation(const QuatAlgebra& alg, const QuatQ& x, unsigned long ell);

// A class of B_0 / l^m B_0, as order coordinates in [0, l^m).
struct ResidueIndex {
  unsigned long ell = 2;
  unsigned m = 1;
  std::array<long, 4> coords{};
};

// Iterable range over all l^{4m} classes of B_0 / l^m B_0.
class OrderResidues {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ResidueIndex;
    using difference_type = std::ptrdiff_t;
    using pointer = const ResidueIndex*;
    using reference = const ResidueIndex&;

    iterator(ResidueIndex idx, long modulus, bool done) : idx_(idx), modulus_(modulus), done_(done) {}
    reference operator*() const { return idx_; }
    pointer operator->() const { return &idx_; }
    iterator& operator++();
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.idx_.coords == b.idx_.coords);
    }
    friend bool operator!=(const iterator& a, const iterator& b) { return !(a == b); }

   private:
    ResidueIndex idx_;
    long modulus_;
    bool done_;
  };

  OrderResidues(const QuatAlgebra& alg, unsigned long ell, unsigned m, unsigned long long budget);
  iterator begin() const;
  iterator end() const;
  unsigned long long size() const { return count_; }
  long modulus() const { return modulus_; }

  QuatQ lift(const ResidueIndex& r) const;
  // n(lift) mod l^m, in [0, l^m).
  long norm_mod(const ResidueIndex& r) const;

 private:
  const QuatAlgebra* alg_;
  unsigned long ell_;
  unsigned m_;
  long modulus_;
  unsigned long long count_;
};

OrderResidues order_residues(const QuatAlgebra& alg, unsigned long ell, unsigned m,
                             unsigned long long budget = enumeration_budget());

}  // namespace spinl
