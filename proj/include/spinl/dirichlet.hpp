#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinl/cyclo.hpp"

namespace spinl {

// Standard generators of (Z/M)^x: one primitive root per odd prime power,
// -1 and 5 for 2^e (e >= 3), -1 for 4. Each is lifted by CRT to be 1 at the
// other prime powers.
struct UnitGenerator {
  unsigned long value;  // residue mod M
  unsigned long order;  // order in (Z/M)^x
};
std::vector<UnitGenerator> unit_generators(unsigned long modulus);

class DirichletChar {
 public:
  // images: generator residue -> exponent of zeta_order. Generators absent
  // from the map get exponent 0. Throws domain_error when the images do not
  // define a character (an image incompatible with the generator order).
  DirichletChar(unsigned long modulus, unsigned long order,
                const std::map<unsigned long, long>& images);

  static DirichletChar trivial(unsigned long modulus = 1);
  // Parses "trivial", "trivial:M" or "M:n:g=e,g=e" (e.g. "5:4:2=1").
  static DirichletChar parse(const std::string& spec);

  unsigned long modulus() const { return modulus_; }
  unsigned long order() const { return order_; }
  const std::map<unsigned long, long>& images() const { return images_; }

  // Exponent e with chi(k) = zeta^e, or -1 when gcd(k, M) > 1.
  long exponent(long k) const;
  CycloValue operator()(long k) const;

  bool is_trivial() const;
  bool is_even() const { return exponent(-1) == 0; }
  unsigned long conductor() const;
  DirichletChar primitive() const;
  DirichletChar conj() const;

  std::string to_spec() const;

 private:
  DirichletChar() = default;
  static DirichletChar from_table(unsigned long modulus, unsigned long order,
                                  std::vector<long> table);

  unsigned long modulus_ = 1;
  unsigned long order_ = 1;
  std::map<unsigned long, long> images_;
  std::vector<long> table_;  // exponent per residue, -1 on non-units
};

// Sum over a mod f of chi(a) zeta_f^a for the primitive character chi mod f.
CycloValue gauss_sum(const DirichletChar& chi);

// B_{n,chi} from sum_{a=1}^{M} chi(a) t e^{at} / (e^{Mt} - 1).
CycloValue gen_bernoulli(const DirichletChar& chi, unsigned long n);

// Gamma(n) L(chi, n) / (2 pi i)^n. Throws parity_error unless chi(-1) = (-1)^n.
CycloValue l_value_ratio(const DirichletChar& chi, unsigned long n);

}  // namespace spinl
