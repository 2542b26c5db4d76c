#include "spinl/dirichlet.hpp"

#include <deque>
#include <numeric>
#include <sstream>

#include "spinl/error.hpp"

namespace spinl {

namespace {

unsigned long crt_lift(unsigned long residue, unsigned long q, unsigned long modulus) {
  // x = residue mod q, x = 1 mod modulus/q.
  unsigned long rest = modulus / q;
  for (unsigned long x = residue; x < modulus; x += q)
    if (x % rest == 1 % rest) return x;
  throw Error("internal_error", "CRT lift failed");
}

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long m) {
  return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace

std::vector<UnitGenerator> unit_generators(unsigned long modulus) {
  if (modulus == 0) throw Error("domain_error", "modulus must be positive");
  std::vector<UnitGenerator> gens;
  for (auto [p, e] : factorize(modulus)) {
    unsigned long q = ipow(p, e).get_ui();
    if (p == 2) {
      if (e >= 2) gens.push_back({crt_lift(q - 1, q, modulus), 2});
      if (e >= 3) gens.push_back({crt_lift(5, q, modulus), q / 4});
    } else {
      gens.push_back({crt_lift(primitive_root(p, e), q, modulus), q / p * (p - 1)});
    }
  }
  return gens;
}

DirichletChar::DirichletChar(unsigned long modulus, unsigned long order,
                             const std::map<unsigned long, long>& images)
    : modulus_(modulus), order_(order) {
  if (modulus == 0 || order == 0) throw Error("domain_error", "modulus and order must be positive");
  auto gens = unit_generators(modulus);
  for (const auto& [g, e] : images) {
    bool known = false;
    for (const auto& gen : gens) known = known || gen.value == g % modulus;
    if (!known)
      throw Error("domain_error", "image given for a non-generator",
                  {{"generator", std::to_string(g)}, {"modulus", std::to_string(modulus)}});
  }
  for (const auto& gen : gens) {
    auto it = images.find(gen.value);
    images_[gen.value] = it == images.end() ? 0 : mod_floor(it->second, static_cast<long>(order));
  }
  // Breadth-first fill of the exponent table; a second visit with a
  // different exponent means the images violate a generator order.
  table_.assign(modulus, -1);
  table_[1 % modulus] = 0;
  std::deque<unsigned long> queue{1 % modulus};
  while (!queue.empty()) {
    unsigned long k = queue.front();
    queue.pop_front();
    for (const auto& gen : gens) {
      unsigned long nk = mulmod(k, gen.value, modulus);
      long ne = (table_[k] + images_[gen.value]) % static_cast<long>(order);
      if (table_[nk] < 0) {
        table_[nk] = ne;
        queue.push_back(nk);
      } else if (table_[nk] != ne) {
        throw Error("domain_error", "character images do not respect generator orders",
                    {{"modulus", std::to_string(modulus)}, {"order", std::to_string(order)}});
      }
    }
  }
}

DirichletChar DirichletChar::trivial(unsigned long modulus) { return DirichletChar(modulus, 1, {}); }

DirichletChar DirichletChar::parse(const std::string& spec) {
  if (spec == "trivial") return trivial();
  if (spec.rfind("trivial:", 0) == 0) return trivial(std::stoul(spec.substr(8)));
  try {
    std::size_t c1 = spec.find(':');
    std::size_t c2 = spec.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) throw std::invalid_argument("shape");
    unsigned long m = std::stoul(spec.substr(0, c1));
    unsigned long n = std::stoul(spec.substr(c1 + 1, c2 - c1 - 1));
    std::map<unsigned long, long> images;
    std::stringstream ss(spec.substr(c2 + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      std::size_t eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("image");
      images[std::stoul(item.substr(0, eq))] = std::stol(item.substr(eq + 1));
    }
    return DirichletChar(m, n, images);
  } catch (const std::logic_error&) {
    throw Error("parse_error", "malformed character spec", {{"spec", spec}});
  }
}

DirichletChar DirichletChar::from_table(unsigned long modulus, unsigned long order,
                                        std::vector<long> table) {
  DirichletChar chi;
  chi.modulus_ = modulus;
  chi.order_ = order;
  for (const auto& gen : unit_generators(modulus)) chi.images_[gen.value] = table[gen.value];
  chi.table_ = std::move(table);
  return chi;
}

long DirichletChar::exponent(long k) const {
  return table_[static_cast<std::size_t>(mod_floor(k, static_cast<long>(modulus_)))];
}

CycloValue DirichletChar::operator()(long k) const {
  long e = exponent(k);
  if (e < 0) return CycloValue(0);
  return CycloValue::zeta(order_, e);
}

bool DirichletChar::is_trivial() const {
  for (const auto& [g, e] : images_)
    if (e != 0) return false;
  return true;
}

unsigned long DirichletChar::conductor() const {
  for (unsigned long f : divisors(modulus_)) {
    bool ok = true;
    for (unsigned long k = 1; k < modulus_ && ok; k += f)
      if (table_[k] > 0) ok = false;
    if (ok) return f;
  }
  return modulus_;
}

DirichletChar DirichletChar::primitive() const {
  unsigned long f = conductor();
  std::vector<long> table(f, -1);
  for (unsigned long k = 0; k < f; ++k) {
    if (gcd_ul(k, f) != 1 && f > 1) continue;
    for (unsigned long x = k; x < k + f * modulus_; x += f) {
      if (gcd_ul(x % modulus_, modulus_) == 1 || modulus_ == 1) {
        table[k] = table_[x % modulus_];
        break;
      }
    }
  }
  return from_table(f, order_, std::move(table));
}

DirichletChar DirichletChar::conj() const {
  std::vector<long> table = table_;
  for (auto& e : table)
    if (e > 0) e = static_cast<long>(order_) - e;
  return from_table(modulus_, order_, std::move(table));
}

std::string DirichletChar::to_spec() const {
  if (is_trivial()) return modulus_ == 1 ? "trivial" : "trivial:" + std::to_string(modulus_);
  std::string s = std::to_string(modulus_) + ":" + std::to_string(order_) + ":";
  bool first = true;
  for (const auto& [g, e] : images_) {
    if (!first) s += ",";
    s += std::to_string(g) + "=" + std::to_string(e);
    first = false;
  }
  return s;
}

CycloValue gauss_sum(const DirichletChar& chi) {
  DirichletChar prim = chi.primitive();
  unsigned long f = prim.modulus();
  unsigned long n = lcm_ul(f, prim.order());
  std::vector<Rational> raw(n);
  for (unsigned long a = 0; a < f; ++a) {
    long e = prim.exponent(static_cast<long>(a));
    if (e < 0) continue;
    raw[(a * (n / f) + static_cast<unsigned long>(e) * (n / prim.order())) % n] += 1;
  }
  return CycloValue::reduce(raw, n);
}

CycloValue gen_bernoulli(const DirichletChar& chi, unsigned long n) {
  const unsigned long M = chi.modulus();
  const std::size_t terms = n + 2;
  // Numerator: sum_a chi(a) e^{at} = sum_k (sum_a chi(a) a^k) t^k / k!.
  std::vector<CycloValue> num(terms);
  std::vector<CycloValue> chi_a(M + 1);
  for (unsigned long a = 1; a <= M; ++a) chi_a[a] = chi(static_cast<long>(a));
  for (std::size_t k = 0; k < terms; ++k) {
    CycloValue s;
    for (unsigned long a = 1; a <= M; ++a) {
      if (chi_a[a].is_zero()) continue;
      s += chi_a[a] * CycloValue(Rational(ipow(a, k)));
    }
    num[k] = s * CycloValue(Rational(1, factorial(k)));
  }
  // Denominator: (e^{Mt} - 1)/t = sum_k M^{k+1} t^k / (k+1)!.
  std::vector<Rational> den(terms);
  for (std::size_t k = 0; k < terms; ++k) den[k] = Rational(ipow(M, k + 1), factorial(k + 1));
  std::vector<CycloValue> q(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    CycloValue s = num[k];
    for (std::size_t j = 0; j < k; ++j) s -= q[j] * CycloValue(den[k - j]);
    q[k] = s * CycloValue(1 / den[0]);
  }
  return q[n] * CycloValue(Rational(factorial(n)));
}

CycloValue l_value_ratio(const DirichletChar& chi, unsigned long n) {
  if (n == 0) throw Error("domain_error", "l_value_ratio needs n >= 1");
  bool even = chi.is_even();
  if (even != (n % 2 == 0))
    throw Error("parity_error", "L-value not a Bernoulli period",
                {{"n", std::to_string(n)}, {"character", chi.to_spec()}});
  DirichletChar prim = chi.primitive();
  unsigned long f = prim.modulus();
  CycloValue b = gen_bernoulli(prim.conj(), n);
  // Primitive case: (-1)^{1-delta} tau(chi) B_{n, chi-bar} / (2 n f^n).
  Rational scale(even ? -1 : 1, 2 * n);
  scale /= Rational(ipow(f, n));
  CycloValue value = gauss_sum(prim) * b * CycloValue(scale);
  for (unsigned long p : prime_divisors(Integer(chi.modulus()))) {
    if (f % p == 0) continue;
    value *= CycloValue(1) - prim(static_cast<long>(p)) * CycloValue(Rational(1, ipow(p, n)));
  }
  return value;
}

}  // namespace spinl
