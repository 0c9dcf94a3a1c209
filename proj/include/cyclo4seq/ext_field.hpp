#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cyclo4seq/biguint.hpp"
#include "cyclo4seq/gf4.hpp"
#include "cyclo4seq/poly.hpp"

namespace cyclo4seq {

inline constexpr std::uint64_t kDefaultDrawSeed = 123456789;

// GF(q^m) for q in {2, 4} as F_q[x] / (modulus), modulus a deterministically
// chosen irreducible of degree m. GF(2) is handled as the {0,1} subfield of
// GF(4), so one coefficient type covers both towers.
class ExtField {
 public:
  struct Elem {
    std::vector<GF4> c;  // length m, coefficient of x^i at index i
    friend bool operator==(const Elem& a, const Elem& b) { return a.c == b.c; }
    friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }
  };

  ExtField(unsigned q, unsigned m);

  unsigned q() const { return q_; }
  unsigned m() const { return m_; }
  const Poly<GF4>& modulus() const { return modulus_; }
  BigUInt order() const;  // q^m - 1

  Elem zero() const;
  Elem one() const;
  Elem from_base(GF4 c) const;
  Elem x() const;  // the residue class of x (equals from_base for m = 1)

  bool is_zero(const Elem& a) const;
  bool is_one(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, std::uint64_t e) const;
  Elem pow(const Elem& a, const BigUInt& e) const;

  // Evaluate a polynomial with base-field coefficients at a field element.
  Elem eval(const Poly<GF4>& f, const Elem& at) const;

  Elem random_element(std::mt19937_64& rng) const;

 private:
  Poly<GF4> find_irreducible() const;
  bool is_irreducible(const Poly<GF4>& f) const;
  Poly<GF4> frobenius_pow(const Poly<GF4>& f, unsigned steps) const;  // x^(q^steps) mod f

  unsigned q_;
  unsigned m_;
  Poly<GF4> modulus_;
};

ExtField build_ext_field(unsigned q, unsigned m);

// An element of multiplicative order exactly p (p prime, p | q^m - 1):
// draw zeta, raise to (q^m - 1)/p, retry while the result is 1.
ExtField::Elem find_root_of_unity(const ExtField& field, unsigned p,
                                  std::uint64_t seed = kDefaultDrawSeed);

// Multiplicative order of a modulo p (a not divisible by p).
unsigned multiplicative_order(unsigned a, unsigned p);

}  // namespace cyclo4seq
