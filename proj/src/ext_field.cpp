#include "cyclo4seq/ext_field.hpp"

#include <stdexcept>

namespace cyclo4seq {

ExtField::ExtField(unsigned q, unsigned m) : q_(q), m_(m) {
  if (q != 2 && q != 4) throw std::domain_error("ExtField: base field size must be 2 or 4");
  if (m < 1) throw std::domain_error("ExtField: extension degree must be >= 1");
  modulus_ = find_irreducible();
}

ExtField build_ext_field(unsigned q, unsigned m) { return ExtField(q, m); }

BigUInt ExtField::order() const {
  BigUInt n = BigUInt::pow_small(q_, m_);
  n.sub_small(1);
  return n;
}

ExtField::Elem ExtField::zero() const { return Elem{std::vector<GF4>(m_)}; }

ExtField::Elem ExtField::one() const { return from_base(GF4::one()); }

ExtField::Elem ExtField::from_base(GF4 c) const {
  Elem e{std::vector<GF4>(m_)};
  e.c[0] = c;
  return e;
}

ExtField::Elem ExtField::x() const {
  if (m_ == 1) {
    // F_q[x]/(x - c): the class of x is the root c of the linear modulus.
    return from_base(modulus_.coeff(0));
  }
  Elem e{std::vector<GF4>(m_)};
  e.c[1] = GF4::one();
  return e;
}

bool ExtField::is_zero(const Elem& a) const {
  for (GF4 c : a.c)
    if (!c.is_zero()) return false;
  return true;
}

bool ExtField::is_one(const Elem& a) const {
  if (a.c[0] != GF4::one()) return false;
  for (std::size_t i = 1; i < a.c.size(); ++i)
    if (!a.c[i].is_zero()) return false;
  return true;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
  Elem r{std::vector<GF4>(m_)};
  for (unsigned i = 0; i < m_; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
  // schoolbook product then reduction by the monic modulus
  std::vector<GF4> prod(2 * m_ - 1);
  for (unsigned i = 0; i < m_; ++i) {
    if (a.c[i].is_zero()) continue;
    for (unsigned j = 0; j < m_; ++j) prod[i + j] += a.c[i] * b.c[j];
  }
  for (unsigned d = 2 * m_ - 2; d >= m_; --d) {
    const GF4 lead = prod[d];
    if (!lead.is_zero()) {
      prod[d] = GF4::zero();
      for (unsigned i = 0; i < m_; ++i) {
        prod[d - m_ + i] += lead * modulus_.coeff(i);
      }
    }
    if (d == m_) break;
  }
  Elem r{std::vector<GF4>(m_)};
  for (unsigned i = 0; i < m_; ++i) r.c[i] = prod[i];
  return r;
}

ExtField::Elem ExtField::pow(const Elem& a, std::uint64_t e) const {
  Elem result = one();
  Elem base = a;
  while (e) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

ExtField::Elem ExtField::pow(const Elem& a, const BigUInt& e) const {
  Elem result = one();
  const std::size_t bits = e.bit_length();
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (e.bit(i)) result = mul(result, a);
  }
  return result;
}

ExtField::Elem ExtField::eval(const Poly<GF4>& f, const Elem& at) const {
  Elem acc = zero();
  if (f.is_zero()) return acc;
  for (int i = *f.degree(); i >= 0; --i) {
    acc = mul(acc, at);
    acc = add(acc, from_base(f.coeff(static_cast<std::size_t>(i))));
  }
  return acc;
}

ExtField::Elem ExtField::random_element(std::mt19937_64& rng) const {
  Elem e{std::vector<GF4>(m_)};
  for (auto& c : e.c) c = GF4(static_cast<unsigned>(rng() % q_));
  return e;
}

Poly<GF4> ExtField::frobenius_pow(const Poly<GF4>& f, unsigned steps) const {
  // x^(q^steps) mod f by repeated q-th powers
  Poly<GF4> t = poly_mod(Poly<GF4>::monomial(1, GF4::one()), f);
  for (unsigned s = 0; s < steps; ++s) {
    t = poly_mod(t * t, f);
    if (q_ == 4) t = poly_mod(t * t, f);
  }
  return t;
}

bool ExtField::is_irreducible(const Poly<GF4>& f) const {
  const int m = *f.degree();
  if (m == 1) return true;
  const Poly<GF4> x = Poly<GF4>::monomial(1, GF4::one());
  // x^(q^m) == x (mod f), and for every prime d | m:
  // gcd(x^(q^(m/d)) - x, f) == 1
  if (frobenius_pow(f, static_cast<unsigned>(m)) != poly_mod(x, f)) return false;
  for (int d = 2; d <= m; ++d) {
    if (m % d != 0) continue;
    bool prime = true;
    for (int t = 2; t * t <= d; ++t)
      if (d % t == 0) prime = false;
    if (!prime) continue;
    Poly<GF4> diff = frobenius_pow(f, static_cast<unsigned>(m / d)) - poly_mod(x, f);
    if (diff.is_zero()) return false;
    Poly<GF4> g = poly_gcd(diff, f);
    if (g != Poly<GF4>::one()) return false;
  }
  return true;
}

Poly<GF4> ExtField::find_irreducible() const {
  // Sequential scan over monic candidates, low coefficient vectors first.
  // Deterministic, so a given (q, m) always yields the same field.
  for (std::uint64_t counter = 1;; ++counter) {
    std::vector<GF4> coeffs(m_ + 1);
    coeffs[m_] = GF4::one();
    std::uint64_t c = counter;
    for (unsigned i = 0; i < m_ && c; ++i) {
      coeffs[i] = GF4(static_cast<unsigned>(c % q_));
      c /= q_;
    }
    if (c) throw std::runtime_error("ExtField: no irreducible modulus found");
    if (coeffs[0].is_zero() && m_ > 1) continue;  // divisible by x
    Poly<GF4> candidate(std::move(coeffs));
    if (is_irreducible(candidate)) return candidate;
  }
}

ExtField::Elem find_root_of_unity(const ExtField& field, unsigned p, std::uint64_t seed) {
  BigUInt cofactor = field.order();
  if (cofactor.mod_small(p) != 0)
    throw std::invalid_argument("find_root_of_unity: p does not divide q^m - 1");
  cofactor.divmod_small(p);
  std::mt19937_64 rng(seed);
  for (;;) {
    ExtField::Elem zeta = field.random_element(rng);
    if (field.is_zero(zeta)) continue;
    ExtField::Elem alpha = field.pow(zeta, cofactor);
    if (!field.is_one(alpha)) return alpha;
  }
}

unsigned multiplicative_order(unsigned a, unsigned p) {
  if (a % p == 0) throw std::domain_error("multiplicative_order: a divisible by p");
  unsigned x = a % p;
  unsigned ord = 1;
  while (x != 1) {
    x = static_cast<unsigned>((static_cast<std::uint64_t>(x) * a) % p);
    ++ord;
    if (ord > p) throw std::runtime_error("multiplicative_order: not invertible");
  }
  return ord;
}

}  // namespace cyclo4seq
