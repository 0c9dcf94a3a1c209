#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cyclo4seq/gf4.hpp"

namespace cyclo4seq {

// Dense polynomial over a coefficient ring F (GF4 or Z4 here).
// Trailing zeros are trimmed; the zero polynomial has degree nullopt,
// never a plain -1.
template <typename F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return constant(unit()); }
  static Poly constant(F v) { return Poly(std::vector<F>{v}); }
  static Poly monomial(int deg, F coeff) {
    std::vector<F> c(static_cast<std::size_t>(deg) + 1);
    c.back() = coeff;
    return Poly(std::move(c));
  }

  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }
  bool is_zero() const { return c_.empty(); }

  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(); }
  const std::vector<F>& coeffs() const { return c_; }
  F leading() const {
    if (c_.empty()) throw std::domain_error("Poly: leading coeff of zero polynomial");
    return c_.back();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<F> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<F> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == F()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly operator*(F s) const {
    std::vector<F> r(c_);
    for (auto& v : r) v *= s;
    return Poly(std::move(r));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  static F unit() { return F(1u); }
  void trim() {
    while (!c_.empty() && c_.back() == F()) c_.pop_back();
  }
  std::vector<F> c_;
};

// Long division; requires an invertible leading coefficient of b.
template <typename F>
Poly<F> poly_divmod(const Poly<F>& a, const Poly<F>& b, Poly<F>* rem_out) {
  if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
  const int db = *b.degree();
  const F lead_inv = b.leading().inv();
  std::vector<F> r(a.coeffs());
  std::vector<F> q;
  if (a.degree() && *a.degree() >= db) q.resize(static_cast<std::size_t>(*a.degree() - db) + 1);
  int dr = a.degree() ? *a.degree() : -1;
  while (dr >= db) {
    const F c = r[static_cast<std::size_t>(dr)] * lead_inv;
    q[static_cast<std::size_t>(dr - db)] = c;
    for (int i = 0; i <= db; ++i) {
      r[static_cast<std::size_t>(dr - db + i)] =
          r[static_cast<std::size_t>(dr - db + i)] - c * b.coeff(static_cast<std::size_t>(i));
    }
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == F()) --dr;
  }
  if (rem_out) {
    r.resize(static_cast<std::size_t>(dr + 1));
    *rem_out = Poly<F>(std::move(r));
  }
  return Poly<F>(std::move(q));
}

template <typename F>
Poly<F> poly_mod(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r;
  poly_divmod(a, b, &r);
  return r;
}

template <typename F>
Poly<F> make_monic(const Poly<F>& a) {
  if (a.is_zero()) return a;
  return a * a.leading().inv();
}

// Monic gcd over a field. gcd(f, 0) is the monic normalization of f.
template <typename F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("Poly: gcd(0, 0)");
  while (!b.is_zero()) {
    Poly<F> r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return make_monic(a);
}

template <typename F>
bool poly_divides(const Poly<F>& d, const Poly<F>& a) {
  if (a.is_zero()) return true;
  return poly_mod(a, d).is_zero();
}

// Formal derivative in characteristic 2: odd-index coefficients survive.
inline Poly<GF4> derivative(const Poly<GF4>& a) {
  if (a.is_zero() || *a.degree() == 0) return Poly<GF4>();
  std::vector<GF4> r(static_cast<std::size_t>(*a.degree()));
  for (std::size_t i = 1; i < r.size() + 1; ++i) {
    if (i & 1u) r[i - 1] = a.coeff(i);
  }
  return Poly<GF4>(std::move(r));
}

}  // namespace cyclo4seq
