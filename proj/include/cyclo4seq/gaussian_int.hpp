#pragma once

#include <cstdint>
#include <string>
#include <tuple>

namespace cyclo4seq {

// Exact Gaussian integer a + b*i. Autocorrelation values of a period-N
// sequence have |re|, |im| <= N, so 64-bit components are exact here.
struct GaussianInt {
  long long re = 0;
  long long im = 0;

  constexpr GaussianInt() = default;
  constexpr GaussianInt(long long r, long long i) : re(r), im(i) {}

  friend constexpr GaussianInt operator+(GaussianInt a, GaussianInt b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend constexpr GaussianInt operator-(GaussianInt a, GaussianInt b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend constexpr GaussianInt operator*(GaussianInt a, GaussianInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianInt& operator+=(GaussianInt o) { re += o.re; im += o.im; return *this; }

  constexpr GaussianInt conj() const { return {re, -im}; }
  constexpr unsigned long long norm_sq() const {
    return static_cast<unsigned long long>(re * re + im * im);
  }

  // i^k for k mod 4: 1, i, -1, -i
  static constexpr GaussianInt i_pow(unsigned k) {
    switch (k & 3u) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }

  friend constexpr bool operator==(GaussianInt a, GaussianInt b) {
    return a.re == b.re && a.im == b.im;
  }
  friend constexpr bool operator!=(GaussianInt a, GaussianInt b) { return !(a == b); }
  friend constexpr bool operator<(GaussianInt a, GaussianInt b) {
    return std::tie(a.re, a.im) < std::tie(b.re, b.im);
  }
};

// Canonical rendering "re+imi" / "re-imi", e.g. "-2+2i", "0-2i".
inline std::string to_string(GaussianInt z) {
  std::string s = std::to_string(z.re);
  s += (z.im < 0) ? "-" : "+";
  s += std::to_string(z.im < 0 ? -z.im : z.im);
  s += "i";
  return s;
}

}  // namespace cyclo4seq
