#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclo4seq {

// GF(4) = F2[mu] / (mu^2 + mu + 1).
// Elements are stored as 2-bit codes b1*2 + b0 meaning b1*mu + b0:
//   0 -> 0, 1 -> 1, 2 -> mu, 3 -> mu+1.
class GF4 {
 public:
  constexpr GF4() = default;
  constexpr explicit GF4(unsigned code) : v_(static_cast<std::uint8_t>(code & 3u)) {}

  static constexpr GF4 zero() { return GF4(0); }
  static constexpr GF4 one() { return GF4(1); }
  static constexpr GF4 mu() { return GF4(2); }
  static constexpr GF4 mu1() { return GF4(3); }

  constexpr unsigned code() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr GF4 operator+(GF4 a, GF4 b) { return GF4(a.v_ ^ b.v_); }
  friend constexpr GF4 operator-(GF4 a, GF4 b) { return a + b; }  // characteristic 2

  friend constexpr GF4 operator*(GF4 a, GF4 b) {
    // (a1*mu + a0)(b1*mu + b0) with mu^2 = mu + 1
    const unsigned a1 = a.v_ >> 1, a0 = a.v_ & 1, b1 = b.v_ >> 1, b0 = b.v_ & 1;
    const unsigned m1 = (a1 & b0) ^ (a0 & b1) ^ (a1 & b1);
    const unsigned m0 = (a0 & b0) ^ (a1 & b1);
    return GF4((m1 << 1) | m0);
  }

  GF4 inv() const {
    if (v_ == 0) throw std::domain_error("GF4: inverse of zero");
    // 1^-1 = 1, mu^-1 = mu+1, (mu+1)^-1 = mu
    static constexpr std::uint8_t table[4] = {0, 1, 3, 2};
    return GF4(table[v_]);
  }

  GF4& operator+=(GF4 o) { v_ ^= o.v_; return *this; }
  GF4& operator*=(GF4 o) { *this = *this * o; return *this; }

  friend constexpr bool operator==(GF4 a, GF4 b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(GF4 a, GF4 b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(GF4 a, GF4 b) { return a.v_ < b.v_; }

 private:
  std::uint8_t v_ = 0;
};

inline std::string to_string(GF4 a) {
  static const char* names[4] = {"0", "1", "mu", "mu+1"};
  return names[a.code()];
}

}  // namespace cyclo4seq
