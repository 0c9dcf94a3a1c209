#pragma once

#include <cstdint>
#include <stdexcept>

namespace cyclo4seq {

// The ring Z/4Z. Units are {1,3}; 2 is the zero divisor (2*2 = 0).
class Z4 {
 public:
  constexpr Z4() = default;
  constexpr explicit Z4(unsigned v) : v_(static_cast<std::uint8_t>(v & 3u)) {}

  static constexpr Z4 from_int(long long v) { return Z4(static_cast<unsigned>(((v % 4) + 4) % 4)); }

  constexpr unsigned value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }
  constexpr bool is_unit() const { return (v_ & 1u) != 0; }

  friend constexpr Z4 operator+(Z4 a, Z4 b) { return Z4(a.v_ + b.v_); }
  friend constexpr Z4 operator-(Z4 a, Z4 b) { return Z4(a.v_ + 4u - b.v_); }
  friend constexpr Z4 operator*(Z4 a, Z4 b) { return Z4(a.v_ * b.v_); }
  constexpr Z4 operator-() const { return Z4(4u - v_); }

  Z4 inv() const {
    if (!is_unit()) throw std::domain_error("Z4: inverse of non-unit");
    return *this;  // 1*1 = 1, 3*3 = 9 = 1
  }

  Z4& operator+=(Z4 o) { v_ = (v_ + o.v_) & 3u; return *this; }
  Z4& operator-=(Z4 o) { v_ = (v_ + 4u - o.v_) & 3u; return *this; }
  Z4& operator*=(Z4 o) { v_ = (v_ * o.v_) & 3u; return *this; }

  friend constexpr bool operator==(Z4 a, Z4 b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Z4 a, Z4 b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(Z4 a, Z4 b) { return a.v_ < b.v_; }

 private:
  std::uint8_t v_ = 0;
};

}  // namespace cyclo4seq
