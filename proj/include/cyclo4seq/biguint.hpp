#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cyclo4seq {

// Minimal unsigned big integer on 64-bit limbs (little-endian).
// Covers exactly what extension-field exponent arithmetic needs:
// q^m, subtract one, divide by a small prime, and bit access for
// square-and-multiply exponentiation.
class BigUInt {
 public:
  BigUInt() = default;
  explicit BigUInt(std::uint64_t v);

  static BigUInt pow_small(std::uint64_t base, unsigned exp);

  void mul_small(std::uint64_t f);
  void add_small(std::uint64_t a);
  void sub_small(std::uint64_t s);              // requires *this >= s
  std::uint64_t divmod_small(std::uint64_t d);  // *this /= d, returns remainder
  std::uint64_t mod_small(std::uint64_t d) const;

  bool is_zero() const;
  std::size_t bit_length() const;
  bool bit(std::size_t i) const;

  std::uint64_t to_u64() const;  // throws std::overflow_error if it does not fit
  std::string to_string() const;

  friend bool operator==(const BigUInt& a, const BigUInt& b) { return a.limbs_ == b.limbs_; }

 private:
  void trim();
  std::vector<std::uint64_t> limbs_;  // no trailing zero limbs
};

}  // namespace cyclo4seq
