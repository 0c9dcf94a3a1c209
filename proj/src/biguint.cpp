#include "cyclo4seq/biguint.hpp"

#include <stdexcept>

namespace cyclo4seq {

namespace {
using u128 = unsigned __int128;
}

BigUInt::BigUInt(std::uint64_t v) {
  if (v) limbs_.push_back(v);
}

void BigUInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUInt BigUInt::pow_small(std::uint64_t base, unsigned exp) {
  BigUInt r(1);
  for (unsigned i = 0; i < exp; ++i) r.mul_small(base);
  return r;
}

void BigUInt::mul_small(std::uint64_t f) {
  std::uint64_t carry = 0;
  for (auto& limb : limbs_) {
    u128 t = static_cast<u128>(limb) * f + carry;
    limb = static_cast<std::uint64_t>(t);
    carry = static_cast<std::uint64_t>(t >> 64);
  }
  if (carry) limbs_.push_back(carry);
  trim();
}

void BigUInt::add_small(std::uint64_t a) {
  std::uint64_t carry = a;
  for (auto& limb : limbs_) {
    if (!carry) break;
    std::uint64_t s = limb + carry;
    carry = (s < limb) ? 1 : 0;
    limb = s;
  }
  if (carry) limbs_.push_back(carry);
}

void BigUInt::sub_small(std::uint64_t s) {
  std::uint64_t borrow = s;
  for (std::size_t i = 0; i < limbs_.size() && borrow; ++i) {
    std::uint64_t d = limbs_[i] - borrow;
    borrow = (d > limbs_[i]) ? 1 : 0;
    limbs_[i] = d;
  }
  if (borrow) throw std::underflow_error("BigUInt: negative result");
  trim();
}

std::uint64_t BigUInt::divmod_small(std::uint64_t d) {
  if (d == 0) throw std::domain_error("BigUInt: division by zero");
  u128 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    u128 cur = (rem << 64) | limbs_[i];
    limbs_[i] = static_cast<std::uint64_t>(cur / d);
    rem = cur % d;
  }
  trim();
  return static_cast<std::uint64_t>(rem);
}

std::uint64_t BigUInt::mod_small(std::uint64_t d) const {
  BigUInt copy = *this;
  return copy.divmod_small(d);
}

bool BigUInt::is_zero() const { return limbs_.empty(); }

std::size_t BigUInt::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint64_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 64;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigUInt::bit(std::size_t i) const {
  std::size_t limb = i / 64, off = i % 64;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> off) & 1u;
}

std::uint64_t BigUInt::to_u64() const {
  if (limbs_.size() > 1) throw std::overflow_error("BigUInt: does not fit in 64 bits");
  return limbs_.empty() ? 0 : limbs_[0];
}

std::string BigUInt::to_string() const {
  if (is_zero()) return "0";
  BigUInt copy = *this;
  std::string digits;
  while (!copy.is_zero()) {
    digits += static_cast<char>('0' + copy.divmod_small(10));
  }
  return std::string(digits.rbegin(), digits.rend());
}

}  // namespace cyclo4seq
