#include "cyclo4seq/cyclotomy.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclo4seq {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

int pow_mod(long long base, long long exp, int mod) {
  long long r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return static_cast<int>(r);
}

bool is_primitive_root(int g, int p) {
  // g is primitive iff g^((p-1)/q) != 1 for every prime q | p-1
  int n = p - 1;
  int rest = n;
  for (int q = 2; static_cast<long long>(q) * q <= rest; ++q) {
    if (rest % q) continue;
    if (pow_mod(g, n / q, p) == 1) return false;
    while (rest % q == 0) rest /= q;
  }
  if (rest > 1 && pow_mod(g, n / rest, p) == 1) return false;
  return true;
}

}  // namespace

int find_primitive_root(int p) {
  if (!is_prime(p)) throw std::domain_error("find_primitive_root: p is not prime");
  if (p == 2) return 1;
  for (int g = 2; g < p; ++g)
    if (is_primitive_root(g, p)) return g;
  throw std::runtime_error("find_primitive_root: none found");
}

ZSubset::ZSubset(int modulus) : n_(modulus), bits_((modulus + 63) / 64) {}

ZSubset::ZSubset(int modulus, std::vector<int> elems) : ZSubset(modulus) {
  for (int x : elems) add(x);
}

void ZSubset::add(int x) {
  x = ((x % n_) + n_) % n_;
  auto& word = bits_[static_cast<std::size_t>(x) / 64];
  const std::uint64_t mask = 1ull << (x % 64);
  if (word & mask) return;
  word |= mask;
  elems_.insert(std::lower_bound(elems_.begin(), elems_.end(), x), x);
}

bool ZSubset::contains(int x) const {
  x = ((x % n_) + n_) % n_;
  return (bits_[static_cast<std::size_t>(x) / 64] >> (x % 64)) & 1u;
}

ZSubset ZSubset::united(const ZSubset& other) const {
  ZSubset r = *this;
  for (int x : other.elems_) r.add(x);
  return r;
}

ZSubset ZSubset::with(int x) const {
  ZSubset r = *this;
  r.add(x);
  return r;
}

int difference_count(const ZSubset& F, const ZSubset& E, int w) {
  // |F ∩ (E + w)|: walk the smaller set
  int count = 0;
  if (E.size() <= F.size()) {
    for (int e : E.elems())
      if (F.contains(e + w)) ++count;
  } else {
    for (int f : F.elems())
      if (E.contains(f - w)) ++count;
  }
  return count;
}

int CyclotomicSystem::class_index(int residue) const {
  residue = ((residue % p) + p) % p;
  if (residue == 0) throw std::domain_error("class_index: 0 has no cyclotomic class");
  return class_of[static_cast<std::size_t>(residue)];
}

CyclotomicSystem build_system(int p, int g) {
  if (!is_prime(p)) throw std::domain_error("build_system: p is not prime");
  if (p % 4 != 1) throw std::domain_error("build_system: p must be 1 mod 4");
  if (g <= 0 || g >= p || !is_primitive_root(g, p))
    throw std::domain_error("build_system: g is not a primitive root mod p");

  CyclotomicSystem sys{p, g, (p - 1) / 4, {ZSubset(p), ZSubset(p), ZSubset(p), ZSubset(p)},
                       {}, std::vector<std::int8_t>(static_cast<std::size_t>(p), -1)};
  int x = 1;
  for (int e = 0; e < p - 1; ++e) {
    const int k = e % 4;
    sys.cls[static_cast<std::size_t>(k)].add(x);
    sys.class_of[static_cast<std::size_t>(x)] = static_cast<std::int8_t>(k);
    x = static_cast<int>(static_cast<long long>(x) * g % p);
  }
  for (int parity = 0; parity < 2; ++parity)
    for (int l = 0; l < 4; ++l) sys.lift[parity][l] = ZSubset(2 * p);
  for (int w = 0; w < 2 * p; ++w) {
    if (w % p == 0) continue;
    const int l = sys.class_of[static_cast<std::size_t>(w % p)];
    sys.lift[w % 2][static_cast<std::size_t>(l)].add(w);
  }
  return sys;
}

CyclotomicNumbers cyclotomic_numbers(const CyclotomicSystem& sys) {
  CyclotomicNumbers out;
  for (int i = 0; i < 4; ++i) {
    for (int a : sys.cls[static_cast<std::size_t>(i)].elems()) {
      const int b = (a + 1) % sys.p;
      if (b == 0) continue;
      out.n[static_cast<std::size_t>(i)][static_cast<std::size_t>(sys.class_of[b])] += 1;
    }
  }
  return out;
}

QuadraticPartition quadratic_partition(const CyclotomicSystem& sys) {
  const int p = sys.p;
  int x = 0, y_abs = -1;
  for (int cx = 1; cx * cx <= p; cx += 2) {
    for (int sx : {cx, -cx}) {
      if (((sx % 4) + 4) % 4 != 1) continue;
      const int rest = p - sx * sx;
      if (rest < 0 || rest % 4 != 0) continue;
      int cy = 0;
      while (cy * cy < rest / 4) ++cy;
      if (cy * cy == rest / 4) {
        x = sx;
        y_abs = cy;
      }
    }
  }
  if (y_abs < 0) throw std::runtime_error("quadratic_partition: no representation found");

  // Pin the sign of y by matching (0,1) against its closed form:
  //   p = 5 (mod 8): 16*(0,1) = p + 1 + 2x - 8y
  //   p = 1 (mod 8): 16*(0,1) = p - 3 + 2x + 8y
  const CyclotomicNumbers cn = cyclotomic_numbers(sys);
  int y = 0;
  if (p % 8 == 5) {
    const int num = p + 1 + 2 * x - 16 * cn.at(0, 1);
    if (num % 8 != 0 || (num / 8 != y_abs && num / 8 != -y_abs))
      throw std::runtime_error("quadratic_partition: sign relation mismatch");
    y = num / 8;
  } else {
    const int num = 16 * cn.at(0, 1) - (p - 3 + 2 * x);
    if (num % 8 != 0 || (num / 8 != y_abs && num / 8 != -y_abs))
      throw std::runtime_error("quadratic_partition: sign relation mismatch");
    y = num / 8;
  }
  return {x, y};
}

int crt_difference_count(const ZSubset& F0, const ZSubset& F1, const ZSubset& E0,
                         const ZSubset& E1, int w, int p) {
  const int w0 = w % 2;
  const int w1 = w % p;
  if (w0 == 0 && w1 == 0)
    return difference_count(F0, E0, 0) + difference_count(F1, E1, 0);
  if (w0 == 0)
    return difference_count(F0, E0, w1) + difference_count(F1, E1, w1);
  if (w1 == 0)
    return difference_count(F0, E1, 0) + difference_count(F1, E0, 0);
  return difference_count(F0, E1, w1) + difference_count(F1, E0, w1);
}

int shifted_class_count(const CyclotomicSystem& sys, int j, int l, int u) {
  if (((u % sys.p) + sys.p) % sys.p == 0)
    throw std::domain_error("shifted_class_count: u must be a unit mod p");
  return difference_count(sys.cls[static_cast<std::size_t>(j % 4)],
                          sys.cls[static_cast<std::size_t>(l % 4)], u);
}

bool zero_hit(const CyclotomicSystem& sys, int j, int u) {
  return sys.cls[static_cast<std::size_t>(j % 4)].contains(-u);
}

bool zero_hit_predicted(const CyclotomicSystem& sys, int j, int u) {
  const int h = sys.class_index(u);
  if (sys.p % 8 == 1) return h == (j % 4);
  return h == (j + 2) % 4;
}

}  // namespace cyclo4seq
