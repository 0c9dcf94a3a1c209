#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace cyclo4seq {

bool is_prime(int n);

// Smallest positive primitive root modulo a prime p.
int find_primitive_root(int p);

// A subset of Z_n with O(1) membership and a sorted element list.
class ZSubset {
 public:
  explicit ZSubset(int modulus = 1);
  ZSubset(int modulus, std::vector<int> elems);

  void add(int x);  // x taken mod modulus
  bool contains(int x) const;
  int modulus() const { return n_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elems() const { return elems_; }

  ZSubset united(const ZSubset& other) const;
  ZSubset with(int x) const;

 private:
  int n_;
  std::vector<int> elems_;          // sorted, deduplicated
  std::vector<std::uint64_t> bits_;
};

// d_w(F, E) = |F ∩ (E + w)| in Z_n.
int difference_count(const ZSubset& F, const ZSubset& E, int w);

// Cyclotomic classes of order four mod p, plus their CRT lifts into Z_2p:
// H_k = { g^(k+4t) mod p }, and lift[k][l] = { w in Z_2p : w = k (mod 2),
// (w mod p) in H_l }.
struct CyclotomicSystem {
  int p;
  int g;
  int R;                                       // (p-1)/4
  std::array<ZSubset, 4> cls;                  // subsets of Z_p
  std::array<std::array<ZSubset, 4>, 2> lift;  // subsets of Z_2p
  std::vector<std::int8_t> class_of;           // residue -> class index, -1 for 0

  int class_index(int residue) const;  // domain_error when residue = 0 mod p
};

CyclotomicSystem build_system(int p, int g);

// 4x4 table of (i,j) = |(H_i + 1) ∩ H_j| by direct enumeration.
struct CyclotomicNumbers {
  std::array<std::array<int, 4>, 4> n{};
  int at(int i, int j) const { return n[((i % 4) + 4) % 4][((j % 4) + 4) % 4]; }
};

CyclotomicNumbers cyclotomic_numbers(const CyclotomicSystem& sys);

// p = x^2 + 4 y^2 with x = 1 (mod 4); the sign of y is pinned by matching
// one brute-force cyclotomic number against its closed form.
struct QuadraticPartition {
  int x;
  int y;
};

QuadraticPartition quadratic_partition(const CyclotomicSystem& sys);

// d_w(F, E) computed from the CRT components per the four-case split
// (F = {0}xF0 ∪ {1}xF1 and likewise E, subsets of Z_p; w in Z_2p).
int crt_difference_count(const ZSubset& F0, const ZSubset& F1, const ZSubset& E0,
                         const ZSubset& E1, int w, int p);

// |H_j ∩ (H_l + u)| for a unit u; equals the cyclotomic number
// (h - l, j - l) where u lies in H_h.
int shifted_class_count(const CyclotomicSystem& sys, int j, int l, int u);

// Whether 0 ∈ H_j + u, and the closed-form prediction for it from the
// class of u and p mod 8.
bool zero_hit(const CyclotomicSystem& sys, int j, int u);
bool zero_hit_predicted(const CyclotomicSystem& sys, int j, int u);

}  // namespace cyclo4seq
