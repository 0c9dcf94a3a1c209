#pragma once

#include <string>
#include <vector>

#include "cyclo4seq/cyclotomy.hpp"
#include "cyclo4seq/gaussian_int.hpp"
#include "cyclo4seq/seqgen.hpp"

namespace cyclo4seq {

// Exact periodic autocorrelation profile R(0)..R(N-1),
// R(w) = sum_n v(n) * conj(v(n+w)) with v(t) = i^s(t).
struct AcfProfile {
  int period = 0;
  std::vector<GaussianInt> values;
  unsigned long long max_nontrivial_norm_sq = 0;  // max over w != 0 of |R(w)|^2
};

AcfProfile acf_direct(const QuaternarySequence& seq);

// Same profile assembled from sixteen difference-function terms over the
// symbol classes. Each printed term d_w(X, Y) is evaluated with swapped
// arguments so the sum matches acf_direct: the characteristic-sum identity
// sum_t x(t) y(t+w) counts |Y ∩ (X + w)|, not |X ∩ (Y + w)|.
// Standard variant only.
AcfProfile acf_via_differences(const CyclotomicSystem& sys, const SequenceSpec& spec);
AcfProfile acf_via_differences(const SequenceSpec& spec);

// Value-set check for the eq6 preset: nontrivial ACF values must lie in
//   {-2±2i, ±2i, -2}   (p = 5 mod 8)
//   {-4, 2, -2, 0}     (p = 1 mod 8)
// plus the uniform |R(w)|^2 = 4 check for the zeroed-endpoints variant.
struct ValueSetReport {
  int p = 0;
  int g = 0;
  int case_id = 0;  // 1: p = 5 mod 8, 2: p = 1 mod 8
  bool value_set_ok = false;
  std::vector<int> offending_shifts;
  std::vector<GaussianInt> attained;  // distinct nontrivial values, sorted
  bool zeroed_uniform_ok = false;
  std::vector<int> zeroed_offending;
  std::vector<GaussianInt> zeroed_attained;
  bool pass() const { return value_set_ok && zeroed_uniform_ok; }
};

ValueSetReport verify_acf_value_sets(int p, int g = 0);

// Max-|R|^2 check for the eq7 preset against the closed form
//   max |-2 ± 2y ± 2i|   (p = 5 mod 8)
//   max |-4 ± 2y|        (p = 1 mod 8)
// evaluated over all sign choices with (x, y) from the quadratic partition.
struct MaxNormReport {
  int p = 0;
  int g = 0;
  unsigned long long attained = 0;  // max over w != 0 of |R(w)|^2, exact
  std::vector<unsigned long long> candidates;  // squared moduli per sign choice
  unsigned long long candidate_max = 0;
  bool matches = false;
  int x = 0;
  int y = 0;                        // pinned sign
  std::string attaining_pattern;    // which ± choice reaches the max
  bool pass() const { return matches; }
};

MaxNormReport verify_acf_max_norm(int p, int g = 0);

}  // namespace cyclo4seq
