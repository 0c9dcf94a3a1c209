#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclo4seq/autocorr.hpp"
#include "cyclo4seq/seqgen.hpp"

namespace cyclo4seq {

// One record per (jvec, lvec) pair, ordered lexicographically.
struct SurveyRecord {
  SequenceSpec spec;
  std::vector<GaussianInt> value_multiset;  // R(w), w != 0, sorted
  unsigned long long max_norm_sq = 0;
  int lc_f4 = 0;
  std::optional<int> lc_z4;
  int class_id = 0;
};

struct SurveyOptions {
  bool with_lc_z4 = false;
};

// Spec symmetry group (order 8, exact ACF symmetries):
//  - label shift: add c to every jvec/lvec entry mod 4 (cyclic relabeling of
//    the H classes; realized on positions by scaling with the odd lift of g,
//    which fixes 0 and p)
//  - conjugation: swap the symbol-1 and symbol-3 assignments (pointwise
//    s -> (4 - s) mod 4, which conjugates every R(w))
SequenceSpec shift_labels(const SequenceSpec& spec, int c);
SequenceSpec conjugate_spec(const SequenceSpec& spec);

// Lexicographic minimum of (jvec, lvec) over the 8 group images.
std::pair<std::array<int, 4>, std::array<int, 4>> canonical_key(const SequenceSpec& spec);

std::vector<SurveyRecord> run_survey(int p, int g, const SurveyOptions& options = {});

// Empirical check of the "no assignment beats the eq6 preset" claim:
// compares the survey minimum of max|R|^2 with the eq6 class value.
struct OptimalityReport {
  unsigned long long min_max_norm_sq = 0;
  unsigned long long eq6_value = 0;
  int eq6_class_id = -1;
  bool eq6_attains_min = false;
  std::vector<int> min_class_ids;
  std::vector<SequenceSpec> min_examples;  // one spec per minimal class
  std::string note;                        // empirical statement of the outcome
};

OptimalityReport check_optimality(const std::vector<SurveyRecord>& records);

// Exact multiset relations under the group: label shifts preserve the
// multiset, conjugation maps it to the elementwise conjugate multiset.
struct SymmetryReport {
  bool shift_multiset_ok = false;
  bool conjugation_multiset_ok = false;
  bool classes_share_max_norm = false;
  int class_count = 0;
  std::vector<std::string> violations;
  bool all_ok() const {
    return shift_multiset_ok && conjugation_multiset_ok && classes_share_max_norm;
  }
};

SymmetryReport check_symmetries(const std::vector<SurveyRecord>& records);

// Canonical semicolon-joined rendering of the sorted value multiset.
std::string multiset_string(const std::vector<GaussianInt>& values);

}  // namespace cyclo4seq
