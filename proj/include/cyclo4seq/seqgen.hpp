#pragma once

#include <array>
#include <string>
#include <vector>

#include "cyclo4seq/cyclotomy.hpp"
#include "cyclo4seq/gf4.hpp"
#include "cyclo4seq/poly.hpp"
#include "cyclo4seq/z4.hpp"

namespace cyclo4seq {

enum class Variant { standard, zeroed_endpoints };
enum class Preset { eq6, eq7 };

// Assignment vectors for s(t): symbol k is placed on
// C_k = H_{0, jvec[k]} ∪ H_{1, lvec[k]}; position 0 carries 0 and position p
// carries 2 (both 0 under the zeroed_endpoints variant).
struct SequenceSpec {
  int p = 0;
  int g = 0;
  std::array<int, 4> jvec{};
  std::array<int, 4> lvec{};
  Variant variant = Variant::standard;

  friend bool operator==(const SequenceSpec& a, const SequenceSpec& b) {
    return a.p == b.p && a.g == b.g && a.jvec == b.jvec && a.lvec == b.lvec &&
           a.variant == b.variant;
  }
};

struct QuaternarySequence {
  int period = 0;
  std::vector<Z4> values;
};

struct F4Sequence {
  int period = 0;
  std::vector<GF4> values;
};

// The two named assignment presets:
//   eq6: jvec (0,1,2,3), lvec (1,2,3,0)
//   eq7: jvec (0,2,1,3), lvec (2,0,3,1)
SequenceSpec preset_spec(int p, int g, Preset which);

void validate_spec(const SequenceSpec& spec);  // throws std::domain_error

QuaternarySequence build_sequence(const SequenceSpec& spec);
QuaternarySequence build_sequence(const CyclotomicSystem& sys, const SequenceSpec& spec);

// Symbol support sets C_k ⊂ Z_2p (endpoints 0 and p excluded).
std::array<ZSubset, 4> symbol_classes(const CyclotomicSystem& sys, const SequenceSpec& spec);

// Gray interpretation of Z4 symbols in GF(4): 0->0, 1->1, 2->mu+1, 3->mu.
GF4 gray(Z4 s);
Z4 gray_inverse(GF4 u);
F4Sequence gray_map(const QuaternarySequence& seq);

// The Gray-mapped sequence assembled directly from class membership
// (cross-check target for gray_map ∘ build_sequence).
F4Sequence f4_sequence_from_classes(const CyclotomicSystem& sys, const SequenceSpec& spec);

Poly<GF4> generating_polynomial(const F4Sequence& seq);
Poly<Z4> generating_polynomial(const QuaternarySequence& seq);

std::string to_string(Variant v);
std::string to_string(Preset which);

}  // namespace cyclo4seq
