#include "cyclo4seq/seqgen.hpp"

#include <stdexcept>

namespace cyclo4seq {

SequenceSpec preset_spec(int p, int g, Preset which) {
  SequenceSpec spec;
  spec.p = p;
  spec.g = g;
  if (which == Preset::eq6) {
    spec.jvec = {0, 1, 2, 3};
    spec.lvec = {1, 2, 3, 0};
  } else {
    spec.jvec = {0, 2, 1, 3};
    spec.lvec = {2, 0, 3, 1};
  }
  return spec;
}

void validate_spec(const SequenceSpec& spec) {
  auto check_perm = [](const std::array<int, 4>& v, const char* name) {
    unsigned seen = 0;
    for (int x : v) {
      if (x < 0 || x > 3) throw std::domain_error(std::string(name) + ": entries must be 0..3");
      seen |= 1u << x;
    }
    if (seen != 0xF) throw std::domain_error(std::string(name) + ": not a permutation of 0..3");
  };
  check_perm(spec.jvec, "jvec");
  check_perm(spec.lvec, "lvec");
}

QuaternarySequence build_sequence(const SequenceSpec& spec) {
  return build_sequence(build_system(spec.p, spec.g), spec);
}

QuaternarySequence build_sequence(const CyclotomicSystem& sys, const SequenceSpec& spec) {
  validate_spec(spec);
  const int n = 2 * sys.p;
  QuaternarySequence seq{n, std::vector<Z4>(static_cast<std::size_t>(n))};
  seq.values[0] = Z4(0);
  seq.values[static_cast<std::size_t>(sys.p)] =
      spec.variant == Variant::zeroed_endpoints ? Z4(0) : Z4(2);
  for (int k = 0; k < 4; ++k) {
    for (int t : sys.lift[0][static_cast<std::size_t>(spec.jvec[static_cast<std::size_t>(k)])].elems())
      seq.values[static_cast<std::size_t>(t)] = Z4(static_cast<unsigned>(k));
    for (int t : sys.lift[1][static_cast<std::size_t>(spec.lvec[static_cast<std::size_t>(k)])].elems())
      seq.values[static_cast<std::size_t>(t)] = Z4(static_cast<unsigned>(k));
  }
  return seq;
}

std::array<ZSubset, 4> symbol_classes(const CyclotomicSystem& sys, const SequenceSpec& spec) {
  validate_spec(spec);
  std::array<ZSubset, 4> out{ZSubset(2 * sys.p), ZSubset(2 * sys.p), ZSubset(2 * sys.p),
                             ZSubset(2 * sys.p)};
  for (int k = 0; k < 4; ++k) {
    out[static_cast<std::size_t>(k)] =
        sys.lift[0][static_cast<std::size_t>(spec.jvec[static_cast<std::size_t>(k)])].united(
            sys.lift[1][static_cast<std::size_t>(spec.lvec[static_cast<std::size_t>(k)])]);
  }
  return out;
}

GF4 gray(Z4 s) {
  static constexpr unsigned table[4] = {0, 1, 3, 2};  // 0, 1, mu+1, mu
  return GF4(table[s.value()]);
}

Z4 gray_inverse(GF4 u) {
  static constexpr unsigned table[4] = {0, 1, 3, 2};
  return Z4(table[u.code()]);
}

F4Sequence gray_map(const QuaternarySequence& seq) {
  F4Sequence out{seq.period, std::vector<GF4>(seq.values.size())};
  for (std::size_t i = 0; i < seq.values.size(); ++i) out.values[i] = gray(seq.values[i]);
  return out;
}

F4Sequence f4_sequence_from_classes(const CyclotomicSystem& sys, const SequenceSpec& spec) {
  const auto classes = symbol_classes(sys, spec);
  const int n = 2 * sys.p;
  F4Sequence out{n, std::vector<GF4>(static_cast<std::size_t>(n))};
  out.values[0] = GF4::zero();
  out.values[static_cast<std::size_t>(sys.p)] =
      spec.variant == Variant::zeroed_endpoints ? GF4::zero() : GF4::mu1();
  for (int k = 0; k < 4; ++k)
    for (int t : classes[static_cast<std::size_t>(k)].elems())
      out.values[static_cast<std::size_t>(t)] = gray(Z4(static_cast<unsigned>(k)));
  return out;
}

Poly<GF4> generating_polynomial(const F4Sequence& seq) {
  return Poly<GF4>(seq.values);
}

Poly<Z4> generating_polynomial(const QuaternarySequence& seq) {
  return Poly<Z4>(seq.values);
}

std::string to_string(Variant v) {
  return v == Variant::standard ? "standard" : "zeroed";
}

std::string to_string(Preset which) { return which == Preset::eq6 ? "eq6" : "eq7"; }

}  // namespace cyclo4seq
