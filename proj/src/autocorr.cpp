#include "cyclo4seq/autocorr.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cyclo4seq {

namespace {

void finish_profile(AcfProfile& profile) {
  profile.max_nontrivial_norm_sq = 0;
  for (std::size_t w = 1; w < profile.values.size(); ++w)
    profile.max_nontrivial_norm_sq =
        std::max(profile.max_nontrivial_norm_sq, profile.values[w].norm_sq());
}

}  // namespace

AcfProfile acf_direct(const QuaternarySequence& seq) {
  const int n = seq.period;
  AcfProfile profile{n, std::vector<GaussianInt>(static_cast<std::size_t>(n)), 0};
  for (int w = 0; w < n; ++w) {
    GaussianInt sum;
    for (int t = 0; t < n; ++t) {
      const unsigned diff = seq.values[static_cast<std::size_t>(t)].value() + 4u -
                            seq.values[static_cast<std::size_t>((t + w) % n)].value();
      sum += GaussianInt::i_pow(diff);
    }
    profile.values[static_cast<std::size_t>(w)] = sum;
  }
  finish_profile(profile);
  return profile;
}

AcfProfile acf_via_differences(const SequenceSpec& spec) {
  return acf_via_differences(build_system(spec.p, spec.g), spec);
}

AcfProfile acf_via_differences(const CyclotomicSystem& sys, const SequenceSpec& spec) {
  if (spec.variant != Variant::standard)
    throw std::invalid_argument(
        "acf_via_differences: decomposition is defined for the standard variant");
  const auto classes = symbol_classes(sys, spec);
  const ZSubset a0 = classes[0].with(0);        // symbol 0: C_0 ∪ {0}
  const ZSubset& a1 = classes[1];
  const ZSubset a2 = classes[2].with(sys.p);    // symbol 2: C_2 ∪ {p}
  const ZSubset& a3 = classes[3];
  const int n = 2 * sys.p;

  // term(X, Y) realizes the printed d_w(X, Y) via the characteristic-sum
  // identity, i.e. counts t with t in X and t + w in Y.
  AcfProfile profile{n, std::vector<GaussianInt>(static_cast<std::size_t>(n)), 0};
  for (int w = 0; w < n; ++w) {
    auto term = [&](const ZSubset& X, const ZSubset& Y) { return difference_count(Y, X, w); };
    const long long re = term(a0, a0) + term(a1, a1) + term(a2, a2) + term(a3, a3) -
                         term(a0, a2) - term(a2, a0) - term(a1, a3) - term(a3, a1);
    const long long im = term(a1, a0) + term(a3, a2) + term(a0, a3) + term(a2, a1) -
                         term(a1, a2) - term(a3, a0) - term(a0, a1) - term(a2, a3);
    profile.values[static_cast<std::size_t>(w)] = GaussianInt(re, im);
  }
  finish_profile(profile);
  return profile;
}

ValueSetReport verify_acf_value_sets(int p, int g) {
  if (g == 0) g = find_primitive_root(p);
  ValueSetReport report;
  report.p = p;
  report.g = g;
  report.case_id = (p % 8 == 5) ? 1 : 2;

  const CyclotomicSystem sys = build_system(p, g);
  SequenceSpec spec = preset_spec(p, g, Preset::eq6);

  std::set<GaussianInt> allowed;
  if (report.case_id == 1) {
    allowed = {{-2, 2}, {-2, -2}, {0, 2}, {0, -2}, {-2, 0}};
  } else {
    allowed = {{-4, 0}, {2, 0}, {-2, 0}, {0, 0}};
  }

  const AcfProfile acf = acf_direct(build_sequence(sys, spec));
  std::set<GaussianInt> attained;
  report.value_set_ok = true;
  for (int w = 1; w < acf.period; ++w) {
    const GaussianInt v = acf.values[static_cast<std::size_t>(w)];
    attained.insert(v);
    if (!allowed.count(v)) {
      report.value_set_ok = false;
      report.offending_shifts.push_back(w);
    }
  }
  report.attained.assign(attained.begin(), attained.end());

  spec.variant = Variant::zeroed_endpoints;
  const AcfProfile zeroed = acf_direct(build_sequence(sys, spec));
  std::set<GaussianInt> zeroed_attained;
  report.zeroed_uniform_ok = true;
  for (int w = 1; w < zeroed.period; ++w) {
    const GaussianInt v = zeroed.values[static_cast<std::size_t>(w)];
    zeroed_attained.insert(v);
    if (v.norm_sq() != 4) {
      report.zeroed_uniform_ok = false;
      report.zeroed_offending.push_back(w);
    }
  }
  report.zeroed_attained.assign(zeroed_attained.begin(), zeroed_attained.end());
  return report;
}

MaxNormReport verify_acf_max_norm(int p, int g) {
  if (g == 0) g = find_primitive_root(p);
  MaxNormReport report;
  report.p = p;
  report.g = g;

  const CyclotomicSystem sys = build_system(p, g);
  const QuadraticPartition qp = quadratic_partition(sys);
  report.x = qp.x;
  report.y = qp.y;

  const AcfProfile acf = acf_direct(build_sequence(sys, preset_spec(p, g, Preset::eq7)));
  report.attained = acf.max_nontrivial_norm_sq;

  // Enumerate both sign choices of the y term; the ±i term contributes +4
  // to the squared modulus regardless of its sign.
  const int y_abs = qp.y < 0 ? -qp.y : qp.y;
  for (int sign : {+1, -1}) {
    long long real_part = (p % 8 == 5) ? (-2 + 2 * sign * y_abs) : (-4 + 2 * sign * y_abs);
    unsigned long long norm = static_cast<unsigned long long>(real_part * real_part);
    if (p % 8 == 5) norm += 4;
    report.candidates.push_back(norm);
    if (norm >= report.candidate_max) {
      report.candidate_max = norm;
      report.attaining_pattern = std::string("y term ") + (sign > 0 ? "+" : "-") +
                                 std::to_string(2 * y_abs);
    }
  }
  report.matches = (report.attained == report.candidate_max);
  return report;
}

}  // namespace cyclo4seq
