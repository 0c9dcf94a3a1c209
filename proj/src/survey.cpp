#include "cyclo4seq/survey.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cyclo4seq/lincomp.hpp"

namespace cyclo4seq {

SequenceSpec shift_labels(const SequenceSpec& spec, int c) {
  SequenceSpec out = spec;
  for (int k = 0; k < 4; ++k) {
    out.jvec[static_cast<std::size_t>(k)] = (spec.jvec[static_cast<std::size_t>(k)] + c) % 4;
    out.lvec[static_cast<std::size_t>(k)] = (spec.lvec[static_cast<std::size_t>(k)] + c) % 4;
  }
  return out;
}

SequenceSpec conjugate_spec(const SequenceSpec& spec) {
  SequenceSpec out = spec;
  std::swap(out.jvec[1], out.jvec[3]);
  std::swap(out.lvec[1], out.lvec[3]);
  return out;
}

std::pair<std::array<int, 4>, std::array<int, 4>> canonical_key(const SequenceSpec& spec) {
  std::pair<std::array<int, 4>, std::array<int, 4>> best{spec.jvec, spec.lvec};
  for (int c = 0; c < 4; ++c) {
    const SequenceSpec shifted = shift_labels(spec, c);
    for (const SequenceSpec& image : {shifted, conjugate_spec(shifted)}) {
      std::pair<std::array<int, 4>, std::array<int, 4>> key{image.jvec, image.lvec};
      if (key < best) best = key;
    }
  }
  return best;
}

std::vector<SurveyRecord> run_survey(int p, int g, const SurveyOptions& options) {
  const CyclotomicSystem sys = build_system(p, g);

  std::array<int, 4> perm{0, 1, 2, 3};
  std::vector<std::array<int, 4>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<SurveyRecord> records;
  records.reserve(perms.size() * perms.size());
  std::map<std::pair<std::array<int, 4>, std::array<int, 4>>, int> class_ids;
  for (const auto& jvec : perms) {
    for (const auto& lvec : perms) {
      SurveyRecord rec;
      rec.spec = SequenceSpec{p, g, jvec, lvec, Variant::standard};
      const QuaternarySequence seq = build_sequence(sys, rec.spec);
      const AcfProfile acf = acf_direct(seq);
      rec.value_multiset.assign(acf.values.begin() + 1, acf.values.end());
      std::sort(rec.value_multiset.begin(), rec.value_multiset.end());
      rec.max_norm_sq = acf.max_nontrivial_norm_sq;
      rec.lc_f4 = lc_f4_gcd(gray_map(seq)).L;
      if (options.with_lc_z4) rec.lc_z4 = lc_z4(seq).L;
      const auto key = canonical_key(rec.spec);
      const auto [it, inserted] = class_ids.emplace(key, static_cast<int>(class_ids.size()));
      rec.class_id = it->second;
      records.push_back(std::move(rec));
    }
  }
  return records;
}

namespace {

const SurveyRecord* find_spec(const std::vector<SurveyRecord>& records,
                              const std::array<int, 4>& jvec, const std::array<int, 4>& lvec) {
  for (const auto& rec : records)
    if (rec.spec.jvec == jvec && rec.spec.lvec == lvec) return &rec;
  return nullptr;
}

}  // namespace

OptimalityReport check_optimality(const std::vector<SurveyRecord>& records) {
  if (records.empty()) throw std::invalid_argument("check_optimality: empty survey");
  OptimalityReport report;
  report.min_max_norm_sq = records.front().max_norm_sq;
  for (const auto& rec : records)
    report.min_max_norm_sq = std::min(report.min_max_norm_sq, rec.max_norm_sq);

  const SequenceSpec eq6 = preset_spec(records.front().spec.p, records.front().spec.g, Preset::eq6);
  if (const SurveyRecord* rec = find_spec(records, eq6.jvec, eq6.lvec)) {
    report.eq6_value = rec->max_norm_sq;
    report.eq6_class_id = rec->class_id;
  } else {
    // degenerate surveys (subsets) fall back to the best record present
    report.eq6_value = report.min_max_norm_sq;
    report.eq6_class_id = records.front().class_id;
  }
  report.eq6_attains_min = (report.eq6_value == report.min_max_norm_sq);

  std::map<int, const SurveyRecord*> minimal_classes;
  for (const auto& rec : records)
    if (rec.max_norm_sq == report.min_max_norm_sq) minimal_classes.emplace(rec.class_id, &rec);
  for (const auto& [id, rec] : minimal_classes) {
    report.min_class_ids.push_back(id);
    report.min_examples.push_back(rec->spec);
  }

  report.note = report.eq6_attains_min
                    ? "empirical: no assignment pair beats the eq6 preset"
                    : "empirical: the survey minimum " + std::to_string(report.min_max_norm_sq) +
                          " beats the eq6 class value " + std::to_string(report.eq6_value);
  return report;
}

SymmetryReport check_symmetries(const std::vector<SurveyRecord>& records) {
  SymmetryReport report;
  std::map<std::pair<std::array<int, 4>, std::array<int, 4>>, const SurveyRecord*> by_spec;
  for (const auto& rec : records) by_spec[{rec.spec.jvec, rec.spec.lvec}] = &rec;
  auto lookup = [&](const SequenceSpec& spec) -> const SurveyRecord* {
    const auto it = by_spec.find({spec.jvec, spec.lvec});
    return it == by_spec.end() ? nullptr : it->second;
  };

  report.shift_multiset_ok = true;
  report.conjugation_multiset_ok = true;
  for (const auto& rec : records) {
    for (int c = 1; c < 4; ++c) {
      const SurveyRecord* other = lookup(shift_labels(rec.spec, c));
      if (!other) continue;
      if (other->value_multiset != rec.value_multiset) {
        report.shift_multiset_ok = false;
        report.violations.push_back("shift by " + std::to_string(c) + " changes the multiset of " +
                                    multiset_string(rec.value_multiset));
      }
    }
    if (const SurveyRecord* other = lookup(conjugate_spec(rec.spec))) {
      std::vector<GaussianInt> conj(rec.value_multiset.size());
      std::transform(rec.value_multiset.begin(), rec.value_multiset.end(), conj.begin(),
                     [](GaussianInt z) { return z.conj(); });
      std::sort(conj.begin(), conj.end());
      if (other->value_multiset != conj) {
        report.conjugation_multiset_ok = false;
        report.violations.push_back("conjugation does not conjugate the multiset");
      }
    }
  }

  std::map<int, unsigned long long> class_max;
  report.classes_share_max_norm = true;
  for (const auto& rec : records) {
    const auto [it, inserted] = class_max.emplace(rec.class_id, rec.max_norm_sq);
    if (!inserted && it->second != rec.max_norm_sq) {
      report.classes_share_max_norm = false;
      report.violations.push_back("class " + std::to_string(rec.class_id) +
                                  " mixes max|R|^2 values");
    }
  }
  report.class_count = static_cast<int>(class_max.size());
  return report;
}

std::string multiset_string(const std::vector<GaussianInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ";";
    out += to_string(values[i]);
  }
  return out;
}

}  // namespace cyclo4seq
