#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclo4seq/emit.hpp"

namespace py = pybind11;
using namespace cyclo4seq;

namespace {

SequenceSpec make_spec(int p, int g, const std::string& preset, const std::vector<int>& jvec,
                       const std::vector<int>& lvec, const std::string& variant) {
  if (!is_prime(p) || p % 4 != 1)
    throw std::invalid_argument("p must be a prime congruent to 1 mod 4");
  if (g == 0) g = find_primitive_root(p);
  SequenceSpec spec;
  if (!preset.empty()) {
    if (preset != "eq6" && preset != "eq7") throw std::invalid_argument("preset must be eq6 or eq7");
    spec = preset_spec(p, g, preset == "eq6" ? Preset::eq6 : Preset::eq7);
  } else {
    if (jvec.size() != 4 || lvec.size() != 4)
      throw std::invalid_argument("need a preset or 4-entry jvec and lvec");
    spec.p = p;
    spec.g = g;
    for (int k = 0; k < 4; ++k) {
      spec.jvec[static_cast<std::size_t>(k)] = jvec[static_cast<std::size_t>(k)];
      spec.lvec[static_cast<std::size_t>(k)] = lvec[static_cast<std::size_t>(k)];
    }
  }
  spec.variant = variant == "zeroed" ? Variant::zeroed_endpoints : Variant::standard;
  validate_spec(spec);
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "quaternary sequences of period 2p from cyclotomic classes of order four";

  m.def(
      "gen_json",
      [](int p, int g, const std::string& preset, const std::vector<int>& jvec,
         const std::vector<int>& lvec, const std::string& variant) {
        const SequenceSpec spec = make_spec(p, g, preset, jvec, lvec, variant);
        return gen_to_json(spec, build_sequence(spec)).dump();
      },
      py::arg("p"), py::arg("g") = 0, py::arg("preset") = "", py::arg("jvec") = std::vector<int>{},
      py::arg("lvec") = std::vector<int>{}, py::arg("variant") = "standard");

  m.def(
      "acf_json",
      [](int p, int g, const std::string& preset, const std::vector<int>& jvec,
         const std::vector<int>& lvec, const std::string& variant) {
        const SequenceSpec spec = make_spec(p, g, preset, jvec, lvec, variant);
        return acf_to_json(spec, acf_direct(build_sequence(spec))).dump();
      },
      py::arg("p"), py::arg("g") = 0, py::arg("preset") = "", py::arg("jvec") = std::vector<int>{},
      py::arg("lvec") = std::vector<int>{}, py::arg("variant") = "standard");

  m.def(
      "lc_json",
      [](int p, const std::string& ring, int g, const std::string& preset,
         const std::vector<int>& jvec, const std::vector<int>& lvec, const std::string& variant,
         bool diagnostics) {
        const SequenceSpec spec = make_spec(p, g, preset, jvec, lvec, variant);
        const CyclotomicSystem sys = build_system(spec.p, spec.g);
        const QuaternarySequence seq = build_sequence(sys, spec);
        Json diag = nullptr;
        if (diagnostics) diag = diagnostics_to_json(run_root_diagnostics(sys));
        if (ring == "f4") {
          const LcResultF4 r = lc_f4_gcd(gray_map(seq));
          return lc_to_json(spec, "f4", r.L, poly_to_json(r.poly), to_string(r.method), diag)
              .dump();
        }
        if (ring != "z4") throw std::invalid_argument("ring must be f4 or z4");
        const LcResultZ4 r = lc_z4(seq);
        return lc_to_json(spec, "z4", r.L, poly_to_json(r.connection), to_string(r.method), diag)
            .dump();
      },
      py::arg("p"), py::arg("ring"), py::arg("g") = 0, py::arg("preset") = "",
      py::arg("jvec") = std::vector<int>{}, py::arg("lvec") = std::vector<int>{},
      py::arg("variant") = "standard", py::arg("diagnostics") = false);

  m.def(
      "numbers_json",
      [](int p, int g) {
        if (!is_prime(p) || p % 4 != 1)
          throw std::invalid_argument("p must be a prime congruent to 1 mod 4");
        if (g == 0) g = find_primitive_root(p);
        const CyclotomicSystem sys = build_system(p, g);
        return numbers_to_json(sys, cyclotomic_numbers(sys), quadratic_partition(sys)).dump();
      },
      py::arg("p"), py::arg("g") = 0);

  m.def(
      "survey_json",
      [](int p, int g, bool with_lc_z4) {
        if (!is_prime(p) || p % 4 != 1)
          throw std::invalid_argument("p must be a prime congruent to 1 mod 4");
        if (g == 0) g = find_primitive_root(p);
        SurveyOptions options;
        options.with_lc_z4 = with_lc_z4;
        return survey_to_json(p, g, run_survey(p, g, options)).dump();
      },
      py::arg("p"), py::arg("g") = 0, py::arg("with_lc_z4") = false);

  m.def(
      "verify_json",
      [](int p, int g, unsigned diag_limit) {
        if (!is_prime(p) || p % 4 != 1)
          throw std::invalid_argument("p must be a prime congruent to 1 mod 4");
        return verify_to_json(run_verify(p, g, diag_limit)).dump();
      },
      py::arg("p"), py::arg("g") = 0, py::arg("diag_limit") = 24u);

  m.def(
      "sequence_values",
      [](int p, int g, const std::string& preset, const std::vector<int>& jvec,
         const std::vector<int>& lvec, const std::string& variant) {
        const SequenceSpec spec = make_spec(p, g, preset, jvec, lvec, variant);
        const QuaternarySequence seq = build_sequence(spec);
        std::vector<int> values;
        values.reserve(seq.values.size());
        for (Z4 v : seq.values) values.push_back(static_cast<int>(v.value()));
        return values;
      },
      py::arg("p"), py::arg("g") = 0, py::arg("preset") = "", py::arg("jvec") = std::vector<int>{},
      py::arg("lvec") = std::vector<int>{}, py::arg("variant") = "standard");

  m.def(
      "acf_pairs",
      [](int p, int g, const std::string& preset, const std::vector<int>& jvec,
         const std::vector<int>& lvec, const std::string& variant) {
        const SequenceSpec spec = make_spec(p, g, preset, jvec, lvec, variant);
        const AcfProfile acf = acf_direct(build_sequence(spec));
        std::vector<std::pair<long long, long long>> pairs;
        pairs.reserve(acf.values.size());
        for (const GaussianInt& v : acf.values) pairs.emplace_back(v.re, v.im);
        return pairs;
      },
      py::arg("p"), py::arg("g") = 0, py::arg("preset") = "", py::arg("jvec") = std::vector<int>{},
      py::arg("lvec") = std::vector<int>{}, py::arg("variant") = "standard");

  m.def("find_primitive_root", &find_primitive_root, py::arg("p"));

  m.attr("__version__") = "0.1.0";
}
