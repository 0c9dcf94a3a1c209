#include "cyclo4seq/verify.hpp"

#include "cyclo4seq/autocorr.hpp"
#include "cyclo4seq/lincomp.hpp"
#include "cyclo4seq/survey.hpp"

namespace cyclo4seq {

std::string to_string(CheckRow::Status s) {
  switch (s) {
    case CheckRow::Status::pass: return "pass";
    case CheckRow::Status::fail: return "fail";
    default: return "skip";
  }
}

namespace {

CheckRow row(const std::string& name, bool ok, const std::string& detail) {
  return {name, ok ? CheckRow::Status::pass : CheckRow::Status::fail, detail};
}

std::string join_values(const std::vector<GaussianInt>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += to_string(values[i]);
  }
  return s;
}

}  // namespace

VerifyReport run_verify(int p, int g, unsigned diag_limit, std::uint64_t seed) {
  if (g == 0) g = find_primitive_root(p);
  VerifyReport report;
  report.p = p;
  report.g = g;
  const CyclotomicSystem sys = build_system(p, g);
  const int n = 2 * p;

  {
    const ValueSetReport vs = verify_acf_value_sets(p, g);
    report.rows.push_back(row("acf-value-set", vs.value_set_ok,
                              std::string("eq6 case ") + (vs.case_id == 1 ? "5 mod 8" : "1 mod 8") +
                                  "; attained {" + join_values(vs.attained) + "}"));
    report.rows.push_back(row("acf-zeroed-uniform", vs.zeroed_uniform_ok,
                              "attained {" + join_values(vs.zeroed_attained) + "}" +
                                  (vs.zeroed_uniform_ok ? "" : "; |R(w)|^2 = 4 not uniform")));
  }
  {
    bool ok = true;
    for (Preset which : {Preset::eq6, Preset::eq7}) {
      const SequenceSpec spec = preset_spec(p, g, which);
      const AcfProfile direct = acf_direct(build_sequence(sys, spec));
      const AcfProfile assembled = acf_via_differences(sys, spec);
      ok = ok && direct.values == assembled.values;
    }
    report.rows.push_back(row("acf-cross-method", ok, "difference assembly vs direct, both presets"));
  }
  {
    const MaxNormReport mx = verify_acf_max_norm(p, g);
    report.rows.push_back(row(
        "acf-max-closed-form", mx.matches,
        "eq7 max|R|^2 = " + std::to_string(mx.attained) + ", closed form max " +
            std::to_string(mx.candidate_max) + " (x=" + std::to_string(mx.x) +
            ", y=" + std::to_string(mx.y) + ", " + mx.attaining_pattern + ")"));
  }
  {
    const F4Sequence u = gray_map(build_sequence(sys, preset_spec(p, g, Preset::eq6)));
    const LcResultF4 via_gcd = lc_f4_gcd(u);
    const LcResultF4 via_bm = lc_f4_bm(u);
    const int expected = (p % 8 == 1) ? n : (3 * p + 1) / 2;
    bool ok = via_gcd.L == expected && via_bm.L == expected;
    std::string detail = "L = " + std::to_string(via_gcd.L) + ", expected " +
                         std::to_string(expected) + ", bm agrees: " +
                         (via_gcd.L == via_bm.L ? "yes" : "no");
    if (p % 8 == 5) {
      const int deg_gcd = n - via_gcd.L;
      ok = ok && deg_gcd == (p - 1) / 2;
      detail += ", deg gcd = " + std::to_string(deg_gcd);
    }
    report.rows.push_back(row("lc-f4-eq6", ok, detail));
  }
  {
    const F4Sequence b = gray_map(build_sequence(sys, preset_spec(p, g, Preset::eq7)));
    const LcResultF4 via_gcd = lc_f4_gcd(b);
    const LcResultF4 via_bm = lc_f4_bm(b);
    const bool ok = via_gcd.L == n && via_bm.L == n;
    report.rows.push_back(row("lc-f4-eq7", ok,
                              "L = " + std::to_string(via_gcd.L) + ", expected " +
                                  std::to_string(n)));
  }
  for (Preset which : {Preset::eq6, Preset::eq7}) {
    const QuaternarySequence seq = build_sequence(sys, preset_spec(p, g, which));
    const LcResultZ4 lc = lc_z4(seq);
    bool ok = lc.L == n && z4_witness_valid(seq, lc.connection);
    // independent infeasibility certificate one degree below
    const Z4System below = connection_system(seq, lc.L - 1);
    auto inv_a = z4_smith_invariants(below.rows, below.cols, below.a);
    std::vector<std::uint8_t> aug = below.a;
    std::vector<std::uint8_t> with_b;
    with_b.reserve(static_cast<std::size_t>(below.rows) * (below.cols + 1));
    for (int r = 0; r < below.rows; ++r) {
      for (int c = 0; c < below.cols; ++c)
        with_b.push_back(below.a[static_cast<std::size_t>(r) * below.cols + c]);
      with_b.push_back(below.b[static_cast<std::size_t>(r)]);
    }
    auto inv_ab = z4_smith_invariants(below.rows, below.cols + 1, with_b);
    const bool certified =
        (2 * inv_a.first + inv_a.second) != (2 * inv_ab.first + inv_ab.second);
    ok = ok && certified;
    report.rows.push_back(row(std::string("lc-z4-") + to_string(which), ok,
                              "L = " + std::to_string(lc.L) + ", expected " + std::to_string(n) +
                                  ", witness valid, degree " + std::to_string(lc.L - 1) +
                                  " certified infeasible: " + (certified ? "yes" : "no")));
  }
  {
    const RootDiagnostics diag = run_root_diagnostics(sys, diag_limit, seed);
    if (!diag.ran) {
      report.rows.push_back({"root-diagnostics", CheckRow::Status::skip, diag.skip_reason});
    } else {
      std::string detail = "ext degree " + std::to_string(diag.ext_degree) + ", residue degree " +
                           std::to_string(diag.residue_degree) + ", roots " +
                           std::to_string(diag.root_count);
      report.rows.push_back(row("root-diagnostics", diag.all_ok(), detail));
    }
  }
  return report;
}

}  // namespace cyclo4seq
