#include "cyclo4seq/emit.hpp"

#include <sstream>

namespace cyclo4seq {

std::string vec4_string(const std::array<int, 4>& v) {
  std::string s;
  for (int x : v) s += static_cast<char>('0' + x);
  return s;
}

Json poly_to_json(const Poly<GF4>& poly) {
  Json coeffs = Json::array();
  if (!poly.is_zero())
    for (int i = 0; i <= *poly.degree(); ++i)
      coeffs.push_back(poly.coeff(static_cast<std::size_t>(i)).code());
  return coeffs;
}

Json poly_to_json(const Poly<Z4>& poly) {
  Json coeffs = Json::array();
  if (!poly.is_zero())
    for (int i = 0; i <= *poly.degree(); ++i)
      coeffs.push_back(poly.coeff(static_cast<std::size_t>(i)).value());
  return coeffs;
}

Json spec_to_json(const SequenceSpec& spec) {
  Json j;
  j["p"] = spec.p;
  j["g"] = spec.g;
  j["jvec"] = spec.jvec;
  j["lvec"] = spec.lvec;
  j["variant"] = to_string(spec.variant);
  return j;
}

Json gen_to_json(const SequenceSpec& spec, const QuaternarySequence& seq) {
  Json j = spec_to_json(spec);
  Json values = Json::array();
  for (Z4 v : seq.values) values.push_back(v.value());
  j["values"] = std::move(values);
  return j;
}

std::string gen_to_csv(const QuaternarySequence& seq) {
  std::ostringstream out;
  out << "t,value\n";
  for (std::size_t t = 0; t < seq.values.size(); ++t)
    out << t << "," << seq.values[t].value() << "\n";
  return out.str();
}

std::string gen_to_text(const SequenceSpec& spec, const QuaternarySequence& seq) {
  std::ostringstream out;
  out << "p=" << spec.p << " g=" << spec.g << " jvec=" << vec4_string(spec.jvec)
      << " lvec=" << vec4_string(spec.lvec) << " variant=" << to_string(spec.variant) << "\n";
  for (std::size_t t = 0; t < seq.values.size(); ++t) {
    if (t) out << " ";
    out << seq.values[t].value();
  }
  out << "\n";
  return out.str();
}

Json acf_to_json(const SequenceSpec& spec, const AcfProfile& acf) {
  Json j = spec_to_json(spec);
  Json rows = Json::array();
  for (int w = 0; w < acf.period; ++w) {
    const GaussianInt v = acf.values[static_cast<std::size_t>(w)];
    rows.push_back({{"w", w}, {"re", v.re}, {"im", v.im}, {"norm_sq", v.norm_sq()}});
  }
  j["acf"] = std::move(rows);
  j["max_norm_sq"] = acf.max_nontrivial_norm_sq;
  return j;
}

std::string acf_to_csv(const AcfProfile& acf) {
  std::ostringstream out;
  out << "w,re,im,norm_sq\n";
  for (int w = 0; w < acf.period; ++w) {
    const GaussianInt v = acf.values[static_cast<std::size_t>(w)];
    out << w << "," << v.re << "," << v.im << "," << v.norm_sq() << "\n";
  }
  return out.str();
}

std::string acf_to_text(const AcfProfile& acf) {
  std::ostringstream out;
  out << "  w     R(w)   |R|^2\n";
  for (int w = 0; w < acf.period; ++w) {
    const GaussianInt v = acf.values[static_cast<std::size_t>(w)];
    std::string val = to_string(v);
    out << std::string(w < 10 ? 2 : (w < 100 ? 1 : 0), ' ') << w << "  ";
    out << val << std::string(val.size() < 9 ? 9 - val.size() : 1, ' ');
    out << v.norm_sq() << "\n";
  }
  return out.str();
}

Json numbers_to_json(const CyclotomicSystem& sys, const CyclotomicNumbers& numbers,
                     const QuadraticPartition& partition) {
  Json j;
  j["p"] = sys.p;
  j["g"] = sys.g;
  Json table = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int k = 0; k < 4; ++k) row.push_back(numbers.at(i, k));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  j["partition"] = {{"x", partition.x}, {"y", partition.y}};
  return j;
}

std::string numbers_to_text(const CyclotomicSystem& sys, const CyclotomicNumbers& numbers,
                            const QuadraticPartition& partition) {
  std::ostringstream out;
  out << "cyclotomic numbers of order 4, p=" << sys.p << ", g=" << sys.g << "\n";
  out << "(i,j)   j=0  j=1  j=2  j=3\n";
  for (int i = 0; i < 4; ++i) {
    out << " i=" << i << "  ";
    for (int k = 0; k < 4; ++k) {
      const std::string v = std::to_string(numbers.at(i, k));
      out << std::string(5 - v.size(), ' ') << v;
    }
    out << "\n";
  }
  out << "p = x^2 + 4y^2 with x=" << partition.x << ", y=" << partition.y << "\n";
  return out.str();
}

Json diagnostics_to_json(const RootDiagnostics& diag) {
  Json j;
  j["ran"] = diag.ran;
  if (!diag.ran) {
    j["skip_reason"] = diag.skip_reason;
    return j;
  }
  j["ext_degree"] = diag.ext_degree;
  j["residue_degree"] = diag.residue_degree;
  j["class_sum_identity_ok"] = diag.class_sum_identity_ok;
  j["aux_poly_identity_ok"] = diag.aux_poly_identity_ok;
  j["eval_decomposition_ok"] = diag.eval_decomposition_ok;
  j["derivative_identity_ok"] = diag.derivative_identity_ok;
  j["root_set_ok"] = diag.root_set_ok;
  j["root_count"] = diag.root_count;
  j["root_count_matches_gcd"] = diag.root_count_matches_gcd;
  j["simple_roots_ok"] = diag.simple_roots_ok;
  j["residue_field_ok"] = diag.residue_field_ok;
  j["all_ok"] = diag.all_ok();
  return j;
}

Json lc_to_json(const SequenceSpec& spec, const std::string& ring, int L, const Json& poly_coeffs,
                const std::string& method, const Json& diagnostics) {
  Json j;
  j["p"] = spec.p;
  j["g"] = spec.g;
  j["jvec"] = spec.jvec;
  j["lvec"] = spec.lvec;
  j["variant"] = to_string(spec.variant);
  j["ring"] = ring;
  j["L"] = L;
  j["poly_coeffs"] = poly_coeffs;
  j["method"] = method;
  j["diagnostics"] = diagnostics;
  return j;
}

std::string lc_to_text(const SequenceSpec& spec, const std::string& ring, int L,
                       const std::string& method) {
  std::ostringstream out;
  out << "p=" << spec.p << " g=" << spec.g << " ring=" << ring << " L=" << L
      << " method=" << method << "\n";
  return out.str();
}

Json survey_to_json(int p, int g, const std::vector<SurveyRecord>& records) {
  Json j;
  j["p"] = p;
  j["g"] = g;
  Json rows = Json::array();
  for (const auto& rec : records) {
    Json row;
    row["jvec"] = rec.spec.jvec;
    row["lvec"] = rec.spec.lvec;
    row["max_norm_sq"] = rec.max_norm_sq;
    row["lc_f4"] = rec.lc_f4;
    if (rec.lc_z4)
      row["lc_z4"] = *rec.lc_z4;
    else
      row["lc_z4"] = nullptr;
    row["class_id"] = rec.class_id;
    row["value_multiset"] = multiset_string(rec.value_multiset);
    rows.push_back(std::move(row));
  }
  j["records"] = std::move(rows);
  return j;
}

std::string survey_to_csv(const std::vector<SurveyRecord>& records) {
  std::ostringstream out;
  out << "jvec,lvec,max_norm_sq,lc_f4,lc_z4,class_id,value_multiset\n";
  for (const auto& rec : records) {
    out << vec4_string(rec.spec.jvec) << "," << vec4_string(rec.spec.lvec) << ","
        << rec.max_norm_sq << "," << rec.lc_f4 << ",";
    if (rec.lc_z4) out << *rec.lc_z4;
    out << "," << rec.class_id << "," << multiset_string(rec.value_multiset) << "\n";
  }
  return out.str();
}

Json verify_to_json(const VerifyReport& report) {
  Json j;
  j["p"] = report.p;
  j["g"] = report.g;
  Json rows = Json::array();
  for (const auto& row : report.rows)
    rows.push_back({{"name", row.name}, {"status", to_string(row.status)}, {"detail", row.detail}});
  j["checks"] = std::move(rows);
  j["ok"] = report.all_pass();
  return j;
}

std::string verify_to_text(const VerifyReport& report) {
  std::ostringstream out;
  out << "verify p=" << report.p << " g=" << report.g << "\n";
  for (const auto& row : report.rows) {
    std::string status = to_string(row.status);
    for (auto& ch : status) ch = static_cast<char>(ch - 'a' + 'A');
    out << status << std::string(6 - status.size(), ' ') << row.name;
    out << std::string(row.name.size() < 22 ? 22 - row.name.size() : 1, ' ');
    out << row.detail << "\n";
  }
  out << (report.all_pass() ? "all checks passed" : "some checks FAILED") << "\n";
  return out.str();
}

}  // namespace cyclo4seq
