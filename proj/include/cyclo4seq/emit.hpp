#pragma once

#include <string>

#include <json.hpp>

#include "cyclo4seq/autocorr.hpp"
#include "cyclo4seq/cyclotomy.hpp"
#include "cyclo4seq/lincomp.hpp"
#include "cyclo4seq/seqgen.hpp"
#include "cyclo4seq/survey.hpp"
#include "cyclo4seq/verify.hpp"

namespace cyclo4seq {

using Json = nlohmann::ordered_json;

// GF(4) polynomial coefficients as 2-bit codes (0, 1, mu -> 2, mu+1 -> 3),
// Z4 coefficients as residues; constant term first.
Json poly_to_json(const Poly<GF4>& poly);
Json poly_to_json(const Poly<Z4>& poly);

Json spec_to_json(const SequenceSpec& spec);

Json gen_to_json(const SequenceSpec& spec, const QuaternarySequence& seq);
std::string gen_to_csv(const QuaternarySequence& seq);
std::string gen_to_text(const SequenceSpec& spec, const QuaternarySequence& seq);

Json acf_to_json(const SequenceSpec& spec, const AcfProfile& acf);
std::string acf_to_csv(const AcfProfile& acf);
std::string acf_to_text(const AcfProfile& acf);

Json numbers_to_json(const CyclotomicSystem& sys, const CyclotomicNumbers& numbers,
                     const QuadraticPartition& partition);
std::string numbers_to_text(const CyclotomicSystem& sys, const CyclotomicNumbers& numbers,
                            const QuadraticPartition& partition);

Json lc_to_json(const SequenceSpec& spec, const std::string& ring, int L, const Json& poly_coeffs,
                const std::string& method, const Json& diagnostics);
std::string lc_to_text(const SequenceSpec& spec, const std::string& ring, int L,
                       const std::string& method);
Json diagnostics_to_json(const RootDiagnostics& diag);

Json survey_to_json(int p, int g, const std::vector<SurveyRecord>& records);
std::string survey_to_csv(const std::vector<SurveyRecord>& records);

Json verify_to_json(const VerifyReport& report);
std::string verify_to_text(const VerifyReport& report);

std::string vec4_string(const std::array<int, 4>& v);  // "0123"

}  // namespace cyclo4seq
