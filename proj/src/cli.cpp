#include "cyclo4seq/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclo4seq/emit.hpp"

namespace cyclo4seq {

namespace {

struct RunConfig {
  int p = 0;
  int g = 0;
  std::string preset;
  std::vector<int> jvec;
  std::vector<int> lvec;
  std::string variant = "standard";
  std::string ring;
  std::string format = "text";
  std::string out_path;
  bool diagnostics = false;
  bool with_lc_z4 = false;
  unsigned diag_limit = 24;
  std::uint64_t seed = kDefaultDrawSeed;
};

void validate_p(const RunConfig& cfg) {
  if (!is_prime(cfg.p) || cfg.p % 4 != 1)
    throw CLI::ValidationError("--p", "p must be a prime congruent to 1 mod 4");
}

SequenceSpec resolve_spec(RunConfig& cfg) {
  validate_p(cfg);
  if (cfg.g == 0) cfg.g = find_primitive_root(cfg.p);
  SequenceSpec spec;
  if (!cfg.preset.empty()) {
    if (!cfg.jvec.empty() || !cfg.lvec.empty())
      throw CLI::ValidationError("--preset", "give either --preset or --jvec/--lvec, not both");
    spec = preset_spec(cfg.p, cfg.g, cfg.preset == "eq6" ? Preset::eq6 : Preset::eq7);
  } else {
    if (cfg.jvec.size() != 4 || cfg.lvec.size() != 4)
      throw CLI::ValidationError("--jvec", "need --preset or both --jvec a,b,c,d and --lvec a,b,c,d");
    spec.p = cfg.p;
    spec.g = cfg.g;
    for (int k = 0; k < 4; ++k) {
      spec.jvec[static_cast<std::size_t>(k)] = cfg.jvec[static_cast<std::size_t>(k)];
      spec.lvec[static_cast<std::size_t>(k)] = cfg.lvec[static_cast<std::size_t>(k)];
    }
  }
  spec.variant = cfg.variant == "zeroed" ? Variant::zeroed_endpoints : Variant::standard;
  validate_spec(spec);
  return spec;
}

void write_output(const RunConfig& cfg, const std::string& payload, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << payload;
    return;
  }
  std::filesystem::path path(cfg.out_path);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("CYCLO4SEQ_OUT_DIR")) path = std::filesystem::path(dir) / path;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path.string());
  file << payload;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"quaternary sequences of period 2p from cyclotomic classes of order four"};
  app.require_subcommand(1);

  RunConfig cfg;

  auto add_spec_options = [&](CLI::App* cmd, bool with_variant) {
    cmd->add_option("--p", cfg.p, "prime, 1 mod 4")->required();
    cmd->add_option("--g", cfg.g, "primitive root mod p (default: smallest)");
    cmd->add_option("--preset", cfg.preset, "named assignment preset")
        ->check(CLI::IsMember({"eq6", "eq7"}));
    cmd->add_option("--jvec", cfg.jvec, "even-class assignment, e.g. 0,1,2,3")->delimiter(',');
    cmd->add_option("--lvec", cfg.lvec, "odd-class assignment, e.g. 1,2,3,0")->delimiter(',');
    if (with_variant)
      cmd->add_option("--variant", cfg.variant, "endpoint variant")
          ->check(CLI::IsMember({"standard", "zeroed"}));
  };

  CLI::App* gen = app.add_subcommand("gen", "emit a sequence");
  add_spec_options(gen, true);
  gen->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "text"}));
  gen->add_option("--out", cfg.out_path, "output path (stdout when absent)");

  CLI::App* acf = app.add_subcommand("acf", "emit the exact autocorrelation profile");
  add_spec_options(acf, true);
  acf->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "text"}));
  acf->add_option("--out", cfg.out_path);

  CLI::App* lc = app.add_subcommand("lc", "linear complexity over GF(4) or Z4");
  add_spec_options(lc, true);
  lc->add_option("--ring", cfg.ring, "coefficient ring")
      ->check(CLI::IsMember({"f4", "z4"}))
      ->required();
  lc->add_flag("--diagnostics", cfg.diagnostics, "run extension-field diagnostics");
  lc->add_option("--diag-limit", cfg.diag_limit, "max ord_p(4) for diagnostics");
  lc->add_option("--seed", cfg.seed, "seed for field element draws");
  lc->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
  lc->add_option("--out", cfg.out_path);

  CLI::App* numbers = app.add_subcommand("numbers", "cyclotomic numbers and quadratic partition");
  numbers->add_option("--p", cfg.p)->required();
  numbers->add_option("--g", cfg.g);
  numbers->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
  numbers->add_option("--out", cfg.out_path);

  CLI::App* survey = app.add_subcommand("survey", "all 576 assignment pairs");
  survey->add_option("--p", cfg.p)->required();
  survey->add_option("--g", cfg.g);
  survey->add_flag("--with-lc-z4", cfg.with_lc_z4, "also compute Z4 linear complexity per record");
  survey->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
  survey->add_option("--out", cfg.out_path);

  CLI::App* verify = app.add_subcommand("verify", "run the claim checks at p");
  verify->add_option("--p", cfg.p)->required();
  verify->add_option("--g", cfg.g);
  verify->add_option("--diag-limit", cfg.diag_limit);
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", cfg.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      const SequenceSpec spec = resolve_spec(cfg);
      const QuaternarySequence seq = build_sequence(spec);
      std::string payload;
      if (cfg.format == "json")
        payload = dump(gen_to_json(spec, seq));
      else if (cfg.format == "csv")
        payload = gen_to_csv(seq);
      else
        payload = gen_to_text(spec, seq);
      write_output(cfg, payload, out);
      return 0;
    }
    if (acf->parsed()) {
      const SequenceSpec spec = resolve_spec(cfg);
      const AcfProfile profile = acf_direct(build_sequence(spec));
      std::string payload;
      if (cfg.format == "json")
        payload = dump(acf_to_json(spec, profile));
      else if (cfg.format == "csv")
        payload = acf_to_csv(profile);
      else
        payload = acf_to_text(profile);
      write_output(cfg, payload, out);
      return 0;
    }
    if (lc->parsed()) {
      const SequenceSpec spec = resolve_spec(cfg);
      const CyclotomicSystem sys = build_system(spec.p, spec.g);
      const QuaternarySequence seq = build_sequence(sys, spec);
      Json diag_json;
      if (cfg.diagnostics)
        diag_json = diagnostics_to_json(run_root_diagnostics(sys, cfg.diag_limit, cfg.seed));
      else
        diag_json = nullptr;
      std::string payload;
      if (cfg.ring == "f4") {
        const LcResultF4 lc_result = lc_f4_gcd(gray_map(seq));
        if (cfg.format == "json")
          payload = dump(lc_to_json(spec, "f4", lc_result.L, poly_to_json(lc_result.poly),
                                    to_string(lc_result.method), diag_json));
        else
          payload = lc_to_text(spec, "f4", lc_result.L, to_string(lc_result.method));
      } else {
        const LcResultZ4 lc_result = lc_z4(seq);
        if (cfg.format == "json")
          payload = dump(lc_to_json(spec, "z4", lc_result.L, poly_to_json(lc_result.connection),
                                    to_string(lc_result.method), diag_json));
        else
          payload = lc_to_text(spec, "z4", lc_result.L, to_string(lc_result.method));
      }
      write_output(cfg, payload, out);
      return 0;
    }
    if (numbers->parsed()) {
      validate_p(cfg);
      if (cfg.g == 0) cfg.g = find_primitive_root(cfg.p);
      const CyclotomicSystem sys = build_system(cfg.p, cfg.g);
      const CyclotomicNumbers table = cyclotomic_numbers(sys);
      const QuadraticPartition partition = quadratic_partition(sys);
      std::string payload = cfg.format == "json"
                                ? dump(numbers_to_json(sys, table, partition))
                                : numbers_to_text(sys, table, partition);
      write_output(cfg, payload, out);
      return 0;
    }
    if (survey->parsed()) {
      validate_p(cfg);
      if (cfg.g == 0) cfg.g = find_primitive_root(cfg.p);
      SurveyOptions options;
      options.with_lc_z4 = cfg.with_lc_z4;
      const std::vector<SurveyRecord> records = run_survey(cfg.p, cfg.g, options);
      std::string payload = cfg.format == "json" ? dump(survey_to_json(cfg.p, cfg.g, records))
                                                 : survey_to_csv(records);
      write_output(cfg, payload, out);
      return 0;
    }
    if (verify->parsed()) {
      validate_p(cfg);
      const VerifyReport report = run_verify(cfg.p, cfg.g, cfg.diag_limit, cfg.seed);
      std::string payload =
          cfg.format == "json" ? dump(verify_to_json(report)) : verify_to_text(report);
      write_output(cfg, payload, out);
      return report.all_pass() ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace cyclo4seq
