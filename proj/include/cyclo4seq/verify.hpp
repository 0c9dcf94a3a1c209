#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo4seq/ext_field.hpp"

namespace cyclo4seq {

// Pass/fail table for the claims the library reproduces at a given p:
// ACF value sets, the zeroed-endpoint profile, the cross-method ACF check,
// the eq7 max closed form, GF(4) and Z4 linear complexity, and the
// extension-field diagnostics.
struct CheckRow {
  enum class Status { pass, fail, skip };
  std::string name;
  Status status = Status::fail;
  std::string detail;
};

struct VerifyReport {
  int p = 0;
  int g = 0;
  std::vector<CheckRow> rows;
  bool all_pass() const {
    for (const auto& row : rows)
      if (row.status == CheckRow::Status::fail) return false;
    return true;
  }
};

VerifyReport run_verify(int p, int g = 0, unsigned diag_limit = 24,
                        std::uint64_t seed = kDefaultDrawSeed);

std::string to_string(CheckRow::Status s);

}  // namespace cyclo4seq
