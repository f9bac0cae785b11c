// Copyright 2026 The trineq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "trineq/report.hpp"
#include "trineq/rng.hpp"

namespace trineq::cli {

// Exit codes, stable for scripting: 0 satisfied, 1 usage or input error,
// 2 inequality violation.

enum class CampaignMode { density, hermitian, scalar };

const char* to_string(CampaignMode mode);

/// A seeded fuzz campaign: `trials` random inputs checked against every
/// exponent in `p_list`. Trial t draws from seed XOR t, so campaigns are
/// reproducible and trivially parallelizable.
struct CampaignSpec {
  CampaignMode mode = CampaignMode::density;
  int dim = 0;
  int n = 0;
  int m = 0;
  std::vector<double> p_list;
  int trials = 0;
  int rank = 0;  // density mode; 0 means full rank
  RngSeed seed{0};
  double shift_margin = 0.1;  // hermitian mode: x = max(0, -lambda_min) + margin; scalar mode: the grid shift x
  double tolerance = kDefaultSlack;
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  InequalityReport report;
};

struct CampaignSummary {
  int trials = 0;
  int checks = 0;
  int violations = 0;
  double min_margin = 0.0;
  std::uint64_t argmin_seed = 0;
  double argmin_p = 0.0;
  std::vector<TrialRecord> records;  // populated only when requested
};

/// Runs the campaign; keep_records controls whether every per-trial report
/// is retained (the fuzz command's --per-trial stream).
CampaignSummary run_campaign(const CampaignSpec& spec, bool keep_records);

/// Entry point used by the `trineq` binary and by the CLI tests.
/// `args` excludes the program name. Reports go to `out`, diagnostics to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trineq::cli
