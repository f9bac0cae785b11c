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

#include "trineq/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "trineq/inequality.hpp"
#include "trineq/matrix_io.hpp"
#include "trineq/scalar_inequality.hpp"
#include "trineq/states.hpp"

namespace trineq::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

// `single` renders one bare object (the verify command); streams are always
// JSON arrays, even with one element.
void print_reports(const std::vector<InequalityReport>& reports, const std::string& format, std::ostream& out,
                   bool single = false) {
  if (format == "csv") {
    out << report_csv_header() << '\n';
    for (const auto& r : reports) {
      out << report_csv_row(r) << '\n';
    }
  } else if (single && reports.size() == 1) {
    out << report_to_json(reports.front()).dump(2) << '\n';
  } else {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      doc.push_back(report_to_json(r));
    }
    out << doc.dump(2) << '\n';
  }
}

int exit_code_for(const std::vector<InequalityReport>& reports) {
  const bool all_ok =
      std::all_of(reports.begin(), reports.end(), [](const InequalityReport& r) { return r.satisfied; });
  return all_ok ? kExitOk : kExitViolation;
}

std::vector<double> parse_positive_list(const std::string& csv, const char* what) {
  std::vector<double> values;
  std::stringstream stream(csv);
  std::string token;
  while (std::getline(stream, token, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      throw Error(std::string(what) + ": cannot parse '" + token + "' as a number");
    }
    while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) {
      ++used;
    }
    if (used != token.size() || !(v > 0.0) || !std::isfinite(v)) {
      throw Error(std::string(what) + ": '" + token + "' is not a positive real");
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw Error(std::string(what) + ": empty list");
  }
  return values;
}

// Grid values from a file holding either a JSON array or one CSV row.
std::vector<double> load_grid_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open grid file: " + path);
  }
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw ParseError("grid file is empty: " + path);
  }
  std::vector<double> values;
  if (text[first] == '[') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("grid file is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) {
      throw ParseError("grid file must hold a JSON array of numbers");
    }
    for (std::size_t i = 0; i < doc.size(); ++i) {
      if (!doc[i].is_number()) {
        throw ParseError("grid entry " + std::to_string(i) + " is not a number");
      }
      values.push_back(doc[i].get<double>());
    }
  } else {
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
      try {
        values.push_back(std::stod(token));
      } catch (const std::exception&) {
        throw ParseError("grid value '" + token + "' is not a number");
      }
    }
  }
  return values;
}

struct VerifyOptions {
  std::string input;
  int n = 0;
  int m = 0;
  double p = 0.0;
  std::optional<double> shift;
  double tolerance = kDefaultSlack;
  std::string format = "json";
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  const ComplexMatrix matrix = load_matrix_file(opt.input);
  const BlockPartition partition = make_partition(matrix.dim(), opt.n, opt.m);
  const InequalityReport report =
      opt.shift ? verify_hermitian(matrix, partition, opt.p, *opt.shift, opt.tolerance)
                : verify_density(matrix, partition, opt.p, opt.tolerance);
  print_reports({report}, opt.format, out, /*single=*/true);
  return exit_code_for({report});
}

struct ScanPOptions {
  std::string input;
  int n = 0;
  int m = 0;
  double p_min = 0.0;
  double p_max = 0.0;
  int steps = 0;
  std::string spacing = "linear";
  double tolerance = kDefaultSlack;
  std::string format = "json";
};

int cmd_scan_p(const ScanPOptions& opt, std::ostream& out) {
  if (!(opt.p_min > 0.0) || opt.p_max < opt.p_min) {
    throw Error("scan-p requires 0 < p-min <= p-max");
  }
  if (opt.steps < 1) {
    throw Error("scan-p requires steps >= 1");
  }
  if (opt.steps == 1 && opt.p_min != opt.p_max) {
    throw Error("steps = 1 requires p-min == p-max");
  }
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(opt.steps));
  for (int i = 0; i < opt.steps; ++i) {
    if (opt.steps == 1) {
      grid.push_back(opt.p_min);
    } else if (opt.spacing == "log") {
      const double f = static_cast<double>(i) / (opt.steps - 1);
      grid.push_back(opt.p_min * std::pow(opt.p_max / opt.p_min, f));
    } else {
      grid.push_back(opt.p_min + (opt.p_max - opt.p_min) * i / (opt.steps - 1));
    }
  }
  const ComplexMatrix matrix = load_matrix_file(opt.input);
  const BlockPartition partition = make_partition(matrix.dim(), opt.n, opt.m);
  const std::vector<InequalityReport> reports = scan_p(matrix, partition, grid, opt.tolerance);
  print_reports(reports, opt.format, out);
  return exit_code_for(reports);
}

struct ScalarOptions {
  std::vector<double> values;
  std::string input;
  int n = 0;
  int m = 0;
  double p = 0.0;
  std::optional<double> x;
  double tolerance = kDefaultSlack;
  std::string format = "json";
};

int cmd_scalar(const ScalarOptions& opt, std::ostream& out) {
  std::vector<double> values = opt.values;
  if (!opt.input.empty()) {
    if (!values.empty()) {
      throw Error("pass grid values either positionally or via --input, not both");
    }
    values = load_grid_values(opt.input);
  }
  const ProbabilityGrid grid(opt.n, opt.m, values);

  InequalityReport report;
  if (opt.x) {
    report = verify_shifted_scalar(grid, *opt.x, opt.p, opt.tolerance);
  } else {
    const auto [lhs, rhs] = vector_minkowski_sides(grid, opt.p);
    const BlockPartition partition{opt.n, opt.m, opt.n * opt.m, 0};
    report = make_report(opt.p, 0.0, partition, lhs, rhs, opt.tolerance);
  }

  if (opt.format == "csv") {
    out << report_csv_header() << '\n' << report_csv_row(report) << '\n';
    if (grid.normalized()) {
      out << "# mutual_information," << format_double(mutual_information(grid)) << '\n';
    } else {
      out << "# mutual_information omitted: grid is not normalized\n";
    }
  } else {
    nlohmann::ordered_json doc;
    doc["report"] = report_to_json(report);
    if (grid.normalized()) {
      doc["mutual_information"] = mutual_information(grid);
    } else {
      doc["mutual_information"] = nullptr;
      doc["note"] = "mutual information omitted: grid is not normalized";
    }
    out << doc.dump(2) << '\n';
  }
  return exit_code_for({report});
}

struct PartitionsOptions {
  std::string input;
  double p = 0.0;
  int max_padding = 0;
  double tolerance = kDefaultSlack;
  std::string format = "json";
};

int cmd_partitions(const PartitionsOptions& opt, std::ostream& out) {
  const ComplexMatrix matrix = load_matrix_file(opt.input);
  const std::vector<PartitionReport> scan = scan_partitions(matrix, opt.p, opt.max_padding, opt.tolerance);
  std::vector<InequalityReport> reports;
  reports.reserve(scan.size());
  for (const auto& entry : scan) {
    reports.push_back(entry.report);
  }
  print_reports(reports, opt.format, out);
  return exit_code_for(reports);
}

struct FuzzOptions {
  CampaignSpec spec;
  bool per_trial = false;
  std::string format = "json";
};

int cmd_fuzz(const FuzzOptions& opt, std::ostream& out) {
  const CampaignSummary summary = run_campaign(opt.spec, opt.per_trial);
  CampaignSpec spec = opt.spec;
  if (spec.mode == CampaignMode::density && spec.rank == 0) {
    spec.rank = spec.dim;  // the resolved default
  }

  if (opt.format == "csv") {
    out << "mode,dim,n,m,rank,trials,seed,shift_margin,tolerance,p_list,checks,violations,min_margin,"
           "argmin_seed,argmin_p\n";
    std::string p_list;
    for (std::size_t i = 0; i < spec.p_list.size(); ++i) {
      if (i > 0) {
        p_list += ';';
      }
      p_list += format_double(spec.p_list[i]);
    }
    out << to_string(spec.mode) << ',' << spec.dim << ',' << spec.n << ',' << spec.m << ',' << spec.rank << ','
        << spec.trials << ',' << spec.seed.value << ',' << format_double(spec.shift_margin) << ','
        << format_double(spec.tolerance) << ',' << p_list << ',' << summary.checks << ',' << summary.violations << ','
        << format_double(summary.min_margin) << ',' << summary.argmin_seed << ',' << format_double(summary.argmin_p)
        << '\n';
    if (opt.per_trial) {
      out << report_csv_header() << ",trial,seed\n";
      for (const auto& record : summary.records) {
        out << report_csv_row(record.report) << ',' << record.trial << ',' << record.seed << '\n';
      }
    }
  } else {
    nlohmann::ordered_json doc;
    doc["mode"] = to_string(spec.mode);
    doc["dim"] = spec.dim;
    doc["n"] = spec.n;
    doc["m"] = spec.m;
    doc["rank"] = spec.rank;
    doc["trials"] = spec.trials;
    doc["seed"] = spec.seed.value;
    doc["shift_margin"] = spec.shift_margin;
    doc["tolerance"] = spec.tolerance;
    doc["p_list"] = spec.p_list;
    doc["checks"] = summary.checks;
    doc["violations"] = summary.violations;
    doc["min_margin"] = summary.min_margin;
    doc["argmin_seed"] = summary.argmin_seed;
    doc["argmin_p"] = summary.argmin_p;
    if (opt.per_trial) {
      auto& records = doc["reports"] = nlohmann::ordered_json::array();
      for (const auto& record : summary.records) {
        nlohmann::ordered_json entry = report_to_json(record.report);
        entry["trial"] = record.trial;
        entry["seed"] = record.seed;
        records.push_back(std::move(entry));
      }
    }
    out << doc.dump(2) << '\n';
  }
  return summary.violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

const char* to_string(CampaignMode mode) {
  switch (mode) {
    case CampaignMode::density:
      return "density";
    case CampaignMode::hermitian:
      return "hermitian";
    case CampaignMode::scalar:
      return "scalar";
  }
  return "??";
}

CampaignSummary run_campaign(const CampaignSpec& spec, bool keep_records) {
  if (spec.trials < 1) {
    throw Error("fuzz campaign requires trials >= 1");
  }
  if (spec.p_list.empty()) {
    throw Error("fuzz campaign requires a nonempty p list");
  }
  for (double p : spec.p_list) {
    if (!(p > 0.0)) {
      throw ExponentOutOfRangeError("fuzz exponents must satisfy p > 0");
    }
  }
  const bool scalar_mode = spec.mode == CampaignMode::scalar;
  if (!scalar_mode && (spec.dim < 1 || spec.n * spec.m < spec.dim)) {
    throw Error("fuzz campaign requires dim >= 1 and n*m >= dim");
  }
  if (spec.n < 1 || spec.m < 1) {
    throw Error("fuzz campaign requires a partition with n, m >= 1");
  }
  const int rank = spec.rank == 0 ? spec.dim : spec.rank;
  if (spec.mode == CampaignMode::density && (rank < 1 || rank > spec.dim)) {
    throw BadRankError("fuzz rank must lie in 1..dim");
  }

  CampaignSummary summary;
  summary.trials = spec.trials;
  bool first = true;
  for (int trial = 0; trial < spec.trials; ++trial) {
    const RngSeed seed = derive_seed(spec.seed, static_cast<std::uint64_t>(trial));

    // One random input per trial, checked against every exponent.
    std::optional<ComplexMatrix> matrix;
    std::optional<ProbabilityGrid> grid;
    double shift = 0.0;
    switch (spec.mode) {
      case CampaignMode::density:
        matrix = random_density_matrix(spec.dim, rank, seed);
        break;
      case CampaignMode::hermitian:
        matrix = random_hermitian(spec.dim, 1.0, seed);
        shift = shift_to_nonnegative(*matrix, spec.shift_margin).second;
        break;
      case CampaignMode::scalar:
        grid = random_probability_grid(spec.n, spec.m, true, seed);
        break;
    }

    for (double p : spec.p_list) {
      InequalityReport report;
      if (spec.mode == CampaignMode::scalar) {
        report = verify_shifted_scalar(*grid, spec.shift_margin, p, spec.tolerance);
      } else {
        const BlockPartition partition = make_partition(spec.dim, spec.n, spec.m);
        report = spec.mode == CampaignMode::density ? verify_density(*matrix, partition, p, spec.tolerance)
                                                    : verify_hermitian(*matrix, partition, p, shift, spec.tolerance);
      }
      ++summary.checks;
      if (!report.satisfied) {
        ++summary.violations;
      }
      if (first || report.margin < summary.min_margin) {
        summary.min_margin = report.margin;
        summary.argmin_seed = seed.value;
        summary.argmin_p = p;
        first = false;
      }
      if (keep_records) {
        summary.records.push_back({trial, seed.value, report});
      }
    }
  }
  return summary;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"trineq - numerical checks of the block trace inequality for density and Hermitian matrices"};
  app.require_subcommand(1);

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "Check one matrix file against one exponent");
  verify->add_option("--input", verify_opt.input, "Matrix file (JSON)")->required();
  verify->add_option("--n", verify_opt.n, "Number of block rows/columns")->required()->check(CLI::PositiveNumber);
  verify->add_option("--m", verify_opt.m, "Block edge length")->required()->check(CLI::PositiveNumber);
  verify->add_option("--p", verify_opt.p, "Exponent (> 0)")->required()->check(CLI::PositiveNumber);
  verify->add_option("--shift", verify_opt.shift,
                     "Hermitian mode: check A + shift*I instead of requiring a density matrix");
  verify->add_option("--tolerance", verify_opt.tolerance, "Relative slack for the satisfied flag")->check(CLI::NonNegativeNumber);
  verify->add_option("--format", verify_opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  ScanPOptions scan_opt;
  CLI::App* scan = app.add_subcommand("scan-p", "Check one matrix over a grid of exponents");
  scan->add_option("--input", scan_opt.input, "Matrix file (JSON)")->required();
  scan->add_option("--n", scan_opt.n, "Number of block rows/columns")->required()->check(CLI::PositiveNumber);
  scan->add_option("--m", scan_opt.m, "Block edge length")->required()->check(CLI::PositiveNumber);
  scan->add_option("--p-min", scan_opt.p_min, "Smallest exponent")->required()->check(CLI::PositiveNumber);
  scan->add_option("--p-max", scan_opt.p_max, "Largest exponent")->required()->check(CLI::PositiveNumber);
  scan->add_option("--steps", scan_opt.steps, "Number of grid points")->required()->check(CLI::PositiveNumber);
  scan->add_option("--spacing", scan_opt.spacing, "Grid spacing")->check(CLI::IsMember({"linear", "log"}));
  scan->add_option("--tolerance", scan_opt.tolerance, "Relative slack for the satisfied flag")->check(CLI::NonNegativeNumber);
  scan->add_option("--format", scan_opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  FuzzOptions fuzz_opt;
  std::string fuzz_mode = "density";
  std::string fuzz_p_list;
  CLI::App* fuzz = app.add_subcommand("fuzz", "Seeded campaign of random matrices or grids");
  fuzz->add_option("--mode", fuzz_mode, "Input population")->check(CLI::IsMember({"density", "hermitian", "scalar"}));
  fuzz->add_option("--dim", fuzz_opt.spec.dim, "Matrix dimension (density/hermitian modes)");
  fuzz->add_option("--n", fuzz_opt.spec.n, "Number of block rows/columns")->required()->check(CLI::PositiveNumber);
  fuzz->add_option("--m", fuzz_opt.spec.m, "Block edge length")->required()->check(CLI::PositiveNumber);
  fuzz->add_option("--p-list", fuzz_p_list, "Comma-separated exponents")->required();
  fuzz->add_option("--trials", fuzz_opt.spec.trials, "Number of random inputs")->required()->check(CLI::PositiveNumber);
  fuzz->add_option("--rank", fuzz_opt.spec.rank, "Density-matrix rank (default: full)");
  fuzz->add_option("--seed", fuzz_opt.spec.seed.value, "Campaign seed");
  fuzz->add_option("--shift-margin", fuzz_opt.spec.shift_margin,
                   "Hermitian mode: margin past the PSD boundary; scalar mode: the grid shift x");
  fuzz->add_option("--tolerance", fuzz_opt.spec.tolerance, "Relative slack for the satisfied flag")->check(CLI::NonNegativeNumber);
  fuzz->add_flag("--per-trial", fuzz_opt.per_trial, "Also stream every per-trial report");
  fuzz->add_option("--format", fuzz_opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  ScalarOptions scalar_opt;
  CLI::App* scalar = app.add_subcommand("scalar", "Probability-vector form on a grid of nonnegative reals");
  scalar->add_option("values", scalar_opt.values, "Grid values, row-major (n*m of them)");
  scalar->add_option("--input", scalar_opt.input, "Grid file: JSON array or one CSV row");
  scalar->add_option("--n", scalar_opt.n, "Grid rows")->required()->check(CLI::PositiveNumber);
  scalar->add_option("--m", scalar_opt.m, "Grid columns")->required()->check(CLI::PositiveNumber);
  scalar->add_option("--p", scalar_opt.p, "Exponent (> 0)")->required()->check(CLI::PositiveNumber);
  scalar->add_option("--x", scalar_opt.x, "Check the shifted functions P1(x,p) <= P2(x,p) instead");
  scalar->add_option("--tolerance", scalar_opt.tolerance, "Relative slack for the satisfied flag")->check(CLI::NonNegativeNumber);
  scalar->add_option("--format", scalar_opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  PartitionsOptions partitions_opt;
  CLI::App* partitions = app.add_subcommand("partitions", "Check every block partition of one matrix");
  partitions->add_option("--input", partitions_opt.input, "Matrix file (JSON)")->required();
  partitions->add_option("--p", partitions_opt.p, "Exponent (> 0)")->required()->check(CLI::PositiveNumber);
  partitions->add_option("--max-padding", partitions_opt.max_padding, "Allow zero-padding up to this many rows")
      ->check(CLI::NonNegativeNumber);
  partitions->add_option("--tolerance", partitions_opt.tolerance, "Relative slack for the satisfied flag")->check(CLI::NonNegativeNumber);
  partitions->add_option("--format", partitions_opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // prints help text for --help, a diagnostic otherwise
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      return cmd_verify(verify_opt, out);
    }
    if (scan->parsed()) {
      return cmd_scan_p(scan_opt, out);
    }
    if (fuzz->parsed()) {
      if (fuzz_mode == "hermitian") {
        fuzz_opt.spec.mode = CampaignMode::hermitian;
      } else if (fuzz_mode == "scalar") {
        fuzz_opt.spec.mode = CampaignMode::scalar;
      }
      fuzz_opt.spec.p_list = parse_positive_list(fuzz_p_list, "--p-list");
      return cmd_fuzz(fuzz_opt, out);
    }
    if (scalar->parsed()) {
      return cmd_scalar(scalar_opt, out);
    }
    if (partitions->parsed()) {
      return cmd_partitions(partitions_opt, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace trineq::cli
