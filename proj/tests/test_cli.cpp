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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "trineq/cli.hpp"
#include "trineq/matrix_io.hpp"
#include "trineq/states.hpp"

#include "test_helpers.hpp"

using namespace trineq;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  RunResult result;
  result.exit_code = cli::run(args, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

class TempFile {
 public:
  explicit TempFile(const std::string& stem) {
    path_ = (std::filesystem::temp_directory_path() / ("trineq_" + stem + "_" + std::to_string(counter_++))).string();
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  const std::string& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::string path_;
};

TempFile write_matrix(const std::string& stem, const ComplexMatrix& m) {
  TempFile file(stem);
  save_matrix_file(m, file.path());
  return file;
}

}  // namespace

TEST_CASE("verify: Bell state values and exit code") {
  const TempFile file = write_matrix("bell", trineq::testing::bell_state());
  const RunResult result = run_cli({"verify", "--input", file.path(), "--n", "2", "--m", "2", "--p", "2"});
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.out);
  CHECK(doc["lhs"].get<double>() == doctest::Approx(0.70711).epsilon(1e-4));
  CHECK(doc["rhs"].get<double>() == doctest::Approx(1.41421).epsilon(1e-4));
  CHECK(doc["direction"] == "LE");
  CHECK(doc["satisfied"] == true);
}

TEST_CASE("verify: p = 1 is an equality report") {
  const TempFile file = write_matrix("mixed", maximally_mixed(4));
  const RunResult result = run_cli({"verify", "--input", file.path(), "--n", "2", "--m", "2", "--p", "1"});
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.out);
  CHECK(doc["direction"] == "EQ");
  CHECK(std::abs(doc["lhs"].get<double>() - doc["rhs"].get<double>()) <= 1e-10);
}

TEST_CASE("verify: non-PSD input without --shift exits 1 with a diagnostic") {
  const TempFile file = write_matrix("indefinite", trineq::testing::diagonal({1.5, -0.5, 0.0, 0.0}));
  const RunResult result = run_cli({"verify", "--input", file.path(), "--n", "2", "--m", "2", "--p", "2"});
  CHECK(result.exit_code == 1);
  CHECK(result.err.find("positive semidefinite") != std::string::npos);

  // the same matrix passes in Hermitian mode once shifted past its minimum eigenvalue
  const RunResult shifted =
      run_cli({"verify", "--input", file.path(), "--n", "2", "--m", "2", "--p", "2", "--shift", "0.6"});
  CHECK(shifted.exit_code == 0);
}

TEST_CASE("verify: partitions larger than the matrix pad transparently") {
  const TempFile file = write_matrix("qutrit", random_density_matrix(3, 3, RngSeed{77}));
  const RunResult result = run_cli({"verify", "--input", file.path(), "--n", "2", "--m", "2", "--p", "2"});
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.out);
  CHECK(doc["padding"].get<int>() == 1);
  CHECK(doc["satisfied"] == true);
}

TEST_CASE("verify: missing file and bad flags exit 1") {
  CHECK(run_cli({"verify", "--input", "/nonexistent.json", "--n", "2", "--m", "2", "--p", "2"}).exit_code == 1);
  CHECK(run_cli({"verify", "--n", "2"}).exit_code == 1);
  const TempFile file = write_matrix("mixed", maximally_mixed(4));
  CHECK(run_cli({"verify", "--input", file.path(), "--n", "3", "--m", "1", "--p", "2"}).exit_code == 1);
}

TEST_CASE("scan-p: Bell margins grow with p") {
  const TempFile file = write_matrix("bell", trineq::testing::bell_state());
  const RunResult result = run_cli({"scan-p", "--input", file.path(), "--n", "2", "--m", "2", "--p-min", "1",
                                    "--p-max", "3", "--steps", "3"});
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.out);
  REQUIRE(doc.size() == 3);
  CHECK(std::abs(doc[0]["margin"].get<double>()) <= 1e-10);
  CHECK(doc[1]["margin"].get<double>() == doctest::Approx(0.7071067811865476).epsilon(1e-9));
  CHECK(doc[2]["margin"].get<double>() == doctest::Approx(0.9574405270207628).epsilon(1e-9));
  CHECK(doc[0]["margin"].get<double>() < doc[1]["margin"].get<double>());
  CHECK(doc[1]["margin"].get<double>() < doc[2]["margin"].get<double>());
}

TEST_CASE("scan-p: flag contract") {
  const TempFile file = write_matrix("mixed", maximally_mixed(4));
  // steps = 1 demands p-min == p-max
  CHECK(run_cli({"scan-p", "--input", file.path(), "--n", "2", "--m", "2", "--p-min", "1", "--p-max", "2", "--steps",
                 "1"}).exit_code == 1);
  const RunResult single = run_cli(
      {"scan-p", "--input", file.path(), "--n", "2", "--m", "2", "--p-min", "2", "--p-max", "2", "--steps", "1"});
  REQUIRE(single.exit_code == 0);
  const auto single_doc = nlohmann::json::parse(single.out);
  REQUIRE(single_doc.size() == 1);
  CHECK(single_doc[0]["p"].get<double>() == 2.0);
  // log spacing hits the geometric midpoint
  const RunResult logspace = run_cli({"scan-p", "--input", file.path(), "--n", "2", "--m", "2", "--p-min", "1",
                                      "--p-max", "4", "--steps", "3", "--spacing", "log"});
  REQUIRE(logspace.exit_code == 0);
  CHECK(nlohmann::json::parse(logspace.out)[1]["p"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("scalar: the worked 2x2 example with mutual information") {
  const RunResult result =
      run_cli({"scalar", "--n", "2", "--m", "2", "--p", "2", "0.4", "0.3", "0.2", "0.1"});
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.out);
  CHECK(doc["report"]["lhs"].get<double>() == doctest::Approx(0.72111).epsilon(1e-4));
  CHECK(doc["report"]["rhs"].get<double>() == doctest::Approx(0.72361).epsilon(1e-4));
  CHECK(doc["mutual_information"].get<double>() == doctest::Approx(0.0040217432304824).epsilon(1e-6));
}

TEST_CASE("scalar: unnormalized grids omit mutual information with a note") {
  const RunResult result = run_cli({"scalar", "--n", "2", "--m", "2", "--p", "2", "4", "3", "2", "1"});
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.out);
  CHECK(doc["mutual_information"].is_null());
  CHECK(doc.contains("note"));
  CHECK(doc["report"]["satisfied"] == true);
}

TEST_CASE("scalar: negative values exit 1") {
  CHECK(run_cli({"scalar", "--n", "2", "--m", "2", "--p", "2", "0.5", "-0.1", "0.4", "0.2"}).exit_code == 1);
}

TEST_CASE("scalar: shifted form and file input") {
  const RunResult shifted =
      run_cli({"scalar", "--n", "2", "--m", "2", "--p", "0.5", "--x", "0.5", "0.4", "0.3", "0.2", "0.1"});
  REQUIRE(shifted.exit_code == 0);
  const auto doc = nlohmann::json::parse(shifted.out);
  CHECK(doc["report"]["direction"] == "GE");
  CHECK(doc["report"]["satisfied"] == true);
  CHECK(doc["report"]["x"].get<double>() == 0.5);

  TempFile json_grid("grid_json");
  {
    std::ofstream out(json_grid.path());
    out << "[0.4, 0.3, 0.2, 0.1]";
  }
  const RunResult from_json = run_cli({"scalar", "--n", "2", "--m", "2", "--p", "2", "--input", json_grid.path()});
  CHECK(from_json.exit_code == 0);

  TempFile csv_grid("grid_csv");
  {
    std::ofstream out(csv_grid.path());
    out << "0.4,0.3,0.2,0.1\n";
  }
  const RunResult from_csv = run_cli({"scalar", "--n", "2", "--m", "2", "--p", "2", "--input", csv_grid.path()});
  CHECK(from_csv.exit_code == 0);
  CHECK(nlohmann::json::parse(from_csv.out)["report"]["lhs"] == nlohmann::json::parse(from_json.out)["report"]["lhs"]);
}

TEST_CASE("partitions: factor enumeration counts") {
  const TempFile six = write_matrix("six", random_density_matrix(6, 6, RngSeed{31}));
  const RunResult r6 = run_cli({"partitions", "--input", six.path(), "--p", "2"});
  REQUIRE(r6.exit_code == 0);
  CHECK(nlohmann::json::parse(r6.out).size() == 2);

  const TempFile four = write_matrix("four", random_density_matrix(4, 4, RngSeed{32}));
  const RunResult r4 = run_cli({"partitions", "--input", four.path(), "--p", "2"});
  REQUIRE(r4.exit_code == 0);
  // a single partition still prints as a one-element stream
  CHECK(nlohmann::json::parse(r4.out).size() == 1);

  const TempFile five = write_matrix("five", random_density_matrix(5, 5, RngSeed{33}));
  const RunResult r5 = run_cli({"partitions", "--input", five.path(), "--p", "2", "--max-padding", "1"});
  REQUIRE(r5.exit_code == 0);
  const auto doc = nlohmann::json::parse(r5.out);
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["padding"].get<int>() == 1);
}

TEST_CASE("fuzz: clean campaigns, reproducibility, per-trial stream") {
  const std::vector<std::string> base = {"fuzz", "--dim", "4",     "--n",     "2",  "--m",
                                         "2",    "--p-list", "0.5,2", "--trials", "50", "--seed",
                                         "7"};
  const RunResult first = run_cli(base);
  REQUIRE(first.exit_code == 0);
  const auto doc = nlohmann::json::parse(first.out);
  CHECK(doc["violations"].get<int>() == 0);
  CHECK(doc["checks"].get<int>() == 100);
  CHECK(doc["min_margin"].get<double>() >= -1e-9);

  const RunResult second = run_cli(base);
  CHECK(first.out == second.out);

  std::vector<std::string> per_trial = base;
  per_trial.emplace_back("--per-trial");
  per_trial.emplace_back("--format");
  per_trial.emplace_back("csv");
  const RunResult detailed = run_cli(per_trial);
  REQUIRE(detailed.exit_code == 0);
  // summary header + summary row + report header + 100 report rows
  int lines = 0;
  for (char c : detailed.out) {
    lines += c == '\n';
  }
  CHECK(lines == 103);

  CHECK(run_cli({"fuzz", "--dim", "4", "--n", "2", "--m", "2", "--p-list", "2", "--trials", "0"}).exit_code == 1);
}

TEST_CASE("fuzz: hermitian and scalar modes") {
  const RunResult hermitian = run_cli({"fuzz", "--mode", "hermitian", "--dim", "4", "--n", "2", "--m", "2",
                                       "--p-list", "0.5,2,3", "--trials", "25", "--seed", "11"});
  REQUIRE(hermitian.exit_code == 0);
  CHECK(nlohmann::json::parse(hermitian.out)["violations"].get<int>() == 0);

  const RunResult scalar = run_cli({"fuzz", "--mode", "scalar", "--n", "3", "--m", "2", "--p-list", "0.5,2",
                                    "--trials", "25", "--seed", "12", "--shift-margin", "0.3"});
  REQUIRE(scalar.exit_code == 0);
  CHECK(nlohmann::json::parse(scalar.out)["violations"].get<int>() == 0);
}

TEST_CASE("CSV and JSON carry identical values") {
  const TempFile file = write_matrix("bell", trineq::testing::bell_state());
  const std::vector<std::string> base = {"verify", "--input", file.path(), "--n", "2", "--m", "2", "--p", "2"};

  const RunResult json_run = run_cli(base);
  std::vector<std::string> csv_args = base;
  csv_args.emplace_back("--format");
  csv_args.emplace_back("csv");
  const RunResult csv_run = run_cli(csv_args);
  REQUIRE(json_run.exit_code == 0);
  REQUIRE(csv_run.exit_code == 0);

  const auto doc = nlohmann::json::parse(json_run.out);
  std::istringstream csv(csv_run.out);
  std::string header;
  std::string row;
  REQUIRE(std::getline(csv, header));
  REQUIRE(std::getline(csv, row));
  CHECK(header == "p,x,n,m,padding,lhs,rhs,j_value,margin,direction,satisfied");

  std::vector<std::string> fields;
  std::stringstream row_stream(row);
  std::string field;
  while (std::getline(row_stream, field, ',')) {
    fields.push_back(field);
  }
  REQUIRE(fields.size() == 11);
  CHECK(std::strtod(fields[0].c_str(), nullptr) == doc["p"].get<double>());
  CHECK(std::strtod(fields[5].c_str(), nullptr) == doc["lhs"].get<double>());
  CHECK(std::strtod(fields[6].c_str(), nullptr) == doc["rhs"].get<double>());
  CHECK(std::strtod(fields[8].c_str(), nullptr) == doc["margin"].get<double>());
  CHECK(fields[9] == doc["direction"].get<std::string>());
  CHECK(fields[10] == (doc["satisfied"].get<bool>() ? "true" : "false"));
}

TEST_CASE("help exits 0") {
  CHECK(run_cli({"--help"}).exit_code == 0);
  CHECK(run_cli({}).exit_code == 1);
}
