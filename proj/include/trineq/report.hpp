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

#include <string>

#include "json.hpp"

#include "trineq/block_partition.hpp"

namespace trineq {

/// Relative slack separating a genuine inequality violation from eigensolver
/// round-off: satisfied means margin >= -slack * max(1, lhs, rhs).
inline constexpr double kDefaultSlack = 1e-9;

/// Which way the trace inequality points at a given exponent: LE for p > 1,
/// GE for p < 1, EQ at p = 1 where both sides coincide.
enum class Direction { LE, GE, EQ };

Direction direction_for_exponent(double p);

const char* to_string(Direction direction);

/// Outcome of one (matrix, partition, p, x) check.
///
/// margin is rhs - lhs for LE, lhs - rhs for GE and -|lhs - rhs| for EQ;
/// j_value is always rhs - lhs (the correlation gap of the p >= 1 regime).
struct InequalityReport {
  double p = 0.0;
  double x = 0.0;  // Hermitian shift; 0 in density-matrix mode
  int n = 0;
  int m = 0;
  int padding = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double j_value = 0.0;
  double margin = 0.0;
  Direction direction = Direction::EQ;
  bool satisfied = false;
};

/// Builds the report for evaluated sides, deriving direction, margin and the
/// satisfied flag at the given relative slack.
InequalityReport make_report(double p, double x, const BlockPartition& partition, double lhs, double rhs,
                             double slack = kDefaultSlack);

/// Flat record {p, x, n, m, padding, lhs, rhs, j_value, margin, direction,
/// satisfied}; the CSV column order is fixed as listed and the JSON object
/// keeps the same key order.
std::string report_csv_header();
std::string report_csv_row(const InequalityReport& report);
nlohmann::ordered_json report_to_json(const InequalityReport& report);
std::string report_json(const InequalityReport& report);

}  // namespace trineq
