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

#include "trineq/report.hpp"

#include <cmath>
#include <cstdio>

namespace trineq {

Direction direction_for_exponent(double p) {
  if (p > 1.0) {
    return Direction::LE;
  }
  if (p < 1.0) {
    return Direction::GE;
  }
  return Direction::EQ;
}

const char* to_string(Direction direction) {
  switch (direction) {
    case Direction::LE:
      return "LE";
    case Direction::GE:
      return "GE";
    case Direction::EQ:
      return "EQ";
  }
  return "??";
}

InequalityReport make_report(double p, double x, const BlockPartition& partition, double lhs, double rhs,
                             double slack) {
  InequalityReport report;
  report.p = p;
  report.x = x;
  report.n = partition.n;
  report.m = partition.m;
  report.padding = partition.padding;
  report.lhs = lhs;
  report.rhs = rhs;
  report.j_value = rhs - lhs;
  report.direction = direction_for_exponent(p);
  switch (report.direction) {
    case Direction::LE:
      report.margin = rhs - lhs;
      break;
    case Direction::GE:
      report.margin = lhs - rhs;
      break;
    case Direction::EQ:
      report.margin = -std::abs(lhs - rhs);
      break;
  }
  report.satisfied = report.margin >= -slack * std::max({1.0, lhs, rhs});
  return report;
}

namespace {

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace

std::string report_csv_header() { return "p,x,n,m,padding,lhs,rhs,j_value,margin,direction,satisfied"; }

std::string report_csv_row(const InequalityReport& r) {
  std::string row;
  row += format_double(r.p);
  row += ',';
  row += format_double(r.x);
  row += ',';
  row += std::to_string(r.n);
  row += ',';
  row += std::to_string(r.m);
  row += ',';
  row += std::to_string(r.padding);
  row += ',';
  row += format_double(r.lhs);
  row += ',';
  row += format_double(r.rhs);
  row += ',';
  row += format_double(r.j_value);
  row += ',';
  row += format_double(r.margin);
  row += ',';
  row += to_string(r.direction);
  row += ',';
  row += r.satisfied ? "true" : "false";
  return row;
}

nlohmann::ordered_json report_to_json(const InequalityReport& r) {
  nlohmann::ordered_json doc;
  doc["p"] = r.p;
  doc["x"] = r.x;
  doc["n"] = r.n;
  doc["m"] = r.m;
  doc["padding"] = r.padding;
  doc["lhs"] = r.lhs;
  doc["rhs"] = r.rhs;
  doc["j_value"] = r.j_value;
  doc["margin"] = r.margin;
  doc["direction"] = to_string(r.direction);
  doc["satisfied"] = r.satisfied;
  return doc;
}

std::string report_json(const InequalityReport& r) { return report_to_json(r).dump(2); }

}  // namespace trineq
