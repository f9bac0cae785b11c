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

#include "trineq/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "json.hpp"

namespace trineq {

ComplexMatrix load_matrix(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix file is not valid JSON: ") + e.what());
  }

  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries")) {
    throw ParseError("matrix file must be an object with \"dim\" and \"entries\"");
  }
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1) {
    throw ParseError("\"dim\" must be a positive integer");
  }
  const int dim = doc["dim"].get<int>();
  const auto& entries = doc["entries"];
  if (!entries.is_array()) {
    throw ParseError("\"entries\" must be an array of [re, im] pairs");
  }
  const std::size_t expected = static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
  if (entries.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) + " entries for dim " + std::to_string(dim) + ", got " +
                     std::to_string(entries.size()));
  }

  std::vector<std::complex<double>> values;
  values.reserve(expected);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& pair = entries[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw ParseError("entry " + std::to_string(i) + " is not a [re, im] number pair");
    }
    const double re = pair[0].get<double>();
    const double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw ParseError("entry " + std::to_string(i) + " is not finite");
    }
    values.emplace_back(re, im);
  }
  return ComplexMatrix(dim, std::move(values));
}

ComplexMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open matrix file: " + path);
  }
  return load_matrix(in);
}

void save_matrix(const ComplexMatrix& a, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["dim"] = a.dim();
  auto& entries = doc["entries"] = nlohmann::json::array();
  for (const auto& e : a.entries()) {
    entries.push_back({e.real(), e.imag()});
  }
  out << doc.dump(1) << '\n';
}

void save_matrix_file(const ComplexMatrix& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot open matrix file for writing: " + path);
  }
  save_matrix(a, out);
}

}  // namespace trineq
