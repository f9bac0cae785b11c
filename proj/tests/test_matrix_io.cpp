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

#include <sstream>
#include <string>

#include "trineq/matrix_io.hpp"
#include "trineq/states.hpp"

using namespace trineq;

namespace {

ComplexMatrix parse(const std::string& text) {
  std::istringstream in(text);
  return load_matrix(in);
}

}  // namespace

TEST_CASE("load_matrix accepts the documented format") {
  const ComplexMatrix m = parse(R"({"dim": 2, "entries": [[1, 0], [0, 0.5], [0, -0.5], [2, 0]]})");
  CHECK(m.dim() == 2);
  CHECK(m(0, 0) == std::complex<double>(1.0, 0.0));
  CHECK(m(0, 1) == std::complex<double>(0.0, 0.5));
  CHECK(m(1, 0) == std::complex<double>(0.0, -0.5));
  CHECK(m(1, 1) == std::complex<double>(2.0, 0.0));
}

TEST_CASE("load_matrix rejects malformed documents") {
  CHECK_THROWS_AS(parse("not json"), ParseError);
  CHECK_THROWS_AS(parse(R"({"entries": []})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"dim": 0, "entries": []})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"dim": 2, "entries": [[1, 0]]})"), ParseError);  // wrong length
  CHECK_THROWS_AS(parse(R"({"dim": 1, "entries": [[1, 0], [0, 0]]})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"dim": 1, "entries": [[1]]})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"dim": 1, "entries": [["a", 0]]})"), ParseError);
}

TEST_CASE("load_matrix rejects non-finite numbers") {
  // the JSON layer already refuses overflowing literals; either way it must not load
  CHECK_THROWS_AS(parse(R"({"dim": 2, "entries": [[1, 0], [0, 0], [0, 0], [1e999, 0]]})"), ParseError);
}

TEST_CASE("parse errors name the offending entry index") {
  try {
    parse(R"({"dim": 2, "entries": [[1, 0], [0, 0], [0, 0], [1]]})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
}

TEST_CASE("save then load round-trips bit for bit") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const ComplexMatrix original = random_density_matrix(5, 3, RngSeed{seed});
    std::stringstream buffer;
    save_matrix(original, buffer);
    const ComplexMatrix reloaded = load_matrix(buffer);
    REQUIRE(reloaded.dim() == original.dim());
    CHECK(max_abs_diff(original, reloaded) == 0.0);
  }
}
