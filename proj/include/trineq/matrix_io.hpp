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

#include <iosfwd>
#include <string>

#include "trineq/complex_matrix.hpp"

namespace trineq {

// Matrix file format: {"dim": N, "entries": [[re, im], ...]} with exactly
// N*N row-major entries. Parsing rejects wrong-length arrays and non-finite
// numbers, naming the offending entry index.

ComplexMatrix load_matrix(std::istream& in);
ComplexMatrix load_matrix_file(const std::string& path);

void save_matrix(const ComplexMatrix& a, std::ostream& out);
void save_matrix_file(const ComplexMatrix& a, const std::string& path);

}  // namespace trineq
