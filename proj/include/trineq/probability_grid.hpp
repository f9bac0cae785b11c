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

#include <vector>

#include "trineq/errors.hpp"

namespace trineq {

/// n x m array of nonnegative reals P_{j,a}: the diagonal of a blocked
/// density matrix read as a joint probability table (rows j = block index,
/// columns a = intra-block index). Entries need not sum to one; the
/// `normalized()` flag records whether they do within 1e-10.
class ProbabilityGrid {
 public:
  /// Row-major values, length n*m. Throws InvalidGridError on negative or
  /// non-finite entries.
  ProbabilityGrid(int n, int m, std::vector<double> values);

  int n() const { return n_; }
  int m() const { return m_; }
  bool normalized() const { return normalized_; }

  /// 0-based access, row j in [0, n), column a in [0, m).
  double operator()(int j, int a) const { return values_[static_cast<std::size_t>(j) * m_ + a]; }

  const std::vector<double>& values() const { return values_; }

  double row_sum(int j) const;
  double column_sum(int a) const;
  double total() const;

 private:
  int n_;
  int m_;
  std::vector<double> values_;
  bool normalized_;
};

}  // namespace trineq
