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

#include <utility>
#include <vector>

#include "trineq/probability_grid.hpp"
#include "trineq/report.hpp"

namespace trineq {

/// The probability-vector specialization of the block trace inequality:
///   lhs = [sum_a (sum_j P_{ja})^p]^{1/p}
///   rhs = sum_j [sum_a P_{ja}^p]^{1/p}
/// lhs <= rhs for p >= 1, reversed for 0 < p <= 1. Valid for any grid of
/// nonnegative numbers, normalized or not.
std::pair<double, double> vector_minkowski_sides(const ProbabilityGrid& grid, double p);

/// P1(x,p) = {sum_a [(n*x + sum_j P_{ja})^p]}^{1/p}, x >= 0.
double p1_function(const ProbabilityGrid& grid, double x, double p);

/// P2(x,p) = sum_j {[(sum_a P_{ja}) + m*x]^p}^{1/p}. The p and 1/p powers
/// cancel on nonnegative scalars, so this is sum_j (row_sum_j + m*x).
double p2_function(const ProbabilityGrid& grid, double x, double p);

/// Tighter companion bound to p2_function where the shift enters per entry:
/// sum_j [sum_a (P_{ja} + x)^p]^{1/p}, i.e. the rhs of the matrix inequality
/// evaluated on the shifted diagonal grid. For p >= 1 it sits between
/// p1_function and p2_function; the gap to p2_function is itself a
/// correlation-style quantity.
double p2_entrywise(const ProbabilityGrid& grid, double x, double p);

/// Report comparing P1(x,p) against P2(x,p): LE for p > 1, GE for p < 1,
/// EQ at p = 1.
InequalityReport verify_shifted_scalar(const ProbabilityGrid& grid, double x, double p,
                                       double slack = kDefaultSlack);

/// rhs - lhs of the vector inequality for a normalized 2x2 grid (the
/// diagonal 4x4 case), defined for p >= 1. Agrees with
/// correlation_measure_J on the matching diagonal density matrix.
double scalar_correlation_J(const ProbabilityGrid& grid, double p);

/// -sum w ln w over weights summing to 1 (within 1e-10), with 0 ln 0 = 0.
double shannon_entropy(const std::vector<double>& weights);

/// I = H(rows) + H(cols) - H(joint) in nats for a normalized grid;
/// nonnegative up to round-off (>= -1e-12), zero exactly on product grids.
double mutual_information(const ProbabilityGrid& grid);

}  // namespace trineq
