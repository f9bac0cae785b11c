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

#include "trineq/scalar_inequality.hpp"

#include <cmath>
#include <string>

namespace trineq {

ProbabilityGrid::ProbabilityGrid(int n, int m, std::vector<double> values)
    : n_(n), m_(m), values_(std::move(values)) {
  if (n < 1 || m < 1) {
    throw InvalidGridError("grid shape must be positive, got " + std::to_string(n) + "x" + std::to_string(m));
  }
  if (values_.size() != static_cast<std::size_t>(n) * m) {
    throw InvalidGridError("expected " + std::to_string(n * m) + " grid values, got " +
                           std::to_string(values_.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] < 0.0) {
      throw InvalidGridError("grid value " + std::to_string(i) + " must be finite and nonnegative");
    }
    sum += values_[i];
  }
  normalized_ = std::abs(sum - 1.0) <= 1e-10;
}

double ProbabilityGrid::row_sum(int j) const {
  double sum = 0.0;
  for (int a = 0; a < m_; ++a) {
    sum += (*this)(j, a);
  }
  return sum;
}

double ProbabilityGrid::column_sum(int a) const {
  double sum = 0.0;
  for (int j = 0; j < n_; ++j) {
    sum += (*this)(j, a);
  }
  return sum;
}

double ProbabilityGrid::total() const {
  double sum = 0.0;
  for (double v : values_) {
    sum += v;
  }
  return sum;
}

namespace {

void require_positive_exponent(double p) {
  if (!(p > 0.0)) {
    throw ExponentOutOfRangeError("exponent must satisfy p > 0");
  }
}

BlockPartition grid_partition(const ProbabilityGrid& grid) {
  return BlockPartition{grid.n(), grid.m(), grid.n() * grid.m(), 0};
}

}  // namespace

std::pair<double, double> vector_minkowski_sides(const ProbabilityGrid& grid, double p) {
  require_positive_exponent(p);
  double lhs_sum = 0.0;
  for (int a = 0; a < grid.m(); ++a) {
    lhs_sum += std::pow(grid.column_sum(a), p);
  }
  const double lhs = std::pow(lhs_sum, 1.0 / p);

  double rhs = 0.0;
  for (int j = 0; j < grid.n(); ++j) {
    double row_p = 0.0;
    for (int a = 0; a < grid.m(); ++a) {
      row_p += std::pow(grid(j, a), p);
    }
    rhs += std::pow(row_p, 1.0 / p);
  }
  return {lhs, rhs};
}

double p1_function(const ProbabilityGrid& grid, double x, double p) {
  require_positive_exponent(p);
  if (x < 0.0) {
    throw InvalidGridError("shift x must be nonnegative");
  }
  double sum = 0.0;
  for (int a = 0; a < grid.m(); ++a) {
    sum += std::pow(grid.n() * x + grid.column_sum(a), p);
  }
  return std::pow(sum, 1.0 / p);
}

double p2_function(const ProbabilityGrid& grid, double x, double p) {
  require_positive_exponent(p);
  if (x < 0.0) {
    throw InvalidGridError("shift x must be nonnegative");
  }
  double sum = 0.0;
  for (int j = 0; j < grid.n(); ++j) {
    sum += grid.row_sum(j) + grid.m() * x;
  }
  return sum;
}

double p2_entrywise(const ProbabilityGrid& grid, double x, double p) {
  require_positive_exponent(p);
  if (x < 0.0) {
    throw InvalidGridError("shift x must be nonnegative");
  }
  double sum = 0.0;
  for (int j = 0; j < grid.n(); ++j) {
    double row_p = 0.0;
    for (int a = 0; a < grid.m(); ++a) {
      row_p += std::pow(grid(j, a) + x, p);
    }
    sum += std::pow(row_p, 1.0 / p);
  }
  return sum;
}

InequalityReport verify_shifted_scalar(const ProbabilityGrid& grid, double x, double p, double slack) {
  const double lhs = p1_function(grid, x, p);
  const double rhs = p2_function(grid, x, p);
  return make_report(p, x, grid_partition(grid), lhs, rhs, slack);
}

double scalar_correlation_J(const ProbabilityGrid& grid, double p) {
  if (grid.n() != 2 || grid.m() != 2) {
    throw InvalidGridError("scalar_correlation_J expects a 2x2 grid");
  }
  if (!grid.normalized()) {
    throw InvalidGridError("scalar_correlation_J expects a normalized grid");
  }
  if (p < 1.0) {
    throw ExponentOutOfRangeError("the correlation gap J(p) is defined for p >= 1");
  }
  const auto [lhs, rhs] = vector_minkowski_sides(grid, p);
  return rhs - lhs;
}

namespace {

// 0 ln 0 = 0 convention.
double plogp(double v) { return v > 0.0 ? v * std::log(v) : 0.0; }

}  // namespace

double shannon_entropy(const std::vector<double>& weights) {
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
      throw InvalidGridError("weight " + std::to_string(i) + " must be finite and nonnegative");
    }
    sum += weights[i];
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    throw NotNormalizedError("weights sum to " + std::to_string(sum) + ", expected 1");
  }
  double entropy = 0.0;
  for (double w : weights) {
    entropy -= plogp(w);
  }
  return entropy;
}

double mutual_information(const ProbabilityGrid& grid) {
  if (!grid.normalized()) {
    throw NotNormalizedError("mutual_information requires a normalized grid");
  }
  double joint = 0.0;
  for (double v : grid.values()) {
    joint += plogp(v);
  }
  double rows = 0.0;
  for (int j = 0; j < grid.n(); ++j) {
    rows += plogp(grid.row_sum(j));
  }
  double cols = 0.0;
  for (int a = 0; a < grid.m(); ++a) {
    cols += plogp(grid.column_sum(a));
  }
  return joint - rows - cols;
}

}  // namespace trineq
