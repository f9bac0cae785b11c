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

#include "trineq/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trineq/eigen.hpp"
#include "trineq/states.hpp"

namespace trineq {

namespace {

void require_positive_exponent(double p) {
  if (!(p > 0.0)) {
    throw ExponentOutOfRangeError("exponent must satisfy p > 0");
  }
}

void require_original_dim(const ComplexMatrix& a, const BlockPartition& partition) {
  if (a.dim() != partition.original_dim) {
    throw DimensionMismatchError("matrix dim " + std::to_string(a.dim()) + " does not match partition original_dim " +
                                 std::to_string(partition.original_dim));
  }
}

// Both sides for an already padded, already validated PSD matrix. The one
// pipeline shared by the density and shifted-Hermitian checks.
std::pair<double, double> evaluate_sides(const ComplexMatrix& padded, const BlockPartition& partition, double p) {
  const ComplexMatrix sum = diagonal_block_sum(padded, partition);
  const double lhs = std::pow(trace(matrix_power(sum, p)).real(), 1.0 / p);

  const ComplexMatrix powered = matrix_power(padded, p);
  const ComplexMatrix traced = block_trace_matrix(powered, partition);
  const double rhs = trace(matrix_power(traced, 1.0 / p)).real();
  return {lhs, rhs};
}

void validate_density(const ComplexMatrix& rho) {
  std::string failures;
  const bool hermitian = is_hermitian(rho, hermiticity_tolerance(rho));
  if (!hermitian) {
    failures += "not Hermitian";
  } else {
    const double min_eig = min_eigenvalue(rho);
    if (min_eig < -clip_tolerance(rho)) {
      failures += "not positive semidefinite (min eigenvalue " + std::to_string(min_eig) + ")";
    }
  }
  const std::complex<double> tr = trace(rho);
  if (std::abs(tr - std::complex<double>(1.0, 0.0)) > 1e-8) {
    if (!failures.empty()) {
      failures += "; ";
    }
    failures += "trace " + std::to_string(tr.real()) + " not 1 within 1e-8";
  }
  if (!failures.empty()) {
    throw NotDensityMatrixError("not a density matrix: " + failures);
  }
}

}  // namespace

double minkowski_lhs(const ComplexMatrix& rho, const BlockPartition& partition, double p) {
  require_positive_exponent(p);
  const ComplexMatrix sum = diagonal_block_sum(rho, partition);
  return std::pow(trace(matrix_power(sum, p)).real(), 1.0 / p);
}

double minkowski_rhs(const ComplexMatrix& rho, const BlockPartition& partition, double p) {
  require_positive_exponent(p);
  const ComplexMatrix powered = matrix_power(rho, p);
  const ComplexMatrix traced = block_trace_matrix(powered, partition);
  return trace(matrix_power(traced, 1.0 / p)).real();
}

InequalityReport verify_density(const ComplexMatrix& rho, const BlockPartition& partition, double p, double slack) {
  require_positive_exponent(p);
  require_original_dim(rho, partition);
  validate_density(rho);
  const ComplexMatrix padded = pad(rho, partition);
  const auto [lhs, rhs] = evaluate_sides(padded, partition, p);
  return make_report(p, 0.0, partition, lhs, rhs, slack);
}

double correlation_measure_J(const ComplexMatrix& rho, const BlockPartition& partition, double p) {
  if (p < 1.0) {
    throw ExponentOutOfRangeError("the correlation gap J(p) is defined for p >= 1");
  }
  return verify_density(rho, partition, p).j_value;
}

std::pair<ComplexMatrix, double> shift_to_nonnegative(const ComplexMatrix& a, double margin) {
  if (margin < 0.0) {
    throw Error("shift margin must be nonnegative");
  }
  const double min_eig = min_eigenvalue(a);  // throws NotHermitianError
  const double x = std::max(0.0, -min_eig) + margin;
  ComplexMatrix shifted = a;
  if (x != 0.0) {
    for (int i = 0; i < a.dim(); ++i) {
      shifted(i, i) += x;
    }
  }
  return {std::move(shifted), x};
}

InequalityReport verify_hermitian(const ComplexMatrix& a, const BlockPartition& partition, double p, double x,
                                  double slack) {
  require_positive_exponent(p);
  require_original_dim(a, partition);
  if (!is_hermitian(a, hermiticity_tolerance(a))) {
    throw NotHermitianError("verify_hermitian: input is not Hermitian within tolerance");
  }
  ComplexMatrix shifted = pad(a, partition);
  if (x != 0.0) {
    for (int i = 0; i < shifted.dim(); ++i) {
      shifted(i, i) += x;
    }
  }
  const double min_eig = min_eigenvalue(shifted);
  if (min_eig < -clip_tolerance(shifted)) {
    throw ShiftInsufficientError("shift x = " + std::to_string(x) + " leaves min eigenvalue " +
                                 std::to_string(min_eig) + " below zero");
  }
  const auto [lhs, rhs] = evaluate_sides(shifted, partition, p);
  return make_report(p, x, partition, lhs, rhs, slack);
}

std::vector<PermutationReport> verify_all_permutations(const ComplexMatrix& rho, const BlockPartition& partition,
                                                       double p, double slack) {
  if (rho.dim() > 8) {
    throw TooManyPermutationsError("exhaustive permutation check is capped at dim 8; use sampling for dim " +
                                   std::to_string(rho.dim()));
  }
  std::vector<int> perm(static_cast<std::size_t>(rho.dim()));
  for (int i = 0; i < rho.dim(); ++i) {
    perm[static_cast<std::size_t>(i)] = i;
  }
  std::vector<PermutationReport> results;
  do {
    results.push_back({perm, verify_density(apply_permutation(rho, perm), partition, p, slack)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return results;
}

std::vector<PermutationReport> verify_sampled_permutations(const ComplexMatrix& rho, const BlockPartition& partition,
                                                           double p, int samples, RngSeed seed, double slack) {
  if (samples < 1) {
    throw Error("permutation sample count must be >= 1");
  }
  SplitMix64 rng(seed);
  std::vector<PermutationReport> results;
  results.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    std::vector<int> perm = random_permutation(rho.dim(), rng);
    results.push_back({perm, verify_density(apply_permutation(rho, perm), partition, p, slack)});
  }
  return results;
}

std::vector<InequalityReport> scan_p(const ComplexMatrix& rho, const BlockPartition& partition,
                                     const std::vector<double>& p_values, double slack) {
  if (p_values.empty()) {
    throw Error("scan_p requires at least one exponent");
  }
  std::vector<InequalityReport> reports;
  reports.reserve(p_values.size());
  for (double p : p_values) {
    reports.push_back(verify_density(rho, partition, p, slack));
  }
  return reports;
}

std::vector<PartitionReport> scan_partitions(const ComplexMatrix& rho, double p, int max_padding, double slack) {
  if (max_padding < 0) {
    throw Error("max_padding must be nonnegative");
  }
  const int dim = rho.dim();
  std::vector<PartitionReport> results;
  for (int padded = dim; padded <= dim + max_padding; ++padded) {
    for (int n = 2; n * 2 <= padded; ++n) {
      if (padded % n != 0) {
        continue;
      }
      const int m = padded / n;
      const BlockPartition partition = make_partition(dim, n, m);
      results.push_back({partition, verify_density(rho, partition, p, slack)});
    }
  }
  return results;
}

}  // namespace trineq
