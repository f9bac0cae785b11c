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

#include "trineq/block_partition.hpp"
#include "trineq/report.hpp"
#include "trineq/rng.hpp"

namespace trineq {

// The trace inequality under a block partition (n, m):
//
//   [Tr (sum_j a_jj)^p]^{1/p}  <=  Tr [ (Tr a_jk(p))_{jk} ]^{1/p},   p >= 1,
//
// reversed for 0 < p <= 1, where a_jk(p) are the blocks of rho^p. It holds
// for every density matrix, with no tensor-product structure assumed, and
// extends to arbitrary Hermitian A through the shift A + x*I >= 0.

/// Left side, computed via diagonal_block_sum then matrix_power. Requires
/// an already padded matrix (dim == n*m).
double minkowski_lhs(const ComplexMatrix& rho, const BlockPartition& partition, double p);

/// Right side: Tr[(block_trace_matrix(rho^p))^{1/p}]. The inner n x n matrix
/// is PSD up to clipping whenever rho is.
double minkowski_rhs(const ComplexMatrix& rho, const BlockPartition& partition, double p);

/// Checks the inequality for a density matrix (Hermitian, PSD within
/// clip_tolerance, trace 1 within 1e-8). Pads to n*m first when the
/// partition calls for it. Throws NotDensityMatrixError listing every failed
/// property.
InequalityReport verify_density(const ComplexMatrix& rho, const BlockPartition& partition, double p,
                                double slack = kDefaultSlack);

/// The correlation gap J(p) = rhs - lhs, defined for p >= 1 (ExponentOutOfRangeError below).
double correlation_measure_J(const ComplexMatrix& rho, const BlockPartition& partition, double p);

/// (A + x*I, x) with x = max(0, -min_eigenvalue(A)) + margin, the smallest
/// shift by `margin` past the PSD boundary.
std::pair<ComplexMatrix, double> shift_to_nonnegative(const ComplexMatrix& a, double margin);

/// Checks the inequality for A(x) = pad(A) + x*I. The shifted padded matrix
/// must be PSD within clip_tolerance, else ShiftInsufficientError. With
/// x = 0 this is the verify_density pipeline on A, bit for bit.
InequalityReport verify_hermitian(const ComplexMatrix& a, const BlockPartition& partition, double p, double x,
                                  double slack = kDefaultSlack);

struct PermutationReport {
  std::vector<int> permutation;  // 0-based images
  InequalityReport report;
};

/// One report per index permutation of rho (conjugation by the permutation
/// matrix), in lexicographic order. Exhaustive enumeration is capped at
/// dim <= 8 (40320 checks); beyond that it throws TooManyPermutationsError
/// and verify_sampled_permutations is the tool.
std::vector<PermutationReport> verify_all_permutations(const ComplexMatrix& rho, const BlockPartition& partition,
                                                       double p, double slack = kDefaultSlack);

/// `samples` random permutations from the seeded generator instead of the
/// full factorial enumeration.
std::vector<PermutationReport> verify_sampled_permutations(const ComplexMatrix& rho, const BlockPartition& partition,
                                                           double p, int samples, RngSeed seed,
                                                           double slack = kDefaultSlack);

/// One report per exponent, in input order.
std::vector<InequalityReport> scan_p(const ComplexMatrix& rho, const BlockPartition& partition,
                                     const std::vector<double>& p_values, double slack = kDefaultSlack);

struct PartitionReport {
  BlockPartition partition;
  InequalityReport report;
};

/// All partitions (n, m) with n >= 2, m >= 2 and N <= n*m <= N + max_padding,
/// ordered by padded dimension then ascending n.
std::vector<PartitionReport> scan_partitions(const ComplexMatrix& rho, double p, int max_padding,
                                             double slack = kDefaultSlack);

}  // namespace trineq
