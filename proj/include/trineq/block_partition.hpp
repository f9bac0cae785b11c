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

#include "trineq/complex_matrix.hpp"

namespace trineq {

/// Viewing an (n*m) x (n*m) matrix as an n x n array of m x m blocks. When
/// the matrix to partition has dimension N < n*m, `padding` zero rows and
/// columns are appended bottom-right to reach n*m.
struct BlockPartition {
  int n;             // number of block rows/columns
  int m;             // block edge length
  int original_dim;  // N, the unpadded dimension
  int padding;       // s = n*m - N

  int padded_dim() const { return n * m; }
};

/// Partition for an N x N matrix with padding s = n*m - N.
/// Throws PartitionTooSmallError when n*m < N.
BlockPartition make_partition(int original_dim, int n, int m);

/// Embeds `a` in the top-left corner of an (n*m) x (n*m) zero matrix.
/// Preserves trace and Hermiticity.
ComplexMatrix pad(const ComplexMatrix& a, const BlockPartition& partition);

/// The m x m block a_{jk}. Block indices are 1-based, matching the report
/// convention: block (j,k) covers rows (j-1)m .. jm-1 and columns
/// (k-1)m .. km-1.
ComplexMatrix block(const ComplexMatrix& a, const BlockPartition& partition, int j, int k);

/// Sum of the diagonal blocks, an m x m matrix: the partial trace over the
/// block-row index. Preserves the trace.
ComplexMatrix diagonal_block_sum(const ComplexMatrix& a, const BlockPartition& partition);

/// The n x n matrix of block traces (j,k) -> Tr a_{jk}: the partial trace
/// over the intra-block index. Hermitian/PSD whenever `a` is.
ComplexMatrix block_trace_matrix(const ComplexMatrix& a, const BlockPartition& partition);

}  // namespace trineq
