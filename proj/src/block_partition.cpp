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

#include "trineq/block_partition.hpp"

#include <string>

namespace trineq {

namespace {

void require_padded_dim(const ComplexMatrix& a, const BlockPartition& partition, const char* op) {
  if (a.dim() != partition.padded_dim()) {
    throw DimensionMismatchError(std::string(op) + ": matrix dim " + std::to_string(a.dim()) +
                                 " does not equal n*m = " + std::to_string(partition.padded_dim()));
  }
}

}  // namespace

BlockPartition make_partition(int original_dim, int n, int m) {
  if (original_dim < 1 || n < 1 || m < 1) {
    throw PartitionTooSmallError("partition parameters must be positive");
  }
  if (n * m < original_dim) {
    throw PartitionTooSmallError("n*m = " + std::to_string(n * m) + " is smaller than the matrix dimension " +
                                 std::to_string(original_dim));
  }
  return BlockPartition{n, m, original_dim, n * m - original_dim};
}

ComplexMatrix pad(const ComplexMatrix& a, const BlockPartition& partition) {
  if (a.dim() != partition.original_dim) {
    throw DimensionMismatchError("pad: matrix dim " + std::to_string(a.dim()) +
                                 " does not match partition original_dim " + std::to_string(partition.original_dim));
  }
  if (partition.padding == 0) {
    return a;
  }
  ComplexMatrix result(partition.padded_dim());
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      result(i, j) = a(i, j);
    }
  }
  return result;
}

ComplexMatrix block(const ComplexMatrix& a, const BlockPartition& partition, int j, int k) {
  require_padded_dim(a, partition, "block");
  if (j < 1 || j > partition.n || k < 1 || k > partition.n) {
    throw IndexOutOfRangeError("block indices must lie in 1.." + std::to_string(partition.n));
  }
  const int m = partition.m;
  ComplexMatrix result(m);
  const int row0 = (j - 1) * m;
  const int col0 = (k - 1) * m;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      result(r, c) = a(row0 + r, col0 + c);
    }
  }
  return result;
}

ComplexMatrix diagonal_block_sum(const ComplexMatrix& a, const BlockPartition& partition) {
  require_padded_dim(a, partition, "diagonal_block_sum");
  const int m = partition.m;
  ComplexMatrix result(m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      std::complex<double> sum(0.0, 0.0);
      for (int j = 0; j < partition.n; ++j) {
        sum += a(j * m + r, j * m + c);
      }
      result(r, c) = sum;
    }
  }
  return result;
}

ComplexMatrix block_trace_matrix(const ComplexMatrix& a, const BlockPartition& partition) {
  require_padded_dim(a, partition, "block_trace_matrix");
  const int m = partition.m;
  ComplexMatrix result(partition.n);
  for (int j = 0; j < partition.n; ++j) {
    for (int k = 0; k < partition.n; ++k) {
      std::complex<double> sum(0.0, 0.0);
      for (int r = 0; r < m; ++r) {
        sum += a(j * m + r, k * m + r);
      }
      result(j, k) = sum;
    }
  }
  return result;
}

}  // namespace trineq
