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

#include <complex>
#include <vector>

#include "trineq/errors.hpp"

namespace trineq {

/// Dense N x N complex matrix, row-major storage. The universal carrier for
/// density matrices, Hermitian matrices and their fractional powers.
///
/// Values are immutable once built by the library pipeline; all free
/// functions below are pure and safe to call concurrently.
class ComplexMatrix {
 public:
  using value_type = std::complex<double>;

  /// Zero matrix of dimension `dim` (dim >= 1).
  explicit ComplexMatrix(int dim);

  /// Matrix from `dim * dim` row-major entries. Rejects wrong-length input
  /// and non-finite components.
  ComplexMatrix(int dim, std::vector<value_type> entries);

  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }

  value_type& operator()(int row, int col) { return entries_[static_cast<std::size_t>(row) * dim_ + col]; }
  const value_type& operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(row) * dim_ + col];
  }

  const std::vector<value_type>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(value_type scalar);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, value_type scalar) { return lhs *= scalar; }
  friend ComplexMatrix operator*(value_type scalar, ComplexMatrix rhs) { return rhs *= scalar; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

 private:
  int dim_;
  std::vector<value_type> entries_;
};

/// Sum of diagonal entries.
std::complex<double> trace(const ComplexMatrix& a);

/// max_{jk} |a_{jk}|.
double max_abs(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);

/// Largest elementwise |a - b|; matrices must share a dimension.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// True iff max_{jk} |a_{jk} - conj(a_{kj})| <= tol.
bool is_hermitian(const ComplexMatrix& a, double tol);

/// Default tolerance separating round-off asymmetry from genuinely
/// non-Hermitian input: 1e-10 * max(1, max_abs(a)).
double hermiticity_tolerance(const ComplexMatrix& a);

}  // namespace trineq
