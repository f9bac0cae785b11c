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

#include "trineq/complex_matrix.hpp"

namespace trineq {

/// Spectral decomposition of a Hermitian matrix: A = U diag(eigenvalues) U†.
/// Eigenvalues are ascending; column k of `eigenvectors` is the unit
/// eigenvector for eigenvalues[k]. Output is deterministic for identical
/// input.
struct HermitianEigensystem {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Cyclic Jacobi diagonalization of a complex Hermitian matrix.
///
/// Sweep budget 100; converged once the off-diagonal Frobenius norm drops
/// below 1e-12 * ||A||_F. Throws NotHermitianError if the input fails
/// is_hermitian at the default tolerance, NoConvergenceError if the budget
/// is exhausted.
HermitianEigensystem hermitian_eigendecomposition(const ComplexMatrix& a);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& a);

/// PSD acceptance tolerance: 1e-10 * max(1, max_abs(a)). Eigenvalues in
/// [-clip, 0) count as round-off and are clipped to zero by matrix_power;
/// anything below -clip is genuinely indefinite.
double clip_tolerance(const ComplexMatrix& a);

/// U diag(lambda_i^p) U† for Hermitian `a` and p > 0, with the convention
/// 0^p = 0. Eigenvalues below -clip_tolerance(a) are allowed only when p is
/// a positive integer (plain matrix power); otherwise
/// NotPositiveSemidefiniteError is thrown. Eigenvalues inside the
/// +-1e-14 * max(1, max_abs(a)) noise band around zero are snapped to exact
/// zeros before exponentiation.
ComplexMatrix matrix_power(const ComplexMatrix& a, double p);

}  // namespace trineq
