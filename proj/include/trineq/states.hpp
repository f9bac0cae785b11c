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
#include "trineq/probability_grid.hpp"
#include "trineq/rng.hpp"

namespace trineq {

// Constructors and generators for test matrices. A 4x4 output here reads
// equally as a two-qubit state or as a single qudit with j = 3/2; nothing in
// the matrix records the choice, only the block partition applied to it
// does.

/// I_N / N.
ComplexMatrix maximally_mixed(int dim);

/// Rank-1 projector |psi><psi| from unit-norm amplitudes
/// (sum |c_i|^2 = 1 within 1e-10, else NotNormalizedError).
ComplexMatrix pure_state(const std::vector<std::complex<double>>& amplitudes);

/// diag(P_11, P_12, ..., P_nm) in row-major grid order, for a normalized
/// grid.
ComplexMatrix diagonal_from_grid(const ProbabilityGrid& grid);

/// Ginibre-induced random density matrix: rho = G G† / Tr(G G†) with G an
/// N x rank matrix of complex Gaussians drawn row-major from
/// SplitMix64(seed). Hermitian, PSD, unit trace, rank `rank` almost surely.
ComplexMatrix random_density_matrix(int dim, int rank, RngSeed seed);

/// (M + M†)/2 with M an N x N matrix of complex Gaussians times `scale`,
/// drawn row-major. Generically indefinite.
ComplexMatrix random_hermitian(int dim, double scale, RngSeed seed);

/// Grid of n*m uniforms from [0,1), drawn row-major; divided by their sum
/// when `normalize` is set.
ProbabilityGrid random_probability_grid(int n, int m, bool normalize, RngSeed seed);

/// Conjugation by a permutation matrix: result[perm[j]][perm[k]] = rho[j][k].
/// `perm` holds 0-based images and must be a bijection on {0..N-1}.
/// Preserves spectrum and trace.
ComplexMatrix apply_permutation(const ComplexMatrix& rho, const std::vector<int>& perm);

/// Uniform random permutation of {0..N-1} via Fisher-Yates on SplitMix64.
std::vector<int> random_permutation(int size, SplitMix64& rng);

}  // namespace trineq
