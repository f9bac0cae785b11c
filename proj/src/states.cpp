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

#include "trineq/states.hpp"

#include <cmath>
#include <string>

namespace trineq {

ComplexMatrix maximally_mixed(int dim) {
  ComplexMatrix result(dim);
  const double weight = 1.0 / dim;
  for (int i = 0; i < dim; ++i) {
    result(i, i) = weight;
  }
  return result;
}

ComplexMatrix pure_state(const std::vector<std::complex<double>>& amplitudes) {
  if (amplitudes.empty()) {
    throw DimensionMismatchError("pure_state requires at least one amplitude");
  }
  double norm2 = 0.0;
  for (const auto& c : amplitudes) {
    norm2 += std::norm(c);
  }
  if (std::abs(norm2 - 1.0) > 1e-10) {
    throw NotNormalizedError("amplitudes have squared norm " + std::to_string(norm2) + ", expected 1");
  }
  const int dim = static_cast<int>(amplitudes.size());
  ComplexMatrix result(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      result(i, j) = amplitudes[static_cast<std::size_t>(i)] * std::conj(amplitudes[static_cast<std::size_t>(j)]);
    }
  }
  return result;
}

ComplexMatrix diagonal_from_grid(const ProbabilityGrid& grid) {
  if (!grid.normalized()) {
    throw NotNormalizedError("diagonal_from_grid requires a normalized grid");
  }
  const int dim = grid.n() * grid.m();
  ComplexMatrix result(dim);
  for (int i = 0; i < dim; ++i) {
    result(i, i) = grid.values()[static_cast<std::size_t>(i)];
  }
  return result;
}

ComplexMatrix random_density_matrix(int dim, int rank, RngSeed seed) {
  if (rank < 1 || rank > dim) {
    throw BadRankError("rank must lie in 1.." + std::to_string(dim) + ", got " + std::to_string(rank));
  }
  SplitMix64 rng(seed);
  // G is dim x rank, drawn row-major.
  std::vector<std::complex<double>> g(static_cast<std::size_t>(dim) * rank);
  for (auto& e : g) {
    e = rng.next_complex_gaussian();
  }

  ComplexMatrix rho(dim);
  double tr = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      std::complex<double> sum(0.0, 0.0);
      for (int k = 0; k < rank; ++k) {
        sum += g[static_cast<std::size_t>(i) * rank + k] * std::conj(g[static_cast<std::size_t>(j) * rank + k]);
      }
      if (i == j) {
        rho(i, i) = std::complex<double>(sum.real(), 0.0);
        tr += sum.real();
      } else {
        rho(i, j) = sum;
        rho(j, i) = std::conj(sum);
      }
    }
  }
  const double inv = 1.0 / tr;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      rho(i, j) *= inv;
    }
  }
  return rho;
}

ComplexMatrix random_hermitian(int dim, double scale, RngSeed seed) {
  SplitMix64 rng(seed);
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      m(i, j) = scale * rng.next_complex_gaussian();
    }
  }
  ComplexMatrix result(dim);
  for (int i = 0; i < dim; ++i) {
    result(i, i) = std::complex<double>(m(i, i).real(), 0.0);
    for (int j = i + 1; j < dim; ++j) {
      const std::complex<double> avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      result(i, j) = avg;
      result(j, i) = std::conj(avg);
    }
  }
  return result;
}

ProbabilityGrid random_probability_grid(int n, int m, bool normalize, RngSeed seed) {
  SplitMix64 rng(seed);
  std::vector<double> values(static_cast<std::size_t>(n) * m);
  double sum = 0.0;
  for (auto& v : values) {
    v = rng.next_unit();
    sum += v;
  }
  if (normalize && sum > 0.0) {
    for (auto& v : values) {
      v /= sum;
    }
  }
  return ProbabilityGrid(n, m, std::move(values));
}

ComplexMatrix apply_permutation(const ComplexMatrix& rho, const std::vector<int>& perm) {
  const int dim = rho.dim();
  if (static_cast<int>(perm.size()) != dim) {
    throw NotAPermutationError("permutation length " + std::to_string(perm.size()) + " does not match dim " +
                               std::to_string(dim));
  }
  std::vector<bool> seen(static_cast<std::size_t>(dim), false);
  for (int image : perm) {
    if (image < 0 || image >= dim || seen[static_cast<std::size_t>(image)]) {
      throw NotAPermutationError("permutation is not a bijection on {0.." + std::to_string(dim - 1) + "}");
    }
    seen[static_cast<std::size_t>(image)] = true;
  }
  ComplexMatrix result(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      result(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) = rho(i, j);
    }
  }
  return result;
}

std::vector<int> random_permutation(int size, SplitMix64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    perm[static_cast<std::size_t>(i)] = i;
  }
  // Fisher-Yates; modulo bias is ~2^-60 for the sizes used here.
  for (int i = size - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  return perm;
}

}  // namespace trineq
