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

#include "trineq/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace trineq {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalFactor = 1e-12;  // threshold is this times ||A||_F
constexpr double kZeroSnapFactor = 1e-14;     // zero-eigenvalue noise band, times max(1, ||A||_max)

using cplx = std::complex<double>;

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = i + 1; j < a.dim(); ++j) {
      sum += 2.0 * std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// One two-sided rotation zeroing a(p,q). The plane rotation G combines the
// phase of a(p,q) with a real Jacobi angle, so G† A G stays Hermitian and
// gets a real diagonal.
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const cplx beta = a(p, q);
  const double beta_abs = std::abs(beta);
  if (beta_abs == 0.0) {
    return;
  }
  const cplx phase = beta / beta_abs;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * beta_abs);

  // Smaller root of t^2 + 2*theta*t - 1 = 0; asymptotic form avoids
  // overflow of theta^2.
  double t;
  if (std::abs(theta) > 1e154) {
    t = 1.0 / (2.0 * theta);
  } else {
    const double sgn = theta >= 0.0 ? 1.0 : -1.0;
    t = sgn / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const cplx conj_phase = std::conj(phase);
  const int n = a.dim();

  // Diagonal update in closed form keeps the diagonal exactly real.
  a(p, p) = cplx(app - t * beta_abs, 0.0);
  a(q, q) = cplx(aqq + t * beta_abs, 0.0);
  a(p, q) = cplx(0.0, 0.0);
  a(q, p) = cplx(0.0, 0.0);

  for (int i = 0; i < n; ++i) {
    if (i == p || i == q) {
      continue;
    }
    const cplx aip = a(i, p);
    const cplx aiq = a(i, q);
    const cplx new_ip = c * aip - s * conj_phase * aiq;
    const cplx new_iq = s * aip + c * conj_phase * aiq;
    a(i, p) = new_ip;
    a(i, q) = new_iq;
    a(p, i) = std::conj(new_ip);
    a(q, i) = std::conj(new_iq);
  }

  for (int i = 0; i < n; ++i) {
    const cplx vip = v(i, p);
    const cplx viq = v(i, q);
    v(i, p) = c * vip - s * conj_phase * viq;
    v(i, q) = s * vip + c * conj_phase * viq;
  }
}

}  // namespace

HermitianEigensystem hermitian_eigendecomposition(const ComplexMatrix& input) {
  if (!is_hermitian(input, hermiticity_tolerance(input))) {
    throw NotHermitianError("hermitian_eigendecomposition: input is not Hermitian within tolerance");
  }
  const int n = input.dim();

  // Symmetrize so the iteration sees an exactly Hermitian matrix.
  ComplexMatrix a(n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = cplx(input(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      const cplx avg = 0.5 * (input(i, j) + std::conj(input(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }

  ComplexMatrix v = ComplexMatrix::identity(n);
  const double stop = kOffDiagonalFactor * frobenius_norm(a);

  bool converged = off_diagonal_norm(a) <= stop;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        rotate(a, v, p, q);
      }
    }
    converged = off_diagonal_norm(a) <= stop;
  }
  if (!converged) {
    throw NoConvergenceError("hermitian_eigendecomposition: no convergence in " + std::to_string(kMaxSweeps) +
                             " sweeps");
  }

  // Ascending eigenvalue order; ties keep the rotation scheme's index order.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int lhs, int rhs) { return a(lhs, lhs).real() < a(rhs, rhs).real(); });

  HermitianEigensystem result{std::vector<double>(static_cast<std::size_t>(n)), ComplexMatrix(n)};
  for (int k = 0; k < n; ++k) {
    result.eigenvalues[static_cast<std::size_t>(k)] = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]).real();
    for (int i = 0; i < n; ++i) {
      result.eigenvectors(i, k) = v(i, order[static_cast<std::size_t>(k)]);
    }
  }
  return result;
}

double min_eigenvalue(const ComplexMatrix& a) { return hermitian_eigendecomposition(a).eigenvalues.front(); }

double clip_tolerance(const ComplexMatrix& a) { return 1e-10 * std::max(1.0, max_abs(a)); }

ComplexMatrix matrix_power(const ComplexMatrix& a, double p) {
  if (!(p > 0.0)) {
    throw ExponentOutOfRangeError("matrix_power requires p > 0");
  }
  const HermitianEigensystem eig = hermitian_eigendecomposition(a);
  const double clip = clip_tolerance(a);
  const bool integer_p = p == std::floor(p);

  const int n = a.dim();
  const double snap = kZeroSnapFactor * std::max(1.0, max_abs(a));
  std::vector<double> powered(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double lambda = eig.eigenvalues[static_cast<std::size_t>(k)];
    if (lambda < -clip && !integer_p) {
      throw NotPositiveSemidefiniteError("matrix_power: eigenvalue " + std::to_string(lambda) +
                                         " below -" + std::to_string(clip) + " with non-integer exponent");
    }
    if (lambda < 0.0 && lambda >= -clip) {
      lambda = 0.0;  // round-off beyond the PSD boundary
    } else if (lambda >= 0.0 && lambda <= snap) {
      // Positive round-off on a true zero must be snapped too: a p-th root
      // would amplify eps to eps^(1/p) and wreck equality cases for
      // rank-deficient input. The band sits well above the eigensolver's
      // noise floor (~1e-15) and below any eigenvalue power that survives
      // in double precision.
      lambda = 0.0;
    }
    powered[static_cast<std::size_t>(k)] = std::pow(lambda, p);
  }

  ComplexMatrix result(n);
  const ComplexMatrix& u = eig.eigenvectors;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      cplx sum(0.0, 0.0);
      for (int k = 0; k < n; ++k) {
        sum += powered[static_cast<std::size_t>(k)] * u(i, k) * std::conj(u(j, k));
      }
      result(i, j) = sum;
      if (i != j) {
        result(j, i) = std::conj(sum);
      } else {
        result(i, i) = cplx(sum.real(), 0.0);
      }
    }
  }
  return result;
}

}  // namespace trineq
