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

#include "trineq/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace trineq {

namespace {

void require_positive_dim(int dim) {
  if (dim < 1) {
    throw DimensionMismatchError("matrix dimension must be >= 1, got " + std::to_string(dim));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  require_positive_dim(dim);
  entries_.assign(static_cast<std::size_t>(dim) * dim, value_type(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<value_type> entries) : dim_(dim), entries_(std::move(entries)) {
  require_positive_dim(dim);
  const std::size_t expected = static_cast<std::size_t>(dim) * dim;
  if (entries_.size() != expected) {
    throw DimensionMismatchError("expected " + std::to_string(expected) + " entries for a " + std::to_string(dim) +
                                 "x" + std::to_string(dim) + " matrix, got " + std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!std::isfinite(entries_[i].real()) || !std::isfinite(entries_[i].imag())) {
      throw Error("matrix entry " + std::to_string(i) + " is not finite");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix id(dim);
  for (int i = 0; i < dim; ++i) {
    id(i, i) = value_type(1.0, 0.0);
  }
  return id;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix result(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      result(j, i) = std::conj((*this)(i, j));
    }
  }
  return result;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (dim_ != rhs.dim_) {
    throw DimensionMismatchError("matrix addition requires equal dimensions");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] += rhs.entries_[i];
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (dim_ != rhs.dim_) {
    throw DimensionMismatchError("matrix subtraction requires equal dimensions");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] -= rhs.entries_[i];
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(value_type scalar) {
  for (auto& e : entries_) {
    e *= scalar;
  }
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim_ != rhs.dim_) {
    throw DimensionMismatchError("matrix product requires equal dimensions");
  }
  const int n = lhs.dim_;
  ComplexMatrix result(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const ComplexMatrix::value_type lik = lhs(i, k);
      if (lik == ComplexMatrix::value_type(0.0, 0.0)) {
        continue;
      }
      for (int j = 0; j < n; ++j) {
        result(i, j) += lik * rhs(k, j);
      }
    }
  }
  return result;
}

std::complex<double> trace(const ComplexMatrix& a) {
  std::complex<double> sum(0.0, 0.0);
  for (int i = 0; i < a.dim(); ++i) {
    sum += a(i, i);
  }
  return sum;
}

double max_abs(const ComplexMatrix& a) {
  double result = 0.0;
  for (const auto& e : a.entries()) {
    result = std::max(result, std::abs(e));
  }
  return result;
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const auto& e : a.entries()) {
    sum += std::norm(e);
  }
  return std::sqrt(sum);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError("max_abs_diff requires equal dimensions");
  }
  double result = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    result = std::max(result, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return result;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = i; j < a.dim(); ++j) {
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) {
        return false;
      }
    }
  }
  return true;
}

double hermiticity_tolerance(const ComplexMatrix& a) { return 1e-10 * std::max(1.0, max_abs(a)); }

}  // namespace trineq
