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

#include <stdexcept>
#include <string>

namespace trineq {

/// Base class for all trineq errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitianError : Error {
  using Error::Error;
};
struct NoConvergenceError : Error {
  using Error::Error;
};
struct NotPositiveSemidefiniteError : Error {
  using Error::Error;
};
struct DimensionMismatchError : Error {
  using Error::Error;
};
struct IndexOutOfRangeError : Error {
  using Error::Error;
};
struct PartitionTooSmallError : Error {
  using Error::Error;
};
struct NotDensityMatrixError : Error {
  using Error::Error;
};
struct ShiftInsufficientError : Error {
  using Error::Error;
};
struct ExponentOutOfRangeError : Error {
  using Error::Error;
};
struct TooManyPermutationsError : Error {
  using Error::Error;
};
struct InvalidGridError : Error {
  using Error::Error;
};
struct NotNormalizedError : Error {
  using Error::Error;
};
struct BadRankError : Error {
  using Error::Error;
};
struct NotAPermutationError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace trineq
