// Copyright 2026 The cvmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CVMAP_ERROR_H
#define CVMAP_ERROR_H

#include <stdexcept>
#include <string>

namespace cvmap {

/// Thrown when an operation is called outside its preconditions.
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a computed quantity fails a consistency check that should hold
/// to floating-point accuracy (e.g. a residual imaginary part).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Absolute tolerance for algebraic identities.
inline constexpr double kAlgebraTol = 1e-12;
/// Absolute tolerance for expectation values.
inline constexpr double kExpectationTol = 1e-10;

inline void require(bool condition, const std::string &message) {
    if (!condition) {
        throw InvalidArgument(message);
    }
}

}  // namespace cvmap

#endif
