// Copyright 2026 The cvlc Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cvlc {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

/// An operation that is only defined on unweighted graphs received a weighted one.
struct WeightedInput : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

/// Nullifier basis failed the isotropy check. Indicates a bug upstream of the caller.
struct NotLagrangian : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// Malformed text input. `position` is a 0-based character offset into the input.
struct ParseError : Error {
    ParseError(const std::string &message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"), position(position) {
    }
    std::size_t position;
};

}  // namespace cvlc
