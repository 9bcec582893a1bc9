// Copyright 2026 The quatsim Authors
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

#ifndef QUATSIM_ERRORS_HPP
#define QUATSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quatsim {

/// Base class for all quatsim errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, unknown fields, wrong scalar format, bad wires.
struct ParseError : Error {
    using Error::Error;
};

/// Shape mismatch between operands (matrix dims, state dims, wire counts).
struct DimensionError : Error {
    using Error::Error;
};

/// An evaluation order that is not a topological sort of the circuit.
struct SigmaError : Error {
    using Error::Error;
};

/// A gate matrix that fails the group-membership check.
struct GateError : Error {
    using Error::Error;
};

/// Embedding applied to a circuit of an incompatible domain.
struct EmbeddingError : Error {
    using Error::Error;
};

/// Unknown demo name.
struct DemoError : Error {
    using Error::Error;
};

/// A size cap was exceeded (operator width, sort enumeration).
struct CapError : Error {
    using Error::Error;
};

}  // namespace quatsim

#endif
