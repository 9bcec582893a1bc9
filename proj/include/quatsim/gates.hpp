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

#ifndef QUATSIM_GATES_HPP
#define QUATSIM_GATES_HPP

#include <string_view>

#include "quatsim/matrix.hpp"

namespace quatsim {

/// True if `name` is one of the builtin gate names:
/// H X Y Z S T CNOT SWAP TOFFOLI PHASE_J ROTQ_I ROTQ_J.
bool is_builtin_gate(std::string_view name);

/// The builtin's matrix over domain T. Throws ParseError when the name is
/// unknown or the gate has components outside T (e.g. ROTQ_J over complex).
/// Entries are exact literals, so narrowing checks are exact too.
template <typename T>
Matrix<T> builtin_gate(std::string_view name);

template <>
Matrix<double> builtin_gate<double>(std::string_view);
template <>
Matrix<std::complex<double>> builtin_gate<std::complex<double>>(std::string_view);
template <>
Matrix<Quaternion> builtin_gate<Quaternion>(std::string_view);

}  // namespace quatsim

#endif
