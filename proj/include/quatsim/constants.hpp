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

#ifndef QUATSIM_CONSTANTS_HPP
#define QUATSIM_CONSTANTS_HPP

#include <cstddef>

namespace quatsim {

// Tolerances are pinned here and nowhere else. Tests and the verification
// suites reference these constants instead of restating literals.
namespace tol {

/// Scalar-level algebraic identities (conjugation, modulus, split rules).
inline constexpr double kScalarIdentity = 1e-12;

/// Matrix homomorphism identities of the three embeddings.
inline constexpr double kHomomorphism = 1e-11;

/// Compiled-circuit end-to-end agreement (operators, statistics, states).
inline constexpr double kEndToEnd = 1e-10;

/// Mutual agreement between the three top-wire initialization runs.
inline constexpr double kMutualEquality = 1e-12;

/// Group-membership check applied to every gate matrix on input.
inline constexpr double kGateMembership = 1e-9;

/// Group-membership required of freshly sampled random group elements.
inline constexpr double kRandomElement = 1e-10;

/// A gate is emitted without the top wire when its entries are real to
/// within this bound.
inline constexpr double kRealGateSkip = 1e-12;

/// Unit-norm requirement on anything labeled a state.
inline constexpr double kStateNorm = 1e-10;

/// Minimum distribution gap the demos must exhibit.
inline constexpr double kDistributionGap = 0.05;

/// Probabilities below this are omitted from serialized distributions.
inline constexpr double kProbFloor = 1e-15;

}  // namespace tol

namespace limits {

/// Widest circuit for which a full 2^n x 2^n operator is materialized.
inline constexpr int kMaxOperatorWires = 10;

/// Widest state the kernel simulator will allocate, per domain.
inline constexpr int kMaxStateWires = 20;
inline constexpr int kMaxStateWiresQuaternion = 18;

/// Default cap on enumerated topological sorts.
inline constexpr std::size_t kDefaultSortCap = 1024;

}  // namespace limits

}  // namespace quatsim

#endif
