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

#ifndef QUATSIM_VERIFY_HPP
#define QUATSIM_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "quatsim/embedding.hpp"

namespace quatsim {

struct VerifyOptions {
    uint64_t seed = 1;
    int trials = 100;
    /// Test hook: perturb one embedded matrix entry by 1e-3 so the
    /// homomorphism suites must fail. Used by the negative-control tests.
    bool corrupt = false;
};

/// One named numerical check. `at_least` flips the pass sense: demo-gap
/// suites pass when the measured value is at least the threshold.
struct SuiteResult {
    std::string name;
    bool pass = false;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool at_least = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<SuiteResult> suites;

    bool all_pass() const {
        for (const SuiteResult &s : suites) {
            if (!s.pass) {
                return false;
            }
        }
        return true;
    }
};

/// Runs every verification suite. Deterministic for fixed options.
VerifyReport run_verification(const VerifyOptions &options);

nlohmann::json verify_report_to_json(const VerifyReport &report);

/// The random circuit corpora the end-to-end suites run on. Exposed so the
/// acceptance harness can reuse exactly the corpus the suites saw.
/// Complex: 20 circuits, 2..5 wires, 1..15 gates drawn from H, S, T, CNOT
/// and Haar-random one-wire unitaries; default evaluation order.
std::vector<OrderedCircuit<std::complex<double>>> complex_verification_corpus(uint64_t seed);

/// Quaternionic: 20 circuits, 1..3 wires, 1..10 Haar-random one-wire
/// symplectic gates; uniformly random evaluation order.
std::vector<OrderedCircuit<Quaternion>> quaternion_verification_corpus(uint64_t seed);

}  // namespace quatsim

#endif
