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

#include "quatsim/demo.hpp"

#include "quatsim/gates.hpp"

namespace quatsim {

namespace {

Circuit<Quaternion> witness_shape(const char *second_gate) {
    Circuit<Quaternion> c(2);
    c.add_gate({1, {1}, builtin_gate<Quaternion>("ROTQ_I")});
    c.add_gate({2, {2}, builtin_gate<Quaternion>(second_gate)});
    c.add_gate({3, {1}, builtin_gate<Quaternion>("ROTQ_I")});
    return c;
}

CommitmentTranscript commitment_impl(int commit_bit, const char *second_gate) {
    if (commit_bit != 0 && commit_bit != 1) {
        throw DemoError("commit bit must be 0 or 1");
    }
    Circuit<Quaternion> c = witness_shape(second_gate);
    StateVector<Quaternion> input = StateVector<Quaternion>::basis(2, 0);
    // Commit phase: the two rotations in the order chosen by the bit. The
    // opening rotation (gate 3) runs last in both branches.
    std::vector<int> sigma0{1, 2, 3};
    std::vector<int> sigma1{2, 1, 3};

    CommitmentTranscript t;
    t.commit_bit = commit_bit;
    t.sigma_committed = commit_bit == 0 ? sigma0 : sigma1;
    t.sigma_other = commit_bit == 0 ? sigma1 : sigma0;

    // The commit phase runs only gates 1 and 2; the opening rotation is
    // withheld until both parties have fixed their records.
    Circuit<Quaternion> commit_c(2);
    commit_c.add_gate(c.gates()[0]);
    commit_c.add_gate(c.gates()[1]);
    auto pre_opening = [&](const std::vector<int> &sigma) {
        std::vector<int> commit_only(sigma.begin(), sigma.end() - 1);
        OrderedCircuit<Quaternion> oc = OrderedCircuit<Quaternion>::with_order(commit_c, commit_only);
        return measure_all(run(oc, input));
    };
    MeasurementDistribution pre_committed = pre_opening(t.sigma_committed);
    MeasurementDistribution pre_other = pre_opening(t.sigma_other);
    t.alice_marginal_committed = marginal(pre_committed, {1}).probs;
    t.alice_marginal_other = marginal(pre_other, {1}).probs;
    t.bob_marginal_committed = marginal(pre_committed, {2}).probs;
    t.bob_marginal_other = marginal(pre_other, {2}).probs;
    t.pre_opening_distance = std::max(
        linf_distance(t.alice_marginal_committed, t.alice_marginal_other),
        linf_distance(t.bob_marginal_committed, t.bob_marginal_other));

    auto opened = [&](const std::vector<int> &sigma) {
        OrderedCircuit<Quaternion> oc = OrderedCircuit<Quaternion>::with_order(c, sigma);
        return measure_all(run(oc, input)).probs;
    };
    t.opened_committed = opened(t.sigma_committed);
    t.opened_other = opened(t.sigma_other);
    t.gap = linf_distance(t.opened_committed, t.opened_other);
    return t;
}

}  // namespace

Circuit<Quaternion> ordering_witness_circuit() {
    return witness_shape("ROTQ_J");
}

Circuit<Quaternion> ordering_witness_complex_control() {
    return witness_shape("ROTQ_I");
}

const std::vector<std::pair<std::vector<int>, std::vector<double>>> &ordering_witness_fixtures() {
    // Frozen by brute-force amplitude arithmetic. From |00>:
    //   1,2,3: (1/sqrt2)(j|01> + i|10>)
    //   1,3,2: (1/sqrt2)(i|10> - k|11>)
    //   2,1,3: (1/sqrt2)(i|10> + k|11>)
    static const std::vector<std::pair<std::vector<int>, std::vector<double>>> fixtures = {
        {{1, 2, 3}, {0.0, 0.5, 0.5, 0.0}},
        {{1, 3, 2}, {0.0, 0.0, 0.5, 0.5}},
        {{2, 1, 3}, {0.0, 0.0, 0.5, 0.5}},
    };
    return fixtures;
}

CommitmentTranscript bit_commitment_demo(int commit_bit) {
    return commitment_impl(commit_bit, "ROTQ_J");
}

CommitmentTranscript bit_commitment_complex_control(int commit_bit) {
    return commitment_impl(commit_bit, "ROTQ_I");
}

}  // namespace quatsim
