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

#ifndef QUATSIM_DEMO_HPP
#define QUATSIM_DEMO_HPP

#include <utility>
#include <vector>

#include "quatsim/simulate.hpp"

namespace quatsim {

/// Measurement distributions of one circuit under every topological sort.
struct OrderingReport {
    int width = 0;
    std::vector<std::vector<int>> sigmas;
    std::vector<MeasurementDistribution> distributions;
    std::vector<std::vector<double>> distances;
    double max_distance = 0.0;
    std::size_t witness_a = 0;
    std::size_t witness_b = 0;
};

/// Runs the circuit under all topological sorts (capped) and tabulates the
/// pairwise L-infinity distances between the outcome distributions. Over
/// real or complex amplitudes the max distance is zero up to roundoff; a
/// positive spread is a strictly quaternionic effect.
template <typename T>
OrderingReport ordering_spread(const Circuit<T> &c, const StateVector<T> &input, std::size_t cap = limits::kDefaultSortCap) {
    OrderingReport report;
    report.width = c.width();
    report.sigmas = enumerate_topological_sorts(c.shape(), cap);
    for (const std::vector<int> &sigma : report.sigmas) {
        OrderedCircuit<T> oc{c, sigma};
        report.distributions.push_back(measure_all(run(oc, input)));
    }
    std::size_t k = report.distributions.size();
    report.distances.assign(k, std::vector<double>(k, 0.0));
    for (std::size_t a = 0; a < k; a++) {
        for (std::size_t b = a + 1; b < k; b++) {
            double d = linf_distance(report.distributions[a], report.distributions[b]);
            report.distances[a][b] = d;
            report.distances[b][a] = d;
            if (d > report.max_distance) {
                report.max_distance = d;
                report.witness_a = a;
                report.witness_b = b;
            }
        }
    }
    return report;
}

/// The shipped ordering witness: two wires, gate 1 = ROTQ_I on wire 1,
/// gate 2 = ROTQ_J on wire 2, gate 3 = ROTQ_I on wire 1 again. It has three
/// topological sorts and, from |00>, two distinct outcome distributions at
/// L-infinity distance 0.5.
Circuit<Quaternion> ordering_witness_circuit();

/// The same shape with the j-rotation replaced by an i-rotation, so every
/// entry is complex. Its spread is zero: ordering effects vanish as soon as
/// the amplitudes commute.
Circuit<Quaternion> ordering_witness_complex_control();

/// Expected witness distributions, frozen from brute-force amplitude
/// arithmetic, keyed by sigma (lexicographic order).
const std::vector<std::pair<std::vector<int>, std::vector<double>>> &ordering_witness_fixtures();

/// Bit commitment riding on order dependence. Committing to b means running
/// the two commit rotations (i on wire 1, j on wire 2) in one of the two
/// orders; before the opening rotation both orders give every party the
/// exact same statistics, and after it the two distributions separate by
/// 0.5.
struct CommitmentTranscript {
    int commit_bit = 0;
    std::vector<int> sigma_committed;
    std::vector<int> sigma_other;
    std::vector<double> opened_committed;
    std::vector<double> opened_other;
    double gap = 0.0;
    std::vector<double> alice_marginal_committed;
    std::vector<double> alice_marginal_other;
    std::vector<double> bob_marginal_committed;
    std::vector<double> bob_marginal_other;
    double pre_opening_distance = 0.0;
};

CommitmentTranscript bit_commitment_demo(int commit_bit);

/// Control transcript over commuting (complex) rotations: the gap collapses
/// to zero, pre-opening hiding trivially holds.
CommitmentTranscript bit_commitment_complex_control(int commit_bit);

}  // namespace quatsim

#endif
