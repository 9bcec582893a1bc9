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

#ifndef QUATSIM_SIMULATE_HPP
#define QUATSIM_SIMULATE_HPP

#include <algorithm>
#include <vector>

#include "quatsim/circuit.hpp"

namespace quatsim {

/// Probabilities over all 2^wires outcomes, indexed by basis index
/// (wire 1 = most significant bit).
struct MeasurementDistribution {
    int wires = 0;
    std::vector<double> probs;
};

/// Distribution over the kept wires only, ascending wire order.
struct Marginal {
    std::vector<int> kept;
    std::vector<double> probs;
};

inline double linf_distance(const std::vector<double> &a, const std::vector<double> &b) {
    if (a.size() != b.size()) {
        throw DimensionError("linf_distance: lengths differ");
    }
    double best = 0.0;
    for (std::size_t i = 0; i < a.size(); i++) {
        best = std::max(best, std::fabs(a[i] - b[i]));
    }
    return best;
}

inline double linf_distance(const MeasurementDistribution &a, const MeasurementDistribution &b) {
    return linf_distance(a.probs, b.probs);
}

namespace detail {

/// Applies a gate in place: gathers each 2^d-amplitude slice indexed by the
/// gate's wires and left-multiplies it by the gate matrix. new_i is
/// sum_k U(i, k) * old_k; the gate entry multiplies from the left, which is
/// the quaternionic evaluation order.
template <typename T>
void apply_gate_in_place(std::vector<T> &amps, const Gate<T> &g, int width) {
    int d = g.degree();
    std::vector<std::size_t> stride(d);
    std::vector<bool> is_gate_bit(width, false);
    for (int b = 0; b < d; b++) {
        int bit = width - g.wires[b];
        stride[b] = std::size_t{1} << bit;
        is_gate_bit[bit] = true;
    }
    std::vector<std::size_t> rest_strides;
    for (int bit = 0; bit < width; bit++) {
        if (!is_gate_bit[bit]) {
            rest_strides.push_back(std::size_t{1} << bit);
        }
    }
    std::size_t block = std::size_t{1} << d;
    std::vector<std::size_t> offsets(block);
    for (std::size_t k = 0; k < block; k++) {
        std::size_t off = 0;
        for (int b = 0; b < d; b++) {
            if ((k >> (d - 1 - b)) & 1) {
                off |= stride[b];
            }
        }
        offsets[k] = off;
    }
    std::vector<T> old_block(block);
    std::size_t rest_count = std::size_t{1} << rest_strides.size();
    for (std::size_t r = 0; r < rest_count; r++) {
        std::size_t base = 0;
        for (std::size_t p = 0; p < rest_strides.size(); p++) {
            if ((r >> p) & 1) {
                base |= rest_strides[p];
            }
        }
        for (std::size_t k = 0; k < block; k++) {
            old_block[k] = amps[base + offsets[k]];
        }
        for (std::size_t i = 0; i < block; i++) {
            T acc = ScalarTraits<T>::zero();
            for (std::size_t k = 0; k < block; k++) {
                acc += g.matrix(i, k) * old_block[k];
            }
            amps[base + offsets[i]] = acc;
        }
    }
}

template <typename T>
constexpr int max_state_wires() {
    if constexpr (std::is_same_v<T, Quaternion>) {
        return limits::kMaxStateWiresQuaternion;
    } else {
        return limits::kMaxStateWires;
    }
}

}  // namespace detail

/// Runs the circuit on a unit input state, applying gates in sigma order.
template <typename T>
StateVector<T> run(const OrderedCircuit<T> &oc, const StateVector<T> &input) {
    int n = oc.circuit.width();
    if (n > detail::max_state_wires<T>()) {
        throw CapError("run: circuit is wider than the state cap");
    }
    if (input.dim() != (std::size_t{1} << n)) {
        throw DimensionError("run: input dimension does not match circuit width");
    }
    require_unit_norm(input, "run");
    StateVector<T> state = input;
    for (int id : oc.sigma) {
        detail::apply_gate_in_place(state.amps, oc.circuit.gate_by_id(id), n);
    }
    return state;
}

/// Born probabilities: prob(b) = |amp_b|^2 with the domain's modulus.
template <typename T>
MeasurementDistribution measure_all(const StateVector<T> &v, double norm_tolerance = tol::kStateNorm) {
    require_unit_norm(v, "measure_all", norm_tolerance);
    MeasurementDistribution dist;
    dist.wires = v.wires();
    dist.probs.resize(v.dim());
    for (std::size_t i = 0; i < v.dim(); i++) {
        dist.probs[i] = ScalarTraits<T>::abs_sq(v.amps[i]);
    }
    return dist;
}

/// Sums out the dropped wires. `keep` must be non-empty, ascending and
/// within range; the output is indexed by the kept wires in that order.
inline Marginal marginal(const MeasurementDistribution &dist, const std::vector<int> &keep) {
    if (keep.empty()) {
        throw DimensionError("marginal: keep set must be non-empty");
    }
    for (std::size_t i = 0; i < keep.size(); i++) {
        if (keep[i] < 1 || keep[i] > dist.wires) {
            throw DimensionError("marginal: kept wire out of range");
        }
        if (i > 0 && keep[i] <= keep[i - 1]) {
            throw DimensionError("marginal: kept wires must be strictly ascending");
        }
    }
    Marginal out;
    out.kept = keep;
    out.probs.assign(std::size_t{1} << keep.size(), 0.0);
    for (std::size_t idx = 0; idx < dist.probs.size(); idx++) {
        std::size_t sub = 0;
        for (std::size_t p = 0; p < keep.size(); p++) {
            std::size_t bit = (idx >> (dist.wires - keep[p])) & 1;
            sub = (sub << 1) | bit;
        }
        out.probs[sub] += dist.probs[idx];
    }
    return out;
}

/// Rank-one density matrix rho_ik = amp_i * conj(amp_k). Hermitian with
/// real diagonal equal to measure_all in every domain.
template <typename T>
Matrix<T> density(const StateVector<T> &v) {
    require_unit_norm(v, "density");
    Matrix<T> out(v.dim(), v.dim());
    for (std::size_t i = 0; i < v.dim(); i++) {
        for (std::size_t k = 0; k < v.dim(); k++) {
            out(i, k) = v.amps[i] * ScalarTraits<T>::conjugate(v.amps[k]);
        }
    }
    return out;
}

}  // namespace quatsim

#endif
