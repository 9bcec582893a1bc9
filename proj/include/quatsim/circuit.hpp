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

#ifndef QUATSIM_CIRCUIT_HPP
#define QUATSIM_CIRCUIT_HPP

#include <algorithm>
#include <span>
#include <unordered_map>
#include <vector>

#include "quatsim/matrix.hpp"
#include "quatsim/rng.hpp"

namespace quatsim {

/// A gate: a group-member matrix attached to an ascending list of wires.
/// Wires are 1-based and wire 1 is the most significant bit of the basis
/// index, so wire w contributes bit (width - w).
template <typename T>
struct Gate {
    int id = 0;
    std::vector<int> wires;
    Matrix<T> matrix;

    int degree() const {
        return static_cast<int>(wires.size());
    }
};

/// Gate ids and wire lists without the matrices. The topological-sort
/// machinery is domain-independent and works on this view.
struct CircuitShape {
    int width = 0;
    std::vector<int> ids;
    std::vector<std::vector<int>> wires;
};

/// A circuit is a multiset of gates on a fixed number of wires, partially
/// ordered by wire overlap: gates sharing a wire evaluate in insertion
/// order, disjoint gates are unordered. Insertion order is the gate list
/// order; it also serves as the tie-break for the default linearization.
template <typename T>
class Circuit {
   public:
    using value_type = T;

    explicit Circuit(int width) : width_(width) {
        if (width < 1) {
            throw DimensionError("circuit width must be at least 1");
        }
    }

    int width() const {
        return width_;
    }

    const std::vector<Gate<T>> &gates() const {
        return gates_;
    }

    const Gate<T> &gate_by_id(int id) const {
        auto it = index_by_id_.find(id);
        if (it == index_by_id_.end()) {
            throw SigmaError("unknown gate id " + std::to_string(id));
        }
        return gates_[it->second];
    }

    bool has_gate(int id) const {
        return index_by_id_.count(id) > 0;
    }

    /// Validates wires and group membership, then appends.
    void add_gate(Gate<T> g, double membership_tolerance = tol::kGateMembership) {
        if (index_by_id_.count(g.id)) {
            throw ParseError("duplicate gate id " + std::to_string(g.id));
        }
        if (g.wires.empty()) {
            throw ParseError("gate " + std::to_string(g.id) + " has no wires");
        }
        for (std::size_t i = 0; i < g.wires.size(); i++) {
            if (g.wires[i] < 1 || g.wires[i] > width_) {
                throw ParseError("gate " + std::to_string(g.id) + " wire out of range");
            }
            if (i > 0 && g.wires[i] <= g.wires[i - 1]) {
                throw ParseError("gate " + std::to_string(g.id) + " wires must be strictly ascending");
            }
        }
        std::size_t want = std::size_t{1} << g.wires.size();
        if (g.matrix.rows() != want || g.matrix.cols() != want) {
            throw DimensionError("gate " + std::to_string(g.id) + " matrix dimension does not match wire count");
        }
        if (!is_group_member(g.matrix, membership_tolerance)) {
            throw GateError("gate " + std::to_string(g.id) + " matrix is not a group member");
        }
        index_by_id_[g.id] = gates_.size();
        gates_.push_back(std::move(g));
    }

    CircuitShape shape() const {
        CircuitShape s;
        s.width = width_;
        s.ids.reserve(gates_.size());
        s.wires.reserve(gates_.size());
        for (const Gate<T> &g : gates_) {
            s.ids.push_back(g.id);
            s.wires.push_back(g.wires);
        }
        return s;
    }

   private:
    int width_;
    std::vector<Gate<T>> gates_;
    std::unordered_map<int, std::size_t> index_by_id_;
};

/// Smallest-id-first linearization (deterministic).
std::vector<int> default_topological_sort(const CircuitShape &shape);

/// All linearizations in lexicographic order by gate id. Throws CapError if
/// there are more than `cap`.
std::vector<std::vector<int>> enumerate_topological_sorts(const CircuitShape &shape, std::size_t cap);

/// Throws SigmaError unless sigma is a permutation of the gate ids that
/// respects the wire-overlap partial order.
void validate_topological_sort(const CircuitShape &shape, std::span<const int> sigma);

/// Uniformly random choice among the available gates at each step.
std::vector<int> random_topological_sort(const CircuitShape &shape, Rng &rng);

template <typename T>
std::vector<int> default_topological_sort(const Circuit<T> &c) {
    return default_topological_sort(c.shape());
}

template <typename T>
std::vector<std::vector<int>> enumerate_topological_sorts(const Circuit<T> &c, std::size_t cap) {
    return enumerate_topological_sorts(c.shape(), cap);
}

/// Casts every gate matrix up along real -> complex -> quaternion. The
/// shape, ids and partial order are unchanged.
template <typename To, typename From>
Circuit<To> circuit_widen(const Circuit<From> &c) {
    Circuit<To> out(c.width());
    for (const Gate<From> &g : c.gates()) {
        out.add_gate(Gate<To>{g.id, g.wires, matrix_widen<To>(g.matrix)});
    }
    return out;
}

/// A circuit together with a validated evaluation order.
template <typename T>
struct OrderedCircuit {
    Circuit<T> circuit;
    std::vector<int> sigma;

    static OrderedCircuit with_default_order(Circuit<T> c) {
        std::vector<int> sigma = default_topological_sort(c.shape());
        return {std::move(c), std::move(sigma)};
    }

    static OrderedCircuit with_order(Circuit<T> c, std::vector<int> sigma) {
        validate_topological_sort(c.shape(), sigma);
        return {std::move(c), std::move(sigma)};
    }
};

/// The gate's matrix acting on the full register: basis indices are permuted
/// so the gate's wires form the top block, the gate matrix is applied there,
/// and the permutation is undone. Equivalent to conjugating
/// (matrix kron identity) by a 0/1 swap network; realized directly on
/// indices, which is safe over any scalar.
template <typename T>
Matrix<T> in_context_operator(const Gate<T> &g, int width) {
    if (width > limits::kMaxOperatorWires) {
        throw CapError("in_context_operator: width exceeds the full-operator cap");
    }
    for (int w : g.wires) {
        if (w < 1 || w > width) {
            throw DimensionError("in_context_operator: gate wire outside register");
        }
    }
    int d = g.degree();
    std::size_t dim = std::size_t{1} << width;
    std::vector<int> gate_bits(g.wires.size());
    for (int b = 0; b < d; b++) {
        gate_bits[b] = width - g.wires[b];
    }
    std::vector<bool> is_gate_bit(width, false);
    for (int bit : gate_bits) {
        is_gate_bit[bit] = true;
    }
    std::vector<int> rest_bits;
    for (int bit = width - 1; bit >= 0; bit--) {
        if (!is_gate_bit[bit]) {
            rest_bits.push_back(bit);
        }
    }
    Matrix<T> out(dim, dim);
    std::size_t rest_count = std::size_t{1} << (width - d);
    std::size_t block = std::size_t{1} << d;
    for (std::size_t r = 0; r < rest_count; r++) {
        std::size_t base = 0;
        for (std::size_t p = 0; p < rest_bits.size(); p++) {
            if ((r >> (rest_bits.size() - 1 - p)) & 1) {
                base |= std::size_t{1} << rest_bits[p];
            }
        }
        std::vector<std::size_t> idx(block);
        for (std::size_t k = 0; k < block; k++) {
            std::size_t full = base;
            for (int b = 0; b < d; b++) {
                if ((k >> (d - 1 - b)) & 1) {
                    full |= std::size_t{1} << gate_bits[b];
                }
            }
            idx[k] = full;
        }
        for (std::size_t i = 0; i < block; i++) {
            for (std::size_t k = 0; k < block; k++) {
                out(idx[i], idx[k]) = g.matrix(i, k);
            }
        }
    }
    return out;
}

/// Product of the in-context operators in evaluation order: the first gate
/// of sigma ends up rightmost, so the operator acts on states the same way
/// running the circuit does. Over quaternions this depends on sigma.
template <typename T>
Matrix<T> ordered_operator(const OrderedCircuit<T> &oc) {
    int n = oc.circuit.width();
    if (n > limits::kMaxOperatorWires) {
        throw CapError("ordered_operator: width exceeds the full-operator cap");
    }
    Matrix<T> acc = Matrix<T>::identity(std::size_t{1} << n);
    for (int id : oc.sigma) {
        acc = matmul(in_context_operator(oc.circuit.gate_by_id(id), n), acc);
    }
    return acc;
}

}  // namespace quatsim

#endif
