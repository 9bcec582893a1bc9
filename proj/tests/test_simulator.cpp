// Copyright 2026 The quatsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "quatsim/gates.hpp"
#include "quatsim/simulate.hpp"

namespace quatsim {
namespace {

using Cx = std::complex<double>;

template <typename T>
Gate<T> gate(int id, std::vector<int> wires, Matrix<T> m) {
    return Gate<T>{id, std::move(wires), std::move(m)};
}

template <typename T>
Circuit<T> random_circuit(int width, int n_gates, Rng &rng) {
    Circuit<T> c(width);
    for (int g = 1; g <= n_gates; g++) {
        int degree = (width >= 2 && rng.below(2) == 0) ? 2 : 1;
        std::vector<int> wires;
        if (degree == 1) {
            wires = {1 + static_cast<int>(rng.below(width))};
        } else {
            int a = 1 + static_cast<int>(rng.below(width - 1));
            int b = a + 1 + static_cast<int>(rng.below(width - a));
            wires = {a, b};
        }
        c.add_gate(gate(g, wires, random_group_element<T>(std::size_t{1} << degree, rng)));
    }
    return c;
}

TEST_SUITE("simulator") {
    TEST_CASE("hadamard on the ground state") {
        Circuit<double> c(1);
        c.add_gate(gate(1, {1}, builtin_gate<double>("H")));
        StateVector<double> out = run(OrderedCircuit<double>::with_default_order(c), StateVector<double>::basis(1, 0));
        const double s = std::sqrt(0.5);
        CHECK(out.amps[0] == doctest::Approx(s));
        CHECK(out.amps[1] == doctest::Approx(s));
        MeasurementDistribution dist = measure_all(out);
        CHECK(dist.probs[0] == doctest::Approx(0.5));
        CHECK(dist.probs[1] == doctest::Approx(0.5));
    }

    TEST_CASE("empty circuit is the identity") {
        Circuit<Cx> c(2);
        StateVector<Cx> in = StateVector<Cx>::basis(2, 2);
        CHECK(run(OrderedCircuit<Cx>::with_default_order(c), in) == in);
    }

    TEST_CASE("wire 1 is the most significant bit") {
        Circuit<double> c(2);
        c.add_gate(gate(1, {2}, builtin_gate<double>("X")));
        StateVector<double> out = run(OrderedCircuit<double>::with_default_order(c), StateVector<double>::basis(2, 0));
        CHECK(out == StateVector<double>::basis(2, 1));  // |00> -> |01>

        Circuit<double> c2(2);
        c2.add_gate(gate(1, {1}, builtin_gate<double>("X")));
        c2.add_gate(gate(2, {1, 2}, builtin_gate<double>("CNOT")));
        StateVector<double> out2 = run(OrderedCircuit<double>::with_default_order(c2), StateVector<double>::basis(2, 0));
        CHECK(out2 == StateVector<double>::basis(2, 3));  // X then CNOT: |00> -> |11>
    }

    TEST_CASE("bell pair") {
        Circuit<double> c(2);
        c.add_gate(gate(1, {1}, builtin_gate<double>("H")));
        c.add_gate(gate(2, {1, 2}, builtin_gate<double>("CNOT")));
        StateVector<double> out = run(OrderedCircuit<double>::with_default_order(c), StateVector<double>::basis(2, 0));
        MeasurementDistribution dist = measure_all(out);
        CHECK(dist.probs[0] == doctest::Approx(0.5));
        CHECK(dist.probs[1] == doctest::Approx(0.0));
        CHECK(dist.probs[2] == doctest::Approx(0.0));
        CHECK(dist.probs[3] == doctest::Approx(0.5));
    }

    TEST_CASE("quaternionic two-rotation state, both orders") {
        // ROTQ_I on wire 1 then ROTQ_J on wire 2 from |00>:
        //   (1/2)(|00> + j|01> + i|10> + ji|11>), ji = -k because the j
        //   rotation runs second and its entries multiply from the left.
        Circuit<Quaternion> c(2);
        c.add_gate(gate(1, {1}, builtin_gate<Quaternion>("ROTQ_I")));
        c.add_gate(gate(2, {2}, builtin_gate<Quaternion>("ROTQ_J")));
        StateVector<Quaternion> in = StateVector<Quaternion>::basis(2, 0);

        StateVector<Quaternion> ij = run(OrderedCircuit<Quaternion>::with_order(c, {1, 2}), in);
        CHECK(abs(ij.amps[0] - Quaternion{0.5}) <= 1e-12);
        CHECK(abs(ij.amps[1] - 0.5 * kQuatJ) <= 1e-12);
        CHECK(abs(ij.amps[2] - 0.5 * kQuatI) <= 1e-12);
        CHECK(abs(ij.amps[3] - (-0.5) * kQuatK) <= 1e-12);

        StateVector<Quaternion> ji = run(OrderedCircuit<Quaternion>::with_order(c, {2, 1}), in);
        CHECK(abs(ji.amps[3] - 0.5 * kQuatK) <= 1e-12);

        // The two orders disagree at the state level by a full unit even
        // though every outcome probability is 1/4 for both.
        CHECK(max_abs_diff(ij, ji) == doctest::Approx(1.0));
        CHECK(linf_distance(measure_all(ij), measure_all(ji)) <= 1e-12);
    }

    TEST_CASE("kernel agrees with the full ordered operator") {
        Rng rng(61);
        for (int t = 0; t < 6; t++) {
            int width = 2 + static_cast<int>(rng.below(2));
            auto check_domain = [&](auto tag) {
                using T = decltype(tag);
                Circuit<T> c = random_circuit<T>(width, 5, rng);
                Rng order_rng(rng.raw());
                std::vector<int> sigma = random_topological_sort(c.shape(), order_rng);
                OrderedCircuit<T> oc = OrderedCircuit<T>::with_order(c, sigma);
                StateVector<T> in = random_state<T>(std::size_t{1} << width, rng);
                StateVector<T> fast = run(oc, in);
                StateVector<T> slow = quatsim::apply(ordered_operator(oc), in);
                CHECK(max_abs_diff(fast, slow) <= 1e-12);
                CHECK(std::fabs(fast.norm() - 1.0) <= 1e-12);
            };
            check_domain(double{});
            check_domain(Cx{});
            check_domain(Quaternion{});
        }
    }

    TEST_CASE("wider register against the full operator") {
        Rng rng(62);
        Circuit<Cx> c = random_circuit<Cx>(5, 20, rng);
        OrderedCircuit<Cx> oc = OrderedCircuit<Cx>::with_default_order(c);
        StateVector<Cx> in = random_state<Cx>(32, rng);
        CHECK(max_abs_diff(run(oc, in), quatsim::apply(ordered_operator(oc), in)) <= 1e-10);
    }

    TEST_CASE("run validates input") {
        Circuit<double> c(2);
        OrderedCircuit<double> oc = OrderedCircuit<double>::with_default_order(c);
        CHECK_THROWS_AS(run(oc, StateVector<double>::basis(3, 0)), DimensionError);
        CHECK_THROWS_AS(run(oc, StateVector<double>(4)), DimensionError);  // zero norm

        Circuit<double> wide(limits::kMaxStateWires + 1);
        CHECK_THROWS_AS(
            run(OrderedCircuit<double>::with_default_order(wide),
                StateVector<double>::basis(limits::kMaxStateWires + 1, 0)),
            CapError);
        Circuit<Quaternion> wide_q(limits::kMaxStateWiresQuaternion + 1);
        CHECK_THROWS_AS(
            run(OrderedCircuit<Quaternion>::with_default_order(wide_q),
                StateVector<Quaternion>::basis(limits::kMaxStateWiresQuaternion + 1, 0)),
            CapError);
    }

    TEST_CASE("marginals sum out dropped wires") {
        MeasurementDistribution dist;
        dist.wires = 2;
        dist.probs = {0.1, 0.2, 0.3, 0.4};
        Marginal keep1 = marginal(dist, {1});
        CHECK(keep1.probs[0] == doctest::Approx(0.3));
        CHECK(keep1.probs[1] == doctest::Approx(0.7));
        Marginal keep2 = marginal(dist, {2});
        CHECK(keep2.probs[0] == doctest::Approx(0.4));
        CHECK(keep2.probs[1] == doctest::Approx(0.6));
        Marginal both = marginal(dist, {1, 2});
        CHECK(both.probs == dist.probs);

        CHECK_THROWS_AS(marginal(dist, {}), DimensionError);
        CHECK_THROWS_AS(marginal(dist, {2, 1}), DimensionError);
        CHECK_THROWS_AS(marginal(dist, {1, 1}), DimensionError);
        CHECK_THROWS_AS(marginal(dist, {3}), DimensionError);
    }

    TEST_CASE("marginal against a direct index-sum oracle") {
        Rng rng(63);
        MeasurementDistribution dist;
        dist.wires = 3;
        dist.probs.resize(8);
        double total = 0.0;
        for (double &p : dist.probs) {
            p = rng.uniform();
            total += p;
        }
        for (double &p : dist.probs) {
            p /= total;
        }
        Marginal got = marginal(dist, {1, 3});
        std::vector<double> want(4, 0.0);
        for (std::size_t idx = 0; idx < 8; idx++) {
            std::size_t sub = ((idx >> 2) & 1) << 1 | (idx & 1);
            want[sub] += dist.probs[idx];
        }
        for (std::size_t i = 0; i < 4; i++) {
            CHECK(got.probs[i] == doctest::Approx(want[i]).epsilon(1e-12));
        }
    }

    TEST_CASE("density matrices") {
        StateVector<double> plus(2);
        plus.amps = {std::sqrt(0.5), std::sqrt(0.5)};
        Matrix<double> rho = density(plus);
        CHECK(rho(0, 0) == doctest::Approx(0.5));
        CHECK(rho(0, 1) == doctest::Approx(0.5));

        // Quaternionic example: (1/sqrt(2))(|0> + j|1>). Off-diagonals pick
        // up the conjugation on the right factor.
        StateVector<Quaternion> v(2);
        v.amps = {Quaternion{std::sqrt(0.5)}, kQuatJ * std::sqrt(0.5)};
        Matrix<Quaternion> sigma = density(v);
        CHECK(abs(sigma(0, 1) - (-0.5) * kQuatJ) <= 1e-12);
        CHECK(abs(sigma(1, 0) - 0.5 * kQuatJ) <= 1e-12);

        Rng rng(64);
        for (int t = 0; t < 5; t++) {
            StateVector<Quaternion> r = random_state<Quaternion>(8, rng);
            Matrix<Quaternion> d = density(r);
            CHECK(max_abs_diff(adjoint(d), d) <= 1e-12);
            CHECK(abs(trace(d) - Quaternion{1}) <= 1e-12);
            MeasurementDistribution m = measure_all(r);
            for (std::size_t i = 0; i < 8; i++) {
                CHECK(std::fabs(d(i, i).a0 - m.probs[i]) <= 1e-12);
                CHECK(nonreal_magnitude(d(i, i)) <= 1e-12);
            }
            // Tracing out the first wire then measuring matches the
            // marginal onto the remaining wires.
            Matrix<Quaternion> reduced = partial_trace_first(d);
            Marginal keep = marginal(m, {2, 3});
            for (std::size_t i = 0; i < 4; i++) {
                CHECK(std::fabs(reduced(i, i).a0 - keep.probs[i]) <= 1e-12);
            }
        }
    }

    TEST_CASE("measure_all requires unit norm") {
        StateVector<double> v(2);
        v.amps = {0.5, 0.5};
        CHECK_THROWS_AS(measure_all(v), DimensionError);
        CHECK_THROWS_AS(density(v), DimensionError);
    }

    TEST_CASE("distribution distance") {
        CHECK(linf_distance({0.5, 0.5}, {0.0, 1.0}) == doctest::Approx(0.5));
        CHECK_THROWS_AS(linf_distance({0.5}, {0.5, 0.0}), DimensionError);
    }
}

}  // namespace
}  // namespace quatsim
