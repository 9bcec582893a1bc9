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

#include "quatsim/gates.hpp"

#include <array>
#include <cmath>
#include <string>

namespace quatsim {

namespace {

Matrix<Quaternion> from_rows(std::size_t n, std::initializer_list<Quaternion> entries) {
    Matrix<Quaternion> m(n, n);
    std::size_t i = 0;
    for (const Quaternion &q : entries) {
        m.entries()[i++] = q;
    }
    return m;
}

Matrix<Quaternion> permutation8(std::array<std::size_t, 8> images) {
    Matrix<Quaternion> m(8, 8);
    for (std::size_t col = 0; col < 8; col++) {
        m(images[col], col) = Quaternion{1.0};
    }
    return m;
}

// Master table over quaternions; the narrower domains are exact-component
// restrictions of these.
Matrix<Quaternion> master_gate(std::string_view name) {
    const double s = std::sqrt(0.5);
    const Quaternion one{1.0};
    const Quaternion mone{-1.0};
    const Quaternion zero{};
    const Quaternion i{0, 1, 0, 0};
    const Quaternion j{0, 0, 1, 0};
    if (name == "H") {
        return from_rows(2, {Quaternion{s}, Quaternion{s}, Quaternion{s}, Quaternion{-s}});
    }
    if (name == "X") {
        return from_rows(2, {zero, one, one, zero});
    }
    if (name == "Y") {
        return from_rows(2, {zero, -i, i, zero});
    }
    if (name == "Z") {
        return from_rows(2, {one, zero, zero, mone});
    }
    if (name == "S") {
        return from_rows(2, {one, zero, zero, i});
    }
    if (name == "T") {
        return from_rows(2, {one, zero, zero, Quaternion{s, s, 0, 0}});
    }
    if (name == "PHASE_J") {
        return from_rows(2, {one, zero, zero, j});
    }
    if (name == "ROTQ_I") {
        return from_rows(2, {Quaternion{s}, i * s, i * s, Quaternion{s}});
    }
    if (name == "ROTQ_J") {
        return from_rows(2, {Quaternion{s}, j * s, j * s, Quaternion{s}});
    }
    if (name == "CNOT") {
        // Control on the first (more significant) wire.
        return from_rows(
            4,
            {one, zero, zero, zero,
             zero, one, zero, zero,
             zero, zero, zero, one,
             zero, zero, one, zero});
    }
    if (name == "SWAP") {
        return from_rows(
            4,
            {one, zero, zero, zero,
             zero, zero, one, zero,
             zero, one, zero, zero,
             zero, zero, zero, one});
    }
    if (name == "TOFFOLI") {
        return permutation8({0, 1, 2, 3, 4, 5, 7, 6});
    }
    throw ParseError("unknown builtin gate " + std::string(name));
}

}  // namespace

bool is_builtin_gate(std::string_view name) {
    for (std::string_view known :
         {"H", "X", "Y", "Z", "S", "T", "CNOT", "SWAP", "TOFFOLI", "PHASE_J", "ROTQ_I", "ROTQ_J"}) {
        if (name == known) {
            return true;
        }
    }
    return false;
}

template <>
Matrix<Quaternion> builtin_gate<Quaternion>(std::string_view name) {
    return master_gate(name);
}

template <>
Matrix<std::complex<double>> builtin_gate<std::complex<double>>(std::string_view name) {
    Matrix<Quaternion> q = master_gate(name);
    Matrix<std::complex<double>> out(q.rows(), q.cols());
    for (std::size_t idx = 0; idx < q.entries().size(); idx++) {
        const Quaternion &e = q.entries()[idx];
        if (e.a2 != 0.0 || e.a3 != 0.0) {
            throw ParseError("builtin gate " + std::string(name) + " is not available in the complex domain");
        }
        out.entries()[idx] = {e.a0, e.a1};
    }
    return out;
}

template <>
Matrix<double> builtin_gate<double>(std::string_view name) {
    Matrix<Quaternion> q = master_gate(name);
    Matrix<double> out(q.rows(), q.cols());
    for (std::size_t idx = 0; idx < q.entries().size(); idx++) {
        const Quaternion &e = q.entries()[idx];
        if (e.a1 != 0.0 || e.a2 != 0.0 || e.a3 != 0.0) {
            throw ParseError("builtin gate " + std::string(name) + " is not available in the real domain");
        }
        out.entries()[idx] = e.a0;
    }
    return out;
}

}  // namespace quatsim
