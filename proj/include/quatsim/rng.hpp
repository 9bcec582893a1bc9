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

#ifndef QUATSIM_RNG_HPP
#define QUATSIM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "quatsim/matrix.hpp"

namespace quatsim {

/// Deterministic random source. std::mt19937_64 has a fully specified output
/// sequence; the uniform and normal transformations are hand-rolled here
/// because the std distributions are implementation-defined and the project
/// guarantees byte-identical output for a fixed seed.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    /// Uniform in (0, 1], with 53 bits of precision. Never returns 0, which
    /// keeps the Box-Muller logarithm finite.
    double uniform() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller, pairs cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u = uniform();
        double v = uniform();
        double r = std::sqrt(-2.0 * std::log(u));
        double angle = 2.0 * std::numbers::pi * v;
        spare_ = r * std::sin(angle);
        has_spare_ = true;
        return r * std::cos(angle);
    }

    /// Raw engine output, for deriving sub-seeds.
    uint64_t raw() {
        return engine_();
    }

    /// Uniform integer in [0, n).
    uint64_t below(uint64_t n) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

   private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Haar-style random element of the domain's compact group: a Gaussian
/// matrix orthonormalized by modified Gram-Schmidt. Inner products conjugate
/// the left argument and projection coefficients multiply columns from the
/// RIGHT, which is what keeps the procedure correct over quaternions.
template <typename T>
Matrix<T> random_group_element(std::size_t dim, Rng &rng) {
    if (dim == 0) {
        throw DimensionError("random_group_element: dimension must be positive");
    }
    constexpr int kMaxAttempts = 16;
    for (int attempt = 0; attempt < kMaxAttempts; attempt++) {
        Matrix<T> m(dim, dim);
        for (std::size_t i = 0; i < dim; i++) {
            for (std::size_t j = 0; j < dim; j++) {
                double c[ScalarTraits<T>::components];
                for (std::size_t p = 0; p < ScalarTraits<T>::components; p++) {
                    c[p] = rng.normal();
                }
                m(i, j) = ScalarTraits<T>::from_components(c);
            }
        }
        bool degenerate = false;
        for (std::size_t col = 0; col < dim && !degenerate; col++) {
            for (std::size_t prev = 0; prev < col; prev++) {
                T coeff = ScalarTraits<T>::zero();
                for (std::size_t k = 0; k < dim; k++) {
                    coeff += ScalarTraits<T>::conjugate(m(k, prev)) * m(k, col);
                }
                for (std::size_t k = 0; k < dim; k++) {
                    m(k, col) -= m(k, prev) * coeff;
                }
            }
            double norm_sq = 0.0;
            for (std::size_t k = 0; k < dim; k++) {
                norm_sq += ScalarTraits<T>::abs_sq(m(k, col));
            }
            if (norm_sq < 1e-12) {
                degenerate = true;
                break;
            }
            double inv = 1.0 / std::sqrt(norm_sq);
            for (std::size_t k = 0; k < dim; k++) {
                m(k, col) = m(k, col) * inv;
            }
        }
        if (!degenerate && is_group_member(m, tol::kRandomElement)) {
            return m;
        }
    }
    throw Error("random_group_element: sampling failed to converge");
}

template <typename T>
Matrix<T> random_group_element(std::size_t dim, uint64_t seed) {
    Rng rng(seed);
    return random_group_element<T>(dim, rng);
}

/// Random unit state with independent Gaussian components.
template <typename T>
StateVector<T> random_state(std::size_t dim, Rng &rng) {
    StateVector<T> v(dim);
    double norm_sq = 0.0;
    while (norm_sq < 1e-12) {
        for (std::size_t i = 0; i < dim; i++) {
            double c[ScalarTraits<T>::components];
            for (std::size_t p = 0; p < ScalarTraits<T>::components; p++) {
                c[p] = rng.normal();
            }
            v.amps[i] = ScalarTraits<T>::from_components(c);
        }
        norm_sq = v.norm_sq();
    }
    double inv = 1.0 / std::sqrt(norm_sq);
    for (std::size_t i = 0; i < dim; i++) {
        v.amps[i] = v.amps[i] * inv;
    }
    return v;
}

}  // namespace quatsim

#endif
