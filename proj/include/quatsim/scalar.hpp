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

#ifndef QUATSIM_SCALAR_HPP
#define QUATSIM_SCALAR_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string_view>

#include "quatsim/quaternion.hpp"

namespace quatsim {

/// The three amplitude domains the simulator is generic over.
enum class Domain {
    Real,
    Complex,
    Quaternion,
};

inline constexpr std::string_view domain_name(Domain d) {
    switch (d) {
        case Domain::Real:
            return "real";
        case Domain::Complex:
            return "complex";
        case Domain::Quaternion:
            return "quaternion";
    }
    return "?";
}

/// Uniform scalar interface used by the templated linear algebra and
/// simulator code. `components` is the dimension over the reals.
template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr Domain domain = Domain::Real;
    static constexpr std::size_t components = 1;
    static constexpr double zero() {
        return 0.0;
    }
    static constexpr double one() {
        return 1.0;
    }
    static constexpr double conjugate(double x) {
        return x;
    }
    static constexpr double abs_sq(double x) {
        return x * x;
    }
    static void to_components(double x, double *out) {
        out[0] = x;
    }
    static double from_components(const double *c) {
        return c[0];
    }
};

template <>
struct ScalarTraits<std::complex<double>> {
    static constexpr Domain domain = Domain::Complex;
    static constexpr std::size_t components = 2;
    static std::complex<double> zero() {
        return {0.0, 0.0};
    }
    static std::complex<double> one() {
        return {1.0, 0.0};
    }
    static std::complex<double> conjugate(const std::complex<double> &x) {
        return std::conj(x);
    }
    static double abs_sq(const std::complex<double> &x) {
        return x.real() * x.real() + x.imag() * x.imag();
    }
    static void to_components(const std::complex<double> &x, double *out) {
        out[0] = x.real();
        out[1] = x.imag();
    }
    static std::complex<double> from_components(const double *c) {
        return {c[0], c[1]};
    }
};

template <>
struct ScalarTraits<Quaternion> {
    static constexpr Domain domain = Domain::Quaternion;
    static constexpr std::size_t components = 4;
    static constexpr Quaternion zero() {
        return {};
    }
    static constexpr Quaternion one() {
        return {1.0};
    }
    static constexpr Quaternion conjugate(const Quaternion &x) {
        return conj(x);
    }
    static constexpr double abs_sq(const Quaternion &x) {
        return quatsim::abs_sq(x);
    }
    static void to_components(const Quaternion &x, double *out) {
        out[0] = x.a0;
        out[1] = x.a1;
        out[2] = x.a2;
        out[3] = x.a3;
    }
    static Quaternion from_components(const double *c) {
        return {c[0], c[1], c[2], c[3]};
    }
};

/// Widening casts along real -> complex -> quaternion. Instantiating a
/// narrowing direction is a compile error.
template <typename To, typename From>
inline To scalar_widen(const From &x) {
    if constexpr (std::is_same_v<To, From>) {
        return x;
    } else if constexpr (std::is_same_v<From, double> && std::is_same_v<To, std::complex<double>>) {
        return {x, 0.0};
    } else if constexpr (std::is_same_v<From, double> && std::is_same_v<To, Quaternion>) {
        return {x, 0.0, 0.0, 0.0};
    } else if constexpr (std::is_same_v<From, std::complex<double>> && std::is_same_v<To, Quaternion>) {
        return {x.real(), x.imag(), 0.0, 0.0};
    } else {
        static_assert(std::is_same_v<To, From>, "scalar_widen only widens");
    }
}

/// Largest absolute value among the non-real components of x. Zero exactly
/// when x lies in the real sub-line of its domain.
inline double nonreal_magnitude(double) {
    return 0.0;
}

inline double nonreal_magnitude(const std::complex<double> &x) {
    return std::fabs(x.imag());
}

inline double nonreal_magnitude(const Quaternion &x) {
    return std::max({std::fabs(x.a1), std::fabs(x.a2), std::fabs(x.a3)});
}

/// The real part, used when a gate has been checked to be real already.
inline double real_part(double x) {
    return x;
}

inline double real_part(const std::complex<double> &x) {
    return x.real();
}

inline double real_part(const Quaternion &x) {
    return x.a0;
}

}  // namespace quatsim

#endif
