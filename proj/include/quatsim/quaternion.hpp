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

#ifndef QUATSIM_QUATERNION_HPP
#define QUATSIM_QUATERNION_HPP

#include <cmath>
#include <complex>
#include <ostream>

namespace quatsim {

/// A quaternion a0 + a1*i + a2*j + a3*k over doubles.
///
/// Multiplication is the Hamilton product and is NOT commutative; every
/// algorithm in this library that multiplies scalars is written so that the
/// left/right order of operands is the order required by the math, so the
/// same template code stays correct when instantiated at Quaternion.
struct Quaternion {
    double a0 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double real) : a0(real) {}
    constexpr Quaternion(double a0_in, double a1_in, double a2_in, double a3_in)
        : a0(a0_in), a1(a1_in), a2(a2_in), a3(a3_in) {}

    constexpr bool operator==(const Quaternion &other) const = default;

    constexpr Quaternion operator-() const {
        return {-a0, -a1, -a2, -a3};
    }

    constexpr Quaternion &operator+=(const Quaternion &rhs) {
        a0 += rhs.a0;
        a1 += rhs.a1;
        a2 += rhs.a2;
        a3 += rhs.a3;
        return *this;
    }

    constexpr Quaternion &operator-=(const Quaternion &rhs) {
        a0 -= rhs.a0;
        a1 -= rhs.a1;
        a2 -= rhs.a2;
        a3 -= rhs.a3;
        return *this;
    }

    friend constexpr Quaternion operator+(Quaternion lhs, const Quaternion &rhs) {
        lhs += rhs;
        return lhs;
    }

    friend constexpr Quaternion operator-(Quaternion lhs, const Quaternion &rhs) {
        lhs -= rhs;
        return lhs;
    }

    /// Hamilton product. i*j = k, j*k = i, k*i = j, and i*i = j*j = k*k = -1.
    friend constexpr Quaternion operator*(const Quaternion &a, const Quaternion &b) {
        return {
            a.a0 * b.a0 - a.a1 * b.a1 - a.a2 * b.a2 - a.a3 * b.a3,
            a.a0 * b.a1 + a.a1 * b.a0 + a.a2 * b.a3 - a.a3 * b.a2,
            a.a0 * b.a2 - a.a1 * b.a3 + a.a2 * b.a0 + a.a3 * b.a1,
            a.a0 * b.a3 + a.a1 * b.a2 - a.a2 * b.a1 + a.a3 * b.a0,
        };
    }

    constexpr Quaternion &operator*=(const Quaternion &rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend constexpr Quaternion operator*(double s, const Quaternion &q) {
        return {s * q.a0, s * q.a1, s * q.a2, s * q.a3};
    }

    friend constexpr Quaternion operator*(const Quaternion &q, double s) {
        return {q.a0 * s, q.a1 * s, q.a2 * s, q.a3 * s};
    }

    friend std::ostream &operator<<(std::ostream &out, const Quaternion &q) {
        out << '(' << q.a0 << (q.a1 < 0 ? "" : "+") << q.a1 << 'i'
            << (q.a2 < 0 ? "" : "+") << q.a2 << 'j'
            << (q.a3 < 0 ? "" : "+") << q.a3 << "k)";
        return out;
    }
};

inline constexpr Quaternion kQuatI{0, 1, 0, 0};
inline constexpr Quaternion kQuatJ{0, 0, 1, 0};
inline constexpr Quaternion kQuatK{0, 0, 0, 1};

constexpr Quaternion conj(const Quaternion &q) {
    return {q.a0, -q.a1, -q.a2, -q.a3};
}

constexpr double abs_sq(const Quaternion &q) {
    return q.a0 * q.a0 + q.a1 * q.a1 + q.a2 * q.a2 + q.a3 * q.a3;
}

inline double abs(const Quaternion &q) {
    return std::sqrt(abs_sq(q));
}

/// The complexification q = co + we * j, with co and we complex over 1 and i.
struct ComplexPair {
    std::complex<double> co;
    std::complex<double> we;

    bool operator==(const ComplexPair &other) const = default;
};

inline ComplexPair split(const Quaternion &q) {
    return {{q.a0, q.a1}, {q.a2, q.a3}};
}

inline Quaternion join(const ComplexPair &p) {
    return {p.co.real(), p.co.imag(), p.we.real(), p.we.imag()};
}

/// The product in co/we coordinates:
///   co(ab) = co(a) co(b) - we(a) conj(we(b))
///   we(ab) = co(a) we(b) + we(a) conj(co(b))
/// Agrees with split(a * b); the conjugations come from j z = conj(z) j.
inline ComplexPair split_product(const Quaternion &a, const Quaternion &b) {
    ComplexPair pa = split(a);
    ComplexPair pb = split(b);
    return {
        pa.co * pb.co - pa.we * std::conj(pb.we),
        pa.co * pb.we + pa.we * std::conj(pb.co),
    };
}

/// Conjugation in co/we coordinates: co(conj(q)) = conj(co(q)) and
/// we(conj(q)) = -we(q).
inline ComplexPair split_conjugate(const Quaternion &q) {
    ComplexPair p = split(q);
    return {std::conj(p.co), -p.we};
}

}  // namespace quatsim

#endif
