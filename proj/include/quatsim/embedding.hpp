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

#ifndef QUATSIM_EMBEDDING_HPP
#define QUATSIM_EMBEDDING_HPP

#include <optional>
#include <string_view>

#include "quatsim/circuit.hpp"
#include "quatsim/simulate.hpp"

namespace quatsim {

/// The three structure-preserving matrix embeddings:
///   h     complex N     -> real 2N        (unitary to orthogonal)
///   hhat  quaternion N  -> complex 2N     (symplectic to unitary)
///   shat  quaternion N  -> real 4N        (symplectic to orthogonal)
/// Each one is a homomorphism compatible with adjoints, and block index c of
/// the companion vector maps sends |b> to |c>|b>.
enum class EmbeddingKind {
    H,
    HHat,
    SHat,
};

inline constexpr std::string_view embedding_name(EmbeddingKind k) {
    switch (k) {
        case EmbeddingKind::H:
            return "h";
        case EmbeddingKind::HHat:
            return "hhat";
        case EmbeddingKind::SHat:
            return "shat";
    }
    return "?";
}

inline std::optional<EmbeddingKind> embedding_from_name(std::string_view name) {
    if (name == "h") {
        return EmbeddingKind::H;
    }
    if (name == "hhat") {
        return EmbeddingKind::HHat;
    }
    if (name == "shat") {
        return EmbeddingKind::SHat;
    }
    return std::nullopt;
}

/// Number of fresh top wires the embedding prepends to a circuit.
inline constexpr int top_wires_for(EmbeddingKind k) {
    return k == EmbeddingKind::SHat ? 2 : 1;
}

/// h(M) = [[re M, im M], [-im M, re M]].
inline Matrix<double> embed_h(const Matrix<std::complex<double>> &m) {
    std::size_t r = m.rows();
    std::size_t c = m.cols();
    Matrix<double> out(2 * r, 2 * c);
    for (std::size_t i = 0; i < r; i++) {
        for (std::size_t j = 0; j < c; j++) {
            double re = m(i, j).real();
            double im = m(i, j).imag();
            out(i, j) = re;
            out(i, j + c) = im;
            out(i + r, j) = -im;
            out(i + r, j + c) = re;
        }
    }
    return out;
}

/// hhat(M) = [[co M, we M], [-conj(we M), conj(co M)]].
inline Matrix<std::complex<double>> embed_hhat(const Matrix<Quaternion> &m) {
    std::size_t r = m.rows();
    std::size_t c = m.cols();
    Matrix<std::complex<double>> out(2 * r, 2 * c);
    for (std::size_t i = 0; i < r; i++) {
        for (std::size_t j = 0; j < c; j++) {
            ComplexPair p = split(m(i, j));
            out(i, j) = p.co;
            out(i, j + c) = p.we;
            out(i + r, j) = -std::conj(p.we);
            out(i + r, j + c) = std::conj(p.co);
        }
    }
    return out;
}

namespace detail {

/// Block (row, col) of shat picks this component of each entry, times this
/// sign. Component indices: 0 = a0, 1 = a1, 2 = a2, 3 = a3.
struct ShatCell {
    int component;
    double sign;
};

inline constexpr ShatCell kShatGrid[4][4] = {
    {{0, 1.0}, {1, 1.0}, {3, -1.0}, {2, -1.0}},
    {{1, -1.0}, {0, 1.0}, {2, -1.0}, {3, 1.0}},
    {{3, 1.0}, {2, 1.0}, {0, 1.0}, {1, 1.0}},
    {{2, 1.0}, {3, -1.0}, {1, -1.0}, {0, 1.0}},
};

inline double quat_component(const Quaternion &q, int c) {
    switch (c) {
        case 0:
            return q.a0;
        case 1:
            return q.a1;
        case 2:
            return q.a2;
        default:
            return q.a3;
    }
}

}  // namespace detail

/// shat(M): the 4x4 grid of component blocks making the symplectic group
/// act orthogonally on the realification.
inline Matrix<double> embed_shat(const Matrix<Quaternion> &m) {
    std::size_t r = m.rows();
    std::size_t c = m.cols();
    Matrix<double> out(4 * r, 4 * c);
    for (int br = 0; br < 4; br++) {
        for (int bc = 0; bc < 4; bc++) {
            detail::ShatCell cell = detail::kShatGrid[br][bc];
            for (std::size_t i = 0; i < r; i++) {
                for (std::size_t j = 0; j < c; j++) {
                    out(br * r + i, bc * c + j) = cell.sign * detail::quat_component(m(i, j), cell.component);
                }
            }
        }
    }
    return out;
}

/// Column maps: the image of a state under block column `column` of the
/// matrix embedding. Columns send basis state |b> to |column>|b>.
inline StateVector<double> embed_h_vector(int column, const StateVector<std::complex<double>> &v) {
    if (column < 0 || column > 1) {
        throw EmbeddingError("embed_h_vector: column must be 0 or 1");
    }
    std::size_t d = v.dim();
    StateVector<double> out(2 * d);
    for (std::size_t b = 0; b < d; b++) {
        double re = v.amps[b].real();
        double im = v.amps[b].imag();
        if (column == 0) {
            out.amps[b] = re;
            out.amps[b + d] = -im;
        } else {
            out.amps[b] = im;
            out.amps[b + d] = re;
        }
    }
    return out;
}

inline StateVector<std::complex<double>> embed_hhat_vector(int column, const StateVector<Quaternion> &v) {
    if (column < 0 || column > 1) {
        throw EmbeddingError("embed_hhat_vector: column must be 0 or 1");
    }
    std::size_t d = v.dim();
    StateVector<std::complex<double>> out(2 * d);
    for (std::size_t b = 0; b < d; b++) {
        ComplexPair p = split(v.amps[b]);
        if (column == 0) {
            out.amps[b] = p.co;
            out.amps[b + d] = -std::conj(p.we);
        } else {
            out.amps[b] = p.we;
            out.amps[b + d] = std::conj(p.co);
        }
    }
    return out;
}

inline StateVector<double> embed_shat_vector(int column, const StateVector<Quaternion> &v) {
    if (column < 0 || column > 3) {
        throw EmbeddingError("embed_shat_vector: column must be in 0..3");
    }
    std::size_t d = v.dim();
    StateVector<double> out(4 * d);
    for (int br = 0; br < 4; br++) {
        detail::ShatCell cell = detail::kShatGrid[br][column];
        for (std::size_t b = 0; b < d; b++) {
            out.amps[br * d + b] = cell.sign * detail::quat_component(v.amps[b], cell.component);
        }
    }
    return out;
}

/// Where a compiled gate came from.
struct GateProvenance {
    int source_gate = 0;
    bool top_wire_used = false;
};

struct CompileOptions {
    /// Emit gates whose entries are real (to within tol::kRealGateSkip)
    /// unchanged, without touching the top wire.
    bool skip_real_gates = true;
};

/// A compiled circuit: same gate ids as the source, top wire(s) prepended,
/// original wires shifted down. Evaluation order is the compiled circuit's
/// default order; the target domain is commutative, so the operator and all
/// statistics are order-independent.
template <typename TLower>
struct CompiledCircuit {
    OrderedCircuit<TLower> target;
    EmbeddingKind kind = EmbeddingKind::H;
    int source_width = 0;
    std::vector<GateProvenance> provenance;

    int top_wires() const {
        return top_wires_for(kind);
    }

    /// Wires of the target register carrying the source wires, in order.
    std::vector<int> bottom_wires() const {
        std::vector<int> keep;
        for (int w = 1; w <= source_width; w++) {
            keep.push_back(w + top_wires());
        }
        return keep;
    }
};

namespace detail {

template <typename TLower, typename TUpper, typename EmbedFn, typename LowerFn>
CompiledCircuit<TLower> compile_with(
    const OrderedCircuit<TUpper> &src,
    EmbeddingKind kind,
    EmbedFn &&embed_fn,
    LowerFn &&lower_fn,
    CompileOptions options) {
    int top = top_wires_for(kind);
    Circuit<TLower> out(src.circuit.width() + top);
    std::vector<GateProvenance> provenance;
    // Gates are emitted in sigma order. Every embedded gate touches the top
    // wire, so the compiled partial order chains them totally; that chain
    // must BE the committed evaluation order, because over non-commuting
    // amplitudes a different product order is a different operator. The
    // compiler bakes sigma into the artifact.
    for (int id : src.sigma) {
        const Gate<TUpper> &g = src.circuit.gate_by_id(id);
        Gate<TLower> ng;
        ng.id = g.id;
        if (options.skip_real_gates && nonreal_magnitude(g.matrix) <= tol::kRealGateSkip) {
            for (int w : g.wires) {
                ng.wires.push_back(w + top);
            }
            ng.matrix = lower_fn(g.matrix);
            provenance.push_back({g.id, false});
        } else {
            for (int t = 1; t <= top; t++) {
                ng.wires.push_back(t);
            }
            for (int w : g.wires) {
                ng.wires.push_back(w + top);
            }
            ng.matrix = embed_fn(g.matrix);
            provenance.push_back({g.id, true});
        }
        out.add_gate(std::move(ng));
    }
    OrderedCircuit<TLower> ordered = OrderedCircuit<TLower>::with_default_order(std::move(out));
    return {std::move(ordered), kind, src.circuit.width(), std::move(provenance)};
}

}  // namespace detail

inline CompiledCircuit<double> compile_h(const OrderedCircuit<std::complex<double>> &src, CompileOptions options = {}) {
    return detail::compile_with<double>(
        src,
        EmbeddingKind::H,
        [](const Matrix<std::complex<double>> &m) { return embed_h(m); },
        [](const Matrix<std::complex<double>> &m) { return matrix_real_part(m); },
        options);
}

/// Real circuits embed through the same map after a widening cast; with the
/// skip enabled every gate passes through bit-identically.
inline CompiledCircuit<double> compile_h(const OrderedCircuit<double> &src, CompileOptions options = {}) {
    return detail::compile_with<double>(
        src,
        EmbeddingKind::H,
        [](const Matrix<double> &m) { return embed_h(matrix_widen<std::complex<double>>(m)); },
        [](const Matrix<double> &m) { return m; },
        options);
}

inline CompiledCircuit<std::complex<double>> compile_hhat(const OrderedCircuit<Quaternion> &src, CompileOptions options = {}) {
    return detail::compile_with<std::complex<double>>(
        src,
        EmbeddingKind::HHat,
        [](const Matrix<Quaternion> &m) { return embed_hhat(m); },
        [](const Matrix<Quaternion> &m) {
            Matrix<std::complex<double>> out(m.rows(), m.cols());
            for (std::size_t i = 0; i < m.entries().size(); i++) {
                out.entries()[i] = split(m.entries()[i]).co;
            }
            return out;
        },
        options);
}

inline CompiledCircuit<double> compile_shat(const OrderedCircuit<Quaternion> &src, CompileOptions options = {}) {
    return detail::compile_with<double>(
        src,
        EmbeddingKind::SHat,
        [](const Matrix<Quaternion> &m) { return embed_shat(m); },
        [](const Matrix<Quaternion> &m) { return matrix_real_part(m); },
        options);
}

namespace detail {

template <typename TUpper, typename TLower, typename EmbedFn>
double circularity_impl(const OrderedCircuit<TUpper> &src, const CompiledCircuit<TLower> &cc, EmbedFn &&embed_fn) {
    if (cc.source_width != src.circuit.width()) {
        throw DimensionError("circularity: compiled circuit was built from a different width");
    }
    Matrix<TLower> compiled_op = ordered_operator(cc.target);
    Matrix<TLower> embedded_op = embed_fn(ordered_operator(src));
    return max_abs_diff(compiled_op, embedded_op);
}

inline void require_kind(const char *what, EmbeddingKind got, EmbeddingKind want) {
    if (got != want) {
        throw EmbeddingError(std::string(what) + ": compiled circuit has the wrong embedding kind");
    }
}

}  // namespace detail

/// Max-entry distance between the compiled circuit's ordered operator and
/// the embedding of the source's ordered operator. Zero (to tolerance) is
/// the compiler's correctness statement.
inline double circularity_deviation(const OrderedCircuit<std::complex<double>> &src, const CompiledCircuit<double> &cc) {
    detail::require_kind("circularity", cc.kind, EmbeddingKind::H);
    return detail::circularity_impl(src, cc, [](const Matrix<std::complex<double>> &m) { return embed_h(m); });
}

inline double circularity_deviation(const OrderedCircuit<double> &src, const CompiledCircuit<double> &cc) {
    detail::require_kind("circularity", cc.kind, EmbeddingKind::H);
    return detail::circularity_impl(src, cc, [](const Matrix<double> &m) {
        return embed_h(matrix_widen<std::complex<double>>(m));
    });
}

inline double circularity_deviation(const OrderedCircuit<Quaternion> &src, const CompiledCircuit<std::complex<double>> &cc) {
    detail::require_kind("circularity", cc.kind, EmbeddingKind::HHat);
    return detail::circularity_impl(src, cc, [](const Matrix<Quaternion> &m) { return embed_hhat(m); });
}

inline double circularity_deviation(const OrderedCircuit<Quaternion> &src, const CompiledCircuit<double> &cc) {
    detail::require_kind("circularity", cc.kind, EmbeddingKind::SHat);
    return detail::circularity_impl(src, cc, [](const Matrix<Quaternion> &m) { return embed_shat(m); });
}

/// Deviations of the three algebraic properties an embedding must have.
struct HomomorphismDeviation {
    double product = 0.0;
    double adjoint = 0.0;
    double membership = 0.0;

    double max() const {
        return std::max({product, adjoint, membership});
    }
};

namespace detail {

template <typename TUpper, typename EmbedFn>
HomomorphismDeviation homomorphism_impl(std::size_t dim, int trials, Rng &rng, EmbedFn &&embed_fn, bool corrupt) {
    HomomorphismDeviation dev;
    for (int t = 0; t < trials; t++) {
        Matrix<TUpper> a = random_group_element<TUpper>(dim, rng);
        Matrix<TUpper> b = random_group_element<TUpper>(dim, rng);
        auto ea = embed_fn(a);
        if (corrupt) {
            // Test hook: a deliberately broken image must trip the checks.
            ea(0, 0) += 1e-3;
        }
        auto eb = embed_fn(b);
        dev.product = std::max(dev.product, max_abs_diff(embed_fn(matmul(a, b)), matmul(ea, eb)));
        dev.adjoint = std::max(dev.adjoint, max_abs_diff(embed_fn(adjoint(a)), adjoint(ea)));
        using TLower = typename std::decay_t<decltype(ea)>;
        dev.membership = std::max(
            dev.membership,
            max_abs_diff(matmul(adjoint(ea), ea), TLower::identity(ea.rows())));
    }
    return dev;
}

}  // namespace detail

/// Checks product preservation, adjoint compatibility and group membership
/// of the images on `trials` random pairs of group elements of size `dim`.
inline HomomorphismDeviation homomorphism_deviation(
    EmbeddingKind kind,
    std::size_t dim,
    int trials,
    Rng &rng,
    bool corrupt = false) {
    switch (kind) {
        case EmbeddingKind::H:
            return detail::homomorphism_impl<std::complex<double>>(
                dim, trials, rng, [](const Matrix<std::complex<double>> &m) { return embed_h(m); }, corrupt);
        case EmbeddingKind::HHat:
            return detail::homomorphism_impl<Quaternion>(
                dim, trials, rng, [](const Matrix<Quaternion> &m) { return embed_hhat(m); }, corrupt);
        case EmbeddingKind::SHat:
            return detail::homomorphism_impl<Quaternion>(
                dim, trials, rng, [](const Matrix<Quaternion> &m) { return embed_shat(m); }, corrupt);
    }
    throw Error("homomorphism_deviation: bad kind");
}

/// How compiled-circuit statistics compare against the source:
/// bottom-wire marginal distances for each top-wire initialization, and the
/// worst state-level distance between running-then-embedding and
/// embedding-then-running over all block columns.
struct StatisticsDeviation {
    double marginal_zero = 0.0;
    double marginal_one = 0.0;
    double marginal_mixed = 0.0;
    double state = 0.0;

    double max_marginal() const {
        return std::max({marginal_zero, marginal_one, marginal_mixed});
    }

    double mutual_spread() const {
        double lo = std::min({marginal_zero, marginal_one, marginal_mixed});
        double hi = max_marginal();
        return hi - lo;
    }
};

namespace detail {

template <typename TUpper, typename TLower, typename VecEmbed>
StatisticsDeviation statistics_impl(
    const OrderedCircuit<TUpper> &src,
    const CompiledCircuit<TLower> &cc,
    const StateVector<TUpper> &input,
    int columns,
    VecEmbed &&embed_vec) {
    if (cc.source_width != src.circuit.width()) {
        throw DimensionError("statistics: compiled circuit was built from a different width");
    }
    StateVector<TUpper> src_out = run(src, input);
    MeasurementDistribution src_dist = measure_all(src_out);
    std::vector<int> keep = cc.bottom_wires();
    StatisticsDeviation dev;
    std::vector<double> mixed(src_dist.probs.size(), 0.0);
    for (int c = 0; c < columns; c++) {
        StateVector<TLower> started = embed_vec(c, input);
        StateVector<TLower> out = run(cc.target, started);
        dev.state = std::max(dev.state, max_abs_diff(out, embed_vec(c, src_out)));
        Marginal m = marginal(measure_all(out), keep);
        for (std::size_t idx = 0; idx < mixed.size(); idx++) {
            mixed[idx] += m.probs[idx] / columns;
        }
        double dist = linf_distance(m.probs, src_dist.probs);
        if (c == 0) {
            dev.marginal_zero = dist;
        } else if (c == 1) {
            dev.marginal_one = dist;
        }
    }
    dev.marginal_mixed = linf_distance(mixed, src_dist.probs);
    return dev;
}

}  // namespace detail

inline StatisticsDeviation statistics_deviation(
    const OrderedCircuit<std::complex<double>> &src,
    const CompiledCircuit<double> &cc,
    const StateVector<std::complex<double>> &input) {
    detail::require_kind("statistics", cc.kind, EmbeddingKind::H);
    return detail::statistics_impl(src, cc, input, 2, [](int c, const StateVector<std::complex<double>> &v) {
        return embed_h_vector(c, v);
    });
}

inline StatisticsDeviation statistics_deviation(
    const OrderedCircuit<double> &src,
    const CompiledCircuit<double> &cc,
    const StateVector<double> &input) {
    detail::require_kind("statistics", cc.kind, EmbeddingKind::H);
    return detail::statistics_impl(src, cc, input, 2, [](int c, const StateVector<double> &v) {
        return embed_h_vector(c, state_widen<std::complex<double>>(v));
    });
}

inline StatisticsDeviation statistics_deviation(
    const OrderedCircuit<Quaternion> &src,
    const CompiledCircuit<std::complex<double>> &cc,
    const StateVector<Quaternion> &input) {
    detail::require_kind("statistics", cc.kind, EmbeddingKind::HHat);
    return detail::statistics_impl(src, cc, input, 2, [](int c, const StateVector<Quaternion> &v) {
        return embed_hhat_vector(c, v);
    });
}

inline StatisticsDeviation statistics_deviation(
    const OrderedCircuit<Quaternion> &src,
    const CompiledCircuit<double> &cc,
    const StateVector<Quaternion> &input) {
    detail::require_kind("statistics", cc.kind, EmbeddingKind::SHat);
    return detail::statistics_impl(src, cc, input, 4, [](int c, const StateVector<Quaternion> &v) {
        return embed_shat_vector(c, v);
    });
}

}  // namespace quatsim

#endif
