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

#include "quatsim/verify.hpp"

#include <cstring>
#include <sstream>

#include "quatsim/demo.hpp"
#include "quatsim/gates.hpp"

namespace quatsim {

namespace {

// Distinct sub-streams per concern so adding a suite never perturbs the
// randomness another suite sees.
uint64_t sub_seed(uint64_t seed, uint64_t salt) {
    Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (salt + 1)));
    return r.raw();
}

std::string format_deviation(double x) {
    std::ostringstream ss;
    ss.precision(3);
    ss << std::scientific << x;
    return ss.str();
}

SuiteResult homomorphism_suite(EmbeddingKind kind, const VerifyOptions &options, uint64_t salt) {
    Rng rng(sub_seed(options.seed, salt));
    HomomorphismDeviation worst;
    for (std::size_t dim : {2, 4, 8}) {
        HomomorphismDeviation dev = homomorphism_deviation(kind, dim, options.trials, rng, options.corrupt);
        worst.product = std::max(worst.product, dev.product);
        worst.adjoint = std::max(worst.adjoint, dev.adjoint);
        worst.membership = std::max(worst.membership, dev.membership);
    }
    SuiteResult r;
    r.name = "homomorphism-" + std::string(embedding_name(kind));
    r.deviation = worst.max();
    r.tolerance = tol::kHomomorphism;
    r.pass = r.deviation <= r.tolerance;
    r.detail = "product " + format_deviation(worst.product) + ", adjoint " + format_deviation(worst.adjoint) +
               ", membership " + format_deviation(worst.membership) + " over dims 2,4,8 x " +
               std::to_string(options.trials) + " pairs";
    return r;
}

struct CompiledCorpora {
    std::vector<CompiledCircuit<double>> h_from_complex;
    std::vector<CompiledCircuit<std::complex<double>>> hhat;
    std::vector<CompiledCircuit<double>> shat;
};

}  // namespace

std::vector<OrderedCircuit<std::complex<double>>> complex_verification_corpus(uint64_t seed) {
    Rng rng(seed);
    std::vector<OrderedCircuit<std::complex<double>>> corpus;
    for (int idx = 0; idx < 20; idx++) {
        int n = 2 + static_cast<int>(rng.below(4));
        int s = 1 + static_cast<int>(rng.below(15));
        Circuit<std::complex<double>> c(n);
        for (int gid = 1; gid <= s; gid++) {
            Gate<std::complex<double>> g;
            g.id = gid;
            switch (rng.below(5)) {
                case 0:
                    g.wires = {1 + static_cast<int>(rng.below(n))};
                    g.matrix = builtin_gate<std::complex<double>>("H");
                    break;
                case 1:
                    g.wires = {1 + static_cast<int>(rng.below(n))};
                    g.matrix = builtin_gate<std::complex<double>>("S");
                    break;
                case 2:
                    g.wires = {1 + static_cast<int>(rng.below(n))};
                    g.matrix = builtin_gate<std::complex<double>>("T");
                    break;
                case 3: {
                    int a = 1 + static_cast<int>(rng.below(n));
                    int b = 1 + static_cast<int>(rng.below(n - 1));
                    if (b >= a) {
                        b++;
                    }
                    g.wires = {std::min(a, b), std::max(a, b)};
                    g.matrix = builtin_gate<std::complex<double>>("CNOT");
                    break;
                }
                default:
                    g.wires = {1 + static_cast<int>(rng.below(n))};
                    g.matrix = random_group_element<std::complex<double>>(2, rng);
                    break;
            }
            c.add_gate(std::move(g));
        }
        corpus.push_back(OrderedCircuit<std::complex<double>>::with_default_order(std::move(c)));
    }
    return corpus;
}

std::vector<OrderedCircuit<Quaternion>> quaternion_verification_corpus(uint64_t seed) {
    Rng rng(seed);
    std::vector<OrderedCircuit<Quaternion>> corpus;
    for (int idx = 0; idx < 20; idx++) {
        int n = 1 + static_cast<int>(rng.below(3));
        int s = 1 + static_cast<int>(rng.below(10));
        Circuit<Quaternion> c(n);
        for (int gid = 1; gid <= s; gid++) {
            Gate<Quaternion> g;
            g.id = gid;
            g.wires = {1 + static_cast<int>(rng.below(n))};
            g.matrix = random_group_element<Quaternion>(2, rng);
            c.add_gate(std::move(g));
        }
        std::vector<int> sigma = random_topological_sort(c.shape(), rng);
        corpus.push_back(OrderedCircuit<Quaternion>::with_order(std::move(c), std::move(sigma)));
    }
    return corpus;
}

namespace {

SuiteResult circularity_suite_h(const std::vector<OrderedCircuit<std::complex<double>>> &corpus,
                                const std::vector<CompiledCircuit<double>> &compiled) {
    SuiteResult r;
    r.name = "circularity-h";
    r.tolerance = tol::kEndToEnd;
    for (std::size_t i = 0; i < corpus.size(); i++) {
        r.deviation = std::max(r.deviation, circularity_deviation(corpus[i], compiled[i]));
    }
    r.pass = r.deviation <= r.tolerance;
    r.detail = std::to_string(corpus.size()) + " complex circuits, default order";
    return r;
}

template <typename TLower>
SuiteResult circularity_suite_quat(const char *name,
                                   const std::vector<OrderedCircuit<Quaternion>> &corpus,
                                   const std::vector<CompiledCircuit<TLower>> &compiled) {
    SuiteResult r;
    r.name = name;
    r.tolerance = tol::kEndToEnd;
    for (std::size_t i = 0; i < corpus.size(); i++) {
        r.deviation = std::max(r.deviation, circularity_deviation(corpus[i], compiled[i]));
    }
    r.pass = r.deviation <= r.tolerance;
    r.detail = std::to_string(corpus.size()) + " quaternionic circuits, random orders";
    return r;
}

template <typename TUpper, typename TLower>
std::pair<SuiteResult, SuiteResult> statistics_suites(
    const char *name,
    const char *mutual_name,
    const std::vector<OrderedCircuit<TUpper>> &corpus,
    const std::vector<CompiledCircuit<TLower>> &compiled,
    uint64_t seed) {
    Rng rng(seed);
    SuiteResult r;
    r.name = name;
    r.tolerance = tol::kEndToEnd;
    SuiteResult mutual;
    mutual.name = mutual_name;
    mutual.tolerance = tol::kMutualEquality;
    double worst_state = 0.0;
    double worst_marginal = 0.0;
    for (std::size_t i = 0; i < corpus.size(); i++) {
        StateVector<TUpper> input = random_state<TUpper>(std::size_t{1} << corpus[i].circuit.width(), rng);
        StatisticsDeviation dev = statistics_deviation(corpus[i], compiled[i], input);
        worst_marginal = std::max(worst_marginal, dev.max_marginal());
        worst_state = std::max(worst_state, dev.state);
        mutual.deviation = std::max(mutual.deviation, dev.mutual_spread());
    }
    r.deviation = std::max(worst_marginal, worst_state);
    r.pass = r.deviation <= r.tolerance;
    r.detail = "marginal " + format_deviation(worst_marginal) + ", state " + format_deviation(worst_state) +
               "; zero/one/mixed top inits on random unit inputs";
    mutual.pass = mutual.deviation <= mutual.tolerance;
    mutual.detail = "largest spread between the zero, one and mixed top-init marginal distances";
    return {r, mutual};
}

template <typename TUpper, typename TLower>
int width_size_violations(const OrderedCircuit<TUpper> &src, const CompiledCircuit<TLower> &cc, std::string &notes) {
    int violations = 0;
    int top = cc.top_wires();
    if (cc.target.circuit.width() != src.circuit.width() + top) {
        violations++;
        notes += " width";
    }
    if (cc.target.circuit.gates().size() != src.circuit.gates().size()) {
        violations++;
        notes += " gate-count";
    }
    for (std::size_t i = 0; i < cc.target.circuit.gates().size(); i++) {
        const auto &g = cc.target.circuit.gates()[i];
        const auto &sg = src.circuit.gate_by_id(cc.provenance[i].source_gate);
        int allowed = sg.degree() + top;
        if (g.degree() > allowed) {
            violations++;
            notes += " arity";
        }
        bool touches_top = false;
        for (int w : g.wires) {
            if (w <= top) {
                touches_top = true;
            }
        }
        if (touches_top != cc.provenance[i].top_wire_used) {
            violations++;
            notes += " provenance";
        }
    }
    return violations;
}

SuiteResult width_size_suite(const std::vector<OrderedCircuit<std::complex<double>>> &complex_corpus,
                             const std::vector<OrderedCircuit<Quaternion>> &quat_corpus,
                             const CompiledCorpora &compiled) {
    SuiteResult r;
    r.name = "width-size";
    r.tolerance = 0.0;
    int violations = 0;
    std::string notes;
    for (std::size_t i = 0; i < complex_corpus.size(); i++) {
        violations += width_size_violations(complex_corpus[i], compiled.h_from_complex[i], notes);
    }
    for (std::size_t i = 0; i < quat_corpus.size(); i++) {
        violations += width_size_violations(quat_corpus[i], compiled.hhat[i], notes);
        violations += width_size_violations(quat_corpus[i], compiled.shat[i], notes);
    }
    r.deviation = violations;
    r.pass = violations == 0;
    r.detail = violations == 0 ? "one fresh top wire (two for shat), same gate count, arity raised by the top wires only"
                               : "violations:" + notes;
    return r;
}

SuiteResult ordering_fixtures_suite() {
    SuiteResult r;
    r.name = "ordering-witness-fixtures";
    r.tolerance = tol::kEndToEnd;
    Circuit<Quaternion> c = ordering_witness_circuit();
    OrderingReport report = ordering_spread(c, StateVector<Quaternion>::basis(2, 0));
    const auto &fixtures = ordering_witness_fixtures();
    if (report.sigmas.size() != fixtures.size()) {
        r.pass = false;
        r.deviation = 1.0;
        r.detail = "expected " + std::to_string(fixtures.size()) + " sorts, got " + std::to_string(report.sigmas.size());
        return r;
    }
    for (std::size_t i = 0; i < fixtures.size(); i++) {
        if (report.sigmas[i] != fixtures[i].first) {
            r.pass = false;
            r.deviation = 1.0;
            r.detail = "sort enumeration order differs from the frozen fixtures";
            return r;
        }
        r.deviation = std::max(r.deviation, linf_distance(report.distributions[i].probs, fixtures[i].second));
    }
    r.pass = r.deviation <= r.tolerance;
    r.detail = "three sorts against frozen brute-force distributions";
    return r;
}

SuiteResult ordering_gap_suite() {
    SuiteResult r;
    r.name = "ordering-witness-gap";
    r.tolerance = tol::kDistributionGap;
    r.at_least = true;
    OrderingReport report = ordering_spread(ordering_witness_circuit(), StateVector<Quaternion>::basis(2, 0));
    r.deviation = report.max_distance;
    r.pass = r.deviation >= r.tolerance;
    r.detail = "max pairwise L-infinity distance across sorts";
    return r;
}

SuiteResult ordering_control_suite() {
    SuiteResult r;
    r.name = "ordering-complex-control";
    r.tolerance = tol::kEndToEnd;
    OrderingReport report = ordering_spread(ordering_witness_complex_control(), StateVector<Quaternion>::basis(2, 0));
    r.deviation = report.max_distance;
    r.pass = r.deviation <= r.tolerance;
    r.detail = "same circuit with the j rotation replaced by an i rotation; spread must vanish";
    return r;
}

SuiteResult commitment_gap_suite() {
    SuiteResult r;
    r.name = "commitment-gap";
    r.tolerance = tol::kDistributionGap;
    r.at_least = true;
    CommitmentTranscript t = bit_commitment_demo(0);
    r.deviation = t.gap;
    r.pass = r.deviation >= r.tolerance;
    r.detail = "L-infinity distance between the opened distributions of the two committed bits";
    return r;
}

SuiteResult commitment_hiding_suite() {
    SuiteResult r;
    r.name = "commitment-hiding";
    r.tolerance = tol::kEndToEnd;
    CommitmentTranscript t0 = bit_commitment_demo(0);
    CommitmentTranscript t1 = bit_commitment_demo(1);
    r.deviation = std::max(t0.pre_opening_distance, t1.pre_opening_distance);
    r.pass = r.deviation <= r.tolerance;
    r.detail = "single-wire marginals before the opening are identical for both bits";
    return r;
}

SuiteResult commitment_fixtures_suite() {
    SuiteResult r;
    r.name = "commitment-fixtures";
    r.tolerance = tol::kEndToEnd;
    CommitmentTranscript t = bit_commitment_demo(0);
    // Frozen: committed branch opens to j|01>+i|10> over sqrt(2), the other
    // branch to i|10>+k|11> over sqrt(2).
    const std::vector<double> expect0{0.0, 0.5, 0.5, 0.0};
    const std::vector<double> expect1{0.0, 0.0, 0.5, 0.5};
    r.deviation = std::max(linf_distance(t.opened_committed, expect0), linf_distance(t.opened_other, expect1));
    const std::vector<double> half{0.5, 0.5};
    r.deviation = std::max({r.deviation,
                            linf_distance(t.alice_marginal_committed, half),
                            linf_distance(t.alice_marginal_other, half),
                            linf_distance(t.bob_marginal_committed, half),
                            linf_distance(t.bob_marginal_other, half)});
    r.pass = r.deviation <= r.tolerance;
    r.detail = "opened distributions and pre-opening marginals against frozen values";
    return r;
}

SuiteResult commitment_control_suite() {
    SuiteResult r;
    r.name = "commitment-complex-control";
    r.tolerance = tol::kEndToEnd;
    CommitmentTranscript t = bit_commitment_complex_control(0);
    r.deviation = t.gap;
    r.pass = r.deviation <= r.tolerance;
    r.detail = "over commuting rotations the opened distributions coincide, so no commitment";
    return r;
}

SuiteResult passthrough_suite(uint64_t seed) {
    SuiteResult r;
    r.name = "real-gate-passthrough";
    r.tolerance = 0.0;
    Rng rng(seed);
    Circuit<double> c(4);
    const char *pool[] = {"H", "X", "Z", "CNOT", "SWAP"};
    for (int gid = 1; gid <= 10; gid++) {
        Gate<double> g;
        g.id = gid;
        const char *pick = pool[rng.below(5)];
        if (std::strcmp(pick, "CNOT") == 0 || std::strcmp(pick, "SWAP") == 0) {
            int a = 1 + static_cast<int>(rng.below(4));
            int b = 1 + static_cast<int>(rng.below(3));
            if (b >= a) {
                b++;
            }
            g.wires = {std::min(a, b), std::max(a, b)};
        } else {
            g.wires = {1 + static_cast<int>(rng.below(4))};
        }
        g.matrix = builtin_gate<double>(pick);
        c.add_gate(std::move(g));
    }
    OrderedCircuit<double> src = OrderedCircuit<double>::with_default_order(std::move(c));
    CompiledCircuit<double> cc = compile_h(src);
    int violations = 0;
    if (cc.target.circuit.width() != src.circuit.width() + 1) {
        violations++;
    }
    for (std::size_t i = 0; i < cc.target.circuit.gates().size(); i++) {
        const Gate<double> &g = cc.target.circuit.gates()[i];
        const Gate<double> &sg = src.circuit.gate_by_id(cc.provenance[i].source_gate);
        if (cc.provenance[i].top_wire_used) {
            violations++;
        }
        for (int w : g.wires) {
            if (w == 1) {
                violations++;
            }
        }
        if (g.wires.size() != sg.wires.size()) {
            violations++;
            continue;
        }
        for (std::size_t k = 0; k < g.wires.size(); k++) {
            if (g.wires[k] != sg.wires[k] + 1) {
                violations++;
            }
        }
        // Byte-identical passthrough of the gate matrix.
        if (g.matrix.rows() != sg.matrix.rows() || g.matrix.cols() != sg.matrix.cols() ||
            std::memcmp(g.matrix.entries().data(), sg.matrix.entries().data(),
                        sg.matrix.entries().size() * sizeof(double)) != 0) {
            violations++;
        }
    }
    r.deviation = violations;
    r.pass = violations == 0;
    r.detail = "real gates compile to themselves, shifted one wire down, top wire untouched";
    return r;
}

}  // namespace

VerifyReport run_verification(const VerifyOptions &options) {
    VerifyReport report;
    report.suites.push_back(homomorphism_suite(EmbeddingKind::H, options, 1));
    report.suites.push_back(homomorphism_suite(EmbeddingKind::HHat, options, 2));
    report.suites.push_back(homomorphism_suite(EmbeddingKind::SHat, options, 3));

    std::vector<OrderedCircuit<std::complex<double>>> complex_corpus = complex_verification_corpus(sub_seed(options.seed, 4));
    std::vector<OrderedCircuit<Quaternion>> quat_corpus = quaternion_verification_corpus(sub_seed(options.seed, 5));
    CompiledCorpora compiled;
    for (const auto &oc : complex_corpus) {
        compiled.h_from_complex.push_back(compile_h(oc));
    }
    for (const auto &oc : quat_corpus) {
        compiled.hhat.push_back(compile_hhat(oc));
        compiled.shat.push_back(compile_shat(oc));
    }

    report.suites.push_back(circularity_suite_h(complex_corpus, compiled.h_from_complex));
    report.suites.push_back(circularity_suite_quat("circularity-hhat", quat_corpus, compiled.hhat));
    report.suites.push_back(circularity_suite_quat("circularity-shat", quat_corpus, compiled.shat));

    auto [stat_h, mutual_h] = statistics_suites("statistics-h", "statistics-mutual-h", complex_corpus,
                                                compiled.h_from_complex, sub_seed(options.seed, 6));
    auto [stat_hhat, mutual_hhat] = statistics_suites("statistics-hhat", "statistics-mutual-hhat", quat_corpus,
                                                      compiled.hhat, sub_seed(options.seed, 7));
    auto [stat_shat, mutual_shat] = statistics_suites("statistics-shat", "statistics-mutual-shat", quat_corpus,
                                                      compiled.shat, sub_seed(options.seed, 8));
    report.suites.push_back(stat_h);
    report.suites.push_back(mutual_h);
    report.suites.push_back(stat_hhat);
    report.suites.push_back(mutual_hhat);
    report.suites.push_back(stat_shat);
    report.suites.push_back(mutual_shat);

    report.suites.push_back(width_size_suite(complex_corpus, quat_corpus, compiled));
    report.suites.push_back(ordering_fixtures_suite());
    report.suites.push_back(ordering_gap_suite());
    report.suites.push_back(ordering_control_suite());
    report.suites.push_back(commitment_gap_suite());
    report.suites.push_back(commitment_hiding_suite());
    report.suites.push_back(commitment_fixtures_suite());
    report.suites.push_back(commitment_control_suite());
    report.suites.push_back(passthrough_suite(sub_seed(options.seed, 9)));
    return report;
}

nlohmann::json verify_report_to_json(const VerifyReport &report) {
    nlohmann::json suites = nlohmann::json::array();
    for (const SuiteResult &s : report.suites) {
        suites.push_back(nlohmann::json{
            {"name", s.name},
            {"pass", s.pass},
            {"deviation", s.deviation},
            {"tolerance", s.tolerance},
            {"mode", s.at_least ? "at_least" : "at_most"},
            {"detail", s.detail},
        });
    }
    return nlohmann::json{{"all_pass", report.all_pass()}, {"suites", std::move(suites)}};
}

}  // namespace quatsim
