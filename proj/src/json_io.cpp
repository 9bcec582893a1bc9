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

#include "quatsim/json_io.hpp"

#include <fstream>
#include <sstream>

#include "quatsim/gates.hpp"

namespace quatsim {

namespace {

const nlohmann::json &require_field(const nlohmann::json &j, const char *key, const char *where) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(std::string(where) + ": missing field \"" + key + "\"");
    }
    return *it;
}

int require_int(const nlohmann::json &j, const char *what) {
    if (!j.is_number_integer()) {
        throw ParseError(std::string(what) + " must be an integer");
    }
    return j.get<int>();
}

std::optional<Domain> domain_from_string(const std::string &name) {
    if (name == "real") {
        return Domain::Real;
    }
    if (name == "complex") {
        return Domain::Complex;
    }
    if (name == "quaternion") {
        return Domain::Quaternion;
    }
    return std::nullopt;
}

// The matrix's own domain tag may be narrower than T (entries widen), but
// never wider.
bool domain_fits(Domain narrow, Domain wide) {
    return static_cast<int>(narrow) <= static_cast<int>(wide);
}

template <typename T>
Matrix<T> matrix_from_json_impl(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw ParseError("matrix must be an object");
    }
    std::string dname = require_field(j, "domain", "matrix").get<std::string>();
    std::optional<Domain> d = domain_from_string(dname);
    if (!d.has_value()) {
        throw ParseError("matrix: unknown domain \"" + dname + "\"");
    }
    if (!domain_fits(*d, ScalarTraits<T>::domain)) {
        throw ParseError("matrix domain \"" + dname + "\" is wider than the circuit domain");
    }
    int rows = require_int(require_field(j, "rows", "matrix"), "matrix rows");
    int cols = require_int(require_field(j, "cols", "matrix"), "matrix cols");
    if (rows < 1 || cols < 1) {
        throw ParseError("matrix dimensions must be positive");
    }
    const nlohmann::json &entries = require_field(j, "entries", "matrix");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        throw ParseError("matrix entries must be an array of rows*cols scalars");
    }
    Matrix<T> m(rows, cols);
    for (std::size_t i = 0; i < entries.size(); i++) {
        m.entries()[i] = scalar_from_json<T>(entries[i]);
    }
    return m;
}

template <typename T>
Circuit<T> parse_circuit_typed(const nlohmann::json &j, double membership_tolerance) {
    int width = require_int(require_field(j, "width", "circuit"), "circuit width");
    if (width < 1) {
        throw ParseError("circuit width must be at least 1");
    }
    Circuit<T> c(width);
    const nlohmann::json &gates = require_field(j, "gates", "circuit");
    if (!gates.is_array()) {
        throw ParseError("circuit gates must be an array");
    }
    for (const nlohmann::json &gj : gates) {
        if (!gj.is_object()) {
            throw ParseError("gate must be an object");
        }
        Gate<T> g;
        g.id = require_int(require_field(gj, "id", "gate"), "gate id");
        const nlohmann::json &wires = require_field(gj, "wires", "gate");
        if (!wires.is_array() || wires.empty()) {
            throw ParseError("gate wires must be a non-empty array");
        }
        for (const nlohmann::json &w : wires) {
            g.wires.push_back(require_int(w, "gate wire"));
        }
        bool has_matrix = gj.contains("matrix");
        bool has_builtin = gj.contains("builtin");
        if (has_matrix == has_builtin) {
            throw ParseError("gate " + std::to_string(g.id) + " needs exactly one of \"matrix\" or \"builtin\"");
        }
        if (has_builtin) {
            const nlohmann::json &b = gj["builtin"];
            if (!b.is_string()) {
                throw ParseError("gate builtin must be a string");
            }
            g.matrix = builtin_gate<T>(b.get<std::string>());
        } else {
            g.matrix = matrix_from_json_impl<T>(gj["matrix"]);
        }
        std::size_t want = std::size_t{1} << g.wires.size();
        if (g.matrix.rows() != want || g.matrix.cols() != want) {
            throw ParseError("gate " + std::to_string(g.id) + " matrix dimension does not match its wire count");
        }
        try {
            c.add_gate(std::move(g), membership_tolerance);
        } catch (const DimensionError &e) {
            throw ParseError(e.what());
        }
    }
    return c;
}

std::optional<std::vector<int>> parse_sigma(const nlohmann::json &j) {
    auto it = j.find("sigma");
    if (it == j.end() || it->is_null()) {
        return std::nullopt;
    }
    if (!it->is_array()) {
        throw SigmaError("sigma must be an array of gate ids");
    }
    std::vector<int> sigma;
    for (const nlohmann::json &x : *it) {
        if (!x.is_number_integer()) {
            throw SigmaError("sigma entries must be integers");
        }
        sigma.push_back(x.get<int>());
    }
    return sigma;
}

}  // namespace

template <typename T>
Matrix<T> matrix_from_json(const nlohmann::json &j) {
    return matrix_from_json_impl<T>(j);
}

template Matrix<double> matrix_from_json<double>(const nlohmann::json &);
template Matrix<std::complex<double>> matrix_from_json<std::complex<double>>(const nlohmann::json &);
template Matrix<Quaternion> matrix_from_json<Quaternion>(const nlohmann::json &);

ParsedCircuit parse_circuit_json(const nlohmann::json &j, double membership_tolerance) {
    if (!j.is_object()) {
        throw ParseError("circuit file must be a JSON object");
    }
    const nlohmann::json &dj = require_field(j, "domain", "circuit");
    if (!dj.is_string()) {
        throw ParseError("circuit domain must be a string");
    }
    std::optional<Domain> d = domain_from_string(dj.get<std::string>());
    if (!d.has_value()) {
        throw ParseError("circuit: unknown domain \"" + dj.get<std::string>() + "\"");
    }
    ParsedCircuit out;
    out.domain = *d;
    switch (*d) {
        case Domain::Real:
            out.circuit = parse_circuit_typed<double>(j, membership_tolerance);
            break;
        case Domain::Complex:
            out.circuit = parse_circuit_typed<std::complex<double>>(j, membership_tolerance);
            break;
        case Domain::Quaternion:
            out.circuit = parse_circuit_typed<Quaternion>(j, membership_tolerance);
            break;
    }
    out.sigma = parse_sigma(j);
    if (out.sigma.has_value()) {
        std::visit(
            [&](const auto &c) {
                validate_topological_sort(c.shape(), *out.sigma);
            },
            out.circuit);
    }
    return out;
}

ParsedCircuit parse_circuit_text(const std::string &text, double membership_tolerance) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_circuit_json(j, membership_tolerance);
}

std::string bitstring(std::size_t index, int wires) {
    std::string s(wires, '0');
    for (int b = 0; b < wires; b++) {
        if ((index >> (wires - 1 - b)) & 1) {
            s[b] = '1';
        }
    }
    return s;
}

nlohmann::json distribution_to_json(const MeasurementDistribution &dist) {
    nlohmann::json probs = nlohmann::json::object();
    for (std::size_t i = 0; i < dist.probs.size(); i++) {
        if (dist.probs[i] >= tol::kProbFloor) {
            probs[bitstring(i, dist.wires)] = dist.probs[i];
        }
    }
    return nlohmann::json{{"n", dist.wires}, {"probs", std::move(probs)}};
}

nlohmann::json marginal_to_json(const Marginal &m) {
    nlohmann::json probs = nlohmann::json::object();
    int w = static_cast<int>(m.kept.size());
    for (std::size_t i = 0; i < m.probs.size(); i++) {
        if (m.probs[i] >= tol::kProbFloor) {
            probs[bitstring(i, w)] = m.probs[i];
        }
    }
    return nlohmann::json{{"wires", m.kept}, {"probs", std::move(probs)}};
}

nlohmann::json ordering_report_to_json(const OrderingReport &report) {
    nlohmann::json dists = nlohmann::json::array();
    for (const MeasurementDistribution &d : report.distributions) {
        dists.push_back(distribution_to_json(d));
    }
    return nlohmann::json{
        {"width", report.width},
        {"sigmas", report.sigmas},
        {"distributions", std::move(dists)},
        {"distances", report.distances},
        {"max_distance", report.max_distance},
        {"witness_pair", {report.witness_a, report.witness_b}},
    };
}

namespace {

nlohmann::json probs_vector_to_json(const std::vector<double> &probs, int wires) {
    nlohmann::json out = nlohmann::json::object();
    for (std::size_t i = 0; i < probs.size(); i++) {
        if (probs[i] >= tol::kProbFloor) {
            out[bitstring(i, wires)] = probs[i];
        }
    }
    return out;
}

}  // namespace

nlohmann::json commitment_to_json(const CommitmentTranscript &t) {
    return nlohmann::json{
        {"commit_bit", t.commit_bit},
        {"sigma_committed", t.sigma_committed},
        {"sigma_other", t.sigma_other},
        {"opened_committed", probs_vector_to_json(t.opened_committed, 2)},
        {"opened_other", probs_vector_to_json(t.opened_other, 2)},
        {"gap", t.gap},
        {"pre_opening", nlohmann::json{
            {"alice_committed", probs_vector_to_json(t.alice_marginal_committed, 1)},
            {"alice_other", probs_vector_to_json(t.alice_marginal_other, 1)},
            {"bob_committed", probs_vector_to_json(t.bob_marginal_committed, 1)},
            {"bob_other", probs_vector_to_json(t.bob_marginal_other, 1)},
            {"distance", t.pre_opening_distance},
        }},
    };
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write file " + path);
    }
    out << content;
}

}  // namespace quatsim
