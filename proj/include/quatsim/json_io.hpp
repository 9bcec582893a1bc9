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

#ifndef QUATSIM_JSON_IO_HPP
#define QUATSIM_JSON_IO_HPP

#include <optional>
#include <string>
#include <variant>

#include "json.hpp"
#include "quatsim/demo.hpp"
#include "quatsim/embedding.hpp"

namespace quatsim {

// Scalar wire format, by domain:
//   real        3.5
//   complex     [re, im]
//   quaternion  [a0, a1, a2, a3]
// Parsing accepts any narrower form and widens it; serialization always
// writes the full form of the circuit's domain.

template <typename T>
nlohmann::json scalar_to_json(const T &x) {
    double c[ScalarTraits<T>::components];
    ScalarTraits<T>::to_components(x, c);
    if constexpr (ScalarTraits<T>::components == 1) {
        return c[0];
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = 0; i < ScalarTraits<T>::components; i++) {
            arr.push_back(c[i]);
        }
        return arr;
    }
}

template <typename T>
T scalar_from_json(const nlohmann::json &j) {
    double c[4] = {0, 0, 0, 0};
    if (j.is_number()) {
        c[0] = j.get<double>();
    } else if (j.is_array()) {
        if (j.size() > ScalarTraits<T>::components || j.empty()) {
            throw ParseError("scalar has too many components for the domain");
        }
        for (std::size_t i = 0; i < j.size(); i++) {
            if (!j[i].is_number()) {
                throw ParseError("scalar components must be numbers");
            }
            c[i] = j[i].get<double>();
        }
    } else {
        throw ParseError("scalar must be a number or an array of numbers");
    }
    return ScalarTraits<T>::from_components(c);
}

template <typename T>
nlohmann::json matrix_to_json(const Matrix<T> &m) {
    nlohmann::json entries = nlohmann::json::array();
    for (const T &x : m.entries()) {
        entries.push_back(scalar_to_json(x));
    }
    return nlohmann::json{
        {"domain", std::string(domain_name(ScalarTraits<T>::domain))},
        {"rows", m.rows()},
        {"cols", m.cols()},
        {"entries", std::move(entries)},
    };
}

template <typename T>
Matrix<T> matrix_from_json(const nlohmann::json &j);

/// A parsed circuit file: the circuit in its declared domain, plus the
/// explicit evaluation order if the file carried one (already validated).
struct ParsedCircuit {
    Domain domain = Domain::Real;
    std::variant<Circuit<double>, Circuit<std::complex<double>>, Circuit<Quaternion>> circuit;
    std::optional<std::vector<int>> sigma;

    ParsedCircuit() : circuit(Circuit<double>(1)) {}
};

ParsedCircuit parse_circuit_json(const nlohmann::json &j, double membership_tolerance = tol::kGateMembership);
ParsedCircuit parse_circuit_text(const std::string &text, double membership_tolerance = tol::kGateMembership);

template <typename T>
nlohmann::json circuit_to_json(const Circuit<T> &c, const std::optional<std::vector<int>> &sigma = std::nullopt) {
    nlohmann::json gates = nlohmann::json::array();
    for (const Gate<T> &g : c.gates()) {
        gates.push_back(nlohmann::json{
            {"id", g.id},
            {"wires", g.wires},
            {"matrix", matrix_to_json(g.matrix)},
        });
    }
    nlohmann::json out{
        {"domain", std::string(domain_name(ScalarTraits<T>::domain))},
        {"width", c.width()},
        {"gates", std::move(gates)},
    };
    if (sigma.has_value()) {
        out["sigma"] = *sigma;
    }
    return out;
}

/// Compiled circuits serialize as ordinary circuit files (so they can be
/// fed straight back to the simulator) with provenance annotations on each
/// gate and at the top level.
template <typename TLower>
nlohmann::json compiled_to_json(const CompiledCircuit<TLower> &cc) {
    nlohmann::json out = circuit_to_json(cc.target.circuit, cc.target.sigma);
    for (std::size_t i = 0; i < cc.provenance.size(); i++) {
        out["gates"][i]["source_gate"] = cc.provenance[i].source_gate;
        out["gates"][i]["embedding"] = std::string(embedding_name(cc.kind));
        out["gates"][i]["top_wire_used"] = cc.provenance[i].top_wire_used;
    }
    out["embedding"] = std::string(embedding_name(cc.kind));
    out["source_width"] = cc.source_width;
    return out;
}

/// {"n": wires, "probs": {bitstring: probability}}; probabilities below
/// tol::kProbFloor are omitted. Bitstrings read wire 1 first.
nlohmann::json distribution_to_json(const MeasurementDistribution &dist);

nlohmann::json marginal_to_json(const Marginal &m);

nlohmann::json ordering_report_to_json(const OrderingReport &report);

nlohmann::json commitment_to_json(const CommitmentTranscript &t);

std::string bitstring(std::size_t index, int wires);

/// Wire-format helpers shared by the CLI.
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &content);

}  // namespace quatsim

#endif
