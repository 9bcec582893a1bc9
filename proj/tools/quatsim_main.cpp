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

#include <algorithm>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "quatsim/json_io.hpp"
#include "quatsim/verify.hpp"

namespace {

using quatsim::CompiledCircuit;
using quatsim::Circuit;
using quatsim::Domain;
using quatsim::EmbeddingKind;
using quatsim::OrderedCircuit;
using quatsim::ParsedCircuit;
using quatsim::Quaternion;
using quatsim::StateVector;

// Exit codes: 0 success, 1 verification failure or internal error, 2 parse
// failure, 3 invalid evaluation order, 4 non-unitary gate, 5 incompatible
// embedding, 6 unknown demo.
enum ExitCode {
    kOk = 0,
    kFailure = 1,
    kParse = 2,
    kSigma = 3,
    kGate = 4,
    kEmbedding = 5,
    kDemo = 6,
};

void emit(const nlohmann::json &j, const std::string &out_path) {
    std::string text = j.dump(2);
    text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
    } else {
        quatsim::write_text_file(out_path, text);
    }
}

std::vector<int> parse_sigma_flag(const std::string &flag) {
    std::vector<int> sigma;
    std::size_t pos = 0;
    while (pos < flag.size()) {
        std::size_t comma = flag.find(',', pos);
        std::string piece = flag.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            sigma.push_back(std::stoi(piece, &used));
            if (used != piece.size()) {
                throw std::invalid_argument(piece);
            }
        } catch (const std::exception &) {
            throw quatsim::SigmaError("--sigma must be \"default\" or a comma-separated list of gate ids");
        }
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    if (sigma.empty()) {
        throw quatsim::SigmaError("--sigma list is empty");
    }
    return sigma;
}

// Resolution order: explicit flag, then the file's sigma, then the default
// linearization.
template <typename T>
OrderedCircuit<T> with_resolved_order(Circuit<T> c, const std::optional<std::vector<int>> &file_sigma, const std::string &sigma_flag) {
    if (!sigma_flag.empty() && sigma_flag != "default") {
        return OrderedCircuit<T>::with_order(std::move(c), parse_sigma_flag(sigma_flag));
    }
    if (sigma_flag.empty() && file_sigma.has_value()) {
        return OrderedCircuit<T>::with_order(std::move(c), *file_sigma);
    }
    return OrderedCircuit<T>::with_default_order(std::move(c));
}

struct SimulateArgs {
    std::string input;
    std::string out;
    std::string sigma;
    double tolerance = quatsim::tol::kGateMembership;
};

int cmd_simulate(const SimulateArgs &args) {
    ParsedCircuit parsed = quatsim::parse_circuit_text(quatsim::read_text_file(args.input), args.tolerance);
    nlohmann::json out = std::visit(
        [&](auto &&c) {
            using T = typename std::decay_t<decltype(c)>::value_type;
            auto oc = with_resolved_order(std::move(c), parsed.sigma, args.sigma);
            StateVector<T> input = StateVector<T>::basis(oc.circuit.width(), 0);
            // A loosened gate tolerance lets the state norm drift by the same
            // order, so the norm check honors the override too.
            double norm_tol = std::max(quatsim::tol::kStateNorm, args.tolerance);
            nlohmann::json j = quatsim::distribution_to_json(measure_all(run(oc, input), norm_tol));
            j["domain"] = std::string(domain_name(quatsim::ScalarTraits<T>::domain));
            j["sigma"] = oc.sigma;
            return j;
        },
        std::move(parsed.circuit));
    emit(out, args.out);
    return kOk;
}

struct CompileArgs {
    std::string input;
    std::string out;
    std::string sigma;
    std::string embedding;
    bool no_skip_real = false;
    double tolerance = quatsim::tol::kGateMembership;
};

int cmd_compile(const CompileArgs &args) {
    auto kind = quatsim::embedding_from_name(args.embedding);
    if (!kind.has_value()) {
        throw quatsim::EmbeddingError("unknown embedding \"" + args.embedding + "\" (expected h, hhat or shat)");
    }
    ParsedCircuit parsed = quatsim::parse_circuit_text(quatsim::read_text_file(args.input), args.tolerance);
    quatsim::CompileOptions options;
    options.skip_real_gates = !args.no_skip_real;

    nlohmann::json out = std::visit(
        [&](auto &&c) -> nlohmann::json {
            using T = typename std::decay_t<decltype(c)>::value_type;
            auto oc = with_resolved_order(std::move(c), parsed.sigma, args.sigma);
            switch (*kind) {
                case EmbeddingKind::H:
                    if constexpr (std::is_same_v<T, Quaternion>) {
                        throw quatsim::EmbeddingError("embedding h expects a real or complex circuit");
                    } else {
                        return quatsim::compiled_to_json(compile_h(oc, options));
                    }
                case EmbeddingKind::HHat:
                case EmbeddingKind::SHat: {
                    OrderedCircuit<Quaternion> qoc = [&] {
                        if constexpr (std::is_same_v<T, Quaternion>) {
                            return std::move(oc);
                        } else {
                            return OrderedCircuit<Quaternion>{quatsim::circuit_widen<Quaternion>(oc.circuit), oc.sigma};
                        }
                    }();
                    if (*kind == EmbeddingKind::HHat) {
                        return quatsim::compiled_to_json(compile_hhat(qoc, options));
                    }
                    return quatsim::compiled_to_json(compile_shat(qoc, options));
                }
            }
            throw quatsim::Error("unreachable");
        },
        std::move(parsed.circuit));
    emit(out, args.out);
    return kOk;
}

struct VerifyArgs {
    std::string out;
    uint64_t seed = 1;
    int trials = 100;
    bool corrupt = false;
};

int cmd_verify(const VerifyArgs &args) {
    quatsim::VerifyOptions options;
    options.seed = args.seed;
    options.trials = args.trials;
    options.corrupt = args.corrupt;
    quatsim::VerifyReport report = quatsim::run_verification(options);
    for (const quatsim::SuiteResult &s : report.suites) {
        std::cerr << (s.pass ? "[pass] " : "[FAIL] ") << s.name << " (deviation " << s.deviation
                  << (s.at_least ? " >= " : " <= ") << s.tolerance << (s.pass ? "" : " VIOLATED") << ")\n";
    }
    emit(quatsim::verify_report_to_json(report), args.out);
    return report.all_pass() ? kOk : kFailure;
}

struct DemoArgs {
    std::string name;
    std::string out;
    std::size_t cap = quatsim::limits::kDefaultSortCap;
    int bit = 0;
};

int cmd_demo(const DemoArgs &args) {
    if (args.name == "ordering") {
        quatsim::OrderingReport report =
            quatsim::ordering_spread(quatsim::ordering_witness_circuit(), StateVector<Quaternion>::basis(2, 0), args.cap);
        quatsim::OrderingReport control =
            quatsim::ordering_spread(quatsim::ordering_witness_complex_control(), StateVector<Quaternion>::basis(2, 0), args.cap);
        nlohmann::json j{
            {"demo", "ordering"},
            {"report", quatsim::ordering_report_to_json(report)},
            {"complex_control_max_distance", control.max_distance},
        };
        emit(j, args.out);
        return kOk;
    }
    if (args.name == "commitment") {
        quatsim::CommitmentTranscript t = quatsim::bit_commitment_demo(args.bit);
        quatsim::CommitmentTranscript control = quatsim::bit_commitment_complex_control(args.bit);
        nlohmann::json j{
            {"demo", "commitment"},
            {"transcript", quatsim::commitment_to_json(t)},
            {"complex_control_gap", control.gap},
        };
        emit(j, args.out);
        return kOk;
    }
    throw quatsim::DemoError("unknown demo \"" + args.name + "\" (expected ordering or commitment)");
}

struct SortsArgs {
    std::string input;
    std::string out;
    std::size_t cap = quatsim::limits::kDefaultSortCap;
    double tolerance = quatsim::tol::kGateMembership;
};

int cmd_sorts(const SortsArgs &args) {
    ParsedCircuit parsed = quatsim::parse_circuit_text(quatsim::read_text_file(args.input), args.tolerance);
    nlohmann::json out = std::visit(
        [&](const auto &c) {
            std::vector<std::vector<int>> sigmas = quatsim::enumerate_topological_sorts(c.shape(), args.cap);
            return nlohmann::json{{"count", sigmas.size()}, {"sigmas", sigmas}};
        },
        parsed.circuit);
    emit(out, args.out);
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"quatsim: circuit simulation over real, complex and quaternionic amplitudes"};
    app.require_subcommand(1);

    SimulateArgs sim_args;
    CLI::App *sim = app.add_subcommand("simulate", "Run a circuit file from the all-zeros state and print the outcome distribution");
    sim->add_option("--input", sim_args.input, "Circuit JSON file")->required();
    sim->add_option("--out", sim_args.out, "Write the result here instead of stdout");
    sim->add_option("--sigma", sim_args.sigma, "Evaluation order: \"default\" or comma-separated gate ids");
    sim->add_option("--tol", sim_args.tolerance, "Gate group-membership tolerance");

    CompileArgs compile_args;
    CLI::App *comp = app.add_subcommand("compile", "Compile a circuit down one domain via h, hhat or shat");
    comp->add_option("--input", compile_args.input, "Circuit JSON file")->required();
    comp->add_option("--out", compile_args.out, "Write the compiled circuit here instead of stdout");
    comp->add_option("--sigma", compile_args.sigma, "Source evaluation order: \"default\" or comma-separated gate ids");
    comp->add_option("--embedding", compile_args.embedding, "One of h, hhat, shat")->required();
    comp->add_flag("--no-skip-real", compile_args.no_skip_real, "Embed real gates too instead of passing them through");
    comp->add_option("--tol", compile_args.tolerance, "Gate group-membership tolerance");

    VerifyArgs verify_args;
    CLI::App *ver = app.add_subcommand("verify", "Run the full verification suite and print a machine-readable report");
    ver->add_option("--out", verify_args.out, "Write the report here instead of stdout");
    ver->add_option("--seed", verify_args.seed, "Seed for the random corpora");
    ver->add_option("--trials", verify_args.trials, "Random pairs per homomorphism dimension")->check(CLI::PositiveNumber);
    ver->add_flag("--corrupt", verify_args.corrupt, "Negative-control hook: corrupt an embedded matrix entry")
        ->group("");  // hidden

    DemoArgs demo_args;
    CLI::App *demo = app.add_subcommand("demo", "Run a named demo (ordering, commitment)");
    demo->add_option("name", demo_args.name, "Demo name")->required();
    demo->add_option("--out", demo_args.out, "Write the result here instead of stdout");
    demo->add_option("--cap", demo_args.cap, "Max number of enumerated orders");
    demo->add_option("--bit", demo_args.bit, "Commitment bit (0 or 1)")->check(CLI::Range(0, 1));

    SortsArgs sorts_args;
    CLI::App *sorts = app.add_subcommand("sorts", "Enumerate the topological sorts of a circuit file");
    sorts->add_option("--input", sorts_args.input, "Circuit JSON file")->required();
    sorts->add_option("--out", sorts_args.out, "Write the result here instead of stdout");
    sorts->add_option("--cap", sorts_args.cap, "Max number of enumerated orders");
    sorts->add_option("--tol", sorts_args.tolerance, "Gate group-membership tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) {
            return cmd_simulate(sim_args);
        }
        if (comp->parsed()) {
            return cmd_compile(compile_args);
        }
        if (ver->parsed()) {
            return cmd_verify(verify_args);
        }
        if (demo->parsed()) {
            return cmd_demo(demo_args);
        }
        if (sorts->parsed()) {
            return cmd_sorts(sorts_args);
        }
    } catch (const quatsim::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const quatsim::SigmaError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSigma;
    } catch (const quatsim::GateError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kGate;
    } catch (const quatsim::EmbeddingError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kEmbedding;
    } catch (const quatsim::DemoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDemo;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}
