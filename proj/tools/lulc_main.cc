// Copyright 2026 The lulc Authors
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

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "lulc/equiv.h"
#include "lulc/error.h"
#include "lulc/json_io.h"
#include "lulc/purify.h"
#include "lulc/quadform.h"
#include "lulc/search.h"
#include "lulc/stabilizer.h"
#include "lulc/standard_form.h"
#include "lulc/statevec.h"

using namespace lulc;

namespace {

struct IoOptions {
    std::string in_path;
    std::string inline_json;
    std::string out_path;
};

void add_io(CLI::App *cmd, IoOptions &io) {
    cmd->add_option("--in", io.in_path, "Read the input JSON from a file");
    cmd->add_option("--json", io.inline_json, "Input JSON given inline");
    cmd->add_option("--out", io.out_path, "Write the output JSON to a file instead of stdout");
}

Json read_input(const IoOptions &io) {
    std::string text;
    if (!io.inline_json.empty()) {
        text = io.inline_json;
    } else if (!io.in_path.empty()) {
        std::ifstream f(io.in_path);
        if (!f) {
            throw Error(ErrorCode::InvalidArgument, "cannot open input file " + io.in_path);
        }
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    } else {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON input: ") + e.what());
    }
}

void write_output(const IoOptions &io, const Json &out) {
    std::string text = out.dump(2) + "\n";
    if (io.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(io.out_path);
    if (!f) {
        throw Error(ErrorCode::InvalidArgument, "cannot open output file " + io.out_path);
    }
    f << text;
}

Json semiclifford_json(const Mat2 &u) {
    SemiCliffordInfo info = is_semi_clifford(u);
    Json out;
    out["semi"] = info.semi;
    out["clifford"] = info.clifford;
    out["fixed_axis"] = info.fixed_axis ? Json(std::string(1, axis_letter(*info.fixed_axis))) : Json(nullptr);
    if (info.clifford) {
        out["clifford_index"] = *clifford_index(u);
    }
    if (info.semi) {
        CliffordDecomposition dec = semi_clifford_decompose(u);
        Json d;
        d["C"] = matrix_to_json(dec.c);
        d["D"] = matrix_to_json(dec.d);
        d["C_prime"] = matrix_to_json(dec.c_prime);
        d["c_index"] = dec.c_index;
        d["c_prime_index"] = dec.c_prime_index;
        out["decomposition"] = std::move(d);
    } else {
        out["decomposition"] = nullptr;
    }
    return out;
}

/// Values "1,-1,1,1" indexed by Σ c_a 2^a become a 0/1 table.
std::vector<uint8_t> parse_signs(const std::string &text) {
    std::vector<uint8_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        std::string v = a == std::string::npos ? "" : item.substr(a, b - a + 1);
        if (v == "1" || v == "+1") {
            out.push_back(0);
        } else if (v == "-1") {
            out.push_back(1);
        } else {
            throw Error(ErrorCode::ParseError, "--f entries must be 1 or -1, got '" + v + "'");
        }
    }
    return out;
}

Json quadrep(const PhaseSystem &ps, unsigned level) {
    RepresentabilitySolver solver(ps.basis);
    std::vector<uint8_t> values = ps.values();
    Json out;
    out["S"] = ps.basis.to_strings();
    out["ambient_form"] = quadratic_form_to_json(ps.q);
    out["coordinate_form"] = quadratic_form_to_json(ps.coordinate_form());
    out["level"] = level;
    auto sol = solver.z2l(values, level);
    out["assignment"] = sol ? phase_assignment_to_json(*sol) : Json(nullptr);
    if (ps.rank() <= kMaxComplexRank) {
        bool complex = solver.complex_representable(values);
        out["complex_representable"] = complex;
        auto witness = complex ? solver.complex_witness(values) : std::nullopt;
        out["witness"] = witness ? rationals_to_json(*witness) : Json(nullptr);
    } else {
        out["complex_representable"] = nullptr;
        out["witness"] = nullptr;
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Local unitary / local Clifford equivalence toolkit for stabilizer states"};
    app.require_subcommand(1, 1);
    IoOptions io;

    auto *validate = app.add_subcommand("validate", "Check a stabilizer group");
    auto *invariants = app.add_subcommand("invariants", "Local unitary invariants of a stabilizer group");
    auto *synth = app.add_subcommand("synth", "State of a maximal stabilizer group or of a standard form");
    auto *extract_cmd = app.add_subcommand("extract", "Standard form (S, q, mu, t) of a stabilizer state");
    auto *standardize_cmd = app.add_subcommand("standardize", "Move a standard form to t = 0, mu = 0");
    auto *purify_cmd = app.add_subcommand("purify", "Purify a stabilizer code into a stabilizer state");
    auto *semi = app.add_subcommand("semiclifford", "Classify and decompose a single-qubit unitary");
    auto *lc = app.add_subcommand("lc-oracle", "Brute-force local Clifford equivalence (n <= 3)");
    auto *dlu = app.add_subcommand("dlu-check", "Diagonal local unitary equivalence of two stabilizer states");
    auto *quad = app.add_subcommand("quadrep", "Phase representability of a quadratic form on a subspace");
    auto *search = app.add_subcommand("search", "Counterexample search over subspaces and quadratic forms");

    for (auto *cmd : {validate, invariants, synth, extract_cmd, standardize_cmd, purify_cmd, semi, lc, dlu, quad, search}) {
        add_io(cmd, io);
    }

    std::string s_rows, f_values;
    unsigned level = 2;
    quad->add_option("--S", s_rows, "Subspace basis as a JSON array of 0/1 strings");
    quad->add_option("--f", f_values, "Target signs f(s) = ±1, indexed by Σ c_a 2^a over the basis");
    quad->add_option("--level", level, "Ring level l (phases are 2^l-th roots of unity)")->check(CLI::Range(1u, kMaxPhaseLevel));

    SearchOptions so;
    bool exhaustive = false, no_timing = false;
    uint64_t samples = 0;
    std::string partition = "0/1";
    size_t only_rank = 0;
    search->add_option("--n", so.n, "Ambient dimension")->required();
    search->add_flag("--exhaustive", exhaustive, "Visit every subspace and form (n <= 6)");
    search->add_option("--samples", samples, "Sampled mode: number of random instances (n <= 10)");
    search->add_option("--seed", so.seed, "Seed for sampled mode");
    search->add_option("--level", so.l_target, "Target level (2 = Clifford phases)")->check(CLI::Range(1u, kMaxPhaseLevel - 1));
    search->add_option("--workers", so.workers, "Worker threads")->check(CLI::Range(1u, 256u));
    search->add_option("--partition", partition, "Process partition i of m, written i/m");
    auto *k_opt = search->add_option("--k", only_rank, "Only subspaces of this dimension");
    search->add_flag("--no-timing", no_timing, "Omit wall-clock time so reports are byte-identical");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (search->parsed()) {
            if (exhaustive == (samples > 0)) {
                std::cerr << "search: give exactly one of --exhaustive or --samples N\n";
                return 2;
            }
            so.exhaustive = exhaustive;
            so.samples = samples;
            size_t slash = partition.find('/');
            try {
                if (slash == std::string::npos) {
                    throw std::invalid_argument("no slash");
                }
                so.partition_index = std::stoull(partition.substr(0, slash));
                so.partition_count = std::stoull(partition.substr(slash + 1));
            } catch (const std::exception &) {
                std::cerr << "search: --partition must look like i/m\n";
                return 2;
            }
            if (k_opt->count() > 0) {
                so.only_rank = only_rank;
            }
            write_output(io, search_report_to_json(counterexample_search(so), !no_timing));
            return 0;
        }
        if (quad->parsed()) {
            PhaseSystem ps;
            if (!s_rows.empty() || !f_values.empty()) {
                if (s_rows.empty() || f_values.empty()) {
                    std::cerr << "quadrep: --S and --f must be given together\n";
                    return 2;
                }
                Json rows;
                try {
                    rows = Json::parse(s_rows);
                } catch (const nlohmann::json::exception &e) {
                    throw Error(ErrorCode::ParseError, std::string("--S is not valid JSON: ") + e.what());
                }
                Json instance;
                instance["S"] = rows;
                size_t n = rows.empty() || !rows[0].is_string() ? 0 : rows[0].get<std::string>().size();
                instance["theta"] = Json::array();
                instance["lambda"] = std::string(n, '0');
                PhaseSystem frame = phase_system_from_json(instance);
                std::vector<uint8_t> values = parse_signs(f_values);
                if (values.size() != (size_t{1} << frame.rank())) {
                    throw Error(ErrorCode::SizeMismatch, "--f must list 2^k values");
                }
                auto coords = fit_quadratic_form(frame.rank(), values);
                if (!coords) {
                    throw Error(ErrorCode::NotQuadratic, "the given signs are not (-1)^q for a quadratic form q");
                }
                ps = PhaseSystem::from_coordinates(frame.basis, *coords);
            } else {
                ps = phase_system_from_json(read_input(io));
            }
            write_output(io, quadrep(ps, level));
            return 0;
        }

        Json in = read_input(io);
        Json out;
        if (validate->parsed()) {
            StabilizerGroup s = group_from_json(in);
            out["valid"] = true;
            out["n"] = s.num_qubits();
            out["k"] = s.rank();
            out["maximal"] = s.is_maximal();
        } else if (invariants->parsed()) {
            StabilizerGroup s = group_from_json(in);
            out = invariants_to_json(lu_invariants(s), pi_subgroup(s), detect_2m_code(s));
        } else if (synth->parsed()) {
            if (in.contains("generators")) {
                out = state_to_json(synthesize_state(group_from_json(in)));
            } else {
                out = state_to_json(synthesize(standard_form_from_json(in)));
            }
        } else if (extract_cmd->parsed()) {
            out = standard_form_to_json(extract(state_from_json(in)));
        } else if (standardize_cmd->parsed()) {
            StandardForm sf = in.contains("amps") ? extract(state_from_json(in)) : standard_form_from_json(in);
            Standardization st = standardize(sf);
            out["state"] = state_to_json(st.state);
            out["q_tilde"] = quadratic_form_to_json(st.q_tilde);
            out["d"] = st.d.str();
            out["t"] = st.t.str();
        } else if (purify_cmd->parsed()) {
            out = purification_to_json(purify(group_from_json(in)));
        } else if (semi->parsed()) {
            out = semiclifford_json(matrix_from_json(in.is_object() && in.contains("U") ? in.at("U") : in));
        } else if (lc->parsed()) {
            if (!in.is_object() || !in.contains("psi") || !in.contains("phi")) {
                throw Error(ErrorCode::ParseError, "lc-oracle expects {\"psi\": state, \"phi\": state}");
            }
            auto found = lc_equivalent_bruteforce(state_from_json(in.at("psi")), state_from_json(in.at("phi")));
            out["equivalent"] = found.has_value();
            out["cliffords"] = found ? Json(*found) : Json(nullptr);
        } else if (dlu->parsed()) {
            if (!in.is_object() || !in.contains("psi") || !in.contains("phi")) {
                throw Error(ErrorCode::ParseError, "dlu-check expects {\"psi\": state, \"phi\": state}");
            }
            out = dlu_verdict_to_json(dlu_check(state_from_json(in.at("psi")), state_from_json(in.at("phi"))));
        }
        write_output(io, out);
        return 0;
    } catch (const Error &e) {
        Json err;
        err["error"] = std::string(error_code_name(e.code()));
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const nlohmann::json::exception &e) {
        Json err;
        err["error"] = "ParseError";
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
