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

#include "lulc/json_io.h"

#include "lulc/error.h"

namespace lulc {

namespace {

[[noreturn]] void parse_fail(const std::string &what) {
    throw Error(ErrorCode::ParseError, what);
}

const Json &field(const Json &j, const char *name) {
    if (!j.is_object() || !j.contains(name)) {
        parse_fail(std::string("missing field '") + name + "'");
    }
    return j.at(name);
}

std::string bit_string(const Json &j, const char *what) {
    if (!j.is_string()) {
        parse_fail(std::string(what) + " must be a 0/1 string");
    }
    std::string s = j.get<std::string>();
    for (char c : s) {
        if (c != '0' && c != '1') {
            parse_fail(std::string(what) + " must contain only 0 and 1");
        }
    }
    return s;
}

std::vector<std::string> bit_strings(const Json &j, const char *what) {
    if (!j.is_array()) {
        parse_fail(std::string(what) + " must be an array of 0/1 strings");
    }
    std::vector<std::string> out;
    for (const auto &e : j) {
        out.push_back(bit_string(e, what));
    }
    return out;
}

size_t natural(const Json &j, const char *what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        parse_fail(std::string(what) + " must be a nonnegative integer");
    }
    return j.get<size_t>();
}

Complex complex_from_json(const Json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    parse_fail("complex entries must be numbers or [re, im] pairs");
}

Json complex_to_json(Complex c) {
    return Json::array({c.real(), c.imag()});
}

std::string rational_str(const Rational &r) {
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace

Json group_to_json(const StabilizerGroup &s) {
    Json out;
    out["n"] = s.num_qubits();
    out["generators"] = s.generator_strings();
    return out;
}

StabilizerGroup group_from_json(const Json &j) {
    size_t n = natural(field(j, "n"), "n");
    const Json &gens = field(j, "generators");
    if (!gens.is_array()) {
        parse_fail("generators must be an array of Pauli strings");
    }
    std::vector<std::string> strings;
    for (const auto &g : gens) {
        if (!g.is_string()) {
            parse_fail("generators must be Pauli strings");
        }
        strings.push_back(g.get<std::string>());
    }
    return StabilizerGroup::from_strings(n, strings);
}

Json state_to_json(const StateVector &psi) {
    Json out;
    out["n"] = psi.num_qubits();
    Json amps = Json::array();
    for (const Complex &a : psi.amplitudes()) {
        amps.push_back(complex_to_json(a));
    }
    out["amps"] = std::move(amps);
    return out;
}

StateVector state_from_json(const Json &j) {
    size_t n = natural(field(j, "n"), "n");
    if (n > kMaxStateQubits) {
        throw Error(ErrorCode::TooLarge, "states are limited to " + std::to_string(kMaxStateQubits) + " qubits");
    }
    const Json &amps = field(j, "amps");
    if (!amps.is_array()) {
        parse_fail("amps must be an array");
    }
    std::vector<Complex> values;
    for (const auto &a : amps) {
        values.push_back(complex_from_json(a));
    }
    if (values.size() != (size_t{1} << n)) {
        throw Error(ErrorCode::SizeMismatch, "amps must have 2^n entries");
    }
    return StateVector::normalized(n, std::move(values));
}

Json quadratic_form_to_json(const QuadraticForm &q) {
    Json out;
    out["theta"] = q.theta().to_strings();
    out["lambda"] = q.lambda().str();
    return out;
}

QuadraticForm quadratic_form_from_json(const Json &theta, const Json &lambda, size_t m) {
    std::vector<std::string> rows = bit_strings(theta, "theta");
    std::string lam = bit_string(lambda, "lambda");
    if (lam.size() != m) {
        throw Error(ErrorCode::SizeMismatch, "lambda must have length " + std::to_string(m));
    }
    BitMatrix t(m, m);
    if (!rows.empty()) {
        if (rows.size() != m) {
            throw Error(ErrorCode::SizeMismatch, "theta must have " + std::to_string(m) + " rows");
        }
        for (const auto &r : rows) {
            if (r.size() != m) {
                throw Error(ErrorCode::SizeMismatch, "theta rows must have length " + std::to_string(m));
            }
        }
        t = BitMatrix::from_strings(rows, m);
    }
    return QuadraticForm(std::move(t), BitVec::from_string(lam));
}

Json standard_form_to_json(const StandardForm &sf) {
    Json out;
    out["n"] = sf.num_qubits();
    out["S"] = sf.basis.to_strings();
    out["t"] = sf.t.str();
    out["mu"] = sf.mu.str();
    out["theta"] = sf.q.theta().to_strings();
    out["lambda"] = sf.q.lambda().str();
    return out;
}

StandardForm standard_form_from_json(const Json &j) {
    std::vector<std::string> rows = bit_strings(field(j, "S"), "S");
    std::string t = bit_string(field(j, "t"), "t");
    size_t n = t.size();
    for (const auto &r : rows) {
        if (r.size() != n) {
            throw Error(ErrorCode::SizeMismatch, "S rows must have the same length as t");
        }
    }
    StandardForm sf;
    sf.basis = rows.empty() ? BitMatrix(0, n) : BitMatrix::from_strings(rows, n);
    sf.t = BitVec::from_string(t);
    std::string mu = bit_string(field(j, "mu"), "mu");
    if (mu.size() != rows.size()) {
        throw Error(ErrorCode::SizeMismatch, "mu must have one bit per S row");
    }
    sf.mu = BitVec::from_string(mu);
    sf.q = quadratic_form_from_json(field(j, "theta"), field(j, "lambda"), rows.size());
    sf.check();
    return sf;
}

PhaseSystem phase_system_from_json(const Json &j) {
    std::vector<std::string> rows = bit_strings(field(j, "S"), "S");
    size_t n;
    if (!rows.empty()) {
        n = rows[0].size();
    } else if (j.contains("n")) {
        n = natural(j.at("n"), "n");
    } else {
        n = bit_string(field(j, "lambda"), "lambda").size();
    }
    for (const auto &r : rows) {
        if (r.size() != n) {
            throw Error(ErrorCode::SizeMismatch, "S rows must have equal length");
        }
    }
    PhaseSystem ps{
        rows.empty() ? BitMatrix(0, n) : BitMatrix::from_strings(rows, n),
        quadratic_form_from_json(field(j, "theta"), field(j, "lambda"), n)};
    ps.check();
    return ps;
}

Json phase_system_to_json(const PhaseSystem &ps) {
    Json out;
    out["S"] = ps.basis.to_strings();
    out["theta"] = ps.q.theta().to_strings();
    out["lambda"] = ps.q.lambda().str();
    return out;
}

Json phase_assignment_to_json(const PhaseAssignment &p) {
    Json out;
    out["level"] = p.level;
    out["b"] = p.b;
    Json phases = Json::array();
    for (const auto &c : p.phases()) {
        phases.push_back(complex_to_json(c));
    }
    out["phases"] = std::move(phases);
    return out;
}

Json rationals_to_json(const std::vector<Rational> &a) {
    Json out = Json::array();
    for (const auto &r : a) {
        out.push_back(rational_str(r));
    }
    return out;
}

Json invariants_to_json(const InvariantReport &r, const PiSubgroup &pi, bool is_2m_code) {
    Json out;
    out["group_order"] = r.group_order;
    out["subgroup_orders"] = r.subgroup_orders;
    out["indices"] = r.indices;
    out["pi_index"] = r.pi_index;
    out["pi_case"] = pi.which == PiCase::Equal ? "i" : pi.which == PiCase::IndexTwo ? "ii" : "iii";
    out["pi_generators"] = pi.pi.generator_strings();
    out["is_2m_code"] = is_2m_code;
    return out;
}

Json purification_to_json(const Purification &p) {
    Json out;
    out["code"] = group_to_json(p.code);
    Json zs = Json::array();
    for (const auto &z : p.z_list) {
        zs.push_back(z.str());
    }
    out["z_list"] = std::move(zs);
    Json hs = Json::array();
    for (const auto &h : p.h_list) {
        hs.push_back(h.str());
    }
    out["h_list"] = std::move(hs);
    out["big_state"] = group_to_json(p.big_state);
    return out;
}

Mat2 matrix_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
        j[1].size() != 2) {
        parse_fail("a 2x2 matrix must be [[a, b], [c, d]]");
    }
    return {complex_from_json(j[0][0]), complex_from_json(j[0][1]), complex_from_json(j[1][0]),
            complex_from_json(j[1][1])};
}

Json matrix_to_json(const Mat2 &m) {
    return Json::array(
        {Json::array({complex_to_json(m[0]), complex_to_json(m[1])}),
         Json::array({complex_to_json(m[2]), complex_to_json(m[3])})});
}

Json dlu_verdict_to_json(const DluVerdict &v) {
    Json out;
    out["related"] = v.related;
    out["reason"] = v.reason;
    out["S"] = v.basis.to_strings();
    if (v.q.dimension() == v.basis.rows() && v.reason != "S mismatch" && v.reason != "t mismatch") {
        out["Q"] = quadratic_form_to_json(v.q);
    } else {
        out["Q"] = nullptr;
    }
    out["complex_rep"] = v.complex_rep;
    out["clifford_rep"] = v.clifford_rep ? phase_assignment_to_json(*v.clifford_rep) : Json(nullptr);
    out["witness"] = v.witness ? rationals_to_json(*v.witness) : Json(nullptr);
    out["dlu_phases"] = v.dlu_phases ? phase_assignment_to_json(*v.dlu_phases) : Json(nullptr);
    out["dlu_angles"] = v.dlu_angles ? rationals_to_json(*v.dlu_angles) : Json(nullptr);
    return out;
}

Json search_report_to_json(const SearchReport &r, bool include_timing) {
    Json out;
    out["n"] = r.options.n;
    out["mode"] = r.options.exhaustive ? "exhaustive" : "sampled";
    if (!r.options.exhaustive) {
        out["samples"] = r.options.samples;
        out["seed"] = r.options.seed;
    }
    out["l_target"] = r.options.l_target;
    out["partition"] = std::to_string(r.options.partition_index) + "/" + std::to_string(r.options.partition_count);
    if (r.options.only_rank) {
        out["k"] = *r.options.only_rank;
    }
    out["subspaces_examined"] = r.subspaces_examined;
    out["forms_examined"] = r.forms_examined;
    Json levels = Json::object();
    for (size_t l = 0; l < r.level_counts.size(); l++) {
        levels[std::to_string(l + 1)] = r.level_counts[l];
    }
    out["representable_at_level"] = std::move(levels);
    out["complex_representable"] = r.complex_count;
    Json hits = Json::array();
    for (const auto &h : r.hits) {
        Json e;
        e["subspace_index"] = h.subspace_index;
        e["form_index"] = h.form_index;
        e["S"] = h.basis.to_strings();
        e["coordinate_form"] = quadratic_form_to_json(h.coords);
        e["ambient_form"] = quadratic_form_to_json(lift_to_ambient(h.coords, h.basis));
        e["witness"] = rationals_to_json(h.witness);
        e["dyadic_witness_found"] = h.dyadic_witness_found;
        hits.push_back(std::move(e));
    }
    out["hit_count"] = r.hits.size();
    out["hits"] = std::move(hits);
    if (include_timing) {
        out["wall_clock_seconds"] = r.wall_clock_seconds;
    }
    return out;
}

}  // namespace lulc
