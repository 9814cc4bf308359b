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

#include "lulc/equiv.h"

#include <cmath>
#include <deque>
#include <future>

#include "lulc/error.h"
#include "lulc/standard_form.h"

namespace lulc {

namespace {

const Complex kI(0, 1);

std::optional<std::vector<size_t>> search_from(
    const std::vector<Mat2> &group,
    const StateVector &state,
    const StateVector &target,
    size_t qubit,
    std::vector<size_t> &prefix) {
    if (qubit == state.num_qubits()) {
        if (overlap(state, target) >= 1 - 1e-8) {
            return prefix;
        }
        return std::nullopt;
    }
    for (size_t c = 0; c < group.size(); c++) {
        prefix.push_back(c);
        auto found = search_from(group, apply_single_qubit(group[c], qubit, state), target, qubit + 1, prefix);
        prefix.pop_back();
        if (found) {
            return found;
        }
    }
    return std::nullopt;
}

}  // namespace

Mat2 mat_mul(const Mat2 &a, const Mat2 &b) {
    return {
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    };
}

Mat2 adjoint(const Mat2 &a) {
    return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

double max_abs_difference(const Mat2 &a, const Mat2 &b) {
    double out = 0;
    for (size_t i = 0; i < 4; i++) {
        out = std::max(out, std::abs(a[i] - b[i]));
    }
    return out;
}

bool is_unitary(const Mat2 &u, double tolerance) {
    Mat2 id{1, 0, 0, 1};
    return max_abs_difference(mat_mul(adjoint(u), u), id) <= tolerance;
}

double distance_up_to_phase(const Mat2 &a, const Mat2 &b) {
    size_t best = 0;
    for (size_t i = 1; i < 4; i++) {
        if (std::abs(b[i]) > std::abs(b[best])) {
            best = i;
        }
    }
    if (std::abs(a[best]) < 1e-12 || std::abs(b[best]) < 1e-12) {
        return max_abs_difference(a, b);
    }
    Complex ratio = a[best] / b[best];
    Complex omega = ratio / std::abs(ratio);
    Mat2 scaled;
    for (size_t i = 0; i < 4; i++) {
        scaled[i] = omega * b[i];
    }
    return max_abs_difference(a, scaled);
}

Mat2 canonical_phase(const Mat2 &u) {
    for (size_t i = 0; i < 4; i++) {
        if (std::abs(u[i]) > 1e-9) {
            Complex phase = std::conj(u[i]) / std::abs(u[i]);
            Mat2 out;
            for (size_t j = 0; j < 4; j++) {
                out[j] = u[j] * phase;
            }
            return out;
        }
    }
    return u;
}

Mat2 pauli_matrix(PauliAxis axis) {
    switch (axis) {
        case PauliAxis::X:
            return {0, 1, 1, 0};
        case PauliAxis::Y:
            return {0, -kI, kI, 0};
        case PauliAxis::Z:
            return {1, 0, 0, -1};
    }
    throw Error(ErrorCode::InvalidArgument, "unknown Pauli axis");
}

Mat2 hadamard() {
    double s = 1 / std::sqrt(2.0);
    return {s, s, s, -s};
}

Mat2 phase_gate() {
    return {1, 0, 0, kI};
}

char axis_letter(PauliAxis axis) {
    return axis == PauliAxis::X ? 'X' : axis == PauliAxis::Y ? 'Y' : 'Z';
}

const std::vector<Mat2> &clifford_group_1q() {
    static const std::vector<Mat2> group = [] {
        const Mat2 generators[2] = {hadamard(), phase_gate()};
        std::vector<Mat2> elements{Mat2{1, 0, 0, 1}};
        std::deque<size_t> frontier{0};
        while (!frontier.empty()) {
            size_t e = frontier.front();
            frontier.pop_front();
            for (const Mat2 &g : generators) {
                Mat2 candidate = canonical_phase(mat_mul(g, elements[e]));
                bool seen = false;
                for (const Mat2 &existing : elements) {
                    if (max_abs_difference(existing, candidate) < 1e-9) {
                        seen = true;
                        break;
                    }
                }
                if (!seen) {
                    elements.push_back(candidate);
                    frontier.push_back(elements.size() - 1);
                }
            }
        }
        if (elements.size() != 24) {
            throw Error(ErrorCode::InternalInconsistency, "single-qubit Clifford closure did not give 24 elements");
        }
        return elements;
    }();
    return group;
}

std::optional<size_t> clifford_index(const Mat2 &u, double tolerance) {
    const auto &group = clifford_group_1q();
    for (size_t i = 0; i < group.size(); i++) {
        if (distance_up_to_phase(group[i], u) <= tolerance) {
            return i;
        }
    }
    return std::nullopt;
}

std::optional<AxisImage> conjugate_axis(const Mat2 &u, PauliAxis sigma, double tolerance) {
    Mat2 v = mat_mul(mat_mul(u, pauli_matrix(sigma)), adjoint(u));
    for (PauliAxis tau : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
        Mat2 p = pauli_matrix(tau);
        if (max_abs_difference(v, p) <= tolerance) {
            return AxisImage{tau, +1};
        }
        Mat2 neg{-p[0], -p[1], -p[2], -p[3]};
        if (max_abs_difference(v, neg) <= tolerance) {
            return AxisImage{tau, -1};
        }
    }
    return std::nullopt;
}

SemiCliffordInfo is_semi_clifford(const Mat2 &u) {
    if (!is_unitary(u)) {
        throw Error(ErrorCode::NotUnitary, "matrix is not unitary within 1e-10");
    }
    SemiCliffordInfo info;
    size_t mapped = 0;
    for (PauliAxis sigma : {PauliAxis::Z, PauliAxis::X, PauliAxis::Y}) {
        if (conjugate_axis(u, sigma)) {
            mapped++;
            if (!info.fixed_axis) {
                info.fixed_axis = sigma;
            }
        }
    }
    info.semi = mapped > 0;
    info.clifford = mapped == 3;
    return info;
}

CliffordDecomposition semi_clifford_decompose(const Mat2 &u) {
    SemiCliffordInfo info = is_semi_clifford(u);
    if (!info.semi) {
        throw Error(ErrorCode::NotSemiClifford, "no Pauli axis is mapped to a Pauli");
    }
    PauliAxis sigma = *info.fixed_axis;
    AxisImage image = *conjugate_axis(u, sigma);
    const auto &group = clifford_group_1q();
    CliffordDecomposition out;
    bool found_prime = false, found_c = false;
    for (size_t i = 0; i < group.size() && !found_prime; i++) {
        auto a = conjugate_axis(group[i], sigma);
        if (a && a->image == PauliAxis::Z && a->sign == 1) {
            out.c_prime_index = i;
            found_prime = true;
        }
    }
    for (size_t i = 0; i < group.size() && !found_c; i++) {
        auto a = conjugate_axis(group[i], PauliAxis::Z);
        if (a && a->image == image.image && a->sign == image.sign) {
            out.c_index = i;
            found_c = true;
        }
    }
    if (!found_prime || !found_c) {
        throw Error(ErrorCode::InternalInconsistency, "Clifford group does not act transitively on signed axes");
    }
    out.c = group[out.c_index];
    out.c_prime = group[out.c_prime_index];
    // D = C† U C′† commutes with Z.
    out.d = mat_mul(mat_mul(adjoint(out.c), u), adjoint(out.c_prime));
    out.d[1] = 0;
    out.d[2] = 0;
    Mat2 rebuilt = mat_mul(mat_mul(out.c, out.d), out.c_prime);
    if (distance_up_to_phase(u, rebuilt) > 1e-10) {
        throw Error(ErrorCode::InternalInconsistency, "Clifford decomposition does not reconstruct the input");
    }
    return out;
}

Mat2 haar_random_unitary(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    double q[4];
    double norm = 0;
    do {
        norm = 0;
        for (double &v : q) {
            v = gauss(rng);
            norm += v * v;
        }
    } while (norm < 1e-12);
    norm = std::sqrt(norm);
    Complex a(q[0] / norm, q[1] / norm);
    Complex b(q[2] / norm, q[3] / norm);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::acos(-1.0));
    Complex phase = std::polar(1.0, angle(rng));
    return {phase * a, -phase * std::conj(b), phase * b, phase * std::conj(a)};
}

std::optional<std::vector<size_t>> lc_equivalent_bruteforce(
    const StateVector &psi, const StateVector &phi, bool parallel) {
    size_t n = psi.num_qubits();
    if (phi.num_qubits() != n) {
        throw Error(ErrorCode::SizeMismatch, "states act on different numbers of qubits");
    }
    if (n > kMaxLcOracleQubits) {
        throw Error(
            ErrorCode::TooLarge, "LC brute force is limited to " + std::to_string(kMaxLcOracleQubits) + " qubits");
    }
    if (n == 0) {
        return overlap(psi, phi) >= 1 - 1e-8 ? std::optional<std::vector<size_t>>(std::vector<size_t>{}) : std::nullopt;
    }
    const auto &group = clifford_group_1q();
    auto branch = [&](size_t first) {
        std::vector<size_t> prefix{first};
        return search_from(group, apply_single_qubit(group[first], 0, psi), phi, 1, prefix);
    };
    if (!parallel) {
        for (size_t c = 0; c < group.size(); c++) {
            if (auto found = branch(c)) {
                return found;
            }
        }
        return std::nullopt;
    }
    std::vector<std::future<std::optional<std::vector<size_t>>>> futures;
    for (size_t c = 0; c < group.size(); c++) {
        futures.push_back(std::async(std::launch::async, branch, c));
    }
    std::optional<std::vector<size_t>> result;
    for (auto &f : futures) {
        auto found = f.get();
        if (found && !result) {
            result = std::move(found);
        }
    }
    return result;
}

DluVerdict dlu_check(const StateVector &psi, const StateVector &phi) {
    if (psi.num_qubits() != phi.num_qubits()) {
        throw Error(ErrorCode::SizeMismatch, "states act on different numbers of qubits");
    }
    auto extract_or_throw = [](const StateVector &s, const char *which) {
        try {
            return extract(s);
        } catch (const Error &e) {
            throw Error(
                ErrorCode::NotStabilizerState, std::string(which) + " is not a stabilizer state: " + e.what());
        }
    };
    StandardForm a = extract_or_throw(psi, "first state");
    StandardForm b = extract_or_throw(phi, "second state");
    DluVerdict verdict;
    verdict.basis = a.basis;
    if (!(a.basis == b.basis)) {
        verdict.reason = "S mismatch";
        return verdict;
    }
    if (!(a.t == b.t)) {
        verdict.reason = "t mismatch";
        return verdict;
    }
    Standardization sa = standardize(a);
    Standardization sb = standardize(b);
    verdict.q = sa.q_tilde + sb.q_tilde;
    RepresentabilitySolver solver(a.basis);
    std::vector<uint8_t> values = verdict.q.truth_table();
    verdict.complex_rep = solver.complex_representable(values);
    verdict.clifford_rep = solver.z2l(values, 2);
    if (verdict.clifford_rep && !verdict.complex_rep) {
        throw Error(ErrorCode::InternalInconsistency, "Clifford phases found but complex decision is false");
    }
    if (verdict.complex_rep) {
        verdict.witness = solver.complex_witness(values);
    }
    verdict.related = verdict.complex_rep;
    verdict.reason = verdict.related ? "ok" : "amplitude mismatch";

    // phi = X(t) T(d') C T†(d) X(t) psi; conjugating diag(1, e) by X gives
    // diag(1, 1/e) up to a global phase.
    size_t n = psi.num_qubits();
    if (verdict.clifford_rep) {
        PhaseAssignment m{2, std::vector<uint64_t>(n)};
        for (size_t i = 0; i < n; i++) {
            uint64_t e = (verdict.clifford_rep->b[i] + 4 + sb.d.get(i) - sa.d.get(i)) & 3;
            m.b[i] = a.t.get(i) ? (4 - e) & 3 : e;
        }
        verdict.dlu_phases = std::move(m);
    }
    if (verdict.witness) {
        std::vector<Rational> angles(n);
        for (size_t i = 0; i < n; i++) {
            Rational e = (*verdict.witness)[i] + Rational(int(sb.d.get(i)) - int(sa.d.get(i)), 2);
            if (a.t.get(i)) {
                e = -e;
            }
            // Reduce into [0, 2).
            BigInt k = numerator(e) / (2 * denominator(e));
            e -= 2 * Rational(k);
            if (e < 0) {
                e += 2;
            }
            angles[i] = e;
        }
        verdict.dlu_angles = std::move(angles);
    }
    return verdict;
}

}  // namespace lulc
