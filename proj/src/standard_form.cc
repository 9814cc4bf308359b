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

#include "lulc/standard_form.h"

#include <bit>
#include <cmath>

#include "lulc/error.h"

namespace lulc {

namespace {

constexpr double kSupportThreshold = 1e-10;
constexpr double kPhaseTolerance = 1e-9;

const Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

/// t + Σ c_a b_a as an amplitude index.
std::vector<uint64_t> support_indices(const BitMatrix &basis, const BitVec &t) {
    size_t k = basis.rows();
    std::vector<uint64_t> rows(k);
    for (size_t a = 0; a < k; a++) {
        rows[a] = basis_index(basis.row(a));
    }
    std::vector<uint64_t> out(size_t{1} << k);
    out[0] = basis_index(t);
    for (size_t a = 0; a < k; a++) {
        size_t half = size_t{1} << a;
        for (size_t c = 0; c < half; c++) {
            out[c | half] = out[c] ^ rows[a];
        }
    }
    return out;
}

}  // namespace

void StandardForm::check() const {
    size_t n = num_qubits();
    size_t k = rank();
    if (t.size() != n || mu.size() != k || q.dimension() != k) {
        throw Error(ErrorCode::SizeMismatch, "standard form fields have inconsistent sizes");
    }
    RrefResult r = rref(basis);
    if (r.rank != k || !(r.reduced == basis)) {
        throw Error(ErrorCode::InvalidArgument, "subspace basis must be independent and in reduced row echelon form");
    }
    for (size_t p : r.pivots) {
        if (t.get(p)) {
            throw Error(ErrorCode::InvalidArgument, "t is not the lexicographically smallest point of t + S");
        }
    }
}

BitVec subspace_coordinates(const std::vector<size_t> &pivots, const BitVec &y) {
    BitVec c(pivots.size());
    for (size_t a = 0; a < pivots.size(); a++) {
        c.set(a, y.get(pivots[a]));
    }
    return c;
}

StandardForm extract(const StateVector &psi) {
    size_t n = psi.num_qubits();
    const auto &amps = psi.amplitudes();

    std::vector<uint64_t> support;
    for (uint64_t x = 0; x < amps.size(); x++) {
        if (std::abs(amps[x]) > kSupportThreshold) {
            support.push_back(x);
        }
    }
    if (support.empty()) {
        throw Error(ErrorCode::SupportNotAffine, "state has empty support");
    }
    // Index order is lexicographic order on bit strings with qubit 1 first.
    uint64_t t_index = support[0];
    BitMatrix differences(0, n);
    for (uint64_t x : support) {
        if (x != t_index) {
            differences.append_row(basis_bits(n, x ^ t_index));
        }
    }
    RrefResult r = rref(differences);
    size_t k = r.rank;
    if (support.size() != (size_t{1} << k)) {
        throw Error(
            ErrorCode::SupportNotAffine,
            "support has " + std::to_string(support.size()) + " points but its affine span has dimension " +
                std::to_string(k));
    }
    StandardForm sf;
    sf.basis = BitMatrix(0, n);
    for (size_t a = 0; a < k; a++) {
        sf.basis.append_row(r.reduced.row(a));
    }
    sf.t = basis_bits(n, t_index);

    double expected = std::pow(2.0, -0.5 * static_cast<double>(k));
    Complex unit_phase = std::conj(amps[t_index]) / std::abs(amps[t_index]);
    std::vector<uint64_t> points = support_indices(sf.basis, sf.t);
    std::vector<uint8_t> v(points.size());
    for (size_t c = 0; c < points.size(); c++) {
        Complex a = amps[points[c]] * unit_phase / expected;
        uint8_t best = 0;
        double best_dist = std::abs(a - kIPowers[0]);
        for (uint8_t e = 1; e < 4; e++) {
            double dist = std::abs(a - kIPowers[e]);
            if (dist < best_dist) {
                best = e;
                best_dist = dist;
            }
        }
        if (best_dist > kPhaseTolerance) {
            throw Error(
                ErrorCode::AmplitudeNotFourthRootTimesConstant,
                "amplitude at basis index " + std::to_string(points[c]) +
                    " is not a fourth root of unity times 2^{-k/2}");
        }
        v[c] = best;
    }

    sf.mu = BitVec(k);
    sf.q = QuadraticForm(k);
    for (size_t a = 0; a < k; a++) {
        uint8_t va = v[size_t{1} << a];
        sf.mu.set(a, va & 1);
        sf.q.set_lambda(a, (va >> 1) & 1);
    }
    for (size_t a = 0; a < k; a++) {
        for (size_t b = a + 1; b < k; b++) {
            uint8_t vab = v[(size_t{1} << a) | (size_t{1} << b)];
            uint8_t linear = (sf.mu.get(a) ^ sf.mu.get(b)) ? 1 : 0;
            // vab = linear + 2 q(e_a + e_b) mod 4; q(e_a+e_b) = θ_ab + λ_a + λ_b.
            bool q_ab = (((vab - linear) & 3) >> 1) & 1;
            sf.q.set_theta(a, b, q_ab ^ sf.q.lambda().get(a) ^ sf.q.lambda().get(b));
        }
    }
    uint64_t mu_mask = sf.mu.to_mask();
    for (uint64_t c = 0; c < v.size(); c++) {
        uint8_t predicted = ((std::popcount(mu_mask & c) & 1) + 2 * sf.q.evaluate_mask(c)) & 3;
        if (predicted != v[c]) {
            throw Error(
                ErrorCode::InconsistentQuadraticFit,
                "phase exponents are not of the form mu·c + 2q(c) at support point " + std::to_string(points[c]));
        }
    }
    return sf;
}

StateVector synthesize(const StandardForm &sf) {
    sf.check();
    size_t n = sf.num_qubits();
    size_t k = sf.rank();
    if (n > kMaxStateQubits) {
        throw Error(ErrorCode::TooLarge, "state synthesis is limited to " + std::to_string(kMaxStateQubits) + " qubits");
    }
    std::vector<Complex> amps(size_t{1} << n);
    double scale = std::pow(2.0, -0.5 * static_cast<double>(k));
    std::vector<uint64_t> points = support_indices(sf.basis, sf.t);
    uint64_t mu_mask = sf.mu.to_mask();
    for (uint64_t c = 0; c < points.size(); c++) {
        unsigned e = ((std::popcount(mu_mask & c) & 1) + 2 * sf.q.evaluate_mask(c)) & 3;
        amps[points[c]] = scale * kIPowers[e];
    }
    return StateVector::normalized(n, std::move(amps));
}

BitVec default_phase_vector(const StandardForm &sf) {
    auto d = solve(sf.basis, sf.mu);
    if (!d) {
        throw Error(ErrorCode::InternalInconsistency, "independent basis rows must admit every mu");
    }
    return *d;
}

QuadraticForm corrected_form(const StandardForm &sf, const BitVec &d) {
    size_t k = sf.rank();
    if (d.size() != sf.num_qubits()) {
        throw Error(ErrorCode::SizeMismatch, "d must have one entry per qubit");
    }
    std::vector<uint8_t> values(size_t{1} << k);
    std::vector<BitVec> ys(values.size(), BitVec(sf.num_qubits()));
    for (size_t a = 0; a < k; a++) {
        size_t half = size_t{1} << a;
        for (size_t c = 0; c < half; c++) {
            ys[c | half] = ys[c] ^ sf.basis.row(a);
        }
    }
    for (uint64_t c = 0; c < values.size(); c++) {
        size_t overlap_count = (d & ys[c]).popcount();
        values[c] = sf.q.evaluate_mask(c) ^ ((overlap_count >> 1) & 1);
    }
    auto fitted = fit_quadratic_form(k, values);
    if (!fitted) {
        throw Error(ErrorCode::InternalInconsistency, "corrected form is not quadratic");
    }
    return *fitted;
}

Standardization standardize(const StandardForm &sf, std::optional<BitVec> d) {
    sf.check();
    BitVec dv = d ? *d : default_phase_vector(sf);
    if (dv.size() != sf.num_qubits()) {
        throw Error(ErrorCode::SizeMismatch, "d must have one entry per qubit");
    }
    for (size_t a = 0; a < sf.rank(); a++) {
        if (dv.dot(sf.basis.row(a)) != sf.mu.get(a)) {
            throw Error(ErrorCode::InvalidArgument, "d is inconsistent with mu on the subspace basis");
        }
    }
    StateVector state = apply_t(dv, apply_x(sf.t, synthesize(sf)), true);
    return Standardization{std::move(state), corrected_form(sf, dv), dv, sf.t};
}

StandardForm random_standard_form(size_t n, size_t k, std::mt19937_64 &rng) {
    if (k > n || n > 63) {
        throw Error(ErrorCode::InvalidArgument, "random standard form needs k <= n <= 63");
    }
    SubspaceEnumerator subspaces(n, k);
    std::uniform_int_distribution<uint64_t> pick(0, subspaces.size() - 1);
    std::bernoulli_distribution coin(0.5);
    StandardForm sf;
    sf.basis = subspaces.at(pick(rng));
    std::vector<size_t> pivots = rref(sf.basis).pivots;
    sf.t = BitVec(n);
    for (size_t j = 0; j < n; j++) {
        sf.t.set(j, coin(rng));
    }
    for (size_t p : pivots) {
        sf.t.set(p, false);
    }
    sf.mu = BitVec(k);
    for (size_t a = 0; a < k; a++) {
        sf.mu.set(a, coin(rng));
    }
    sf.q = QuadraticForm(k);
    for (size_t a = 0; a < k; a++) {
        sf.q.set_lambda(a, coin(rng));
        for (size_t b = a + 1; b < k; b++) {
            sf.q.set_theta(a, b, coin(rng));
        }
    }
    return sf;
}

}  // namespace lulc
