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

#include "lulc/statevec.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "lulc/error.h"

namespace lulc {

namespace {

const Complex kI(0, 1);

Complex i_power(unsigned e) {
    static const Complex powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return powers[e & 3];
}

void require_qubits(const StateVector &psi, size_t n) {
    if (psi.num_qubits() != n) {
        throw Error(
            ErrorCode::SizeMismatch,
            "operator acts on " + std::to_string(n) + " qubits but the state has " + std::to_string(psi.num_qubits()));
    }
}

/// Lexicographically smallest computational basis string in the support of
/// the state fixed by a maximal stabilizer.
BitVec first_support_string(const StabilizerGroup &s) {
    size_t n = s.num_qubits();
    std::vector<PauliOp> rows = s.generators();
    // Eliminate on the x part; rows left without an x pivot are ±Z(z).
    size_t next = 0;
    for (size_t col = 0; col < n; col++) {
        size_t p = next;
        while (p < rows.size() && !rows[p].x.get(col)) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[next]);
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != next && rows[i].x.get(col)) {
                rows[i] = rows[i] * rows[next];
            }
        }
        next++;
    }
    BitMatrix z_rows(0, n);
    BitVec signs(rows.size() - next);
    for (size_t i = next; i < rows.size(); i++) {
        z_rows.append_row(rows[i].z);
        signs.set(i - next, rows[i].phase_exp == 2);
    }
    auto particular = solve(z_rows, signs);
    if (!particular) {
        throw Error(ErrorCode::InternalInconsistency, "Z-type stabilizer constraints are inconsistent");
    }
    BitVec t = *particular;
    RrefResult directions = rref(kernel(z_rows));
    reduce_against(directions, t);
    return t;
}

}  // namespace

uint64_t basis_index(const BitVec &bits) {
    size_t n = bits.size();
    uint64_t index = 0;
    for (size_t j = 0; j < n; j++) {
        if (bits.get(j)) {
            index |= uint64_t{1} << (n - 1 - j);
        }
    }
    return index;
}

BitVec basis_bits(size_t n, uint64_t index) {
    BitVec bits(n);
    for (size_t j = 0; j < n; j++) {
        bits.set(j, (index >> (n - 1 - j)) & 1);
    }
    return bits;
}

StateVector::StateVector(size_t num_qubits, std::vector<Complex> amplitudes) : n_(num_qubits), amps_(std::move(amplitudes)) {
    if (n_ > kMaxStateQubits) {
        throw Error(ErrorCode::TooLarge, "state vectors are limited to " + std::to_string(kMaxStateQubits) + " qubits");
    }
    if (amps_.size() != (size_t{1} << n_)) {
        throw Error(ErrorCode::SizeMismatch, "amplitude count does not match 2^n");
    }
    if (std::abs(norm() - 1.0) > 1e-12) {
        throw Error(ErrorCode::NotNormalized, "state vector norm differs from 1 by more than 1e-12");
    }
}

StateVector StateVector::normalized(size_t num_qubits, std::vector<Complex> amplitudes) {
    double total = 0;
    for (const auto &a : amplitudes) {
        total += std::norm(a);
    }
    if (total == 0) {
        throw Error(ErrorCode::NotNormalized, "cannot normalize the zero vector");
    }
    double scale = 1.0 / std::sqrt(total);
    for (auto &a : amplitudes) {
        a *= scale;
    }
    return StateVector(num_qubits, std::move(amplitudes));
}

StateVector StateVector::basis_state(size_t num_qubits, uint64_t index) {
    std::vector<Complex> amps(size_t{1} << num_qubits);
    amps.at(index) = 1;
    return StateVector(num_qubits, std::move(amps));
}

double StateVector::norm() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

StateVector StateVector::with_canonical_phase(double zero_tolerance) const {
    for (const auto &a : amps_) {
        if (std::abs(a) > zero_tolerance) {
            Complex factor = std::conj(a) / std::abs(a);
            std::vector<Complex> out = amps_;
            for (auto &b : out) {
                b *= factor;
            }
            return StateVector::normalized(n_, std::move(out));
        }
    }
    return *this;
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    require_qubits(b, a.num_qubits());
    Complex acc = 0;
    for (size_t i = 0; i < a.dimension(); i++) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double overlap(const StateVector &a, const StateVector &b) {
    return std::abs(inner_product(a, b));
}

double distance_up_to_phase(const StateVector &a, const StateVector &b) {
    Complex ip = inner_product(b, a);
    Complex phase = std::abs(ip) > 0 ? ip / std::abs(ip) : Complex(1, 0);
    double worst = 0;
    for (size_t i = 0; i < a.dimension(); i++) {
        worst = std::max(worst, std::abs(a[i] - phase * b[i]));
    }
    return worst;
}

DensityOperator::DensityOperator(size_t num_qubits, std::vector<Complex> entries)
    : n_(num_qubits), entries_(std::move(entries)) {
    if (n_ > kMaxPartialTraceQubits) {
        throw Error(ErrorCode::TooLarge, "dense operators are limited to " + std::to_string(kMaxPartialTraceQubits) + " qubits");
    }
    if (entries_.size() != dimension() * dimension()) {
        throw Error(ErrorCode::SizeMismatch, "operator entry count does not match 4^n");
    }
}

DensityOperator DensityOperator::zero(size_t num_qubits) {
    size_t d = size_t{1} << num_qubits;
    return DensityOperator(num_qubits, std::vector<Complex>(d * d));
}

DensityOperator DensityOperator::pure(const StateVector &psi) {
    DensityOperator rho = zero(psi.num_qubits());
    for (size_t r = 0; r < psi.dimension(); r++) {
        for (size_t c = 0; c < psi.dimension(); c++) {
            rho.at(r, c) = psi[r] * std::conj(psi[c]);
        }
    }
    return rho;
}

Complex DensityOperator::trace() const {
    Complex acc = 0;
    for (size_t i = 0; i < dimension(); i++) {
        acc += at(i, i);
    }
    return acc;
}

DensityOperator DensityOperator::operator*(const DensityOperator &rhs) const {
    if (rhs.n_ != n_) {
        throw Error(ErrorCode::SizeMismatch, "operator dimensions differ");
    }
    DensityOperator out = zero(n_);
    size_t d = dimension();
    for (size_t i = 0; i < d; i++) {
        for (size_t k = 0; k < d; k++) {
            Complex a = at(i, k);
            if (a == Complex(0, 0)) {
                continue;
            }
            for (size_t j = 0; j < d; j++) {
                out.at(i, j) += a * rhs.at(k, j);
            }
        }
    }
    return out;
}

DensityOperator DensityOperator::scaled(Complex factor) const {
    std::vector<Complex> out = entries_;
    for (auto &e : out) {
        e *= factor;
    }
    return DensityOperator(n_, std::move(out));
}

double DensityOperator::max_abs_difference(const DensityOperator &other) const {
    if (other.n_ != n_) {
        throw Error(ErrorCode::SizeMismatch, "operator dimensions differ");
    }
    double worst = 0;
    for (size_t i = 0; i < entries_.size(); i++) {
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    }
    return worst;
}

double DensityOperator::hermiticity_defect() const {
    double worst = 0;
    for (size_t i = 0; i < dimension(); i++) {
        for (size_t j = 0; j < dimension(); j++) {
            worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
        }
    }
    return worst;
}

DensityOperator projector_from_group(const StabilizerGroup &s) {
    size_t n = s.num_qubits();
    if (n > kMaxDensityQubits) {
        throw Error(ErrorCode::TooLarge, "projector construction is limited to " + std::to_string(kMaxDensityQubits) + " qubits");
    }
    DensityOperator rho = DensityOperator::zero(n);
    double scale = std::ldexp(1.0, -static_cast<int>(n));
    for (const PauliOp &g : s.elements()) {
        uint64_t zm = qubit_mask(g.z);
        uint64_t xm = qubit_mask(g.x);
        Complex base = i_power(g.phase_exp + std::popcount(zm & xm)) * scale;
        for (uint64_t y = 0; y < rho.dimension(); y++) {
            uint64_t out = y ^ xm;
            double sign = (std::popcount(zm & out) & 1) ? -1.0 : 1.0;
            rho.at(out, y) += base * sign;
        }
    }
    return rho;
}

StateVector apply_pauli(const PauliOp &p, const StateVector &psi) {
    require_qubits(psi, p.num_qubits());
    uint64_t zm = qubit_mask(p.z);
    uint64_t xm = qubit_mask(p.x);
    Complex base = i_power(p.phase_exp + std::popcount(zm & xm));
    std::vector<Complex> out(psi.dimension());
    for (uint64_t y = 0; y < psi.dimension(); y++) {
        uint64_t target = y ^ xm;
        double sign = (std::popcount(zm & target) & 1) ? -1.0 : 1.0;
        out[target] = base * sign * psi[y];
    }
    return StateVector::normalized(psi.num_qubits(), std::move(out));
}

StateVector synthesize_state(const StabilizerGroup &s) {
    if (!s.is_maximal()) {
        throw Error(
            ErrorCode::NotMaximal,
            "stabilizer has rank " + std::to_string(s.rank()) + " on " + std::to_string(s.num_qubits()) +
                " qubits; a state needs a maximal group");
    }
    size_t n = s.num_qubits();
    if (n > kMaxStateQubits) {
        throw Error(ErrorCode::TooLarge, "state synthesis is limited to " + std::to_string(kMaxStateQubits) + " qubits");
    }
    // Apply Π (I + g)/2 to the first basis vector with a nonzero image.
    size_t dim = size_t{1} << n;
    std::vector<Complex> v(dim);
    v[basis_index(first_support_string(s))] = 1;
    std::vector<Complex> gv(dim);
    for (const PauliOp &g : s.generators()) {
        uint64_t zm = qubit_mask(g.z);
        uint64_t xm = qubit_mask(g.x);
        Complex base = i_power(g.phase_exp + std::popcount(zm & xm));
        std::fill(gv.begin(), gv.end(), Complex(0, 0));
        for (uint64_t y = 0; y < dim; y++) {
            if (v[y] == Complex(0, 0)) {
                continue;
            }
            uint64_t target = y ^ xm;
            double sign = (std::popcount(zm & target) & 1) ? -1.0 : 1.0;
            gv[target] = base * sign * v[y];
        }
        for (uint64_t y = 0; y < dim; y++) {
            v[y] = 0.5 * (v[y] + gv[y]);
        }
    }
    return StateVector::normalized(n, std::move(v)).with_canonical_phase();
}

StateVector apply_x(const BitVec &t, const StateVector &psi) {
    return apply_pauli(PauliOp::x_type(t), psi);
}

StateVector apply_z(const BitVec &t, const StateVector &psi) {
    return apply_pauli(PauliOp::z_type(t), psi);
}

StateVector apply_t(const BitVec &d, const StateVector &psi, bool dagger) {
    std::vector<Complex> phases(d.size(), Complex(1, 0));
    for (size_t j = 0; j < d.size(); j++) {
        if (d.get(j)) {
            phases[j] = dagger ? -kI : kI;
        }
    }
    return apply_diagonal(phases, psi);
}

StateVector apply_diagonal(const std::vector<Complex> &phases, const StateVector &psi) {
    size_t n = psi.num_qubits();
    if (phases.size() != n) {
        throw Error(ErrorCode::SizeMismatch, "one diagonal phase per qubit is required");
    }
    std::vector<Complex> out = psi.amplitudes();
    for (uint64_t y = 0; y < out.size(); y++) {
        for (size_t j = 0; j < n; j++) {
            if ((y >> (n - 1 - j)) & 1) {
                out[y] *= phases[j];
            }
        }
    }
    return StateVector::normalized(n, std::move(out));
}

StateVector apply_single_qubit(const Mat2 &u, size_t qubit, const StateVector &psi) {
    size_t n = psi.num_qubits();
    if (qubit >= n) {
        throw Error(ErrorCode::InvalidArgument, "qubit index out of range");
    }
    uint64_t bit = uint64_t{1} << (n - 1 - qubit);
    std::vector<Complex> out = psi.amplitudes();
    for (uint64_t y = 0; y < out.size(); y++) {
        if (y & bit) {
            continue;
        }
        Complex a0 = psi[y];
        Complex a1 = psi[y | bit];
        out[y] = u[0] * a0 + u[1] * a1;
        out[y | bit] = u[2] * a0 + u[3] * a1;
    }
    return StateVector::normalized(n, std::move(out));
}

StateVector apply_local(const std::vector<Mat2> &factors, const StateVector &psi) {
    if (factors.size() != psi.num_qubits()) {
        throw Error(ErrorCode::SizeMismatch, "one local factor per qubit is required");
    }
    StateVector out = psi;
    for (size_t q = 0; q < factors.size(); q++) {
        out = apply_single_qubit(factors[q], q, out);
    }
    return out;
}

namespace {

struct TraceLayout {
    std::vector<uint64_t> kept_offsets;
    std::vector<uint64_t> traced_offsets;
};

TraceLayout trace_layout(size_t n, const std::vector<size_t> &keep_in) {
    if (n > kMaxPartialTraceQubits) {
        throw Error(ErrorCode::TooLarge, "partial trace is limited to " + std::to_string(kMaxPartialTraceQubits) + " qubits");
    }
    std::vector<size_t> keep = keep_in;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<size_t> traced;
    for (size_t q = 0; q < n; q++) {
        if (!std::binary_search(keep.begin(), keep.end(), q)) {
            traced.push_back(q);
        }
    }
    for (size_t q : keep) {
        if (q >= n) {
            throw Error(ErrorCode::InvalidArgument, "kept qubit index out of range");
        }
    }
    auto offsets = [n](const std::vector<size_t> &qubits) {
        size_t m = qubits.size();
        std::vector<uint64_t> out(size_t{1} << m);
        for (uint64_t a = 0; a < out.size(); a++) {
            uint64_t idx = 0;
            for (size_t j = 0; j < m; j++) {
                if ((a >> (m - 1 - j)) & 1) {
                    idx |= uint64_t{1} << (n - 1 - qubits[j]);
                }
            }
            out[a] = idx;
        }
        return out;
    };
    return TraceLayout{offsets(keep), offsets(traced)};
}

}  // namespace

DensityOperator partial_trace(const DensityOperator &rho, const std::vector<size_t> &keep) {
    TraceLayout layout = trace_layout(rho.num_qubits(), keep);
    size_t m = std::bit_width(layout.kept_offsets.size()) - 1;
    DensityOperator out = DensityOperator::zero(m);
    for (uint64_t a = 0; a < layout.kept_offsets.size(); a++) {
        for (uint64_t b = 0; b < layout.kept_offsets.size(); b++) {
            Complex acc = 0;
            for (uint64_t e : layout.traced_offsets) {
                acc += rho.at(layout.kept_offsets[a] | e, layout.kept_offsets[b] | e);
            }
            out.at(a, b) = acc;
        }
    }
    return out;
}

DensityOperator partial_trace(const StateVector &psi, const std::vector<size_t> &keep) {
    TraceLayout layout = trace_layout(psi.num_qubits(), keep);
    size_t m = std::bit_width(layout.kept_offsets.size()) - 1;
    DensityOperator out = DensityOperator::zero(m);
    for (uint64_t a = 0; a < layout.kept_offsets.size(); a++) {
        for (uint64_t b = 0; b < layout.kept_offsets.size(); b++) {
            Complex acc = 0;
            for (uint64_t e : layout.traced_offsets) {
                acc += psi[layout.kept_offsets[a] | e] * std::conj(psi[layout.kept_offsets[b] | e]);
            }
            out.at(a, b) = acc;
        }
    }
    return out;
}

}  // namespace lulc
