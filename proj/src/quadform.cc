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

#include "lulc/quadform.h"

#include <bit>
#include <cmath>
#include <numbers>

#include "lulc/error.h"

namespace lulc {

namespace {

void check_level(unsigned level) {
    if (level == 0 || level > kMaxPhaseLevel) {
        throw Error(ErrorCode::TooLarge, "phase level must be in [1, " + std::to_string(kMaxPhaseLevel) + "]");
    }
}

void check_rank(size_t k, size_t limit, const char *what) {
    if (k > limit) {
        throw Error(
            ErrorCode::TooLarge,
            std::string(what) + " enumerates 2^k subspace elements; k = " + std::to_string(k) + " exceeds the limit " +
                std::to_string(limit));
    }
}

std::vector<uint64_t> element_masks(const BitMatrix &basis) {
    if (basis.cols() > 64) {
        throw Error(ErrorCode::TooLarge, "phase systems are limited to 64 qubits");
    }
    size_t k = basis.rows();
    std::vector<uint64_t> out(size_t{1} << k);
    for (size_t a = 0; a < k; a++) {
        uint64_t row = basis.row(a).to_mask();
        size_t half = size_t{1} << a;
        for (size_t c = 0; c < half; c++) {
            out[c | half] = out[c] ^ row;
        }
    }
    return out;
}

/// Reduced row echelon form over ℚ, in place. Returns the pivot columns.
std::vector<size_t> rational_rref(std::vector<std::vector<Rational>> &m, size_t cols) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t j = 0; j < cols && r < m.size(); j++) {
        size_t p = r;
        while (p < m.size() && m[p][j] == 0) {
            p++;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[r], m[p]);
        Rational inv = 1 / m[r][j];
        for (size_t c = j; c < m[r].size(); c++) {
            m[r][c] *= inv;
        }
        for (size_t i = 0; i < m.size(); i++) {
            if (i == r || m[i][j] == 0) {
                continue;
            }
            Rational f = m[i][j];
            for (size_t c = j; c < m[i].size(); c++) {
                if (m[r][c] != 0) {
                    m[i][c] -= f * m[r][c];
                }
            }
        }
        pivots.push_back(j);
        r++;
    }
    return pivots;
}

bool fits(const BigInt &v, const BigInt &limit) {
    return abs(v) < limit;
}

}  // namespace

PhaseSystem PhaseSystem::from_coordinates(BitMatrix basis, const QuadraticForm &coords) {
    QuadraticForm ambient = lift_to_ambient(coords, basis);
    return PhaseSystem{std::move(basis), std::move(ambient)};
}

void PhaseSystem::check() const {
    if (q.dimension() != basis.cols()) {
        throw Error(ErrorCode::SizeMismatch, "quadratic form dimension must equal the qubit count");
    }
    if (lulc::rank(basis) != basis.rows()) {
        throw Error(ErrorCode::InvalidArgument, "subspace basis rows must be independent");
    }
}

QuadraticForm PhaseSystem::coordinate_form() const {
    return restrict_to_subspace(q, basis);
}

std::vector<uint8_t> PhaseSystem::values() const {
    check();
    return coordinate_form().truth_table();
}

std::vector<std::complex<double>> PhaseAssignment::phases() const {
    std::vector<std::complex<double>> out;
    double unit = std::numbers::pi / static_cast<double>(uint64_t{1} << (level - 1));
    static const std::complex<double> quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    uint64_t per_quarter = level >= 2 ? uint64_t{1} << (level - 2) : 0;
    for (uint64_t v : b) {
        if (level == 1) {
            out.push_back(quarter[(v & 1) * 2]);
        } else if (v % per_quarter == 0) {
            out.push_back(quarter[(v / per_quarter) & 3]);
        } else {
            out.push_back(std::polar(1.0, unit * static_cast<double>(v)));
        }
    }
    return out;
}

PhaseAssignment PhaseAssignment::lifted() const {
    PhaseAssignment out{level + 1, b};
    for (auto &v : out.b) {
        v *= 2;
    }
    return out;
}

std::vector<BitVec> subspace_elements(const BitMatrix &basis) {
    size_t k = basis.rows();
    std::vector<BitVec> out(size_t{1} << k, BitVec(basis.cols()));
    for (size_t a = 0; a < k; a++) {
        size_t half = size_t{1} << a;
        for (size_t c = 0; c < half; c++) {
            out[c | half] = out[c] ^ basis.row(a);
        }
    }
    return out;
}

bool satisfies_congruence(const BitMatrix &basis, const std::vector<uint8_t> &values, const PhaseAssignment &p) {
    if (p.b.size() != basis.cols() || values.size() != (size_t{1} << basis.rows())) {
        throw Error(ErrorCode::SizeMismatch, "assignment or value table has the wrong size");
    }
    uint64_t mask = (uint64_t{1} << p.level) - 1;
    uint64_t half = uint64_t{1} << (p.level - 1);
    std::vector<uint64_t> elements = element_masks(basis);
    for (size_t c = 0; c < elements.size(); c++) {
        uint64_t acc = 0;
        for (size_t i = 0; i < p.b.size(); i++) {
            if ((elements[c] >> i) & 1) {
                acc += p.b[i];
            }
        }
        if ((acc & mask) != ((values[c] & 1) ? half : 0)) {
            return false;
        }
    }
    return true;
}

bool satisfies_real_congruence(
    const BitMatrix &basis, const std::vector<uint8_t> &values, const std::vector<Rational> &a) {
    if (a.size() != basis.cols() || values.size() != (size_t{1} << basis.rows())) {
        throw Error(ErrorCode::SizeMismatch, "witness or value table has the wrong size");
    }
    std::vector<uint64_t> elements = element_masks(basis);
    for (size_t c = 0; c < elements.size(); c++) {
        Rational acc = -Rational(values[c] & 1);
        for (size_t i = 0; i < a.size(); i++) {
            if ((elements[c] >> i) & 1) {
                acc += a[i];
            }
        }
        if (denominator(acc) != 1 || numerator(acc) % 2 != 0) {
            return false;
        }
    }
    return true;
}

struct RepresentabilitySolver::ComplexData {
    IntMatrix kernel;  // U: rows span the rational left kernel of M
    SmithForm snf;     // left · U · right = diag(d); empty when identity_block
    std::vector<size_t> free_cols;
    bool identity_block = false;  // U restricted to free_cols is the identity
    bool unit_factors = true;
    bool small = false;
    std::vector<std::vector<int64_t>> kernel_small;
    std::vector<std::vector<int64_t>> left_small;
    std::vector<int64_t> factors_small;
};

RepresentabilitySolver::RepresentabilitySolver(BitMatrix basis, bool always_smith)
    : basis_(std::move(basis)), always_smith_(always_smith) {
    if (lulc::rank(basis_) != basis_.rows()) {
        throw Error(ErrorCode::InvalidArgument, "subspace basis rows must be independent");
    }
    check_rank(basis_.rows(), kMaxLevelRank, "representability");
    element_masks_ = element_masks(basis_);
}

void RepresentabilitySolver::check_values(const std::vector<uint8_t> &values) const {
    if (values.size() != element_masks_.size()) {
        throw Error(ErrorCode::SizeMismatch, "value table must have one entry per subspace element");
    }
    if (values[0] & 1) {
        throw Error(ErrorCode::NotQuadratic, "a quadratic form vanishes at the zero vector");
    }
}

std::optional<PhaseAssignment> RepresentabilitySolver::z2l(const std::vector<uint8_t> &values, unsigned level) {
    check_level(level);
    check_values(values);
    size_t n = num_qubits();
    auto &solver = howell_[level];
    if (!solver) {
        ModMatrix a(element_masks_.size(), std::vector<uint64_t>(n));
        for (size_t c = 0; c < element_masks_.size(); c++) {
            for (size_t i = 0; i < n; i++) {
                a[c][i] = (element_masks_[c] >> i) & 1;
            }
        }
        solver = std::make_unique<HowellSolver>(a, n, level);
    }
    std::vector<uint64_t> rhs(values.size());
    uint64_t half = uint64_t{1} << (level - 1);
    for (size_t c = 0; c < values.size(); c++) {
        rhs[c] = (values[c] & 1) ? half : 0;
    }
    auto b = solver->solve(rhs);
    if (!b) {
        return std::nullopt;
    }
    PhaseAssignment p{level, std::move(*b)};
    if (!satisfies_congruence(basis_, values, p)) {
        throw Error(ErrorCode::InternalInconsistency, "ring solver returned an assignment that fails the congruence");
    }
    return p;
}

RepresentabilitySolver::ComplexData &RepresentabilitySolver::complex_data() {
    if (complex_) {
        return *complex_;
    }
    check_rank(rank(), kMaxComplexRank, "complex representability");
    size_t n = num_qubits();
    size_t count = element_masks_.size();
    auto data = std::make_shared<ComplexData>();

    // Left kernel of M = right kernel of Mᵀ (n × count).
    std::vector<std::vector<Rational>> mt(n, std::vector<Rational>(count));
    for (size_t c = 0; c < count; c++) {
        for (size_t i = 0; i < n; i++) {
            if ((element_masks_[c] >> i) & 1) {
                mt[i][c] = 1;
            }
        }
    }
    std::vector<size_t> pivots = rational_rref(mt, count);
    std::vector<bool> is_pivot(count, false);
    for (size_t p : pivots) {
        is_pivot[p] = true;
    }
    data->kernel = IntMatrix(count - pivots.size(), count);
    size_t row = 0;
    for (size_t f = 0; f < count; f++) {
        if (is_pivot[f]) {
            continue;
        }
        data->free_cols.push_back(f);
        BigInt scale = 1;
        for (size_t r = 0; r < pivots.size(); r++) {
            scale = boost::multiprecision::lcm(scale, denominator(mt[r][f]));
        }
        BigInt g = scale;
        data->kernel.at(row, f) = scale;
        for (size_t r = 0; r < pivots.size(); r++) {
            Rational v = -mt[r][f] * Rational(scale);
            data->kernel.at(row, pivots[r]) = numerator(v);
            g = boost::multiprecision::gcd(g, numerator(v));
        }
        if (g > 1) {
            for (size_t c = 0; c < count; c++) {
                data->kernel.at(row, c) /= g;
            }
        }
        row++;
    }
    data->identity_block = true;
    for (size_t r = 0; r < data->free_cols.size(); r++) {
        data->identity_block &= data->kernel.at(r, data->free_cols[r]) == 1;
    }
    if (data->identity_block && !always_smith_) {
        // An identity minor makes every invariant factor 1.
        data->unit_factors = true;
    } else {
        data->identity_block = false;
        data->snf = smith_normal_form(data->kernel, false);
        if (data->snf.rank != data->kernel.rows()) {
            throw Error(ErrorCode::InternalInconsistency, "left kernel basis is not of full row rank");
        }
        for (const auto &d : data->snf.invariant_factors()) {
            data->unit_factors &= d == 1;
        }
    }

    // Machine-integer fast path when every partial sum provably fits.
    BigInt max_kernel = 0, max_left = 0, max_factor = 0;
    for (size_t i = 0; i < data->kernel.rows(); i++) {
        for (size_t c = 0; c < count; c++) {
            max_kernel = std::max(max_kernel, BigInt(abs(data->kernel.at(i, c))));
        }
    }
    if (!data->unit_factors) {
        const IntMatrix &left = data->snf.left;
        for (size_t i = 0; i < left.rows(); i++) {
            for (size_t j = 0; j < left.cols(); j++) {
                max_left = std::max(max_left, BigInt(abs(left.at(i, j))));
            }
        }
        for (const auto &d : data->snf.invariant_factors()) {
            max_factor = std::max(max_factor, d);
        }
    }
    BigInt limit = BigInt(1) << 62;
    BigInt kernel_sum = max_kernel * count;
    BigInt left_sum = max_left * kernel_sum * std::max<size_t>(data->kernel.rows(), 1);
    data->small = fits(kernel_sum, limit) && fits(left_sum, limit) && fits(max_factor, limit);
    if (data->small) {
        data->kernel_small.assign(data->kernel.rows(), std::vector<int64_t>(count));
        for (size_t i = 0; i < data->kernel.rows(); i++) {
            for (size_t c = 0; c < count; c++) {
                data->kernel_small[i][c] = static_cast<int64_t>(data->kernel.at(i, c));
            }
        }
        if (!data->unit_factors) {
            const IntMatrix &left = data->snf.left;
            data->left_small.assign(left.rows(), std::vector<int64_t>(left.cols()));
            for (size_t i = 0; i < left.rows(); i++) {
                for (size_t j = 0; j < left.cols(); j++) {
                    data->left_small[i][j] = static_cast<int64_t>(left.at(i, j));
                }
            }
            for (const auto &d : data->snf.invariant_factors()) {
                data->factors_small.push_back(static_cast<int64_t>(d));
            }
        }
    }
    complex_ = std::move(data);
    return *complex_;
}

const IntMatrix &RepresentabilitySolver::left_kernel() {
    return complex_data().kernel;
}

std::vector<BigInt> RepresentabilitySolver::kernel_invariant_factors() {
    ComplexData &data = complex_data();
    if (data.identity_block) {
        return std::vector<BigInt>(data.kernel.rows(), BigInt(1));
    }
    return data.snf.invariant_factors();
}

bool RepresentabilitySolver::complex_representable(const std::vector<uint8_t> &values) {
    check_values(values);
    ComplexData &data = complex_data();
    size_t rows = data.kernel.rows();
    if (rows == 0) {
        return true;
    }
    if (data.small) {
        std::vector<int64_t> half(rows);
        for (size_t i = 0; i < rows; i++) {
            int64_t acc = 0;
            const auto &u = data.kernel_small[i];
            for (size_t c = 0; c < values.size(); c++) {
                if (values[c] & 1) {
                    acc += u[c];
                }
            }
            if (acc & 1) {
                return false;
            }
            half[i] = -acc / 2;
        }
        if (data.unit_factors) {
            return true;
        }
        for (size_t i = 0; i < rows; i++) {
            int64_t acc = 0;
            for (size_t j = 0; j < rows; j++) {
                acc += data.left_small[i][j] * half[j];
            }
            if (acc % data.factors_small[i] != 0) {
                return false;
            }
        }
        return true;
    }
    std::vector<BigInt> q(values.size());
    for (size_t c = 0; c < values.size(); c++) {
        q[c] = values[c] & 1;
    }
    std::vector<BigInt> uq = data.kernel * q;
    for (auto &v : uq) {
        if (v % 2 != 0) {
            return false;
        }
        v = -v / 2;
    }
    return solve_integer_system(data.snf, uq).has_value();
}

std::optional<std::vector<Rational>> RepresentabilitySolver::complex_witness(const std::vector<uint8_t> &values) {
    check_values(values);
    ComplexData &data = complex_data();
    size_t n = num_qubits();
    size_t count = values.size();
    std::vector<BigInt> kappa(count);
    if (data.kernel.rows() > 0) {
        std::vector<BigInt> q(count);
        for (size_t c = 0; c < count; c++) {
            q[c] = values[c] & 1;
        }
        std::vector<BigInt> uq = data.kernel * q;
        for (auto &v : uq) {
            if (v % 2 != 0) {
                return std::nullopt;
            }
            v = -v / 2;
        }
        if (data.identity_block) {
            for (size_t r = 0; r < data.free_cols.size(); r++) {
                kappa[data.free_cols[r]] = uq[r];
            }
        } else {
            auto sol = solve_integer_system(data.snf, uq);
            if (!sol) {
                return std::nullopt;
            }
            kappa = std::move(*sol);
        }
    }
    // M a = Q + 2κ, consistent by construction.
    std::vector<std::vector<Rational>> aug(count, std::vector<Rational>(n + 1));
    for (size_t c = 0; c < count; c++) {
        for (size_t i = 0; i < n; i++) {
            if ((element_masks_[c] >> i) & 1) {
                aug[c][i] = 1;
            }
        }
        aug[c][n] = Rational(BigInt(values[c] & 1) + 2 * kappa[c]);
    }
    std::vector<size_t> pivots = rational_rref(aug, n + 1);
    if (!pivots.empty() && pivots.back() == n) {
        throw Error(ErrorCode::InternalInconsistency, "lattice solution does not lie in the column space");
    }
    std::vector<Rational> a(n);
    for (size_t r = 0; r < pivots.size(); r++) {
        a[pivots[r]] = aug[r][n];
    }
    if (!satisfies_real_congruence(basis_, values, a)) {
        throw Error(ErrorCode::InternalInconsistency, "complex witness fails the exact congruence check");
    }
    return a;
}

std::optional<PhaseAssignment> z2l_representable(const PhaseSystem &ps, unsigned level) {
    ps.check();
    check_level(level);
    check_rank(ps.rank(), kMaxLevelRank, "representability");
    RepresentabilitySolver solver(ps.basis);
    return solver.z2l(ps.values(), level);
}

ComplexDecision complex_representable(const PhaseSystem &ps, bool with_witness) {
    ps.check();
    check_rank(ps.rank(), kMaxComplexRank, "complex representability");
    RepresentabilitySolver solver(ps.basis);
    std::vector<uint8_t> values = ps.values();
    ComplexDecision out;
    out.representable = solver.complex_representable(values);
    if (out.representable && with_witness) {
        out.witness = solver.complex_witness(values);
        if (!out.witness) {
            throw Error(ErrorCode::InternalInconsistency, "representable instance produced no witness");
        }
    }
    return out;
}

std::optional<PhaseAssignment> z2l_bruteforce(
    const BitMatrix &basis, const std::vector<uint8_t> &values, unsigned level) {
    check_level(level);
    size_t n = basis.cols();
    uint64_t modulus = uint64_t{1} << level;
    if (static_cast<double>(n) * level > 24) {
        throw Error(ErrorCode::TooLarge, "brute-force phase search is limited to 2^24 candidates");
    }
    std::vector<uint64_t> elements = element_masks(basis);
    uint64_t half = modulus / 2;
    uint64_t total = uint64_t{1} << (n * level);
    std::vector<uint64_t> b(n);
    for (uint64_t code = 0; code < total; code++) {
        // b_0 is the most significant digit, so codes increase lexicographically.
        uint64_t rest = code;
        for (size_t i = n; i-- > 0;) {
            b[i] = rest % modulus;
            rest /= modulus;
        }
        bool ok = true;
        for (size_t c = 0; c < elements.size() && ok; c++) {
            uint64_t acc = 0;
            for (size_t i = 0; i < n; i++) {
                if ((elements[c] >> i) & 1) {
                    acc += b[i];
                }
            }
            ok = (acc % modulus) == ((values[c] & 1) ? half : 0);
        }
        if (ok) {
            return PhaseAssignment{level, b};
        }
    }
    return std::nullopt;
}

std::optional<std::vector<Rational>> dyadic_oracle(
    const BitMatrix &basis, const std::vector<uint8_t> &values, unsigned denominator) {
    if (denominator == 0 || !std::has_single_bit(denominator)) {
        throw Error(ErrorCode::InvalidArgument, "dyadic denominator must be a power of two");
    }
    size_t n = basis.cols();
    uint64_t range = 2 * uint64_t{denominator};
    double candidates = std::pow(static_cast<double>(range), static_cast<double>(n));
    if (candidates > 1e8) {
        throw Error(ErrorCode::TooLarge, "dyadic oracle is limited to 1e8 candidates");
    }
    std::vector<uint64_t> elements = element_masks(basis);
    std::vector<uint64_t> j(n, 0);
    while (true) {
        bool ok = true;
        for (size_t c = 0; c < elements.size() && ok; c++) {
            // Σ j_i s_i / D ≡ Q(s) (mod 2)  ⇔  Σ j_i s_i ≡ D·Q(s) (mod 2D).
            uint64_t acc = 0;
            for (size_t i = 0; i < n; i++) {
                if ((elements[c] >> i) & 1) {
                    acc += j[i];
                }
            }
            ok = acc % range == ((values[c] & 1) ? denominator : 0);
        }
        if (ok) {
            std::vector<Rational> a;
            for (uint64_t v : j) {
                a.emplace_back(BigInt(v), BigInt(denominator));
            }
            return a;
        }
        size_t pos = n;
        while (pos > 0) {
            pos--;
            if (++j[pos] < range) {
                break;
            }
            j[pos] = 0;
            if (pos == 0) {
                return std::nullopt;
            }
        }
        if (n == 0) {
            return std::nullopt;
        }
    }
}

bool real_signs_bruteforce(const BitMatrix &basis, const std::vector<uint8_t> &values) {
    size_t n = basis.cols();
    if (n > 24) {
        throw Error(ErrorCode::TooLarge, "sign enumeration is limited to 24 qubits");
    }
    std::vector<uint64_t> elements = element_masks(basis);
    for (uint64_t signs = 0; signs < (uint64_t{1} << n); signs++) {
        bool ok = true;
        for (size_t c = 0; c < elements.size() && ok; c++) {
            ok = (std::popcount(signs & elements[c]) & 1) == (values[c] & 1);
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

}  // namespace lulc
