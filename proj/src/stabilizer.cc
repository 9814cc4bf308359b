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

#include "lulc/stabilizer.h"

#include <deque>

#include "lulc/error.h"

namespace lulc {

namespace {

bool symplectic_form(const BitVec &a, const BitVec &b) {
    size_t n = a.size() / 2;
    return symplectic_product(a.slice(0, n), a.slice(n, n), b.slice(0, n), b.slice(n, n));
}

}  // namespace

StabilizerGroup StabilizerGroup::validate(size_t num_qubits, std::vector<PauliOp> generators) {
    for (size_t i = 0; i < generators.size(); i++) {
        if (generators[i].num_qubits() != num_qubits) {
            throw Error(
                ErrorCode::SizeMismatch,
                "generator " + std::to_string(i) + " acts on " + std::to_string(generators[i].num_qubits()) +
                    " qubits, expected " + std::to_string(num_qubits));
        }
        if (!generators[i].is_hermitian()) {
            throw Error(
                ErrorCode::NonHermitianSign,
                "generator " + std::to_string(i) + " (" + generators[i].str() + ") has an imaginary sign");
        }
    }
    for (size_t i = 0; i < generators.size(); i++) {
        for (size_t j = i + 1; j < generators.size(); j++) {
            if (!generators[i].commutes(generators[j])) {
                throw NonCommutingError(i, j);
            }
        }
    }
    StabilizerGroup s(num_qubits, std::move(generators));
    if (lulc::rank(s.generator_matrix()) != s.rank()) {
        throw Error(ErrorCode::DependentGenerators, "generators are not independent");
    }
    return s;
}

StabilizerGroup StabilizerGroup::from_strings(size_t num_qubits, const std::vector<std::string> &generators) {
    std::vector<PauliOp> ops;
    ops.reserve(generators.size());
    for (const auto &g : generators) {
        ops.push_back(PauliOp::from_string(g));
    }
    return validate(num_qubits, std::move(ops));
}

std::vector<std::string> StabilizerGroup::generator_strings() const {
    std::vector<std::string> out;
    for (const auto &g : generators_) {
        out.push_back(g.str());
    }
    return out;
}

BitMatrix StabilizerGroup::generator_matrix() const {
    BitMatrix m(0, 2 * n_);
    for (const auto &g : generators_) {
        m.append_row(g.symplectic_vector());
    }
    return m;
}

PauliOp StabilizerGroup::element(const BitVec &coefficients) const {
    PauliOp acc = PauliOp::identity(n_);
    for (size_t a = 0; a < generators_.size(); a++) {
        if (coefficients.get(a)) {
            acc *= generators_[a];
        }
    }
    return acc;
}

std::vector<PauliOp> StabilizerGroup::elements() const {
    if (rank() > kMaxEnumeratedRank) {
        throw Error(ErrorCode::TooLarge, "refusing to enumerate 2^" + std::to_string(rank()) + " group elements");
    }
    // Elements commute, so the product order does not affect the phase; walk
    // the coefficient counter and build each element from its lower neighbour.
    std::vector<PauliOp> out;
    out.reserve(order());
    out.push_back(PauliOp::identity(n_));
    for (size_t a = 0; a < rank(); a++) {
        size_t half = out.size();
        for (size_t i = 0; i < half; i++) {
            out.push_back(out[i] * generators_[a]);
        }
    }
    return out;
}

BitMatrix identity_on_qubit_coefficients(const StabilizerGroup &s, size_t qubit) {
    if (qubit >= s.num_qubits()) {
        throw Error(ErrorCode::InvalidArgument, "qubit index out of range");
    }
    BitMatrix local(2, s.rank());
    for (size_t a = 0; a < s.rank(); a++) {
        local.set(0, a, s.generators()[a].z.get(qubit));
        local.set(1, a, s.generators()[a].x.get(qubit));
    }
    return kernel(local);
}

StabilizerGroup subgroup_i(const StabilizerGroup &s, size_t qubit) {
    BitMatrix coeffs = identity_on_qubit_coefficients(s, qubit);
    std::vector<PauliOp> gens;
    for (size_t r = 0; r < coeffs.rows(); r++) {
        gens.push_back(s.element(coeffs.row(r)));
    }
    return StabilizerGroup::validate(s.num_qubits(), std::move(gens));
}

unsigned index_i(const StabilizerGroup &s, size_t qubit) {
    size_t sub_rank = identity_on_qubit_coefficients(s, qubit).rows();
    return 1u << (s.rank() - sub_rank);
}

PiSubgroup pi_subgroup(const StabilizerGroup &s) {
    BitMatrix all(0, s.rank());
    for (size_t q = 0; q < s.num_qubits(); q++) {
        BitMatrix c = identity_on_qubit_coefficients(s, q);
        for (size_t r = 0; r < c.rows(); r++) {
            all.append_row(c.row(r));
        }
    }
    BitMatrix basis = row_basis(all);
    std::vector<PauliOp> gens;
    for (size_t r = 0; r < basis.rows(); r++) {
        gens.push_back(s.element(basis.row(r)));
    }
    unsigned index = 1u << (s.rank() - basis.rows());
    PiCase which = index == 1 ? PiCase::Equal : index == 2 ? PiCase::IndexTwo : PiCase::IndexFour;
    if (index > 4) {
        throw Error(ErrorCode::InternalInconsistency, "[S:Pi] exceeded 4");
    }
    return PiSubgroup{StabilizerGroup::validate(s.num_qubits(), std::move(gens)), index, which};
}

bool detect_2m_code(const StabilizerGroup &s) {
    if (s.rank() != 2 || s.num_qubits() % 2 != 0) {
        return false;
    }
    const PauliOp &g = s.generators()[0];
    const PauliOp &h = s.generators()[1];
    return g.has_full_support() && h.has_full_support() && (g * h).has_full_support();
}

InvariantReport lu_invariants(const StabilizerGroup &s) {
    InvariantReport report;
    report.group_order = s.order();
    for (size_t q = 0; q < s.num_qubits(); q++) {
        size_t sub_rank = identity_on_qubit_coefficients(s, q).rows();
        report.subgroup_orders.push_back(uint64_t{1} << sub_rank);
        report.indices.push_back(1u << (s.rank() - sub_rank));
    }
    report.pi_index = pi_subgroup(s).pi_index;
    return report;
}

std::vector<std::pair<BitVec, BitVec>> symplectic_gram_schmidt(std::vector<BitVec> vectors) {
    std::deque<BitVec> pool(vectors.begin(), vectors.end());
    std::vector<std::pair<BitVec, BitVec>> pairs;
    while (!pool.empty()) {
        BitVec e = pool.front();
        pool.pop_front();
        auto partner = pool.end();
        for (auto it = pool.begin(); it != pool.end(); ++it) {
            if (symplectic_form(e, *it)) {
                partner = it;
                break;
            }
        }
        if (partner == pool.end()) {
            throw Error(ErrorCode::InvalidArgument, "vectors do not span a nondegenerate symplectic space");
        }
        BitVec f = *partner;
        pool.erase(partner);
        for (auto &w : pool) {
            bool we = symplectic_form(w, e);
            bool wf = symplectic_form(w, f);
            if (wf) {
                w ^= e;
            }
            if (we) {
                w ^= f;
            }
        }
        pairs.emplace_back(std::move(e), std::move(f));
    }
    return pairs;
}

StabilizerGroup random_stabilizer_group(size_t n, size_t k, std::mt19937_64 &rng) {
    if (k > n) {
        throw Error(ErrorCode::InvalidArgument, "stabilizer rank cannot exceed the qubit count");
    }
    std::bernoulli_distribution coin(0.5);
    std::vector<BitVec> basis;
    BitMatrix span(0, 2 * n);
    while (basis.size() < 2 * n) {
        BitVec v(2 * n);
        for (size_t i = 0; i < 2 * n; i++) {
            v.set(i, coin(rng));
        }
        BitMatrix trial = span;
        trial.append_row(v);
        if (rank(trial) == trial.rows()) {
            span = std::move(trial);
            basis.push_back(v);
        }
    }
    auto pairs = symplectic_gram_schmidt(std::move(basis));
    std::vector<PauliOp> gens;
    for (size_t a = 0; a < k; a++) {
        gens.push_back(PauliOp::from_symplectic(pairs[a].first, coin(rng) ? 2 : 0));
    }
    return StabilizerGroup::validate(n, std::move(gens));
}

}  // namespace lulc
