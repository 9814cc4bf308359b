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

#include "lulc/purify.h"

#include "lulc/error.h"

namespace lulc {

std::vector<BitVec> extend_to_maximal(const StabilizerGroup &s) {
    size_t n = s.num_qubits();
    // Rows (x | z): after reduction the rows with an x-part pivot come first
    // (their x-parts Q1 are independent), the remaining rows have x = 0.
    BitMatrix xz(0, 2 * n);
    for (const PauliOp &g : s.generators()) {
        xz.append_row(g.x.concat(g.z));
    }
    RrefResult r = rref(xz);
    if (r.rank != s.rank()) {
        throw Error(ErrorCode::InvalidGroup, "generators are not independent");
    }
    BitMatrix q1(0, n);
    BitMatrix p2(0, n);
    for (size_t i = 0; i < r.rank; i++) {
        if (r.pivots[i] < n) {
            q1.append_row(r.reduced.row(i).slice(0, n));
        } else {
            p2.append_row(r.reduced.row(i).slice(n, n));
        }
    }
    // Z(z) commutes with every generator iff z ⟂ Q1.
    BitMatrix candidates = kernel(q1);
    BitMatrix span = p2;
    std::vector<BitVec> out;
    for (size_t i = 0; i < candidates.rows(); i++) {
        BitMatrix trial = span;
        trial.append_row(candidates.row(i));
        if (rank(trial) == trial.rows()) {
            span = std::move(trial);
            out.push_back(candidates.row(i));
        }
    }
    if (out.size() != n - s.rank()) {
        throw Error(ErrorCode::InternalInconsistency, "Z-type completion has the wrong size");
    }
    return out;
}

PauliOp anticommuting_partner(const StabilizerGroup &s, size_t index) {
    size_t n = s.num_qubits();
    if (index >= s.rank()) {
        throw Error(ErrorCode::InvalidArgument, "generator index out of range");
    }
    // Unknown (z | x); ⟨(z,x), (z_j,x_j)⟩ = z·x_j + x·z_j.
    BitMatrix system(0, 2 * n);
    for (const PauliOp &g : s.generators()) {
        system.append_row(g.x.concat(g.z));
    }
    auto sol = solve(system, BitVec::unit(s.rank(), index));
    if (!sol) {
        throw Error(ErrorCode::InvalidGroup, "generators are not independent");
    }
    return PauliOp::from_symplectic(*sol, 0);
}

Purification purify(const StabilizerGroup &s) {
    size_t n = s.num_qubits();
    size_t k = s.rank();
    Purification p{s, extend_to_maximal(s), {}, StabilizerGroup::trivial(0)};
    size_t l = p.z_list.size();

    std::vector<PauliOp> completed = s.generators();
    for (const BitVec &z : p.z_list) {
        completed.push_back(PauliOp::z_type(z));
    }
    StabilizerGroup maximal = StabilizerGroup::validate(n, completed);
    for (size_t j = 0; j < l; j++) {
        PauliOp h = anticommuting_partner(maximal, k + j);
        // Z(z_i) lies in the maximal group, so multiplying by it keeps every
        // relation with the generators and flips the one with h_i.
        for (size_t i = 0; i < j; i++) {
            if (!h.commutes(p.h_list[i])) {
                h = PauliOp::from_symplectic((h * PauliOp::z_type(p.z_list[i])).symplectic_vector(), 0);
            }
        }
        p.h_list.push_back(std::move(h));
    }

    std::vector<PauliOp> big;
    PauliOp ancilla_identity = PauliOp::identity(l);
    for (const PauliOp &g : s.generators()) {
        big.push_back(g.tensor(ancilla_identity));
    }
    for (size_t j = 0; j < l; j++) {
        big.push_back(PauliOp::z_type(p.z_list[j]).tensor(PauliOp::z_type(BitVec::unit(l, j))));
    }
    for (size_t j = 0; j < l; j++) {
        big.push_back(p.h_list[j].tensor(PauliOp::x_type(BitVec::unit(l, j))));
    }
    p.big_state = StabilizerGroup::validate(n + l, std::move(big));
    if (!p.big_state.is_maximal()) {
        throw Error(ErrorCode::InternalInconsistency, "purification is not a maximal stabilizer");
    }
    return p;
}

StabilizerGroup sector_group(const Purification &p, const BitVec &y) {
    if (y.size() != p.num_ancillas()) {
        throw Error(ErrorCode::SizeMismatch, "sector label must have one bit per ancilla");
    }
    std::vector<PauliOp> gens = p.code.generators();
    for (size_t j = 0; j < p.z_list.size(); j++) {
        gens.push_back(PauliOp::from_symplectic(PauliOp::z_type(p.z_list[j]).symplectic_vector(), y.get(j) ? 2 : 0));
    }
    return StabilizerGroup::validate(p.code.num_qubits(), std::move(gens));
}

StateVector purified_state(const Purification &p) {
    return synthesize_state(p.big_state);
}

}  // namespace lulc
