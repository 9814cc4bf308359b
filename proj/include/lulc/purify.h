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

#ifndef LULC_PURIFY_H
#define LULC_PURIFY_H

#include <vector>

#include "lulc/gf2.h"
#include "lulc/pauli.h"
#include "lulc/stabilizer.h"
#include "lulc/statevec.h"

namespace lulc {

/// A rank-k code on n qubits embedded in a stabilizer state on n + l qubits,
/// l = n - k. The ancilla block is qubits n .. n + l - 1.
struct Purification {
    StabilizerGroup code;
    std::vector<BitVec> z_list;   // l vectors z_j: S ∪ {Z(z_j)} is maximal
    std::vector<PauliOp> h_list;  // h_j anticommutes with Z(z_j) only
    StabilizerGroup big_state;    // {g ⊗ I, Z(z_j) ⊗ Z(e_j), h_j ⊗ X(e_j)}

    size_t num_ancillas() const {
        return z_list.size();
    }
};

/// Vectors z_1 .. z_l such that appending the generators Z(z_j) to S gives an
/// independent commuting set of n generators.
std::vector<BitVec> extend_to_maximal(const StabilizerGroup &s);

/// A Hermitian Pauli anticommuting with generator `index` of S and commuting
/// with every other generator.
PauliOp anticommuting_partner(const StabilizerGroup &s, size_t index);

Purification purify(const StabilizerGroup &s);

/// S_y, generated by S and (-1)^{y_j} Z(z_j).
StabilizerGroup sector_group(const Purification &p, const BitVec &y);

/// The state of `big_state`.
StateVector purified_state(const Purification &p);

}  // namespace lulc

#endif
