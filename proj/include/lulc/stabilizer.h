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

#ifndef LULC_STABILIZER_H
#define LULC_STABILIZER_H

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lulc/gf2.h"
#include "lulc/pauli.h"

namespace lulc {

/// Largest rank for which `elements()` will materialize the whole group.
constexpr size_t kMaxEnumeratedRank = 20;

/// A stabilizer group stored by an independent, pairwise-commuting set of
/// Hermitian generators. Covers codes (rank k < n) and states (k = n).
class StabilizerGroup {
   public:
    /// Checks the generators and builds the group. Throws NonCommutingError,
    /// or Error with DependentGenerators / NonHermitianSign / SizeMismatch.
    static StabilizerGroup validate(size_t num_qubits, std::vector<PauliOp> generators);
    static StabilizerGroup from_strings(size_t num_qubits, const std::vector<std::string> &generators);
    static StabilizerGroup trivial(size_t num_qubits) {
        return StabilizerGroup(num_qubits, {});
    }

    size_t num_qubits() const {
        return n_;
    }
    size_t rank() const {
        return generators_.size();
    }
    bool is_maximal() const {
        return rank() == n_;
    }
    const std::vector<PauliOp> &generators() const {
        return generators_;
    }
    std::vector<std::string> generator_strings() const;

    /// k × 2n matrix whose rows are the (z | x) vectors of the generators.
    BitMatrix generator_matrix() const;

    /// Product of the generators selected by `coefficients`, in generator order.
    PauliOp element(const BitVec &coefficients) const;
    /// All 2^k elements, ordered by coefficient vector read as a binary number
    /// (generator 0 least significant). Throws TooLarge above kMaxEnumeratedRank.
    std::vector<PauliOp> elements() const;

    uint64_t order() const {
        return uint64_t{1} << rank();
    }

   private:
    StabilizerGroup(size_t n, std::vector<PauliOp> generators) : n_(n), generators_(std::move(generators)) {
    }

    size_t n_;
    std::vector<PauliOp> generators_;
};

/// Coefficient vectors (over the generators of S) of the elements acting as
/// identity on `qubit`. One basis vector per row.
BitMatrix identity_on_qubit_coefficients(const StabilizerGroup &s, size_t qubit);

/// S⟨i⟩ = {g ∈ S : g_i = I}. Qubits are 0-based.
StabilizerGroup subgroup_i(const StabilizerGroup &s, size_t qubit);
/// [S : S⟨i⟩], always 1, 2 or 4.
unsigned index_i(const StabilizerGroup &s, size_t qubit);

enum class PiCase { Equal, IndexTwo, IndexFour };

struct PiSubgroup {
    StabilizerGroup pi;
    unsigned pi_index;
    PiCase which;
};

/// Π, the smallest subgroup of S containing every S⟨i⟩, with its index and the
/// trichotomy case it falls into.
PiSubgroup pi_subgroup(const StabilizerGroup &s);

/// True iff S = {I, g, g′, gg′} on an even number of qubits with all three
/// non-identity elements of full support.
bool detect_2m_code(const StabilizerGroup &s);

struct InvariantReport {
    uint64_t group_order = 0;
    std::vector<uint64_t> subgroup_orders;
    std::vector<unsigned> indices;
    unsigned pi_index = 1;

    bool operator==(const InvariantReport &other) const = default;
};

InvariantReport lu_invariants(const StabilizerGroup &s);

/// Random rank-k stabilizer on n qubits: a random symplectic basis is built by
/// symplectic Gram–Schmidt from random vectors, the first k isotropic vectors
/// become generators and each receives a random sign.
StabilizerGroup random_stabilizer_group(size_t n, size_t k, std::mt19937_64 &rng);

/// Symplectic Gram–Schmidt: returns hyperbolic pairs (e_i, f_i) spanning the
/// same space as `vectors`, which must be independent vectors of GF(2)^{2n}
/// spanning a nondegenerate space.
std::vector<std::pair<BitVec, BitVec>> symplectic_gram_schmidt(std::vector<BitVec> vectors);

}  // namespace lulc

#endif
