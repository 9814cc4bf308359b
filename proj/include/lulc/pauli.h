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

#ifndef LULC_PAULI_H
#define LULC_PAULI_H

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lulc/gf2.h"

namespace lulc {

/// An n-qubit Pauli operator i^phase_exp · W(z, x), where
///
///     W(z, x) = ⊗_j i^{z_j x_j} Z^{z_j} X^{x_j}.
///
/// Note W(1, 1) = -Y. The text format hides this: letters always denote the
/// literal matrices I, X, Y, Z and the sign prefix is the literal coefficient.
struct PauliOp {
    BitVec z;
    BitVec x;
    uint8_t phase_exp = 0;

    PauliOp() = default;
    explicit PauliOp(size_t n) : z(n), x(n) {
    }
    PauliOp(BitVec z, BitVec x, uint8_t phase_exp = 0);

    static PauliOp identity(size_t n) {
        return PauliOp(n);
    }
    /// Z(t) = ⊗ Z^{t_j}.
    static PauliOp z_type(const BitVec &t);
    /// X(t) = ⊗ X^{t_j}.
    static PauliOp x_type(const BitVec &t);

    /// Parses an optional sign prefix (+, -, +i, -i) followed by I/X/Y/Z letters.
    static PauliOp from_string(std::string_view text);
    /// Canonical text: explicit sign prefix then one letter per qubit.
    std::string str() const;

    size_t num_qubits() const {
        return z.size();
    }
    /// Literal letter on qubit j.
    char letter(size_t j) const;
    /// The literal coefficient exponent s with operator = i^s ⊗ letters.
    uint8_t literal_sign_exp() const;

    bool is_hermitian() const {
        return (phase_exp & 1) == 0;
    }
    bool is_identity_up_to_phase() const {
        return z.none() && x.none();
    }
    /// Qubit indices j with a non-identity tensor factor.
    std::vector<size_t> support() const;
    bool has_full_support() const;

    /// The binary vector (z | x) of length 2n.
    BitVec symplectic_vector() const {
        return z.concat(x);
    }
    static PauliOp from_symplectic(const BitVec &zx, uint8_t phase_exp = 0);

    PauliOp operator*(const PauliOp &rhs) const;
    PauliOp &operator*=(const PauliOp &rhs);
    bool commutes(const PauliOp &other) const;
    /// a ⊗ b.
    PauliOp tensor(const PauliOp &other) const;

    bool operator==(const PauliOp &other) const = default;
};

/// zᵀx′ + xᵀz′ over GF(2); zero iff W(z,x) and W(z′,x′) commute.
bool symplectic_product(const BitVec &z1, const BitVec &x1, const BitVec &z2, const BitVec &x2);
bool symplectic_product(const PauliOp &a, const PauliOp &b);

/// Exact product a·b including the Z4 phase.
PauliOp multiply(const PauliOp &a, const PauliOp &b);

/// Per-qubit phase table: W(a)W(b) = i^{table[a][b]} W(a ⊕ b), indexed by
/// 2·z + x. Generated from explicit 2×2 complex matrix products.
const std::array<std::array<uint8_t, 4>, 4> &single_qubit_phase_table();

}  // namespace lulc

#endif
