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

#ifndef LULC_STATEVEC_H
#define LULC_STATEVEC_H

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "lulc/gf2.h"
#include "lulc/pauli.h"
#include "lulc/stabilizer.h"

namespace lulc {

using Complex = std::complex<double>;

/// 2×2 complex matrix in row-major order.
using Mat2 = std::array<Complex, 4>;

constexpr size_t kMaxStateQubits = 14;
constexpr size_t kMaxDensityQubits = 10;
constexpr size_t kMaxPartialTraceQubits = 12;

/// Basis index convention: qubit 1 (bit 0 of a BitVec) is the most
/// significant bit of the amplitude index.
uint64_t basis_index(const BitVec &bits);
BitVec basis_bits(size_t n, uint64_t index);
/// Index mask with the bits of the qubits in `bits` set.
inline uint64_t qubit_mask(const BitVec &bits) {
    return basis_index(bits);
}

/// A normalized pure state on n <= 14 qubits.
class StateVector {
   public:
    /// Validates the length and a unit norm within 1e-12.
    StateVector(size_t num_qubits, std::vector<Complex> amplitudes);
    /// Like the constructor but rescales to unit norm first; rejects the zero vector.
    static StateVector normalized(size_t num_qubits, std::vector<Complex> amplitudes);
    static StateVector basis_state(size_t num_qubits, uint64_t index);

    size_t num_qubits() const {
        return n_;
    }
    size_t dimension() const {
        return amps_.size();
    }
    const std::vector<Complex> &amplitudes() const {
        return amps_;
    }
    Complex operator[](uint64_t index) const {
        return amps_[index];
    }
    double norm() const;

    /// Multiplies by a unit-modulus constant so the first nonzero amplitude
    /// (in basis index order) is real and positive.
    StateVector with_canonical_phase(double zero_tolerance = 1e-10) const;

   private:
    size_t n_;
    std::vector<Complex> amps_;
};

/// ⟨a|b⟩.
Complex inner_product(const StateVector &a, const StateVector &b);
/// |⟨a|b⟩|, the global-phase-insensitive overlap.
double overlap(const StateVector &a, const StateVector &b);
/// max_x |a_x - b_x| after aligning the global phase of b to a.
double distance_up_to_phase(const StateVector &a, const StateVector &b);

/// Dense 2^n × 2^n operator, row-major.
class DensityOperator {
   public:
    DensityOperator(size_t num_qubits, std::vector<Complex> entries);
    static DensityOperator zero(size_t num_qubits);
    static DensityOperator pure(const StateVector &psi);

    size_t num_qubits() const {
        return n_;
    }
    size_t dimension() const {
        return size_t{1} << n_;
    }
    Complex &at(uint64_t row, uint64_t col) {
        return entries_[row * dimension() + col];
    }
    Complex at(uint64_t row, uint64_t col) const {
        return entries_[row * dimension() + col];
    }
    const std::vector<Complex> &entries() const {
        return entries_;
    }

    Complex trace() const;
    DensityOperator operator*(const DensityOperator &rhs) const;
    DensityOperator scaled(Complex factor) const;
    /// max |a_ij - b_ij|.
    double max_abs_difference(const DensityOperator &other) const;
    /// max |a_ij - conj(a_ji)|.
    double hermiticity_defect() const;

   private:
    size_t n_;
    std::vector<Complex> entries_;
};

/// ρ = 2^{-n} Σ_{g∈S} g, trace one. Requires n <= 10.
DensityOperator projector_from_group(const StabilizerGroup &s);

/// The state fixed by a maximal stabilizer, with the first nonzero amplitude
/// real positive. Requires k = n <= 14; throws NotMaximal otherwise.
StateVector synthesize_state(const StabilizerGroup &s);

StateVector apply_pauli(const PauliOp &p, const StateVector &psi);
/// X(t)|ψ⟩: basis state |x⟩ maps to |x + t⟩.
StateVector apply_x(const BitVec &t, const StateVector &psi);
StateVector apply_z(const BitVec &t, const StateVector &psi);
/// T(d) with T = diag(1, i) on every qubit where d is set; T† when `dagger`.
StateVector apply_t(const BitVec &d, const StateVector &psi, bool dagger);
/// ⊗_j diag(1, phases[j]).
StateVector apply_diagonal(const std::vector<Complex> &phases, const StateVector &psi);
StateVector apply_single_qubit(const Mat2 &u, size_t qubit, const StateVector &psi);
/// ⊗_j factors[j].
StateVector apply_local(const std::vector<Mat2> &factors, const StateVector &psi);

/// Traces out every qubit not in `keep` (0-based indices, any order; the
/// result orders kept qubits ascending). Requires n <= 12.
DensityOperator partial_trace(const DensityOperator &rho, const std::vector<size_t> &keep);
DensityOperator partial_trace(const StateVector &psi, const std::vector<size_t> &keep);

}  // namespace lulc

#endif
