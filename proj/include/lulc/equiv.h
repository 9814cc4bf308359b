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

#ifndef LULC_EQUIV_H
#define LULC_EQUIV_H

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lulc/quadform.h"
#include "lulc/quadratic_form.h"
#include "lulc/statevec.h"

namespace lulc {

constexpr double kPauliAxisTolerance = 1e-8;
constexpr double kUnitarityTolerance = 1e-10;
constexpr size_t kMaxLcOracleQubits = 3;

Mat2 mat_mul(const Mat2 &a, const Mat2 &b);
Mat2 adjoint(const Mat2 &a);
/// max |a_ij - b_ij|.
double max_abs_difference(const Mat2 &a, const Mat2 &b);
bool is_unitary(const Mat2 &u, double tolerance = kUnitarityTolerance);
/// min over unit phases ω of max |a - ω b|, using the phase that aligns the
/// largest entry of b.
double distance_up_to_phase(const Mat2 &a, const Mat2 &b);
/// Divides by the phase of the first entry with modulus above 1e-9.
Mat2 canonical_phase(const Mat2 &u);

enum class PauliAxis { X, Y, Z };
Mat2 pauli_matrix(PauliAxis axis);
Mat2 hadamard();
/// diag(1, i).
Mat2 phase_gate();
char axis_letter(PauliAxis axis);

/// The 24 single-qubit Cliffords modulo global phase, generated by closure from
/// H and diag(1, i) in breadth-first order. Entry 0 is the identity.
const std::vector<Mat2> &clifford_group_1q();
/// Index into `clifford_group_1q` of the element equal to u up to phase.
std::optional<size_t> clifford_index(const Mat2 &u, double tolerance = 1e-8);

/// U σ U† = sign · image.
struct AxisImage {
    PauliAxis image;
    int sign;
};
std::optional<AxisImage> conjugate_axis(const Mat2 &u, PauliAxis sigma, double tolerance = kPauliAxisTolerance);

struct SemiCliffordInfo {
    bool semi = false;
    bool clifford = false;
    /// First of Z, X, Y whose conjugate is a signed Pauli.
    std::optional<PauliAxis> fixed_axis;
};
/// Throws NotUnitary when U†U deviates from I by more than 1e-10.
SemiCliffordInfo is_semi_clifford(const Mat2 &u);

/// U = C · D · C′ up to global phase, C and C′ Clifford, D diagonal.
struct CliffordDecomposition {
    Mat2 c;
    Mat2 d;
    Mat2 c_prime;
    size_t c_index = 0;
    size_t c_prime_index = 0;
};
/// Throws NotSemiClifford when no Pauli axis is mapped to a Pauli.
CliffordDecomposition semi_clifford_decompose(const Mat2 &u);

Mat2 haar_random_unitary(std::mt19937_64 &rng);

/// Indices (i_1, ..., i_n) into `clifford_group_1q` with ⊗ U_{i_j} |psi⟩ equal
/// to |phi⟩ up to global phase (overlap >= 1 - 1e-8); the first such tuple in
/// lexicographic order, or nullopt. Requires n <= 3.
std::optional<std::vector<size_t>> lc_equivalent_bruteforce(
    const StateVector &psi, const StateVector &phi, bool parallel = true);

struct DluVerdict {
    bool related = false;
    std::string reason;  // "S mismatch", "t mismatch", "amplitude mismatch" or "ok"
    BitMatrix basis;
    QuadraticForm q;  // q̃ + q̃′ in coordinates of `basis`; empty on mismatch
    bool complex_rep = false;
    std::optional<PhaseAssignment> clifford_rep;
    std::optional<std::vector<Rational>> witness;
    /// `clifford_rep` and `witness` relate the standardized states. These are
    /// the same solutions moved back to the inputs: ⊗ diag(1, c_i) maps psi to
    /// phi, with c_i = i^{b_i} and c_i = exp(iπ a_i) respectively.
    std::optional<PhaseAssignment> dlu_phases;
    std::optional<std::vector<Rational>> dlu_angles;
};
/// Decides whether phi = D psi for a diagonal local unitary D, by comparing
/// the standard forms and solving for the phases. Throws NotStabilizerState
/// when either input has no standard form.
DluVerdict dlu_check(const StateVector &psi, const StateVector &phi);

}  // namespace lulc

#endif
