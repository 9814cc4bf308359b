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

#ifndef LULC_STANDARD_FORM_H
#define LULC_STANDARD_FORM_H

#include <optional>
#include <random>

#include "lulc/gf2.h"
#include "lulc/quadratic_form.h"
#include "lulc/statevec.h"

namespace lulc {

/// Amplitude description of a stabilizer state: with x = t + Σ c_a b_a,
///
///     2^{k/2} ⟨x|ψ⟩ = i^{mu·c} (-1)^{q(c)},
///
/// and ⟨x|ψ⟩ = 0 off the affine space t + span(b). The exponent mu·c is taken
/// in GF(2) before being used as a power of i. mu_a = dᵀb_a records the phase
/// vector d through its action on the basis.
struct StandardForm {
    BitMatrix basis;  // k×n, reduced row echelon form
    BitVec t;         // lexicographically smallest point of the support
    BitVec mu;
    QuadraticForm q;

    size_t num_qubits() const {
        return basis.cols();
    }
    size_t rank() const {
        return basis.rows();
    }
    /// Throws InvalidArgument unless the fields are consistent and canonical.
    void check() const;
    bool operator==(const StandardForm &other) const = default;
};

/// Reads (S, q, mu, t) off the amplitudes. Throws SupportNotAffine,
/// AmplitudeNotFourthRootTimesConstant or InconsistentQuadraticFit.
StandardForm extract(const StateVector &psi);

StateVector synthesize(const StandardForm &sf);

/// Coordinates of y ∈ span(basis) in an RREF basis with the given pivots.
BitVec subspace_coordinates(const std::vector<size_t> &pivots, const BitVec &y);

/// The phase vector d with dᵀb_a = mu_a that `standardize` uses by default.
BitVec default_phase_vector(const StandardForm &sf);

/// q̃(c) = q(c) + Σ_{a<b} d_a y_a d_b y_b with y = Σ c_a b_a (the y's are the
/// ambient coordinates of the support point).
QuadraticForm corrected_form(const StandardForm &sf, const BitVec &d);

struct Standardization {
    StateVector state;  // T†(d) X(t) |ψ⟩
    QuadraticForm q_tilde;
    BitVec d;
    BitVec t;
};

/// Moves a state to standard form (t = 0, mu = 0). `d` defaults to
/// `default_phase_vector(sf)` and must satisfy dᵀb_a = mu_a.
Standardization standardize(const StandardForm &sf, std::optional<BitVec> d = std::nullopt);

/// Uniformly random canonical standard form on n qubits with rank k.
StandardForm random_standard_form(size_t n, size_t k, std::mt19937_64 &rng);

}  // namespace lulc

#endif
