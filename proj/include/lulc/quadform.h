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

#ifndef LULC_QUADFORM_H
#define LULC_QUADFORM_H

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "lulc/gf2.h"
#include "lulc/howell.h"
#include "lulc/quadratic_form.h"
#include "lulc/smith.h"

namespace lulc {

/// Largest level accepted by the ring solvers.
constexpr unsigned kMaxPhaseLevel = 6;
/// Largest subspace dimension for which the 2^k element constraints are built.
constexpr size_t kMaxLevelRank = 16;
/// Largest subspace dimension for the exact complex decision.
constexpr size_t kMaxComplexRank = 10;

/// A representability instance: does some choice of phases c_i satisfy
/// ∏ c_i^{s_i} = (-1)^{Q(s)} for every s in span(basis)?
struct PhaseSystem {
    BitMatrix basis;  // k×n, independent rows
    QuadraticForm q;  // on GF(2)^n; only the restriction to the span matters

    /// Lifts a form given in coordinates of `basis` to the ambient space.
    static PhaseSystem from_coordinates(BitMatrix basis, const QuadraticForm &coords);

    size_t num_qubits() const {
        return basis.cols();
    }
    size_t rank() const {
        return basis.rows();
    }
    void check() const;
    QuadraticForm coordinate_form() const;
    /// Q at s(c) = Σ c_a b_a, indexed by the bit mask of c.
    std::vector<uint8_t> values() const;
};

/// c_i = exp(iπ b_i / 2^{level-1}), b_i reduced mod 2^level.
struct PhaseAssignment {
    unsigned level = 1;
    std::vector<uint64_t> b;

    std::vector<std::complex<double>> phases() const;
    /// The same phases expressed at level + 1 (every b_i doubled).
    PhaseAssignment lifted() const;
    bool operator==(const PhaseAssignment &other) const = default;
};

/// The 2^k elements of span(basis), element c = Σ c_a b_a.
std::vector<BitVec> subspace_elements(const BitMatrix &basis);

/// Σ b_i s_i ≡ 2^{l-1} Q(s) (mod 2^l) on every element, with s_i lifted to {0,1}.
bool satisfies_congruence(const BitMatrix &basis, const std::vector<uint8_t> &values, const PhaseAssignment &p);
/// Σ a_i s_i - Q(s) ∈ 2ℤ on every element, in exact rational arithmetic.
bool satisfies_real_congruence(
    const BitMatrix &basis, const std::vector<uint8_t> &values, const std::vector<Rational> &a);

/// Per-subspace solver state. The constraint matrices, Howell forms and the
/// integer left kernel with its Smith form depend only on the subspace, so one
/// instance answers every form on that subspace. Not safe for concurrent use.
class RepresentabilitySolver {
   public:
    /// With `always_smith` the Smith form is computed even when the kernel
    /// basis already contains an identity minor.
    explicit RepresentabilitySolver(BitMatrix basis, bool always_smith = false);

    const BitMatrix &basis() const {
        return basis_;
    }
    size_t num_qubits() const {
        return basis_.cols();
    }
    size_t rank() const {
        return basis_.rows();
    }

    /// The lexicographically smallest b ∈ [0, 2^l)^n solving the congruence, or
    /// nullopt. Every returned assignment has been checked on all elements.
    std::optional<PhaseAssignment> z2l(const std::vector<uint8_t> &values, unsigned level);

    /// Exact decision of ∃ a ∈ ℝ^n with Σ a_i s_i ≡ Q(s) (mod 2) on the span.
    bool complex_representable(const std::vector<uint8_t> &values);
    /// A rational witness a, verified exactly, or nullopt when none exists.
    std::optional<std::vector<Rational>> complex_witness(const std::vector<uint8_t> &values);

    /// Rows of an integer basis of the rational left kernel of the element
    /// matrix (rows = elements, columns = qubits).
    const IntMatrix &left_kernel();
    /// Invariant factors of the left kernel basis.
    std::vector<BigInt> kernel_invariant_factors();

   private:
    struct ComplexData;
    void check_values(const std::vector<uint8_t> &values) const;
    ComplexData &complex_data();

    BitMatrix basis_;
    std::vector<uint64_t> element_masks_;  // bit i = qubit i of the element
    std::map<unsigned, std::unique_ptr<HowellSolver>> howell_;
    bool always_smith_;
    std::shared_ptr<ComplexData> complex_;
};

std::optional<PhaseAssignment> z2l_representable(const PhaseSystem &ps, unsigned level);

struct ComplexDecision {
    bool representable = false;
    std::optional<std::vector<Rational>> witness;
};
ComplexDecision complex_representable(const PhaseSystem &ps, bool with_witness = true);

/// Exhaustive oracle: the lexicographically smallest b in [0, 2^l)^n, by
/// direct enumeration.
std::optional<PhaseAssignment> z2l_bruteforce(
    const BitMatrix &basis, const std::vector<uint8_t> &values, unsigned level);

/// One-sided oracle over a ∈ {j / denominator : 0 <= j < 2·denominator}^n.
/// `denominator` must be a power of two.
std::optional<std::vector<Rational>> dyadic_oracle(
    const BitMatrix &basis, const std::vector<uint8_t> &values, unsigned denominator = 8);

/// Whether real signs c_i = ±1 realize the values, by trying all 2^n patterns.
bool real_signs_bruteforce(const BitMatrix &basis, const std::vector<uint8_t> &values);

}  // namespace lulc

#endif
