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

#ifndef LULC_QUADRATIC_FORM_H
#define LULC_QUADRATIC_FORM_H

#include <cstdint>
#include <optional>
#include <vector>

#include "lulc/gf2.h"

namespace lulc {

/// q(x) = Σ_{i<j} θ_ij x_i x_j + λᵀx over GF(2).
class QuadraticForm {
   public:
    QuadraticForm() = default;
    explicit QuadraticForm(size_t m);
    /// `theta` must be m×m and strictly upper triangular.
    QuadraticForm(BitMatrix theta, BitVec lambda);

    /// The unique form agreeing with `values` on 0, e_i and e_i + e_j, where
    /// values[c] is the value at the point whose bit a is bit a of c. Does not
    /// check the remaining points; see `fit_quadratic_form`.
    static QuadraticForm interpolate(size_t m, const std::vector<uint8_t> &values);

    /// Decodes a search index: the low m bits give λ, the next m(m-1)/2 bits
    /// give θ_ij in row-major order over i < j.
    static QuadraticForm from_index(size_t m, uint64_t index);
    static uint64_t count(size_t m) {
        return uint64_t{1} << (m + m * (m - 1) / 2);
    }

    size_t dimension() const {
        return lambda_.size();
    }
    const BitMatrix &theta() const {
        return theta_;
    }
    const BitVec &lambda() const {
        return lambda_;
    }
    bool theta(size_t i, size_t j) const {
        return theta_.get(i, j);
    }
    void set_theta(size_t i, size_t j, bool value);
    void set_lambda(size_t i, bool value) {
        lambda_.set(i, value);
    }

    bool evaluate(const BitVec &x) const;
    /// Evaluation at the point whose coordinate a is bit a of `point`. m <= 64.
    bool evaluate_mask(uint64_t point) const;
    /// Values at all 2^m points in `evaluate_mask` order.
    std::vector<uint8_t> truth_table() const;

    /// Pointwise sum of the two functions.
    QuadraticForm operator+(const QuadraticForm &other) const;
    bool is_linear() const {
        return lulc::rank(theta_) == 0;
    }

    bool operator==(const QuadraticForm &other) const = default;

   private:
    BitMatrix theta_;
    BitVec lambda_;
    std::vector<uint64_t> theta_masks_;  // row i of θ as a bit mask, for m <= 64
};

/// Interpolates and then verifies every point; nullopt when `values` is not a
/// quadratic function.
std::optional<QuadraticForm> fit_quadratic_form(size_t m, const std::vector<uint8_t> &values);

/// Coordinates of the form on span(basis rows): q(c) = Q(Σ c_a b_a).
QuadraticForm restrict_to_subspace(const QuadraticForm &ambient, const BitMatrix &basis);

/// An ambient form whose restriction to span(basis rows) equals `coords`.
/// The basis rows must be independent.
QuadraticForm lift_to_ambient(const QuadraticForm &coords, const BitMatrix &basis);

}  // namespace lulc

#endif
