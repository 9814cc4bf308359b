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

#include "lulc/quadratic_form.h"

#include <bit>

#include "lulc/error.h"

namespace lulc {

QuadraticForm::QuadraticForm(size_t m) : theta_(m, m), lambda_(m), theta_masks_(m, 0) {
}

QuadraticForm::QuadraticForm(BitMatrix theta, BitVec lambda) : theta_(std::move(theta)), lambda_(std::move(lambda)) {
    size_t m = lambda_.size();
    if (theta_.rows() != m || theta_.cols() != m) {
        throw Error(ErrorCode::SizeMismatch, "theta must be an m×m matrix matching lambda");
    }
    theta_masks_.assign(m, 0);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) {
            if (theta_.get(i, j)) {
                if (j <= i) {
                    throw Error(ErrorCode::InvalidArgument, "theta must be strictly upper triangular");
                }
                if (m <= 64) {
                    theta_masks_[i] |= uint64_t{1} << j;
                }
            }
        }
    }
}

void QuadraticForm::set_theta(size_t i, size_t j, bool value) {
    if (j <= i) {
        throw Error(ErrorCode::InvalidArgument, "theta entries require i < j");
    }
    theta_.set(i, j, value);
    if (dimension() <= 64) {
        uint64_t bit = uint64_t{1} << j;
        theta_masks_[i] = value ? (theta_masks_[i] | bit) : (theta_masks_[i] & ~bit);
    }
}

QuadraticForm QuadraticForm::interpolate(size_t m, const std::vector<uint8_t> &values) {
    if (m > 30 || values.size() != (size_t{1} << m)) {
        throw Error(ErrorCode::SizeMismatch, "value table must have 2^m entries");
    }
    QuadraticForm q(m);
    bool q0 = values[0] & 1;
    for (size_t i = 0; i < m; i++) {
        q.set_lambda(i, (values[size_t{1} << i] & 1) ^ q0);
    }
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            bool v = values[(size_t{1} << i) | (size_t{1} << j)] & 1;
            q.set_theta(i, j, v ^ (values[size_t{1} << i] & 1) ^ (values[size_t{1} << j] & 1) ^ q0);
        }
    }
    return q;
}

QuadraticForm QuadraticForm::from_index(size_t m, uint64_t index) {
    QuadraticForm q(m);
    size_t bit = 0;
    for (size_t i = 0; i < m; i++) {
        q.set_lambda(i, (index >> bit++) & 1);
    }
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            q.set_theta(i, j, (index >> bit++) & 1);
        }
    }
    return q;
}

bool QuadraticForm::evaluate(const BitVec &x) const {
    if (x.size() != dimension()) {
        throw Error(ErrorCode::SizeMismatch, "quadratic form argument has the wrong length");
    }
    bool acc = lambda_.dot(x);
    for (size_t i = 0; i < dimension(); i++) {
        if (x.get(i)) {
            acc ^= theta_.row(i).dot(x);
        }
    }
    return acc;
}

bool QuadraticForm::evaluate_mask(uint64_t point) const {
    size_t m = dimension();
    uint64_t acc = lambda_.to_mask() & point;
    unsigned parity = std::popcount(acc);
    for (size_t i = 0; i < m; i++) {
        if ((point >> i) & 1) {
            parity += std::popcount(theta_masks_[i] & point);
        }
    }
    return parity & 1;
}

std::vector<uint8_t> QuadraticForm::truth_table() const {
    std::vector<uint8_t> out(size_t{1} << dimension());
    for (uint64_t c = 0; c < out.size(); c++) {
        out[c] = evaluate_mask(c);
    }
    return out;
}

QuadraticForm QuadraticForm::operator+(const QuadraticForm &other) const {
    if (other.dimension() != dimension()) {
        throw Error(ErrorCode::SizeMismatch, "quadratic forms of different dimensions");
    }
    BitMatrix theta = theta_;
    for (size_t i = 0; i < dimension(); i++) {
        theta.row(i) ^= other.theta_.row(i);
    }
    return QuadraticForm(std::move(theta), lambda_ ^ other.lambda_);
}

std::optional<QuadraticForm> fit_quadratic_form(size_t m, const std::vector<uint8_t> &values) {
    if (values.empty() || (values[0] & 1)) {
        // A form vanishes at the origin.
        if (values.size() != (size_t{1} << m)) {
            throw Error(ErrorCode::SizeMismatch, "value table must have 2^m entries");
        }
        return std::nullopt;
    }
    QuadraticForm q = QuadraticForm::interpolate(m, values);
    for (uint64_t c = 0; c < values.size(); c++) {
        if (q.evaluate_mask(c) != (values[c] & 1)) {
            return std::nullopt;
        }
    }
    return q;
}

QuadraticForm restrict_to_subspace(const QuadraticForm &ambient, const BitMatrix &basis) {
    size_t k = basis.rows();
    if (basis.cols() != ambient.dimension()) {
        throw Error(ErrorCode::SizeMismatch, "basis vectors and form dimension differ");
    }
    auto point = [&](uint64_t c) {
        BitVec x(basis.cols());
        for (size_t a = 0; a < k; a++) {
            if ((c >> a) & 1) {
                x ^= basis.row(a);
            }
        }
        return ambient.evaluate(x);
    };
    QuadraticForm q(k);
    for (size_t a = 0; a < k; a++) {
        q.set_lambda(a, point(uint64_t{1} << a));
    }
    for (size_t a = 0; a < k; a++) {
        for (size_t b = a + 1; b < k; b++) {
            bool v = point((uint64_t{1} << a) | (uint64_t{1} << b));
            q.set_theta(a, b, v ^ q.lambda().get(a) ^ q.lambda().get(b));
        }
    }
    return q;
}

QuadraticForm lift_to_ambient(const QuadraticForm &coords, const BitMatrix &basis) {
    size_t k = basis.rows();
    size_t n = basis.cols();
    if (coords.dimension() != k) {
        throw Error(ErrorCode::SizeMismatch, "form dimension must equal the number of basis vectors");
    }
    // Functionals ℓ_a with ℓ_a(b_c) = δ_ac; Q(x) := q(ℓ(x)).
    std::vector<BitVec> functionals;
    for (size_t a = 0; a < k; a++) {
        auto sol = solve(basis, BitVec::unit(k, a));
        if (!sol) {
            throw Error(ErrorCode::InvalidArgument, "basis rows are not independent");
        }
        functionals.push_back(*sol);
    }
    auto value = [&](const BitVec &x) {
        BitVec c(k);
        for (size_t a = 0; a < k; a++) {
            c.set(a, functionals[a].dot(x));
        }
        return coords.evaluate(c);
    };
    QuadraticForm out(n);
    for (size_t i = 0; i < n; i++) {
        out.set_lambda(i, value(BitVec::unit(n, i)));
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            bool v = value(BitVec::unit(n, i) ^ BitVec::unit(n, j));
            out.set_theta(i, j, v ^ out.lambda().get(i) ^ out.lambda().get(j));
        }
    }
    return out;
}

}  // namespace lulc
