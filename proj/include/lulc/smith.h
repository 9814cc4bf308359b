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

#ifndef LULC_SMITH_H
#define LULC_SMITH_H

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace lulc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major integer matrix with arbitrary-precision entries.
class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    }
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix identity(size_t n);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    BigInt &at(size_t i, size_t j) {
        return data_[i * cols_ + j];
    }
    const BigInt &at(size_t i, size_t j) const {
        return data_[i * cols_ + j];
    }

    IntMatrix operator*(const IntMatrix &rhs) const;
    std::vector<BigInt> operator*(const std::vector<BigInt> &x) const;
    bool operator==(const IntMatrix &other) const = default;
    bool is_diagonal() const;
    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// left · A · right = diagonal, with `left` and `right` unimodular, and
/// equivalently A = left_inverse · diagonal · right_inverse. The diagonal
/// entries are nonnegative and each divides the next.
struct SmithForm {
    IntMatrix diagonal;
    IntMatrix left;
    IntMatrix right;
    IntMatrix left_inverse;
    IntMatrix right_inverse;
    size_t rank = 0;

    std::vector<BigInt> invariant_factors() const;
};

/// Inverse transforms are only accumulated when `track_inverses` is set.
SmithForm smith_normal_form(const IntMatrix &a, bool track_inverses = true);

/// Some integer x with A x = b, or nullopt when none exists.
std::optional<std::vector<BigInt>> solve_integer_system(const SmithForm &snf, const std::vector<BigInt> &b);

}  // namespace lulc

#endif
