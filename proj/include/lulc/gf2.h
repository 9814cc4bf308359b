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

#ifndef LULC_GF2_H
#define LULC_GF2_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lulc {

/// A packed vector over GF(2). Bit 0 is the first coordinate (qubit 1 when
/// the vector indexes qubits). Bits past `size()` are always zero.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t len);

    /// Parses a string of '0'/'1' characters; character i becomes bit i.
    static BitVec from_string(std::string_view text);
    /// Bit i is taken from bit i of `mask`. Requires len <= 64.
    static BitVec from_mask(size_t len, uint64_t mask);
    static BitVec unit(size_t len, size_t index);

    std::string str() const;
    /// Inverse of `from_mask`. Requires size() <= 64.
    uint64_t to_mask() const;

    size_t size() const {
        return len_;
    }
    bool get(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool value);
    void flip(size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    bool any() const;
    bool none() const {
        return !any();
    }
    size_t popcount() const;
    /// Index of the lowest set bit, or size() when the vector is zero.
    size_t first_set() const;
    /// Inner product over GF(2).
    bool dot(const BitVec &other) const;

    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    BitVec operator^(const BitVec &other) const;
    BitVec operator&(const BitVec &other) const;

    /// Appends the bits of `other` after the bits of this vector.
    BitVec concat(const BitVec &other) const;
    BitVec slice(size_t start, size_t len) const;

    bool operator==(const BitVec &other) const = default;
    /// Lexicographic order on the bit string (bit 0 most significant).
    bool lex_less(const BitVec &other) const;

    std::span<const uint64_t> words() const {
        return words_;
    }

   private:
    size_t len_ = 0;
    std::vector<uint64_t> words_;
};

/// Row-major dense matrix over GF(2).
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix identity(size_t n);
    /// Every string becomes one row; all strings must have length `cols`.
    static BitMatrix from_strings(const std::vector<std::string> &rows, size_t cols);
    static BitMatrix from_rows(const std::vector<BitVec> &rows, size_t cols);
    std::vector<std::string> to_strings() const;

    size_t rows() const {
        return rows_.size();
    }
    size_t cols() const {
        return cols_;
    }
    const BitVec &row(size_t i) const {
        return rows_[i];
    }
    BitVec &row(size_t i) {
        return rows_[i];
    }
    const std::vector<BitVec> &row_list() const {
        return rows_;
    }
    bool get(size_t i, size_t j) const {
        return rows_[i].get(j);
    }
    void set(size_t i, size_t j, bool value) {
        rows_[i].set(j, value);
    }
    void append_row(const BitVec &row);

    /// Matrix-vector product M·x.
    BitVec multiply(const BitVec &x) const;
    /// Row-vector product cᵀ·M, i.e. the combination of rows selected by c.
    BitVec combine_rows(const BitVec &coefficients) const;
    BitMatrix transpose() const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

struct RrefResult {
    BitMatrix reduced;  // same shape as the input; zero rows at the bottom
    size_t rank = 0;
    std::vector<size_t> pivots;
};

RrefResult rref(const BitMatrix &m);
size_t rank(const BitMatrix &m);

/// Basis of {x : M x = 0}, one basis vector per row.
BitMatrix kernel(const BitMatrix &m);

/// Some x with M x = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero.
std::optional<BitVec> solve(const BitMatrix &m, const BitVec &b);

/// The nonzero rows of rref(m).
BitMatrix row_basis(const BitMatrix &m);

/// Whether v lies in the row span of an RREF matrix with the given pivots.
bool reduce_against(const RrefResult &basis, BitVec &v);

/// Number of k-dimensional subspaces of GF(2)^n.
uint64_t gaussian_binomial(size_t n, size_t k);

/// Random-access enumeration of the k-dimensional subspaces of GF(2)^n. Each
/// subspace is represented by its unique k×n RREF basis. Enumeration order is
/// pivot sets in lexicographic order, then free entries as a binary counter,
/// so `at(i)` is stable and any index range can be processed independently.
class SubspaceEnumerator {
   public:
    SubspaceEnumerator(size_t n, size_t k);

    uint64_t size() const {
        return total_;
    }
    BitMatrix at(uint64_t index) const;

    /// Sequential iteration starting from `start`.
    void restart(uint64_t start = 0) {
        cursor_ = start;
    }
    std::optional<BitMatrix> next();

   private:
    struct PivotBlock {
        std::vector<size_t> pivots;
        std::vector<std::pair<size_t, size_t>> free_cells;
        uint64_t first_index;
        uint64_t count;
    };

    size_t n_;
    size_t k_;
    uint64_t total_ = 0;
    uint64_t cursor_ = 0;
    std::vector<PivotBlock> blocks_;
};

}  // namespace lulc

#endif
