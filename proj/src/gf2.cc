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

#include "lulc/gf2.h"

#include <algorithm>
#include <bit>
#include <cassert>

#include "lulc/error.h"

namespace lulc {

namespace {

size_t word_count(size_t len) {
    return (len + 63) / 64;
}

void require_same_size(size_t a, size_t b) {
    if (a != b) {
        throw Error(ErrorCode::SizeMismatch, "bit vector length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::SizeMismatch:
            return "SizeMismatch";
        case ErrorCode::ParseError:
            return "ParseError";
        case ErrorCode::NonCommuting:
            return "NonCommuting";
        case ErrorCode::DependentGenerators:
            return "DependentGenerators";
        case ErrorCode::NonHermitianSign:
            return "NonHermitianSign";
        case ErrorCode::TooLarge:
            return "TooLarge";
        case ErrorCode::NotMaximal:
            return "NotMaximal";
        case ErrorCode::NotNormalized:
            return "NotNormalized";
        case ErrorCode::SupportNotAffine:
            return "SupportNotAffine";
        case ErrorCode::AmplitudeNotFourthRootTimesConstant:
            return "AmplitudeNotFourthRootTimesConstant";
        case ErrorCode::InconsistentQuadraticFit:
            return "InconsistentQuadraticFit";
        case ErrorCode::InvalidGroup:
            return "InvalidGroup";
        case ErrorCode::NotUnitary:
            return "NotUnitary";
        case ErrorCode::NotSemiClifford:
            return "NotSemiClifford";
        case ErrorCode::NotStabilizerState:
            return "NotStabilizerState";
        case ErrorCode::NotQuadratic:
            return "NotQuadratic";
        case ErrorCode::InternalInconsistency:
            return "InternalInconsistency";
    }
    return "Unknown";
}

BitVec::BitVec(size_t len) : len_(len), words_(word_count(len), 0) {
}

BitVec BitVec::from_string(std::string_view text) {
    BitVec v(text.size());
    for (size_t i = 0; i < text.size(); i++) {
        if (text[i] == '1') {
            v.set(i, true);
        } else if (text[i] != '0') {
            throw Error(ErrorCode::ParseError, "bit string may only contain '0' and '1': \"" + std::string(text) + "\"");
        }
    }
    return v;
}

BitVec BitVec::from_mask(size_t len, uint64_t mask) {
    assert(len <= 64);
    BitVec v(len);
    if (len > 0) {
        v.words_[0] = len == 64 ? mask : (mask & ((uint64_t{1} << len) - 1));
    }
    return v;
}

BitVec BitVec::unit(size_t len, size_t index) {
    BitVec v(len);
    v.set(index, true);
    return v;
}

std::string BitVec::str() const {
    std::string out(len_, '0');
    for (size_t i = 0; i < len_; i++) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

uint64_t BitVec::to_mask() const {
    assert(len_ <= 64);
    return words_.empty() ? 0 : words_[0];
}

void BitVec::set(size_t i, bool value) {
    uint64_t bit = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= bit;
    } else {
        words_[i >> 6] &= ~bit;
    }
}

bool BitVec::any() const {
    return std::any_of(words_.begin(), words_.end(), [](uint64_t w) { return w != 0; });
}

size_t BitVec::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

size_t BitVec::first_set() const {
    for (size_t w = 0; w < words_.size(); w++) {
        if (words_[w]) {
            return w * 64 + std::countr_zero(words_[w]);
        }
    }
    return len_;
}

bool BitVec::dot(const BitVec &other) const {
    require_same_size(len_, other.len_);
    uint64_t acc = 0;
    for (size_t w = 0; w < words_.size(); w++) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

BitVec &BitVec::operator^=(const BitVec &other) {
    require_same_size(len_, other.len_);
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    require_same_size(len_, other.len_);
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

BitVec BitVec::operator^(const BitVec &other) const {
    BitVec out = *this;
    out ^= other;
    return out;
}

BitVec BitVec::operator&(const BitVec &other) const {
    BitVec out = *this;
    out &= other;
    return out;
}

BitVec BitVec::concat(const BitVec &other) const {
    BitVec out(len_ + other.len_);
    for (size_t i = 0; i < len_; i++) {
        out.set(i, get(i));
    }
    for (size_t i = 0; i < other.len_; i++) {
        out.set(len_ + i, other.get(i));
    }
    return out;
}

BitVec BitVec::slice(size_t start, size_t len) const {
    assert(start + len <= len_);
    BitVec out(len);
    for (size_t i = 0; i < len; i++) {
        out.set(i, get(start + i));
    }
    return out;
}

bool BitVec::lex_less(const BitVec &other) const {
    require_same_size(len_, other.len_);
    for (size_t w = 0; w < words_.size(); w++) {
        uint64_t diff = words_[w] ^ other.words_[w];
        if (diff) {
            size_t bit = std::countr_zero(diff);
            return other.get(w * 64 + bit);
        }
    }
    return false;
}

BitMatrix::BitMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string> &rows, size_t cols) {
    BitMatrix m(0, cols);
    for (const auto &r : rows) {
        if (r.size() != cols) {
            throw Error(
                ErrorCode::SizeMismatch,
                "matrix row \"" + r + "\" has length " + std::to_string(r.size()) + ", expected " +
                    std::to_string(cols));
        }
        m.append_row(BitVec::from_string(r));
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVec> &rows, size_t cols) {
    BitMatrix m(0, cols);
    for (const auto &r : rows) {
        m.append_row(r);
    }
    return m;
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_.size());
    for (const auto &r : rows_) {
        out.push_back(r.str());
    }
    return out;
}

void BitMatrix::append_row(const BitVec &row) {
    require_same_size(row.size(), cols_);
    rows_.push_back(row);
}

BitVec BitMatrix::multiply(const BitVec &x) const {
    require_same_size(x.size(), cols_);
    BitVec out(rows_.size());
    for (size_t i = 0; i < rows_.size(); i++) {
        out.set(i, rows_[i].dot(x));
    }
    return out;
}

BitVec BitMatrix::combine_rows(const BitVec &coefficients) const {
    require_same_size(coefficients.size(), rows_.size());
    BitVec out(cols_);
    for (size_t i = 0; i < rows_.size(); i++) {
        if (coefficients.get(i)) {
            out ^= rows_[i];
        }
    }
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_.size());
    for (size_t i = 0; i < rows_.size(); i++) {
        for (size_t j = 0; j < cols_; j++) {
            if (rows_[i].get(j)) {
                t.set(j, i, true);
            }
        }
    }
    return t;
}

RrefResult rref(const BitMatrix &m) {
    RrefResult result{m, 0, {}};
    BitMatrix &r = result.reduced;
    size_t next_row = 0;
    for (size_t col = 0; col < r.cols() && next_row < r.rows(); col++) {
        size_t pivot = next_row;
        while (pivot < r.rows() && !r.get(pivot, col)) {
            pivot++;
        }
        if (pivot == r.rows()) {
            continue;
        }
        std::swap(r.row(pivot), r.row(next_row));
        for (size_t i = 0; i < r.rows(); i++) {
            if (i != next_row && r.get(i, col)) {
                r.row(i) ^= r.row(next_row);
            }
        }
        result.pivots.push_back(col);
        next_row++;
    }
    result.rank = next_row;
    return result;
}

size_t rank(const BitMatrix &m) {
    return rref(m).rank;
}

BitMatrix kernel(const BitMatrix &m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : r.pivots) {
        is_pivot[p] = true;
    }
    BitMatrix basis(0, m.cols());
    for (size_t free = 0; free < m.cols(); free++) {
        if (is_pivot[free]) {
            continue;
        }
        BitVec v(m.cols());
        v.set(free, true);
        for (size_t i = 0; i < r.rank; i++) {
            if (r.reduced.get(i, free)) {
                v.set(r.pivots[i], true);
            }
        }
        basis.append_row(v);
    }
    return basis;
}

std::optional<BitVec> solve(const BitMatrix &m, const BitVec &b) {
    require_same_size(b.size(), m.rows());
    // Row-reduce the augmented matrix [M | b].
    BitMatrix aug(0, m.cols() + 1);
    for (size_t i = 0; i < m.rows(); i++) {
        BitVec row = m.row(i).concat(BitVec::from_mask(1, b.get(i)));
        aug.append_row(row);
    }
    RrefResult r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == m.cols()) {
        return std::nullopt;
    }
    BitVec x(m.cols());
    for (size_t i = 0; i < r.rank; i++) {
        x.set(r.pivots[i], r.reduced.get(i, m.cols()));
    }
    return x;
}

BitMatrix row_basis(const BitMatrix &m) {
    RrefResult r = rref(m);
    BitMatrix out(0, m.cols());
    for (size_t i = 0; i < r.rank; i++) {
        out.append_row(r.reduced.row(i));
    }
    return out;
}

bool reduce_against(const RrefResult &basis, BitVec &v) {
    for (size_t i = 0; i < basis.rank; i++) {
        if (v.get(basis.pivots[i])) {
            v ^= basis.reduced.row(i);
        }
    }
    return v.none();
}

uint64_t gaussian_binomial(size_t n, size_t k) {
    if (k > n) {
        return 0;
    }
    // [n,k]_2 = prod_{i<k} (2^{n-i} - 1) / (2^{i+1} - 1), evaluated incrementally
    // so each partial product is itself a Gaussian binomial.
    uint64_t value = 1;
    for (size_t i = 0; i < k; i++) {
        unsigned __int128 num = static_cast<unsigned __int128>(value) * ((uint64_t{1} << (n - i)) - 1);
        value = static_cast<uint64_t>(num / ((uint64_t{1} << (i + 1)) - 1));
    }
    return value;
}

SubspaceEnumerator::SubspaceEnumerator(size_t n, size_t k) : n_(n), k_(k) {
    if (k > n || n > 63) {
        throw Error(ErrorCode::InvalidArgument, "subspace enumeration requires 0 <= k <= n <= 63");
    }
    std::vector<size_t> pivots(k);
    for (size_t i = 0; i < k; i++) {
        pivots[i] = i;
    }
    while (true) {
        PivotBlock block{pivots, {}, total_, 0};
        std::vector<bool> is_pivot(n, false);
        for (size_t p : pivots) {
            is_pivot[p] = true;
        }
        for (size_t r = 0; r < k; r++) {
            for (size_t c = pivots[r] + 1; c < n; c++) {
                if (!is_pivot[c]) {
                    block.free_cells.emplace_back(r, c);
                }
            }
        }
        if (block.free_cells.size() >= 64) {
            throw Error(ErrorCode::TooLarge, "subspace enumeration block too large");
        }
        block.count = uint64_t{1} << block.free_cells.size();
        total_ += block.count;
        blocks_.push_back(std::move(block));

        // Next k-combination in lexicographic order.
        size_t i = k;
        while (i > 0 && pivots[i - 1] == n - k + (i - 1)) {
            i--;
        }
        if (i == 0) {
            break;
        }
        pivots[i - 1]++;
        for (size_t j = i; j < k; j++) {
            pivots[j] = pivots[j - 1] + 1;
        }
    }
}

BitMatrix SubspaceEnumerator::at(uint64_t index) const {
    if (index >= total_) {
        throw Error(ErrorCode::InvalidArgument, "subspace index out of range");
    }
    auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index, [](uint64_t value, const PivotBlock &b) {
        return value < b.first_index;
    });
    const PivotBlock &block = *std::prev(it);
    uint64_t local = index - block.first_index;
    BitMatrix m(k_, n_);
    for (size_t r = 0; r < k_; r++) {
        m.set(r, block.pivots[r], true);
    }
    // The highest free cell is the least significant counter bit, so that
    // sequential order varies the trailing entries fastest.
    size_t f = block.free_cells.size();
    for (size_t b = 0; b < f; b++) {
        if ((local >> b) & 1) {
            auto [r, c] = block.free_cells[f - 1 - b];
            m.set(r, c, true);
        }
    }
    return m;
}

std::optional<BitMatrix> SubspaceEnumerator::next() {
    if (cursor_ >= total_) {
        return std::nullopt;
    }
    return at(cursor_++);
}

}  // namespace lulc
