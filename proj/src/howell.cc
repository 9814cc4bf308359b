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

#include "lulc/howell.h"

#include <bit>

#include "lulc/error.h"

namespace lulc {

namespace {

uint64_t level_mask(unsigned level) {
    if (level == 0 || level > kMaxRingLevel) {
        throw Error(ErrorCode::InvalidArgument, "ring level must be in [1, " + std::to_string(kMaxRingLevel) + "]");
    }
    return (uint64_t{1} << level) - 1;
}

/// Inverse of an odd number modulo 2^64.
uint64_t odd_inverse(uint64_t u) {
    uint64_t x = u;  // correct to 3 bits
    for (int i = 0; i < 5; i++) {
        x *= 2 - u * x;
    }
    return x;
}

/// row_i -= c·row_t (mod 2^l), from column `start` on.
void row_axpy(std::vector<uint64_t> &dst, const std::vector<uint64_t> &src, uint64_t c, size_t start, uint64_t mask) {
    if (c == 0) {
        return;
    }
    for (size_t j = start; j < dst.size(); j++) {
        dst[j] = (dst[j] - c * src[j]) & mask;
    }
}

}  // namespace

ModMatrix howell_form(ModMatrix a, size_t cols, unsigned level) {
    uint64_t mask = level_mask(level);
    for (auto &row : a) {
        if (row.size() != cols) {
            throw Error(ErrorCode::SizeMismatch, "ring matrix rows must have equal length");
        }
        for (auto &v : row) {
            v &= mask;
        }
    }
    size_t r = 0;
    for (size_t j = 0; j < cols && r < a.size(); j++) {
        size_t best = a.size();
        unsigned best_v = level;
        for (size_t i = r; i < a.size(); i++) {
            if (a[i][j] != 0) {
                unsigned v = std::countr_zero(a[i][j]);
                if (v < best_v) {
                    best_v = v;
                    best = i;
                    if (v == 0) {
                        break;
                    }
                }
            }
        }
        if (best == a.size()) {
            continue;
        }
        std::swap(a[r], a[best]);
        uint64_t unit_inv = odd_inverse(a[r][j] >> best_v);
        for (size_t c = j; c < cols; c++) {
            a[r][c] = (a[r][c] * unit_inv) & mask;
        }
        for (size_t i = 0; i < a.size(); i++) {
            if (i == r || a[i][j] == 0) {
                continue;
            }
            // Rows below are cleared; rows above are reduced into [0, 2^v).
            row_axpy(a[i], a[r], a[i][j] >> best_v, j, mask);
        }
        if (best_v > 0) {
            std::vector<uint64_t> annihilated(cols);
            bool nonzero = false;
            for (size_t c = j + 1; c < cols; c++) {
                annihilated[c] = (a[r][c] << (level - best_v)) & mask;
                nonzero |= annihilated[c] != 0;
            }
            if (nonzero) {
                a.push_back(std::move(annihilated));
            }
        }
        r++;
    }
    a.resize(r);
    return a;
}

HowellSolver::HowellSolver(const ModMatrix &a, size_t num_unknowns, unsigned level)
    : level_(level), mask_(level_mask(level)), equations_(a.size()), unknowns_(num_unknowns) {
    ModMatrix w(unknowns_, std::vector<uint64_t>(equations_ + unknowns_));
    for (size_t e = 0; e < equations_; e++) {
        if (a[e].size() != unknowns_) {
            throw Error(ErrorCode::SizeMismatch, "ring matrix rows must have one entry per unknown");
        }
        for (size_t i = 0; i < unknowns_; i++) {
            w[i][e] = a[e][i] & mask_;
        }
    }
    for (size_t i = 0; i < unknowns_; i++) {
        w[i][equations_ + i] = 1;
    }
    form_ = howell_form(std::move(w), equations_ + unknowns_, level_);
    for (const auto &row : form_) {
        size_t p = 0;
        while (row[p] == 0) {
            p++;
        }
        pivot_cols_.push_back(p);
        pivot_vals_.push_back(std::countr_zero(row[p]));
    }
}

std::optional<std::vector<uint64_t>> HowellSolver::solve(const std::vector<uint64_t> &b) const {
    if (b.size() != equations_) {
        throw Error(ErrorCode::SizeMismatch, "right-hand side must have one entry per equation");
    }
    std::vector<uint64_t> target(equations_ + unknowns_);
    for (size_t e = 0; e < equations_; e++) {
        target[e] = (0 - b[e]) & mask_;
    }
    for (size_t r = 0; r < form_.size(); r++) {
        size_t p = pivot_cols_[r];
        unsigned v = pivot_vals_[r];
        uint64_t value = target[p];
        if (value == 0) {
            continue;
        }
        if (p < equations_ && (value & ((uint64_t{1} << v) - 1)) != 0) {
            return std::nullopt;
        }
        row_axpy(target, form_[r], value >> v, p, mask_);
    }
    for (size_t e = 0; e < equations_; e++) {
        if (target[e] != 0) {
            return std::nullopt;
        }
    }
    return std::vector<uint64_t>(target.begin() + equations_, target.end());
}

std::optional<std::vector<uint64_t>> howell_solve(
    const ModMatrix &a, size_t num_unknowns, const std::vector<uint64_t> &b, unsigned level) {
    return HowellSolver(a, num_unknowns, level).solve(b);
}

}  // namespace lulc
