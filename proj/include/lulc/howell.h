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

#ifndef LULC_HOWELL_H
#define LULC_HOWELL_H

#include <cstdint>
#include <optional>
#include <vector>

namespace lulc {

/// Matrices over Z/2^l with entries stored reduced into [0, 2^l).
using ModMatrix = std::vector<std::vector<uint64_t>>;

constexpr unsigned kMaxRingLevel = 62;

/// Howell form of the row span of `a` over Z/2^level: rows are ordered by
/// pivot column, every pivot is a power of two, entries above a pivot 2^v lie
/// in [0, 2^v), and for every j the rows whose first j entries vanish span the
/// submodule of the row span with that property. Zero rows are dropped.
ModMatrix howell_form(ModMatrix a, size_t cols, unsigned level);

/// Solves A x ≡ b (mod 2^level) for x, given A once and right-hand sides many
/// times. The returned solution is the remainder of the Howell reduction, which
/// is the same for every b with the same solution set.
class HowellSolver {
   public:
    HowellSolver(const ModMatrix &a, size_t num_unknowns, unsigned level);

    std::optional<std::vector<uint64_t>> solve(const std::vector<uint64_t> &b) const;

    unsigned level() const {
        return level_;
    }
    size_t num_equations() const {
        return equations_;
    }
    size_t num_unknowns() const {
        return unknowns_;
    }

   private:
    unsigned level_;
    uint64_t mask_;
    size_t equations_;
    size_t unknowns_;
    // Howell form of the rows (column i of A | e_i), one row per unknown.
    ModMatrix form_;
    std::vector<size_t> pivot_cols_;
    std::vector<unsigned> pivot_vals_;  // pivot = 2^pivot_vals_[r]
};

std::optional<std::vector<uint64_t>> howell_solve(
    const ModMatrix &a, size_t num_unknowns, const std::vector<uint64_t> &b, unsigned level);

}  // namespace lulc

#endif
