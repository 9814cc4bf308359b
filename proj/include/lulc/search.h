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

#ifndef LULC_SEARCH_H
#define LULC_SEARCH_H

#include <cstdint>
#include <optional>
#include <vector>

#include "lulc/gf2.h"
#include "lulc/quadform.h"
#include "lulc/quadratic_form.h"

namespace lulc {

constexpr size_t kMaxExhaustiveQubits = 6;
constexpr size_t kMaxSampledQubits = 10;

struct SearchOptions {
    size_t n = 3;
    bool exhaustive = true;
    uint64_t samples = 1000;  // sampled mode only
    uint64_t seed = 1;
    unsigned l_target = 2;
    unsigned workers = 1;
    uint64_t partition_index = 0;
    uint64_t partition_count = 1;
    std::optional<size_t> only_rank;  // restrict to subspaces of this dimension
};

/// An instance that is complex-representable but has no solution at the
/// target level, after independent re-verification.
struct SearchHit {
    uint64_t subspace_index = 0;  // global index over all dimensions
    uint64_t form_index = 0;      // see QuadraticForm::from_index
    BitMatrix basis;
    QuadraticForm coords;
    std::vector<Rational> witness;
    bool dyadic_witness_found = false;
};

struct SearchReport {
    SearchOptions options;
    uint64_t subspaces_examined = 0;
    uint64_t forms_examined = 0;
    /// level_counts[l - 1] = instances with a solution at level l, for
    /// l = 1 .. l_target + 1.
    std::vector<uint64_t> level_counts;
    uint64_t complex_count = 0;
    std::vector<SearchHit> hits;  // sorted by (subspace_index, form_index)
    double wall_clock_seconds = 0;
};

/// Number of subspaces of GF(2)^n over all dimensions.
uint64_t total_subspaces(size_t n);
/// Splits a global subspace index into (dimension, index within dimension).
std::pair<size_t, uint64_t> locate_subspace(size_t n, uint64_t global_index);

/// Runs every instance through the level solvers and the complex decision,
/// asserting on each one that a level-l solution doubles to a level-(l+1)
/// solution and implies complex representability (InternalInconsistency
/// otherwise). Exhaustive mode visits every subspace of the partition and every
/// form on it; sampled mode draws `samples` random (subspace, form) pairs.
SearchReport counterexample_search(const SearchOptions &options);

}  // namespace lulc

#endif
