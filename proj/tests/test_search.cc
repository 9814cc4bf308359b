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

#include <gtest/gtest.h>

#include "lulc/error.h"
#include "lulc/search.h"

using namespace lulc;

namespace {

SearchReport run(size_t n, uint64_t part = 0, uint64_t parts = 1, unsigned workers = 1) {
    SearchOptions o;
    o.n = n;
    o.partition_index = part;
    o.partition_count = parts;
    o.workers = workers;
    return counterexample_search(o);
}

}  // namespace

TEST(Search, subspace_indexing) {
    EXPECT_EQ(total_subspaces(3), 16u);
    EXPECT_EQ(total_subspaces(4), 67u);
    EXPECT_EQ(locate_subspace(3, 0), (std::pair<size_t, uint64_t>{0, 0}));
    EXPECT_EQ(locate_subspace(3, 1), (std::pair<size_t, uint64_t>{1, 0}));
    EXPECT_EQ(locate_subspace(3, 15), (std::pair<size_t, uint64_t>{3, 0}));
}

TEST(Search, exhaustive_counts_match_independent_enumeration) {
    for (size_t n = 1; n <= 3; n++) {
        auto r = run(n);
        uint64_t forms = 0;
        std::vector<uint64_t> levels(3, 0);
        uint64_t subspaces = 0;
        for (size_t k = 0; k <= n; k++) {
            SubspaceEnumerator e(n, k);
            subspaces += e.size();
            for (uint64_t i = 0; i < e.size(); i++) {
                for (uint64_t f = 0; f < QuadraticForm::count(k); f++) {
                    forms++;
                    auto values = QuadraticForm::from_index(k, f).truth_table();
                    for (unsigned l = 1; l <= 3; l++) {
                        levels[l - 1] += z2l_bruteforce(e.at(i), values, l).has_value();
                    }
                }
            }
        }
        EXPECT_EQ(r.subspaces_examined, subspaces);
        EXPECT_EQ(r.forms_examined, forms);
        EXPECT_EQ(r.level_counts, levels);
        EXPECT_GE(r.complex_count, levels[2]);
        EXPECT_TRUE(r.hits.empty());
    }
}

TEST(Search, partitions_and_workers_merge_to_the_same_counts) {
    auto whole = run(4);
    EXPECT_EQ(whole.forms_examined, 2295u);
    for (uint64_t parts : {2u, 3u, 5u}) {
        SearchReport merged;
        merged.level_counts.assign(3, 0);
        for (uint64_t p = 0; p < parts; p++) {
            auto r = run(4, p, parts);
            merged.subspaces_examined += r.subspaces_examined;
            merged.forms_examined += r.forms_examined;
            merged.complex_count += r.complex_count;
            for (size_t l = 0; l < 3; l++) {
                merged.level_counts[l] += r.level_counts[l];
            }
        }
        EXPECT_EQ(merged.subspaces_examined, whole.subspaces_examined);
        EXPECT_EQ(merged.forms_examined, whole.forms_examined);
        EXPECT_EQ(merged.complex_count, whole.complex_count);
        EXPECT_EQ(merged.level_counts, whole.level_counts);
    }
    auto threaded = run(4, 0, 1, 3);
    EXPECT_EQ(threaded.level_counts, whole.level_counts);
    EXPECT_EQ(threaded.complex_count, whole.complex_count);
}

TEST(Search, sampled_mode_is_reproducible) {
    SearchOptions o;
    o.n = 6;
    o.exhaustive = false;
    o.samples = 50;
    o.seed = 12;
    auto a = counterexample_search(o);
    o.workers = 2;
    auto b = counterexample_search(o);
    EXPECT_EQ(a.forms_examined, 50u);
    EXPECT_EQ(a.level_counts, b.level_counts);
    EXPECT_EQ(a.complex_count, b.complex_count);
}

TEST(Search, restricted_rank) {
    SearchOptions o;
    o.n = 4;
    o.only_rank = 2;
    auto r = counterexample_search(o);
    EXPECT_EQ(r.subspaces_examined, 35u);
    EXPECT_EQ(r.forms_examined, 35u * 8u);
}

TEST(Search, guards) {
    SearchOptions o;
    o.n = kMaxExhaustiveQubits + 1;
    EXPECT_THROW(counterexample_search(o), Error);
    o.n = 3;
    o.partition_index = 2;
    o.partition_count = 2;
    EXPECT_THROW(counterexample_search(o), Error);
}
