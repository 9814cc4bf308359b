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

#include "lulc/search.h"

#include <algorithm>
#include <chrono>
#include <exception>
#include <random>
#include <thread>

#include "lulc/error.h"

namespace lulc {

namespace {

struct Tally {
    uint64_t subspaces = 0;
    uint64_t forms = 0;
    std::vector<uint64_t> level_counts;
    uint64_t complex_count = 0;
    std::vector<SearchHit> hits;
};

void examine(
    RepresentabilitySolver &solver,
    uint64_t subspace_index,
    uint64_t form_index,
    const QuadraticForm &coords,
    unsigned l_target,
    Tally &tally) {
    std::vector<uint8_t> values = coords.truth_table();
    const BitMatrix &basis = solver.basis();
    std::optional<PhaseAssignment> previous;
    std::optional<PhaseAssignment> at_target;
    bool any_level = false;
    for (unsigned l = 1; l <= l_target + 1; l++) {
        auto sol = solver.z2l(values, l);
        if (previous) {
            if (!sol || !satisfies_congruence(basis, values, previous->lifted())) {
                throw Error(
                    ErrorCode::InternalInconsistency,
                    "level " + std::to_string(l - 1) + " solution does not lift to level " + std::to_string(l) +
                        " (subspace " + std::to_string(subspace_index) + ", form " + std::to_string(form_index) + ")");
            }
        }
        if (sol) {
            tally.level_counts[l - 1]++;
            any_level = true;
        }
        if (l == l_target) {
            at_target = sol;
        }
        previous = std::move(sol);
    }
    bool complex = solver.complex_representable(values);
    if (any_level && !complex) {
        throw Error(
            ErrorCode::InternalInconsistency,
            "finite-level solution exists but the complex decision is false (subspace " +
                std::to_string(subspace_index) + ", form " + std::to_string(form_index) + ")");
    }
    if (complex) {
        tally.complex_count++;
    }
    if (!complex || at_target) {
        return;
    }
    // Candidate hit: re-verify both halves independently of the fast path.
    auto witness = solver.complex_witness(values);
    if (!witness) {
        throw Error(ErrorCode::InternalInconsistency, "complex decision true but no rational witness exists");
    }
    size_t n = basis.cols();
    if (n * l_target <= 24 && z2l_bruteforce(basis, values, l_target)) {
        throw Error(ErrorCode::InternalInconsistency, "ring solver missed a solution found by enumeration");
    }
    SearchHit hit;
    hit.subspace_index = subspace_index;
    hit.form_index = form_index;
    hit.basis = basis;
    hit.coords = coords;
    hit.witness = std::move(*witness);
    hit.dyadic_witness_found = n <= 5 && dyadic_oracle(basis, values, 8).has_value();
    tally.hits.push_back(std::move(hit));
}

void merge(Tally &into, Tally &&from) {
    into.subspaces += from.subspaces;
    into.forms += from.forms;
    for (size_t i = 0; i < into.level_counts.size(); i++) {
        into.level_counts[i] += from.level_counts[i];
    }
    into.complex_count += from.complex_count;
    for (auto &h : from.hits) {
        into.hits.push_back(std::move(h));
    }
}

template <typename Body>
void run_workers(unsigned workers, Body body, std::vector<Tally> &tallies) {
    if (workers <= 1) {
        body(0, tallies[0]);
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; w++) {
        threads.emplace_back([&, w] {
            try {
                body(w, tallies[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace

uint64_t total_subspaces(size_t n) {
    uint64_t total = 0;
    for (size_t k = 0; k <= n; k++) {
        total += gaussian_binomial(n, k);
    }
    return total;
}

std::pair<size_t, uint64_t> locate_subspace(size_t n, uint64_t global_index) {
    for (size_t k = 0; k <= n; k++) {
        uint64_t count = gaussian_binomial(n, k);
        if (global_index < count) {
            return {k, global_index};
        }
        global_index -= count;
    }
    throw Error(ErrorCode::InvalidArgument, "subspace index out of range");
}

SearchReport counterexample_search(const SearchOptions &options) {
    size_t n = options.n;
    if (options.exhaustive && n > kMaxExhaustiveQubits) {
        throw Error(
            ErrorCode::TooLarge, "exhaustive search is limited to n <= " + std::to_string(kMaxExhaustiveQubits));
    }
    if (!options.exhaustive && n > kMaxSampledQubits) {
        throw Error(ErrorCode::TooLarge, "sampled search is limited to n <= " + std::to_string(kMaxSampledQubits));
    }
    if (options.l_target == 0 || options.l_target + 1 > kMaxPhaseLevel) {
        throw Error(ErrorCode::InvalidArgument, "target level must be in [1, " + std::to_string(kMaxPhaseLevel - 1) + "]");
    }
    if (options.partition_count == 0 || options.partition_index >= options.partition_count) {
        throw Error(ErrorCode::InvalidArgument, "partition must be i/m with 0 <= i < m");
    }
    if (options.only_rank && *options.only_rank > n) {
        throw Error(ErrorCode::InvalidArgument, "subspace dimension exceeds n");
    }
    unsigned workers = std::max(1u, options.workers);
    auto start = std::chrono::steady_clock::now();

    std::vector<SubspaceEnumerator> enumerators;
    for (size_t k = 0; k <= n; k++) {
        enumerators.emplace_back(n, k);
    }
    Tally empty;
    empty.level_counts.assign(options.l_target + 1, 0);
    std::vector<Tally> tallies(workers, empty);
    uint64_t m = options.partition_count;
    uint64_t i0 = options.partition_index;

    if (options.exhaustive) {
        uint64_t total = total_subspaces(n);
        run_workers(
            workers,
            [&](unsigned w, Tally &tally) {
                for (uint64_t g = i0, slot = 0; g < total; g += m, slot++) {
                    if (slot % workers != w) {
                        continue;
                    }
                    auto [k, index] = locate_subspace(n, g);
                    if (options.only_rank && k != *options.only_rank) {
                        continue;
                    }
                    RepresentabilitySolver solver(enumerators[k].at(index));
                    tally.subspaces++;
                    uint64_t forms = QuadraticForm::count(k);
                    for (uint64_t f = 0; f < forms; f++) {
                        examine(solver, g, f, QuadraticForm::from_index(k, f), options.l_target, tally);
                        tally.forms++;
                    }
                }
            },
            tallies);
    } else {
        run_workers(
            workers,
            [&](unsigned w, Tally &tally) {
                for (uint64_t s = i0, slot = 0; s < options.samples; s += m, slot++) {
                    if (slot % workers != w) {
                        continue;
                    }
                    std::seed_seq seq{
                        static_cast<uint32_t>(options.seed),
                        static_cast<uint32_t>(options.seed >> 32),
                        static_cast<uint32_t>(s),
                        static_cast<uint32_t>(s >> 32)};
                    std::mt19937_64 rng(seq);
                    size_t k = options.only_rank ? *options.only_rank
                                                 : std::uniform_int_distribution<size_t>(0, n)(rng);
                    uint64_t index = std::uniform_int_distribution<uint64_t>(0, enumerators[k].size() - 1)(rng);
                    uint64_t g = index;
                    for (size_t kk = 0; kk < k; kk++) {
                        g += enumerators[kk].size();
                    }
                    RepresentabilitySolver solver(enumerators[k].at(index));
                    uint64_t bits = k + k * (k - 1) / 2;
                    uint64_t f = bits == 0 ? 0 : (rng() & (bits >= 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1));
                    tally.subspaces++;
                    examine(solver, g, f, QuadraticForm::from_index(k, f), options.l_target, tally);
                    tally.forms++;
                }
            },
            tallies);
    }

    Tally total = empty;
    for (auto &t : tallies) {
        merge(total, std::move(t));
    }
    std::sort(total.hits.begin(), total.hits.end(), [](const SearchHit &a, const SearchHit &b) {
        return std::tie(a.subspace_index, a.form_index) < std::tie(b.subspace_index, b.form_index);
    });
    SearchReport report;
    report.options = options;
    report.options.workers = workers;
    report.subspaces_examined = total.subspaces;
    report.forms_examined = total.forms;
    report.level_counts = std::move(total.level_counts);
    report.complex_count = total.complex_count;
    report.hits = std::move(total.hits);
    report.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace lulc
