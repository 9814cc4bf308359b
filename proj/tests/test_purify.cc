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
#include "lulc/purify.h"
#include "test_util.h"

using namespace lulc;
using namespace lulc::testing;

namespace {

std::vector<size_t> range(size_t n) {
    std::vector<size_t> out(n);
    for (size_t i = 0; i < n; i++) {
        out[i] = i;
    }
    return out;
}

void expect_maximal_extension(const StabilizerGroup &s, const std::vector<BitVec> &zs) {
    std::vector<PauliOp> gens = s.generators();
    for (const auto &z : zs) {
        gens.push_back(PauliOp::z_type(z));
    }
    auto big = StabilizerGroup::validate(s.num_qubits(), gens);
    EXPECT_TRUE(big.is_maximal());
}

}  // namespace

TEST(Purify, extend_examples) {
    auto zz = StabilizerGroup::from_strings(2, {"+ZZ"});
    auto zs = extend_to_maximal(zz);
    ASSERT_EQ(zs.size(), 1u);
    expect_maximal_extension(zz, zs);
    std::vector<PauliOp> gens{PauliOp::from_string("+ZZ"), PauliOp::z_type(zs[0])};
    auto psi = synthesize_state(StabilizerGroup::validate(2, gens));
    EXPECT_NEAR(std::abs(psi[0]), 1.0, 1e-12);

    EXPECT_TRUE(extend_to_maximal(StabilizerGroup::from_strings(2, {"+XX", "+ZZ"})).empty());

    auto xx = StabilizerGroup::from_strings(2, {"+XX"});
    auto zx = extend_to_maximal(xx);
    ASSERT_EQ(zx.size(), 1u);
    EXPECT_EQ(zx[0].str(), "11");
}

TEST(Purify, partner_examples) {
    auto z = StabilizerGroup::from_strings(1, {"+Z"});
    EXPECT_EQ(anticommuting_partner(z, 0).str(), "+X");
    auto s = StabilizerGroup::from_strings(2, {"+ZZ", "+XX"});
    PauliOp h = anticommuting_partner(s, 0);
    EXPECT_FALSE(h.commutes(s.generators()[0]));
    EXPECT_TRUE(h.commutes(s.generators()[1]));
}

TEST(Purify, partners_for_random_groups) {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 1 + rng() % 6;
        auto s = random_stabilizer_group(n, 1 + rng() % n, rng);
        for (size_t i = 0; i < s.rank(); i++) {
            PauliOp h = anticommuting_partner(s, i);
            EXPECT_TRUE(h.is_hermitian());
            for (size_t j = 0; j < s.rank(); j++) {
                // g h g† h† = -1 exactly when they anticommute.
                const PauliOp &g = s.generators()[j];
                PauliOp gh = g * h, hg = h * g;
                EXPECT_EQ(gh.z, hg.z);
                EXPECT_EQ(gh.phase_exp, (hg.phase_exp + (i == j ? 2 : 0)) % 4);
            }
        }
    }
}

TEST(Purify, trivial_code_gives_bell_pair) {
    auto p = purify(StabilizerGroup::trivial(1));
    EXPECT_EQ(p.num_ancillas(), 1u);
    auto psi = purified_state(p);
    auto rho = partial_trace(psi, {0});
    EXPECT_LT(rho.max_abs_difference(projector_from_group(StabilizerGroup::trivial(1))), 1e-12);
    const double r = 1 / std::sqrt(2.0);
    EXPECT_NEAR(overlap(psi, StateVector(2, {r, 0, 0, r})), 1.0, 1e-12);
}

TEST(Purify, maximal_code_needs_no_ancilla) {
    auto s = StabilizerGroup::from_strings(2, {"+XX", "+ZZ"});
    auto p = purify(s);
    EXPECT_EQ(p.num_ancillas(), 0u);
    EXPECT_EQ(p.big_state.generator_strings(), s.generator_strings());
}

TEST(Purify, random_codes) {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 1 + rng() % 4;
        auto s = random_stabilizer_group(n, rng() % (n + 1), rng);
        auto p = purify(s);
        size_t l = p.num_ancillas();
        EXPECT_EQ(l, n - s.rank());
        expect_maximal_extension(s, p.z_list);
        EXPECT_EQ(p.big_state.rank(), n + l);
        EXPECT_NO_THROW(StabilizerGroup::validate(n + l, p.big_state.generators()));

        auto rho = partial_trace(purified_state(p), range(n));
        EXPECT_LT(rho.max_abs_difference(projector_from_group(s)), 1e-10);

        std::vector<StateVector> sectors;
        for (uint64_t y = 0; y < (uint64_t{1} << l); y++) {
            sectors.push_back(synthesize_state(sector_group(p, BitVec::from_mask(l, y))));
        }
        for (size_t a = 0; a < sectors.size(); a++) {
            for (size_t b = 0; b < sectors.size(); b++) {
                EXPECT_NEAR(std::abs(inner_product(sectors[a], sectors[b])), a == b ? 1.0 : 0.0, 1e-10);
            }
        }
        // h_j moves sector y to y + e_j.
        for (size_t j = 0; j < l && !sectors.empty(); j++) {
            uint64_t y = rng() % sectors.size();
            auto moved = apply_pauli(p.h_list[j], sectors[y]);
            EXPECT_NEAR(overlap(moved, sectors[y ^ (uint64_t{1} << j)]), 1.0, 1e-10);
        }
    }
}
