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

#include "lulc/equiv.h"
#include "lulc/error.h"
#include "lulc/stabilizer.h"
#include "test_util.h"

using namespace lulc;
using namespace lulc::testing;

namespace {

StabilizerGroup group(size_t n, std::vector<std::string> g) {
    return StabilizerGroup::from_strings(n, g);
}

ErrorCode code_of(size_t n, std::vector<std::string> g) {
    try {
        group(n, g);
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error";
    return ErrorCode::InternalInconsistency;
}

// Index of the subgroup of elements acting trivially on `qubit`, by enumeration.
unsigned brute_index(const StabilizerGroup &s, size_t qubit) {
    auto elements = s.elements();
    size_t inside = 0;
    for (const auto &g : elements) {
        inside += g.letter(qubit) == 'I';
    }
    return static_cast<unsigned>(elements.size() / inside);
}

}  // namespace

TEST(Stabilizer, validation) {
    EXPECT_EQ(group(2, {"+XX", "+ZZ"}).rank(), 2u);
    EXPECT_EQ(code_of(2, {"+XX", "+ZX"}), ErrorCode::NonCommuting);
    EXPECT_EQ(code_of(2, {"+XX", "+ZZ", "-YY"}), ErrorCode::DependentGenerators);
    EXPECT_EQ(code_of(2, {"+iXX"}), ErrorCode::NonHermitianSign);
    EXPECT_EQ(code_of(2, {"+XXX"}), ErrorCode::SizeMismatch);
    EXPECT_EQ(code_of(1, {"-I"}), ErrorCode::DependentGenerators);
    try {
        group(3, {"+XII", "+IZI", "+ZII"});
        FAIL();
    } catch (const NonCommutingError &e) {
        EXPECT_EQ(e.first, 0u);
        EXPECT_EQ(e.second, 2u);
    }
}

TEST(Stabilizer, elements) {
    auto epr = group(2, {"+XX", "+ZZ"});
    std::vector<std::string> names;
    for (const auto &g : epr.elements()) {
        names.push_back(g.str());
    }
    EXPECT_EQ(names, (std::vector<std::string>{"+II", "+XX", "+ZZ", "-YY"}));
    EXPECT_EQ(StabilizerGroup::trivial(3).elements().size(), 1u);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 1 + rng() % 5;
        auto s = random_stabilizer_group(n, rng() % (n + 1), rng);
        auto elements = s.elements();
        EXPECT_EQ(elements.size(), s.order());
        std::set<std::string> distinct;
        for (const auto &g : elements) {
            distinct.insert(g.str());
            EXPECT_TRUE(g.is_hermitian());
            for (const auto &h : elements) {
                EXPECT_TRUE(g.commutes(h));
            }
        }
        EXPECT_EQ(distinct.size(), elements.size());
    }
}

TEST(Stabilizer, subgroup_indices) {
    auto epr = group(2, {"+XX", "+ZZ"});
    EXPECT_EQ(subgroup_i(epr, 0).rank(), 0u);
    EXPECT_EQ(index_i(epr, 0), 4u);
    EXPECT_EQ(index_i(group(2, {"+ZZ"}), 0), 2u);
    EXPECT_EQ(index_i(group(2, {"+IZ"}), 0), 1u);
}

TEST(Stabilizer, pi_subgroup) {
    auto epr = pi_subgroup(group(2, {"+XX", "+ZZ"}));
    EXPECT_EQ(epr.pi.rank(), 0u);
    EXPECT_EQ(epr.pi_index, 4u);
    EXPECT_EQ(epr.which, PiCase::IndexFour);

    auto zz = pi_subgroup(group(2, {"+IZ", "+ZI"}));
    EXPECT_EQ(zz.pi_index, 1u);
    EXPECT_EQ(zz.which, PiCase::Equal);

    auto single = pi_subgroup(group(2, {"+ZZ"}));
    EXPECT_EQ(single.pi.rank(), 0u);
    EXPECT_EQ(single.pi_index, 2u);
    EXPECT_EQ(single.which, PiCase::IndexTwo);
}

TEST(Stabilizer, two_m_code_detection) {
    EXPECT_TRUE(detect_2m_code(group(2, {"+XX", "+ZZ"})));
    EXPECT_TRUE(detect_2m_code(group(4, {"+XXXX", "+ZZZZ"})));
    EXPECT_FALSE(detect_2m_code(group(2, {"+IZ"})));
    EXPECT_FALSE(detect_2m_code(group(3, {"+XXX", "+ZZI"})));
}

TEST(Stabilizer, invariants) {
    auto r = lu_invariants(group(2, {"+XX", "+ZZ"}));
    EXPECT_EQ(r.group_order, 4u);
    EXPECT_EQ(r.indices, (std::vector<unsigned>{4, 4}));
    EXPECT_EQ(r.pi_index, 4u);
    auto t = lu_invariants(StabilizerGroup::trivial(2));
    EXPECT_EQ(t.group_order, 1u);
    EXPECT_EQ(t.indices, (std::vector<unsigned>{1, 1}));
}

TEST(Stabilizer, indices_agree_with_enumeration) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + rng() % 6;
        auto s = random_stabilizer_group(n, rng() % (n + 1), rng);
        auto pi = pi_subgroup(s);
        for (size_t q = 0; q < n; q++) {
            unsigned idx = index_i(s, q);
            EXPECT_TRUE(idx == 1 || idx == 2 || idx == 4);
            EXPECT_EQ(idx, brute_index(s, q));
        }
        EXPECT_TRUE(pi.pi_index == 1 || pi.pi_index == 2 || pi.pi_index == 4);
        EXPECT_EQ(s.order(), pi.pi.order() * pi.pi_index);
        if (pi.pi_index == 4) {
            EXPECT_TRUE(detect_2m_code(s));
        }
    }
}

TEST(Stabilizer, invariants_are_local_clifford_invariant) {
    std::mt19937_64 rng(17);
    const auto &cliffords = clifford_group_1q();
    for (int trial = 0; trial < 40; trial++) {
        size_t n = 1 + rng() % 3;
        auto s = random_stabilizer_group(n, rng() % (n + 1), rng);
        // Conjugate every generator by a random local Clifford via dense
        // matrices, then read the Pauli back letter by letter.
        std::vector<std::string> conjugated;
        std::vector<size_t> choice(n);
        for (auto &c : choice) {
            c = rng() % cliffords.size();
        }
        for (const auto &g : s.generators()) {
            std::string text = g.str().substr(0, g.str().size() - n);
            int sign = text == "-" ? -1 : 1;
            std::string letters;
            for (size_t q = 0; q < n; q++) {
                Mat2 p = g.letter(q) == 'X' ? pauli_matrix(PauliAxis::X)
                         : g.letter(q) == 'Y' ? pauli_matrix(PauliAxis::Y)
                         : g.letter(q) == 'Z' ? pauli_matrix(PauliAxis::Z)
                                              : Mat2{1, 0, 0, 1};
                Mat2 u = cliffords[choice[q]];
                Mat2 image = mat_mul(mat_mul(u, p), adjoint(u));
                bool found = false;
                for (char c : std::string("IXYZ")) {
                    Mat2 candidate = c == 'X' ? pauli_matrix(PauliAxis::X)
                                     : c == 'Y' ? pauli_matrix(PauliAxis::Y)
                                     : c == 'Z' ? pauli_matrix(PauliAxis::Z)
                                                : Mat2{1, 0, 0, 1};
                    for (int sg : {1, -1}) {
                        Mat2 scaled = candidate;
                        for (auto &e : scaled) {
                            e *= double(sg);
                        }
                        if (max_abs_difference(image, scaled) < 1e-9) {
                            letters += c;
                            sign *= sg;
                            found = true;
                        }
                    }
                }
                ASSERT_TRUE(found);
            }
            conjugated.push_back((sign > 0 ? "+" : "-") + letters);
        }
        EXPECT_EQ(lu_invariants(s), lu_invariants(group(n, conjugated)));
    }
}

TEST(Stabilizer, random_groups_are_valid) {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 1 + rng() % 6, k = rng() % (n + 1);
        auto s = random_stabilizer_group(n, k, rng);
        EXPECT_EQ(s.rank(), k);
        EXPECT_NO_THROW(StabilizerGroup::validate(n, s.generators()));
    }
}
