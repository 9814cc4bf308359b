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
#include "lulc/quadform.h"
#include "test_util.h"

using namespace lulc;
using namespace lulc::testing;

namespace {

PhaseSystem worked_example() {
    BitMatrix basis = BitMatrix::from_strings({"110", "011"}, 3);
    // f = +1, -1, +1, +1 on 0, b1, b2, b1 + b2.
    auto coords = fit_quadratic_form(2, {0, 1, 0, 0});
    return PhaseSystem::from_coordinates(basis, *coords);
}

// Σ b_i s_i mod 2^l against 2^{l-1} Q(s), evaluated directly on the ambient form.
bool congruence_by_definition(const PhaseSystem &ps, const PhaseAssignment &p) {
    uint64_t mod = uint64_t{1} << p.level;
    for (uint64_t c = 0; c < (uint64_t{1} << ps.rank()); c++) {
        BitVec s = ps.basis.combine_rows(BitVec::from_mask(ps.rank(), c));
        uint64_t sum = 0;
        for (size_t i = 0; i < s.size(); i++) {
            sum += s.get(i) ? p.b[i] : 0;
        }
        uint64_t target = ps.q.evaluate(s) ? mod / 2 : 0;
        if (sum % mod != target) {
            return false;
        }
    }
    return true;
}

template <typename F>
void for_all_instances(size_t n, F f) {
    for (size_t k = 0; k <= n; k++) {
        SubspaceEnumerator e(n, k);
        for (uint64_t i = 0; i < e.size(); i++) {
            BitMatrix basis = e.at(i);
            RepresentabilitySolver solver(basis);
            for (uint64_t form = 0; form < QuadraticForm::count(k); form++) {
                f(solver, QuadraticForm::from_index(k, form));
            }
        }
    }
}

}  // namespace

TEST(Quadform, worked_example_level_two) {
    PhaseSystem ps = worked_example();
    auto p = z2l_representable(ps, 2);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->b, (std::vector<uint64_t>{1, 1, 3}));
    auto phases = p->phases();
    EXPECT_NEAR(std::abs(phases[0] - Complex(0, 1)), 0, 1e-15);
    EXPECT_NEAR(std::abs(phases[1] - Complex(0, 1)), 0, 1e-15);
    EXPECT_NEAR(std::abs(phases[2] - Complex(0, -1)), 0, 1e-15);
    EXPECT_TRUE(congruence_by_definition(ps, *p));
    EXPECT_FALSE(z2l_representable(ps, 1));
}

TEST(Quadform, worked_example_complex) {
    PhaseSystem ps = worked_example();
    auto d = complex_representable(ps);
    EXPECT_TRUE(d.representable);
    ASSERT_TRUE(d.witness);
    EXPECT_TRUE(satisfies_real_congruence(ps.basis, ps.values(), *d.witness));
    EXPECT_TRUE(satisfies_real_congruence(ps.basis, ps.values(), {Rational(1, 2), Rational(1, 2), Rational(3, 2)}));
    EXPECT_FALSE(satisfies_real_congruence(ps.basis, ps.values(), {Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
}

TEST(Quadform, zero_form) {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 20; trial++) {
        size_t n = 1 + rng() % 5;
        BitMatrix basis = row_basis(random_matrix(1 + rng() % n, n, rng));
        PhaseSystem ps{basis, QuadraticForm(n)};
        for (unsigned l = 1; l <= 4; l++) {
            auto p = z2l_representable(ps, l);
            ASSERT_TRUE(p);
            EXPECT_EQ(p->b, std::vector<uint64_t>(n, 0));
        }
        auto d = complex_representable(ps);
        EXPECT_TRUE(d.representable);
        EXPECT_TRUE(satisfies_real_congruence(basis, ps.values(), *d.witness));
    }
}

TEST(Quadform, full_plane_product_is_not_representable) {
    QuadraticForm q(2);
    q.set_theta(0, 1, true);
    PhaseSystem ps{BitMatrix::identity(2), q};
    EXPECT_FALSE(complex_representable(ps).representable);
    EXPECT_FALSE(complex_representable(ps).witness);
    for (unsigned l = 1; l <= 5; l++) {
        EXPECT_FALSE(z2l_representable(ps, l));
    }
    // The kernel holds the zero element and e1 + e2 - (e1 + e2); the latter
    // pairs with Q values 0, 0, 1 to an odd total.
    RepresentabilitySolver solver(BitMatrix::identity(2));
    const IntMatrix &u = solver.left_kernel();
    EXPECT_EQ(u.rows(), 2u);
    auto values = ps.values();
    bool odd = false;
    for (size_t r = 0; r < u.rows(); r++) {
        BigInt uq = 0;
        for (size_t c = 0; c < u.cols(); c++) {
            uq += u.at(r, c) * values[c];
        }
        odd |= uq % 2 != 0;
    }
    EXPECT_TRUE(odd);
}

TEST(Quadform, rejects_bad_input) {
    RepresentabilitySolver solver(BitMatrix::identity(2));
    EXPECT_THROW(solver.z2l({1, 0, 0, 0}, 2), Error);
    EXPECT_THROW(solver.z2l({0, 0, 0, 0}, kMaxPhaseLevel + 1), Error);
    EXPECT_THROW(solver.z2l({0, 0}, 2), Error);
}

TEST(Quadform, level_solver_agrees_with_brute_force) {
    for (size_t n = 1; n <= 3; n++) {
        for_all_instances(n, [&](RepresentabilitySolver &solver, const QuadraticForm &coords) {
            auto values = coords.truth_table();
            for (unsigned l = 1; l <= 3; l++) {
                auto fast = solver.z2l(values, l);
                auto slow = z2l_bruteforce(solver.basis(), values, l);
                ASSERT_EQ(fast.has_value(), slow.has_value());
                if (fast) {
                    EXPECT_EQ(*fast, *slow);
                    EXPECT_TRUE(satisfies_congruence(solver.basis(), values, *fast));
                }
            }
        });
    }
}

TEST(Quadform, level_one_means_linear_coordinate_form) {
    for (size_t n = 1; n <= 4; n++) {
        for_all_instances(n, [&](RepresentabilitySolver &solver, const QuadraticForm &coords) {
            auto values = coords.truth_table();
            bool level1 = solver.z2l(values, 1).has_value();
            EXPECT_EQ(level1, coords.is_linear());
            EXPECT_EQ(level1, real_signs_bruteforce(solver.basis(), values));
        });
    }
}

TEST(Quadform, soundness_chain_and_witnesses) {
    for (size_t n = 1; n <= 4; n++) {
        for_all_instances(n, [&](RepresentabilitySolver &solver, const QuadraticForm &coords) {
            auto values = coords.truth_table();
            bool complex = solver.complex_representable(values);
            auto witness = solver.complex_witness(values);
            EXPECT_EQ(complex, witness.has_value());
            if (witness) {
                EXPECT_TRUE(satisfies_real_congruence(solver.basis(), values, *witness));
            }
            for (unsigned l = 1; l <= 3; l++) {
                auto p = solver.z2l(values, l);
                if (p) {
                    EXPECT_TRUE(satisfies_congruence(solver.basis(), values, p->lifted()));
                    EXPECT_TRUE(solver.z2l(values, l + 1).has_value());
                    EXPECT_TRUE(complex);
                }
            }
        });
    }
}

TEST(Quadform, identity_minor_shortcut_matches_smith_path) {
    for (size_t n = 1; n <= 4; n++) {
        for (size_t k = 0; k <= n; k++) {
            SubspaceEnumerator e(n, k);
            for (uint64_t i = 0; i < e.size(); i++) {
                RepresentabilitySolver fast(e.at(i));
                RepresentabilitySolver slow(e.at(i), true);
                EXPECT_EQ(fast.kernel_invariant_factors(), slow.kernel_invariant_factors());
                for (uint64_t form = 0; form < QuadraticForm::count(k); form++) {
                    auto values = QuadraticForm::from_index(k, form).truth_table();
                    EXPECT_EQ(fast.complex_representable(values), slow.complex_representable(values));
                    auto w = slow.complex_witness(values);
                    if (w) {
                        EXPECT_TRUE(satisfies_real_congruence(e.at(i), values, *w));
                    }
                }
            }
        }
    }
}

TEST(Quadform, left_kernel_annihilates_elements) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 20; trial++) {
        size_t n = 2 + rng() % 4;
        BitMatrix basis = row_basis(random_matrix(1 + rng() % n, n, rng));
        RepresentabilitySolver solver(basis);
        const IntMatrix &u = solver.left_kernel();
        auto elements = subspace_elements(basis);
        EXPECT_GE(u.rows() + n, elements.size());
        EXPECT_EQ(solver.kernel_invariant_factors().size(), u.rows());
        for (size_t r = 0; r < u.rows(); r++) {
            for (size_t i = 0; i < n; i++) {
                BigInt sum = 0;
                for (size_t c = 0; c < elements.size(); c++) {
                    sum += elements[c].get(i) ? u.at(r, c) : BigInt(0);
                }
                EXPECT_EQ(sum, 0);
            }
        }
    }
}

TEST(Quadform, dyadic_oracle_is_one_sided) {
    for (size_t n = 1; n <= 3; n++) {
        for_all_instances(n, [&](RepresentabilitySolver &solver, const QuadraticForm &coords) {
            auto values = coords.truth_table();
            auto a = dyadic_oracle(solver.basis(), values, 4);
            if (a) {
                EXPECT_TRUE(satisfies_real_congruence(solver.basis(), values, *a));
                EXPECT_TRUE(solver.complex_representable(values));
            }
        });
    }
}

TEST(Quadform, phase_system_coordinates) {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 1 + rng() % 5;
        BitMatrix basis = row_basis(random_matrix(1 + rng() % n, n, rng));
        size_t k = basis.rows();
        QuadraticForm coords = QuadraticForm::from_index(k, rng() % QuadraticForm::count(k));
        PhaseSystem ps = PhaseSystem::from_coordinates(basis, coords);
        EXPECT_EQ(ps.coordinate_form(), coords);
        EXPECT_EQ(ps.values(), coords.truth_table());
    }
}

TEST(Quadform, phase_assignment_helpers) {
    PhaseAssignment p{2, {1, 2, 3}};
    auto c = p.phases();
    EXPECT_NEAR(std::abs(c[1] + 1.0), 0, 1e-15);
    EXPECT_EQ(p.lifted(), (PhaseAssignment{3, {2, 4, 6}}));
}
