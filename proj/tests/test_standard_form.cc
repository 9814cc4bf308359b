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

#include <cmath>

#include "lulc/error.h"
#include "lulc/quadratic_form.h"
#include "lulc/standard_form.h"
#include "test_util.h"

using namespace lulc;
using namespace lulc::testing;

namespace {

QuadraticForm random_form(size_t m, std::mt19937_64 &rng) {
    QuadraticForm q(m);
    for (size_t i = 0; i < m; i++) {
        q.set_lambda(i, rng() & 1);
        for (size_t j = i + 1; j < m; j++) {
            q.set_theta(i, j, rng() & 1);
        }
    }
    return q;
}

// Straight from the definition, no masks.
bool eval_by_definition(const QuadraticForm &q, const BitVec &x) {
    bool v = false;
    for (size_t i = 0; i < q.dimension(); i++) {
        v ^= q.lambda().get(i) && x.get(i);
        for (size_t j = i + 1; j < q.dimension(); j++) {
            v ^= q.theta(i, j) && x.get(i) && x.get(j);
        }
    }
    return v;
}

// The amplitude formula evaluated point by point.
std::vector<Complex> amplitudes_by_definition(const StandardForm &sf) {
    size_t n = sf.num_qubits(), k = sf.rank();
    std::vector<Complex> amps(size_t{1} << n);
    double scale = std::pow(2.0, -double(k) / 2);
    for (uint64_t c = 0; c < (uint64_t{1} << k); c++) {
        BitVec coeffs = BitVec::from_mask(k, c);
        BitVec x = sf.t ^ sf.basis.combine_rows(coeffs);
        int exponent = (sf.mu.dot(coeffs) ? 1 : 0) + (sf.q.evaluate(coeffs) ? 2 : 0);
        amps[basis_index(x)] = scale * std::pow(Complex{0, 1}, exponent);
    }
    return amps;
}

StateVector from_definition(const StandardForm &sf) {
    return StateVector(sf.num_qubits(), amplitudes_by_definition(sf));
}

}  // namespace

TEST(QuadraticForm, evaluation_examples) {
    QuadraticForm q(2);
    q.set_theta(0, 1, true);
    EXPECT_TRUE(q.evaluate(BitVec::from_string("11")));
    EXPECT_FALSE(q.evaluate(BitVec::from_string("10")));
    EXPECT_FALSE(QuadraticForm(3).evaluate(BitVec::from_string("111")));
    EXPECT_THROW(QuadraticForm(BitMatrix::from_strings({"00", "10"}, 2), BitVec(2)), Error);
}

TEST(QuadraticForm, evaluation_agrees_with_definition) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; trial++) {
        size_t m = rng() % 7;
        QuadraticForm q = random_form(m, rng);
        auto table = q.truth_table();
        for (uint64_t c = 0; c < (uint64_t{1} << m); c++) {
            BitVec x = BitVec::from_mask(m, c);
            EXPECT_EQ(q.evaluate(x), eval_by_definition(q, x));
            EXPECT_EQ(q.evaluate_mask(c), eval_by_definition(q, x));
            EXPECT_EQ(table[c], eval_by_definition(q, x));
        }
    }
}

TEST(QuadraticForm, polarization_is_bilinear) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; trial++) {
        size_t m = 1 + rng() % 6;
        QuadraticForm q = random_form(m, rng);
        BitVec x = random_bits(m, rng), y = random_bits(m, rng);
        bool lhs = q.evaluate(x ^ y) ^ q.evaluate(x) ^ q.evaluate(y) ^ q.evaluate(BitVec(m));
        bool pairing = false;
        for (size_t i = 0; i < m; i++) {
            for (size_t j = i + 1; j < m; j++) {
                pairing ^= q.theta(i, j) && ((x.get(i) && y.get(j)) ^ (x.get(j) && y.get(i)));
            }
        }
        EXPECT_EQ(lhs, pairing);
    }
}

TEST(QuadraticForm, fit_interpolate_and_index) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 50; trial++) {
        size_t m = rng() % 6;
        QuadraticForm q = random_form(m, rng);
        EXPECT_EQ(QuadraticForm::interpolate(m, q.truth_table()), q);
        auto fit = fit_quadratic_form(m, q.truth_table());
        ASSERT_TRUE(fit);
        EXPECT_EQ(*fit, q);
    }
    // x1 x2 x3 is cubic.
    std::vector<uint8_t> cubic(8, 0);
    cubic[7] = 1;
    EXPECT_FALSE(fit_quadratic_form(3, cubic));

    std::set<std::vector<uint8_t>> tables;
    for (uint64_t i = 0; i < QuadraticForm::count(3); i++) {
        tables.insert(QuadraticForm::from_index(3, i).truth_table());
    }
    EXPECT_EQ(tables.size(), QuadraticForm::count(3));
    EXPECT_EQ(QuadraticForm::from_index(3, 0b001101).lambda().str(), "101");
}

TEST(QuadraticForm, restriction_and_lift) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 1 + rng() % 6;
        BitMatrix basis = row_basis(random_matrix(rng() % (n + 1), n, rng));
        size_t k = basis.rows();
        QuadraticForm ambient = random_form(n, rng);
        QuadraticForm coords = restrict_to_subspace(ambient, basis);
        QuadraticForm lifted = lift_to_ambient(coords, basis);
        for (uint64_t c = 0; c < (uint64_t{1} << k); c++) {
            BitVec cv = BitVec::from_mask(k, c);
            BitVec y = basis.combine_rows(cv);
            EXPECT_EQ(coords.evaluate(cv), eval_by_definition(ambient, y));
            EXPECT_EQ(lifted.evaluate(y), coords.evaluate(cv));
        }
        EXPECT_EQ((coords + coords), QuadraticForm(k));
    }
}

TEST(StandardForm, extract_examples) {
    const double r = 1 / std::sqrt(2.0);
    auto epr = extract(StateVector(2, {r, 0, 0, r}));
    EXPECT_EQ(epr.basis.to_strings(), (std::vector<std::string>{"11"}));
    EXPECT_EQ(epr.t.str(), "00");
    EXPECT_EQ(epr.mu.str(), "0");
    EXPECT_EQ(epr.q, QuadraticForm(1));

    auto one = extract(StateVector::basis_state(1, 1));
    EXPECT_EQ(one.rank(), 0u);
    EXPECT_EQ(one.t.str(), "1");

    auto cz = extract(StateVector(2, {0.5, 0.5, 0.5, -0.5}));
    EXPECT_EQ(cz.basis, BitMatrix::identity(2));
    EXPECT_EQ(cz.t.str(), "00");
    EXPECT_EQ(cz.mu.str(), "00");
    EXPECT_TRUE(cz.q.theta(0, 1));
    EXPECT_EQ(cz.q.lambda().str(), "00");
}

TEST(StandardForm, extract_rejects_non_stabilizer_states) {
    auto code_of = [](const StateVector &psi) {
        try {
            extract(psi);
        } catch (const Error &e) {
            return e.code();
        }
        return ErrorCode::InternalInconsistency;
    };
    EXPECT_EQ(code_of(StateVector::normalized(2, {1, 1, 1, 0})), ErrorCode::SupportNotAffine);
    EXPECT_EQ(code_of(StateVector::normalized(1, {1, 2})), ErrorCode::AmplitudeNotFourthRootTimesConstant);
    EXPECT_EQ(code_of(StateVector::normalized(1, {1, std::polar(1.0, 0.3)})),
              ErrorCode::AmplitudeNotFourthRootTimesConstant);
    // Phases i^{x1 x2 x3}: fourth roots everywhere but not quadratic.
    std::vector<Complex> amps(8, 1);
    amps[7] = -1;
    EXPECT_EQ(code_of(StateVector::normalized(3, amps)), ErrorCode::InconsistentQuadraticFit);
}

TEST(StandardForm, synthesize_examples) {
    StandardForm trivial{BitMatrix(0, 3), BitVec(3), BitVec(0), QuadraticForm(0)};
    EXPECT_NEAR(std::abs(synthesize(trivial)[0] - 1.0), 0, 1e-15);

    QuadraticForm q(2);
    q.set_theta(0, 1, true);
    StandardForm cz{BitMatrix::identity(2), BitVec(2), BitVec(2), q};
    auto psi = synthesize(cz);
    std::vector<Complex> expected{0.5, 0.5, 0.5, -0.5};
    for (size_t i = 0; i < 4; i++) {
        EXPECT_NEAR(std::abs(psi[i] - expected[i]), 0, 1e-15);
    }
}

TEST(StandardForm, synthesize_matches_definition_and_round_trips) {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + rng() % 6;
        StandardForm sf = random_standard_form(n, rng() % (n + 1), rng);
        EXPECT_NO_THROW(sf.check());
        auto psi = synthesize(sf);
        EXPECT_LT(distance_up_to_phase(psi, from_definition(sf)), 1e-12);
        EXPECT_EQ(extract(psi), sf);
    }
}

TEST(StandardForm, extract_accepts_every_stabilizer_state) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 60; trial++) {
        size_t n = 1 + rng() % 6;
        auto psi = synthesize_state(random_stabilizer_group(n, n, rng));
        auto sf = extract(psi);
        EXPECT_LT(distance_up_to_phase(synthesize(sf), psi), 1e-10);
    }
}

TEST(StandardForm, standardize_trivial) {
    std::mt19937_64 rng(67);
    StandardForm sf = random_standard_form(4, 2, rng);
    sf.t = BitVec(4);
    sf.mu = BitVec(2);
    auto st = standardize(sf, BitVec(4));
    EXPECT_EQ(st.q_tilde, sf.q);
    EXPECT_LT(distance_up_to_phase(st.state, synthesize(sf)), 1e-12);
}

TEST(StandardForm, standardize_adds_cross_term) {
    // S = span{e1, e2}, d = (1,1): y1 y2 appears in q̃.
    StandardForm sf{BitMatrix::identity(2), BitVec(2), BitVec::from_string("11"), QuadraticForm(2)};
    auto st = standardize(sf, BitVec::from_string("11"));
    EXPECT_TRUE(st.q_tilde.theta(0, 1));
    EXPECT_EQ(extract(st.state).q, st.q_tilde);
}

TEST(StandardForm, standardize_matches_independent_correction) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 2 + rng() % 5;
        StandardForm sf = random_standard_form(n, 1 + rng() % n, rng);
        size_t k = sf.rank();
        // Any d solving dᵀ b_a = mu_a: particular solution plus a random kernel element.
        BitVec d = default_phase_vector(sf);
        BitMatrix ker = kernel(sf.basis);
        if (ker.rows() > 0) {
            d ^= ker.combine_rows(random_bits(ker.rows(), rng));
        }
        for (size_t a = 0; a < k; a++) {
            ASSERT_EQ(d.dot(sf.basis.row(a)), sf.mu.get(a));
        }
        auto st = standardize(sf, d);
        // q̃(c) = q(c) + C(|d ∧ y|, 2) mod 2 with y = Σ c_a b_a.
        for (uint64_t c = 0; c < (uint64_t{1} << k); c++) {
            BitVec cv = BitVec::from_mask(k, c);
            size_t w = (d & sf.basis.combine_rows(cv)).popcount();
            bool expected = sf.q.evaluate(cv) ^ (((w * (w - (w > 0))) / 2) & 1);
            EXPECT_EQ(st.q_tilde.evaluate(cv), expected);
        }
        // Apply T†(d) X(t) to the dense state directly.
        std::vector<Complex> moved(size_t{1} << n);
        auto psi = synthesize(sf);
        for (uint64_t x = 0; x < moved.size(); x++) {
            uint64_t target = x ^ basis_index(sf.t);
            size_t w = (basis_bits(n, target) & d).popcount();
            moved[target] = psi[x] * std::pow(Complex{0, -1}, int(w % 4));
        }
        EXPECT_LT(distance_up_to_phase(st.state, StateVector(n, moved)), 1e-12);
        auto back = extract(st.state);
        EXPECT_TRUE(back.t.none());
        EXPECT_TRUE(back.mu.none());
        EXPECT_EQ(back.q, st.q_tilde);
    }
}

TEST(StandardForm, standardize_rejects_bad_phase_vector) {
    StandardForm sf{BitMatrix::identity(2), BitVec(2), BitVec::from_string("10"), QuadraticForm(2)};
    EXPECT_THROW(standardize(sf, BitVec::from_string("01")), Error);
}
