// Copyright 2026 The qcanon Authors
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
#include <random>

#include "qcanon/adjoint.hpp"
#include "qcanon/circuit.hpp"
#include "qcanon/psu2.hpp"

namespace qcanon {
namespace {

ExactUnitary random_word(std::mt19937_64& rng, int len) {
    ExactUnitary u = ExactUnitary::identity();
    for (int i = 0; i < len; ++i) u.apply_right(static_cast<Gate>(rng() % 3));
    return u;
}

TEST(Dist, Examples) {
    const auto h = ExactUnitary::gate(Gate::H);
    EXPECT_DOUBLE_EQ(dist(h, h), 0.0);
    EXPECT_NEAR(dist(ExactUnitary::identity(), h), 1.0, 1e-15);
}

TEST(Dist, MatchesTraceFormula) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        const auto u = random_word(rng, 20);
        const auto v = random_word(rng, 20);
        const double tr = std::abs((u.to_matrix() * v.to_matrix().adjoint()).trace());
        EXPECT_NEAR(dist(u, v), std::sqrt(std::max(0.0, (2.0 - tr) / 2.0)), 1e-7);
    }
}

TEST(Dist, TraceGapBound) {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 500; ++i) {
        const auto u = random_word(rng, 30);
        const auto v = random_word(rng, 30);
        EXPECT_LE(std::abs(abs_trace(u) - abs_trace(v)), 4 * dist(u, v) + 1e-12);
    }
}

TEST(Dist, TriangleInequality) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 500; ++i) {
        const Quat a = to_quaternion(random_word(rng, 25));
        const Quat b = to_quaternion(random_word(rng, 25));
        const Quat c = to_quaternion(random_word(rng, 25));
        EXPECT_LE(dist(a, c), dist(a, b) + dist(b, c) + 1e-12);
    }
}

TEST(Dist, AgreesWithExactEquality) {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 200; ++i) {
        const auto u = random_word(rng, 12);
        const auto v = (i % 2 == 0) ? u.times_phase(static_cast<int>(rng() % 8)) : random_word(rng, 12);
        EXPECT_EQ(psu2_equal(u, v), dist(u, v) < 1e-9);
    }
}

TEST(Quaternion, ProductIsHomomorphism) {
    std::mt19937_64 rng(25);
    for (int i = 0; i < 100; ++i) {
        const auto u = random_word(rng, 15);
        const auto v = random_word(rng, 15);
        EXPECT_LT(dist(to_quaternion(u) * to_quaternion(v), to_quaternion(u * v)), 1e-12);
        const Eigen::Matrix2cd m = to_matrix(to_quaternion(u));
        EXPECT_LT(dist(to_quaternion(m), to_quaternion(u)), 1e-12);
    }
}

TEST(BlochAxis, Examples) {
    const BlochAxis t = bloch_axis(ExactUnitary::gate(Gate::T));
    EXPECT_NEAR((t.n - Eigen::Vector3d(0, 0, 1)).norm(), 0.0, 1e-12);
    EXPECT_NEAR(t.theta, M_PI / 4, 1e-12);
    const BlochAxis h = bloch_axis(ExactUnitary::gate(Gate::H));
    EXPECT_NEAR((h.n - Eigen::Vector3d(1, 0, 1) / std::sqrt(2.0)).norm(), 0.0, 1e-12);
    EXPECT_DOUBLE_EQ(h.theta, M_PI);
    EXPECT_THROW(bloch_axis(ExactUnitary::identity()), std::domain_error);
}

TEST(BlochAxis, HalfTurnSignTieBreak) {
    // Y-like half turn: -n must map to the same axis.
    const Quat q(0.0, 0.0, -1.0, 0.0);
    const BlochAxis a = bloch_axis(q);
    EXPECT_NEAR((a.n - Eigen::Vector3d(0, 1, 0)).norm(), 0.0, 1e-12);
    EXPECT_EQ(canonical_axis_sign(Eigen::Vector3d(0, -0.6, 0.8)), Eigen::Vector3d(0, 0.6, -0.8));
}

TEST(BlochAxis, TraceConsistency) {
    std::mt19937_64 rng(26);
    for (int i = 0; i < 1000; ++i) {
        const auto u = random_word(rng, 1 + static_cast<int>(rng() % 40));
        if (abs_trace_sq(u) == Real2(4, 0, 0)) continue;
        const BlochAxis a = bloch_axis(u);
        EXPECT_GT(a.theta, 0.0);
        EXPECT_LE(a.theta, M_PI);
        EXPECT_NEAR(2 * std::abs(std::cos(a.theta / 2)), abs_trace(u), 1e-10);
        // The rotation image fixes the axis.
        EXPECT_LT((to_quaternion(u).toRotationMatrix() * a.n - a.n).norm(), 1e-10);
    }
}

TEST(AdjointZ, Examples) {
    const PauliVector th = adjoint_z(NormalizedCircuit::from_syllables("TH"));
    EXPECT_EQ(th.x0, 1);
    EXPECT_EQ(th.y0, 1);
    EXPECT_EQ(th.z0, 0);
    auto c = th.components();
    EXPECT_EQ(c[0], Real2(1, 0, 1));
    EXPECT_EQ(c[1], Real2(1, 0, 1));
    EXPECT_TRUE(c[2].is_zero());

    c = adjoint_z(NormalizedCircuit::from_syllables("SHTH")).components();
    EXPECT_EQ(c[0], Real2(1, 0, 1));
    EXPECT_TRUE(c[1].is_zero());
    EXPECT_EQ(c[2], Real2(1, 0, 1));
}

TEST(AdjointZ, TwoBlocksByUpdateRules) {
    // ad_TH(ad_TH(Z)) = ad_TH((X + Y)/sqrt2): x = (1 + 0)/2, y = (0 - 1)/2, z = 1/sqrt2.
    const PauliVector p = adjoint_z(NormalizedCircuit::from_syllables("THTH"));
    EXPECT_EQ(p.l, 2);
    EXPECT_TRUE(p.satisfies_parity());
    const auto c = p.components();
    EXPECT_EQ(c[0], Real2(1, 0, 2));
    EXPECT_EQ(c[1], Real2(-1, 0, 2));
    EXPECT_EQ(c[2], Real2(1, 0, 1));
}

TEST(AdjointZ, MatchesRotationOfZ) {
    std::mt19937_64 rng(27);
    for (int i = 0; i < 300; ++i) {
        std::vector<bool> blocks(1 + rng() % 30);
        for (std::size_t k = 0; k < blocks.size(); ++k) blocks[k] = rng() & 1;
        const NormalizedCircuit c(blocks);
        const auto comps = adjoint_z(c).components();
        const Eigen::Vector3d v(comps[0].to_double(), comps[1].to_double(), comps[2].to_double());
        const Eigen::Vector3d z = to_quaternion(evaluate(c)).toRotationMatrix().col(2);
        EXPECT_LT((v - z).norm(), 1e-9);
        if (!blocks[0]) {
            EXPECT_TRUE(adjoint_z(c).satisfies_parity());
        }
    }
}

}  // namespace
}  // namespace qcanon
