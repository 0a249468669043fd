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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qcanon/catalog.hpp"
#include "qcanon/sk.hpp"

namespace qcanon {
namespace {

Quat haar(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    return Quat(n(rng), n(rng), n(rng), n(rng)).normalized();
}

TEST(GroupCommutator, IdentityGivesIdentity) {
    const GroupCommutator gc = gc_decompose(Quat::Identity());
    EXPECT_LT(dist(gc.v, Quat::Identity()), 1e-12);
    EXPECT_LT(dist(gc.w, Quat::Identity()), 1e-12);
}

TEST(GroupCommutator, SmallZRotation) {
    const Quat delta = axis_rotation(Eigen::Vector3d::UnitZ(), 0.1);
    const GroupCommutator gc = gc_decompose(delta);
    EXPECT_LT(dist(group_commutator(gc.v, gc.w), delta), 1e-4);
}

TEST(GroupCommutator, FactorsHaveEqualAnglesAndPerpendicularAxes) {
    std::mt19937_64 rng(70);
    std::normal_distribution<double> n;
    for (int i = 0; i < 50; ++i) {
        const Quat delta = axis_rotation(Eigen::Vector3d(n(rng), n(rng), n(rng)), 0.4 * (i + 1) / 50.0);
        const GroupCommutator gc = gc_decompose(delta);
        EXPECT_NEAR(std::abs(gc.v.w()), std::abs(gc.w.w()), 1e-12);
        EXPECT_NEAR(gc.v.vec().normalized().dot(gc.w.vec().normalized()), 0.0, 1e-9);
        EXPECT_LT(dist(group_commutator(gc.v, gc.w), delta), 1e-12);
    }
}

TEST(GroupCommutator, FactorDistanceScalesAsSquareRoot) {
    for (double d : {1e-4, 1e-3, 1e-2}) {
        // dist(delta, I) = sin(theta / 4) * sqrt(2) for a rotation by theta.
        const double theta = 4.0 * std::asin(d / std::sqrt(2.0));
        const GroupCommutator gc = gc_decompose(axis_rotation(Eigen::Vector3d::UnitX(), theta));
        const double dv = dist(gc.v, Quat::Identity());
        EXPECT_GT(dv / std::sqrt(d), 0.2);
        EXPECT_LT(dv / std::sqrt(d), 2.0);
    }
}

TEST(GroupCommutator, RefusesLargeDelta) {
    EXPECT_THROW(gc_decompose(axis_rotation(Eigen::Vector3d::UnitY(), 3.0)), std::invalid_argument);
}

TEST(GroupCommutator, ErrorSlopeIsThreeHalves) {
    const SlopeFit fit = gc_error_slope(8, 16, 71);
    EXPECT_NEAR(fit.slope, 1.5, 0.1);
    EXPECT_EQ(fit.x.size(), fit.y.size());
}

class SkTest : public ::testing::Test {
protected:
    static void SetUpTestSuite() { db_ = new Catalog(Catalog::build(14, 1)); }
    static void TearDownTestSuite() { delete db_; }
    static Catalog* db_;
};
Catalog* SkTest::db_ = nullptr;

TEST_F(SkTest, ErrorShrinksWithDepth) {
    SkConfig cfg;
    cfg.db = db_;
    std::mt19937_64 rng(72);
    std::vector<double> mean(3, 0.0);
    const int n = 4;
    for (int i = 0; i < n; ++i) {
        const Quat target = haar(rng);
        const SkResult r = sk_approximate(target, 2, cfg);
        ASSERT_EQ(r.levels.size(), 3u);
        for (int k = 0; k < 3; ++k) mean[k] += r.levels[k].dist / n;
        EXPECT_EQ(r.shape_failures, 0u);
        EXPECT_NEAR(r.dist, dist(to_quaternion(evaluate(r.circuit)), target), 1e-9);
        EXPECT_EQ(r.t_count, r.circuit.t_count());
    }
    EXPECT_LT(mean[1], mean[0]);
    EXPECT_LT(mean[2], mean[1]);
}

TEST_F(SkTest, DepthZeroIsNearestEntry) {
    SkConfig cfg;
    cfg.db = db_;
    const Quat target = axis_rotation(Eigen::Vector3d(0.3, -0.5, 0.8), 1.1);
    const SkResult r = sk_approximate(target, 0, cfg);
    EXPECT_LE(r.t_count, 14);
    EXPECT_LT(r.dist, 0.2);
}

TEST_F(SkTest, DepthLimits) {
    SkConfig cfg;
    cfg.db = db_;
    const Quat target = axis_rotation(Eigen::Vector3d::UnitX(), 0.7);
    EXPECT_THROW(sk_approximate(target, 4, cfg), std::invalid_argument);
    cfg.max_depth = 6;
    EXPECT_THROW(sk_approximate(target, 5, cfg), std::invalid_argument);
    EXPECT_THROW(sk_approximate(target, -1, cfg), std::invalid_argument);
}

TEST_F(SkTest, TraceCsv) {
    SkConfig cfg;
    cfg.db = db_;
    const SkResult r = sk_approximate(axis_rotation(Eigen::Vector3d::UnitZ(), 0.3), 1, cfg);
    const std::string csv = sk_trace_csv(r);
    EXPECT_EQ(csv.rfind("depth,dist,t_count\n", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

}  // namespace
}  // namespace qcanon
