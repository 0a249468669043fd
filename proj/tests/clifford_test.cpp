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

#include <set>

#include "qcanon/clifford.hpp"
#include "qcanon/psu2.hpp"

namespace qcanon {
namespace {

const CliffordGroup& grp() { return CliffordGroup::instance(); }

CliffordElement G(int i) { return CliffordElement(static_cast<std::uint8_t>(i)); }

TEST(Clifford, ElementsAreDistinct) {
    for (int a = 0; a < kCliffordOrder; ++a) {
        EXPECT_TRUE(psu2_equal(grp().matrix(G(a)), evaluate_word(grp().word(G(a)))));
        for (int b = a + 1; b < kCliffordOrder; ++b) EXPECT_FALSE(psu2_equal(grp().matrix(G(a)), grp().matrix(G(b))));
    }
}

TEST(Clifford, MultiplicationExamples) {
    EXPECT_EQ(grp().mul(G(1), G(1)), G(0));
    EXPECT_EQ(grp().mul(G(4), G(4)), G(3));
    EXPECT_EQ(grp().mul(G(4), G(3)), G(5));
}

TEST(Clifford, GroupAxioms) {
    for (int a = 0; a < kCliffordOrder; ++a) {
        EXPECT_EQ(grp().mul(G(0), G(a)), G(a));
        EXPECT_EQ(grp().mul(G(a), G(0)), G(a));
        EXPECT_EQ(grp().mul(G(a), grp().inverse(G(a))), G(0));
        for (int b = 0; b < kCliffordOrder; ++b) {
            EXPECT_TRUE(psu2_equal(grp().matrix(grp().mul(G(a), G(b))), grp().matrix(G(a)) * grp().matrix(G(b))));
            for (int c = 0; c < kCliffordOrder; ++c) {
                ASSERT_EQ(grp().mul(grp().mul(G(a), G(b)), G(c)), grp().mul(G(a), grp().mul(G(b), G(c))));
            }
        }
    }
}

TEST(Clifford, CommutationExamples) {
    const CommutationRule r8 = grp().commute_through_t(G(8));
    EXPECT_EQ(r8.kind, CommutationKind::HshPrefix);
    EXPECT_EQ(r8.residual, G(2));
    const CommutationRule r3 = grp().commute_through_t(G(3));
    EXPECT_EQ(r3.kind, CommutationKind::Plain);
    EXPECT_EQ(r3.residual, G(3));
    const CommutationRule r1 = grp().commute_through_t(G(1));
    EXPECT_EQ(r1.kind, CommutationKind::HPrefix);
    EXPECT_EQ(r1.residual, G(0));
    const CommutationRule r18 = grp().commute_through_t(G(18));
    EXPECT_EQ(r18.kind, CommutationKind::HshPrefix);
    EXPECT_EQ(r18.residual, G(0));
    EXPECT_THROW(grp().commute_through_t(G(0)), std::invalid_argument);
}

TEST(Clifford, EveryCommutationRuleHolds) {
    const ExactUnitary t = ExactUnitary::gate(Gate::T);
    int plain = 0;
    for (int g = 1; g < kCliffordOrder; ++g) {
        const CommutationRule r = grp().commute_through_t(G(g));
        ExactUnitary prefix = ExactUnitary::identity();
        if (r.kind == CommutationKind::HPrefix) prefix = evaluate_word("H");
        if (r.kind == CommutationKind::HshPrefix) prefix = evaluate_word("HSH");
        EXPECT_TRUE(psu2_equal(grp().matrix(G(g)) * t, prefix * t * grp().matrix(r.residual))) << "G" << g;
        if (r.kind == CommutationKind::Plain) ++plain;
    }
    // The diagonal and antidiagonal Cliffords other than the identity pass T without a prefix.
    EXPECT_EQ(plain, 7);
}

TEST(Clifford, Classify) {
    EXPECT_EQ(classify(grp().matrix(G(7))), G(7));
    EXPECT_FALSE(classify(ExactUnitary::gate(Gate::T)).has_value());
    const auto shsh = classify(evaluate_word("SHSH"));
    ASSERT_TRUE(shsh.has_value());
    EXPECT_TRUE(psu2_equal(grp().matrix(*shsh), evaluate_word("SHSH")));
    EXPECT_EQ(grp().classify(to_quaternion(evaluate_word("HSH"))), G(18));
}

TEST(Clifford, OctahedralActionIsFaithful) {
    const std::array<Eigen::Vector3d, 6> vertices = {Eigen::Vector3d::UnitX(), -Eigen::Vector3d::UnitX(),
                                                     Eigen::Vector3d::UnitY(), -Eigen::Vector3d::UnitY(),
                                                     Eigen::Vector3d::UnitZ(), -Eigen::Vector3d::UnitZ()};
    std::set<std::vector<int>> perms;
    for (int g = 0; g < kCliffordOrder; ++g) {
        std::vector<int> perm;
        for (const auto& v : vertices) {
            const Eigen::Vector3d w = grp().rotation(G(g)) * v;
            int hit = -1;
            for (int k = 0; k < 6; ++k) {
                if ((w - vertices[k]).norm() < 1e-12) hit = k;
            }
            ASSERT_GE(hit, 0);
            perm.push_back(hit);
        }
        perms.insert(perm);
    }
    EXPECT_EQ(perms.size(), 24u);
}

}  // namespace
}  // namespace qcanon
