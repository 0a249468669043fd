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

#include <random>

#include "qcanon/catalog.hpp"
#include "qcanon/clifford.hpp"
#include "qcanon/search.hpp"

namespace qcanon {
namespace {

Quat haar(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    return Quat(n(rng), n(rng), n(rng), n(rng)).normalized();
}

class SearchTest : public ::testing::Test {
protected:
    static void SetUpTestSuite() { db_ = new Catalog(Catalog::build(12, 1)); }
    static void TearDownTestSuite() { delete db_; }
    static Catalog* db_;
};
Catalog* SearchTest::db_ = nullptr;

TEST_F(SearchTest, MemberLookup) {
    for (const auto& c : enumerate_canonical(12)) {
        const ApproxResult r = approximate(evaluate(c), 1e-9, *db_);
        ASSERT_TRUE(r.found);
        EXPECT_EQ(r.t_count, c.t_count());
        EXPECT_LT(r.dist, 1e-9);
        EXPECT_TRUE(psu2_equal(evaluate(r.circuit), evaluate(c)));
    }
}

TEST_F(SearchTest, CliffordTranslatesKeepTCount) {
    const auto& grp = CliffordGroup::instance();
    std::mt19937_64 rng(60);
    const auto circuits = enumerate_canonical(12);
    for (int i = 0; i < 200; ++i) {
        const auto& c = circuits[rng() % circuits.size()];
        const CliffordElement g1(static_cast<std::uint8_t>(rng() % 24));
        const CliffordElement g2(static_cast<std::uint8_t>(rng() % 24));
        const ExactUnitary u = grp.matrix(g1) * evaluate(c) * grp.matrix(g2);
        const ApproxResult r = approximate(u, 1e-9, *db_);
        ASSERT_TRUE(r.found);
        EXPECT_EQ(r.t_count, c.t_count());
        EXPECT_TRUE(psu2_equal(evaluate(r.circuit), u));
    }
}

TEST_F(SearchTest, CandidateLevels) {
    const auto& buckets = db_->buckets();
    const double key = buckets[buckets.size() / 2].key;
    const auto hit = candidate_levels(key, 1e-12, *db_);
    ASSERT_EQ(hit.size(), 1u);
    EXPECT_EQ(hit[0], buckets.size() / 2);
    // Midway between two adjacent levels with a window smaller than half the gap: nothing.
    const double mid = 0.5 * (buckets[10].key + buckets[11].key);
    const double gap = buckets[11].key - buckets[10].key;
    EXPECT_TRUE(candidate_levels(mid, gap / 16, *db_).empty());
}

TEST_F(SearchTest, TraceWindowIsFourEps) {
    const auto& buckets = db_->buckets();
    const double key = buckets[40].key;
    const double eps = 1e-3;
    const auto kept = candidate_levels(key + 4 * eps * (1 - 1e-6), eps, *db_);
    EXPECT_NE(std::find(kept.begin(), kept.end(), 40u), kept.end());
    const auto dropped = candidate_levels(key + 4 * eps * (1 + 1e-6) + kBucketTol, eps, *db_);
    EXPECT_EQ(std::find(dropped.begin(), dropped.end(), 40u), dropped.end());
}

TEST_F(SearchTest, TileScanMatchesBucketScan) {
    std::mt19937_64 rng(61);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        const Quat q = haar(rng);
        const double eps = std::pow(10.0, -1.0 - 2.0 * std::uniform_real_distribution<double>()(rng));
        const TileQuery query = make_tile_query(q, eps);
        for (std::size_t li : candidate_levels(abs_trace(q), eps, *db_)) {
            const TraceBucket& b = db_->buckets()[li];
            const auto cands = scan_tile(b, query);
            for (std::uint32_t k = 0; k < b.entries.size(); ++k) {
                if (dist(b.entries[k].quaternion(), q) < eps) {
                    ++checked;
                    EXPECT_TRUE(std::binary_search(cands.begin(), cands.end(), k));
                }
            }
        }
    }
    EXPECT_GT(checked, 0);
}

TEST_F(SearchTest, TileScanNearTraceTwo) {
    // Small rotations: the axis radius grows as the rotation angle shrinks.
    std::mt19937_64 rng(62);
    std::normal_distribution<double> n;
    for (int i = 0; i < 300; ++i) {
        const Eigen::Vector3d axis(n(rng), n(rng), n(rng));
        const Quat q = axis_rotation(axis, 0.05 + 0.3 * std::uniform_real_distribution<double>()(rng));
        const double eps = 0.02;
        const TileQuery query = make_tile_query(q, eps);
        for (const auto& b : db_->buckets()) {
            const auto cands = scan_tile(b, query);
            for (std::uint32_t k = 0; k < b.entries.size(); ++k) {
                if (dist(b.entries[k].quaternion(), q) < eps) {
                    EXPECT_TRUE(std::binary_search(cands.begin(), cands.end(), k));
                }
            }
        }
    }
}

TEST_F(SearchTest, DeepInsideTileUsesFaceListOnly) {
    const Quat q = axis_rotation(Eigen::Vector3d(0.45, 0.2, 0.6), 1.3);
    const TileQuery query = make_tile_query(q, 1e-4);
    EXPECT_FALSE(query.full_scan);
    EXPECT_EQ(query.faces.size(), 1u);
    EXPECT_TRUE(query.edges.empty());
    EXPECT_TRUE(query.vertices.empty());

    const Quat v = axis_rotation(Eigen::Vector3d(1, 1, 1), 1.3);
    const TileQuery at_vertex = make_tile_query(v, 1e-4);
    EXPECT_FALSE(at_vertex.vertices.empty());
    EXPECT_FALSE(at_vertex.edges.empty());
}

TEST_F(SearchTest, IndexedEqualsLinear) {
    std::mt19937_64 rng(63);
    for (int i = 0; i < 150; ++i) {
        const Quat q = haar(rng);
        for (double eps : {0.3, 0.1, 0.03}) {
            const ApproxResult a = approximate(q, eps, *db_);
            const ApproxResult l = approximate_linear(q, eps, *db_);
            ASSERT_EQ(a.found, l.found);
            if (!a.found) continue;
            EXPECT_EQ(a.t_count, l.t_count);
            EXPECT_NEAR(a.dist, l.dist, 1e-12);
            EXPECT_LT(a.dist, eps);
        }
    }
}

TEST_F(SearchTest, MonotoneInEps) {
    std::mt19937_64 rng(64);
    for (int i = 0; i < 100; ++i) {
        const Quat q = haar(rng);
        int last = 1000;
        for (double eps : {0.05, 0.1, 0.2, 0.4}) {
            const ApproxResult r = approximate(q, eps, *db_);
            if (!r.found) continue;
            EXPECT_LE(r.t_count, last);
            last = r.t_count;
        }
    }
}

TEST_F(SearchTest, CosetTargetsBounded) {
    std::mt19937_64 rng(65);
    EXPECT_EQ(coset_targets(haar(rng)).size(), 576u);
    // The identity's coset is the Clifford group itself.
    EXPECT_EQ(coset_targets(Quat::Identity()).size(), 24u);
}

TEST_F(SearchTest, NearestIsGlobalMinimum) {
    std::mt19937_64 rng(66);
    for (int i = 0; i < 30; ++i) {
        const Quat q = haar(rng);
        const ApproxResult r = nearest(q, *db_);
        ASSERT_TRUE(r.found);
        const ApproxResult l = approximate_linear(q, r.dist * (1 - 1e-9), *db_);
        EXPECT_FALSE(l.found);
    }
}

}  // namespace
}  // namespace qcanon
