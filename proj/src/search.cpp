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

#include "qcanon/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "qcanon/clifford.hpp"
#include "qcanon/tiling.hpp"

namespace qcanon {

namespace {

// Widest axis radius still answered from the indexes; beyond it the whole bucket is cheaper.
constexpr double kMaxIndexedRadius = 1.0;
constexpr double kRadiusSlack = 1e-9;

Quat positive(Quat q) {
    if (q.w() < 0) q.coeffs() = -q.coeffs();
    return q;
}

struct Best {
    bool found = false;
    int t = 0;
    double d = 0.0;
    std::uint64_t bits = 0;
    const CatalogEntry* entry = nullptr;
    CliffordElement g;
    CliffordElement h;

    bool improves(const CatalogEntry& e, double dd) const {
        if (!found) return true;
        if (e.t != t) return e.t < t;
        if (dd != d) return dd < d;
        return blocks_less(e.bits, bits);
    }
    void take(const CatalogEntry& e, double dd, CliffordElement gg, CliffordElement hh) {
        found = true;
        t = e.t;
        d = dd;
        bits = e.bits;
        entry = &e;
        g = gg;
        h = hh;
    }
};

ApproxResult assemble(const Best& best, const Quat& target, double epsilon) {
    ApproxResult r;
    if (!best.found) return r;
    const auto& grp = CliffordGroup::instance();
    // c ~ g . U . h . g^-1  =>  U ~ g^-1 . c . g . h^-1
    r.circuit = CosetForm{grp.inverse(best.g), CanonicalCircuit(best.entry->circuit()),
                          grp.mul(best.g, grp.inverse(best.h))};
    r.t_count = best.t;
    r.dist = dist(evaluate_numeric(r.circuit), target);
    r.found = r.dist < epsilon;
    return r;
}

void add_lists(const Tiling& tiling, const Eigen::Vector3d& a, double radius, TileQuery& q) {
    const TileLocation loc = tile_of(a);
    q.faces.push_back(loc.face);
    if (loc.boundary_dist < 2 * radius) {
        for (int e = 0; e < Tiling::kEdges; ++e) {
            const auto& edge = tiling.edge(e);
            if (arc_segment_distance(a, tiling.vertex(edge.a), tiling.vertex(edge.b)) < 2 * radius) {
                q.edges.push_back(e);
            }
        }
    }
    if (loc.vertex_dist < radius) {
        for (int v = 0; v < Tiling::kVertices; ++v) {
            if (arc_distance(a, tiling.vertex(v)) < radius) q.vertices.push_back(v);
        }
    }
}

template <class Visit>
void search_target(const CosetTarget& ct, double epsilon, const Catalog& db, const std::vector<std::size_t>& levels,
                   SearchStats* stats, Visit&& visit) {
    const TileQuery query = make_tile_query(ct.q, epsilon);
    for (std::size_t li : levels) {
        const TraceBucket& bucket = db.buckets()[li];
        const auto cands = scan_tile(bucket, query);
        if (stats) {
            ++stats->buckets_visited;
            stats->candidates += cands.size();
            if (query.full_scan || bucket.degenerate()) ++stats->full_scans;
        }
        for (std::uint32_t i : cands) visit(bucket.entries[i], ct);
    }
}

}  // namespace

std::vector<CosetTarget> coset_targets(const Quat& target) {
    const auto& grp = CliffordGroup::instance();
    std::vector<CosetTarget> out;
    out.reserve(kCliffordOrder * kCliffordOrder);
    for (std::uint8_t hi = 0; hi < kCliffordOrder; ++hi) {
        const CliffordElement h(hi);
        const Quat uh = target * grp.quaternion(h);
        for (std::uint8_t gi = 0; gi < kCliffordOrder; ++gi) {
            const CliffordElement g(gi);
            const Quat& qg = grp.quaternion(g);
            const Quat q = positive((qg * uh * qg.conjugate()).normalized());
            const bool dup = std::any_of(out.begin(), out.end(), [&](const CosetTarget& o) {
                return std::min((o.q.coeffs() - q.coeffs()).squaredNorm(), (o.q.coeffs() + q.coeffs()).squaredNorm()) <
                       1e-24;
            });
            if (!dup) out.push_back({q, g, h});
        }
    }
    return out;
}

std::vector<std::size_t> candidate_levels(double target_trace, double epsilon, const Catalog& db) {
    const double window = 4.0 * epsilon + kBucketTol;
    const auto& buckets = db.buckets();
    auto it = std::lower_bound(buckets.begin(), buckets.end(), target_trace - window,
                               [](const TraceBucket& b, double v) { return b.key < v; });
    std::vector<std::size_t> out;
    for (; it != buckets.end() && it->key < target_trace + window; ++it) {
        if (std::abs(it->key - target_trace) < window) out.push_back(static_cast<std::size_t>(it - buckets.begin()));
    }
    return out;
}

TileQuery make_tile_query(const Quat& target, double epsilon) {
    TileQuery q;
    const Quat u = positive(target.normalized());
    const double s = u.vec().norm();
    const double chord = std::sqrt(2.0) * epsilon;
    if (s <= chord * (1 + 1e-9)) {
        q.full_scan = true;
        return q;
    }
    q.radius = std::asin(chord / s) + kRadiusSlack;
    if (q.radius > kMaxIndexedRadius) {
        q.full_scan = true;
        return q;
    }
    const Tiling& tiling = Tiling::instance();
    const Eigen::Vector3d a = u.vec() / s;
    add_lists(tiling, a, q.radius, q);
    if (u.w() < chord) add_lists(tiling, -a, q.radius, q);
    for (auto* v : {&q.faces, &q.edges, &q.vertices}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    return q;
}

std::vector<std::uint32_t> scan_tile(const TraceBucket& bucket, const TileQuery& query) {
    std::vector<std::uint32_t> out;
    if (query.full_scan || bucket.degenerate()) {
        out.resize(bucket.entries.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint32_t>(i);
        return out;
    }
    for (int f : query.faces) out.insert(out.end(), bucket.face_idx[f].begin(), bucket.face_idx[f].end());
    for (int e : query.edges) out.insert(out.end(), bucket.edge_idx[e].begin(), bucket.edge_idx[e].end());
    for (int v : query.vertices) out.insert(out.end(), bucket.vertex_idx[v].begin(), bucket.vertex_idx[v].end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint32_t> scan_tile(const TraceBucket& bucket, const Quat& target, double epsilon) {
    return scan_tile(bucket, make_tile_query(target, epsilon));
}

ApproxResult approximate(const Quat& target, double epsilon, const Catalog& db, SearchStats* stats) {
    const Quat u = positive(target.normalized());
    const auto targets = coset_targets(u);
    if (stats) stats->coset_targets += targets.size();
    Best best;
    for (const CosetTarget& ct : targets) {
        const auto levels = candidate_levels(abs_trace(ct.q), epsilon, db);
        if (levels.empty()) continue;
        search_target(ct, epsilon, db, levels, stats, [&](const CatalogEntry& e, const CosetTarget& t) {
            if (best.found && e.t > best.t) return;
            const double d = dist(e.quaternion(), t.q);
            if (d < epsilon && best.improves(e, d)) best.take(e, d, t.g, t.h);
        });
    }
    return assemble(best, u, epsilon);
}

ApproxResult approximate(const ExactUnitary& target, double epsilon, const Catalog& db, SearchStats* stats) {
    return approximate(to_quaternion(target), epsilon, db, stats);
}

ApproxResult approximate_linear(const Quat& target, double epsilon, const Catalog& db) {
    const Quat u = positive(target.normalized());
    Best best;
    for (const CosetTarget& ct : coset_targets(u)) {
        for (const auto& bucket : db.buckets()) {
            for (const auto& e : bucket.entries) {
                const double d = dist(e.quaternion(), ct.q);
                if (d < epsilon && best.improves(e, d)) best.take(e, d, ct.g, ct.h);
            }
        }
    }
    return assemble(best, u, epsilon);
}

ApproxResult nearest(const Quat& target, const Catalog& db, double initial_epsilon) {
    const Quat u = positive(target.normalized());
    const auto targets = coset_targets(u);
    for (double eps = initial_epsilon;; eps *= 2) {
        Best best;
        for (const CosetTarget& ct : targets) {
            const auto levels = candidate_levels(abs_trace(ct.q), eps, db);
            if (levels.empty()) continue;
            search_target(ct, eps, db, levels, nullptr, [&](const CatalogEntry& e, const CosetTarget& t) {
                const double d = dist(e.quaternion(), t.q);
                if (d >= eps) return;
                const bool better = !best.found || d < best.d || (d == best.d && (e.t < best.t || (e.t == best.t && blocks_less(e.bits, best.bits))));
                if (better) best.take(e, d, t.g, t.h);
            });
        }
        // dist never exceeds 1, so eps > 1 always finds the identity at worst.
        if (best.found || eps > 1.0) {
            ApproxResult r = assemble(best, u, std::numeric_limits<double>::infinity());
            return r;
        }
    }
}

}  // namespace qcanon
