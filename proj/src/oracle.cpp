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

#include "qcanon/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "qcanon/adjoint.hpp"
#include "qcanon/catalog.hpp"

namespace qcanon {

namespace {

// Clifford elements as right-multiplication steps: element i = element parent[i] . gate[i].
struct CliffordTree {
    std::vector<int> order;
    std::array<int, kCliffordOrder> parent{};
    std::array<Gate, kCliffordOrder> gate{};
};

const CliffordTree& clifford_tree() {
    static const CliffordTree tree = [] {
        const auto& grp = CliffordGroup::instance();
        CliffordTree t;
        std::array<bool, kCliffordOrder> seen{};
        seen[0] = true;
        t.parent[0] = -1;
        t.order.push_back(0);
        for (std::size_t i = 0; i < t.order.size(); ++i) {
            const CliffordElement g(static_cast<std::uint8_t>(t.order[i]));
            for (auto [gate, elem] : {std::pair{Gate::H, cliff::H}, std::pair{Gate::S, cliff::S}}) {
                const int next = grp.mul(g, elem).idx;
                if (seen[next]) continue;
                seen[next] = true;
                t.parent[next] = t.order[i];
                t.gate[next] = gate;
                t.order.push_back(next);
            }
        }
        return t;
    }();
    return tree;
}

// x . g for all 24 g, by one column operation per element.
std::array<ExactUnitary, kCliffordOrder> right_translates(const ExactUnitary& x) {
    const CliffordTree& tree = clifford_tree();
    std::array<ExactUnitary, kCliffordOrder> out;
    out[0] = x;
    for (std::size_t i = 1; i < tree.order.size(); ++i) {
        const int g = tree.order[i];
        out[g] = out[tree.parent[g]];
        out[g].apply_right(tree.gate[g]);
    }
    return out;
}

std::array<ExactUnitary, kCliffordOrder> left_translates(const ExactUnitary& x) {
    const auto& grp = CliffordGroup::instance();
    std::array<ExactUnitary, kCliffordOrder> out;
    for (int g = 0; g < kCliffordOrder; ++g) out[g] = grp.matrix(CliffordElement(static_cast<std::uint8_t>(g))) * x;
    return out;
}

Quat positive(Quat q) {
    if (q.w() < 0) q.coeffs() = -q.coeffs();
    return q;
}

std::vector<std::vector<Quat>> level_quaternions(const ElementLevels& el) {
    std::vector<std::vector<Quat>> out(el.levels.size());
    for (std::size_t n = 0; n < el.levels.size(); ++n) {
        out[n].reserve(el.levels[n].size());
        for (const auto& u : el.levels[n]) out[n].push_back(positive(to_quaternion(u)));
    }
    return out;
}

}  // namespace

Psu2Key psu2_key(const ExactUnitary& u) {
    std::array<std::int64_t, 16> c{};
    for (int e = 0; e < 4; ++e) {
        for (int i = 0; i < 4; ++i) {
            const BigInt& v = u.num(e / 2, e % 2)[i];
            if (v != 0 && boost::multiprecision::msb(abs(v)) >= 62) throw std::overflow_error("psu2_key: coefficient too large");
            c[4 * e + i] = static_cast<std::int64_t>(v);
        }
    }
    // Among the eight phases w^j u, pick the lexicographically smallest coefficient list.
    Psu2Key best;
    best.k = u.k();
    for (int j = 0; j < 8; ++j) {
        if (j == 0 || c < best.c) best.c = c;
        for (int e = 0; e < 4; ++e) {
            // (a, b, c, d) . w = (-d, a, b, c)
            const std::int64_t d = c[4 * e + 3];
            c[4 * e + 3] = c[4 * e + 2];
            c[4 * e + 2] = c[4 * e + 1];
            c[4 * e + 1] = c[4 * e];
            c[4 * e] = -d;
        }
    }
    return best;
}

std::size_t Psu2KeyHash::operator()(const Psu2Key& key) const {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(key.k);
    for (std::int64_t v : key.c) {
        h ^= static_cast<std::uint64_t>(v) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

std::size_t ElementLevels::total() const {
    std::size_t n = 0;
    for (const auto& l : levels) n += l.size();
    return n;
}

ElementLevels bfs_elements(int t_max) {
    ElementLevels out;
    std::unordered_set<Psu2Key, Psu2KeyHash> seen;
    const auto& grp = CliffordGroup::instance();
    std::vector<ExactUnitary> level;
    for (int g = 0; g < kCliffordOrder; ++g) {
        const ExactUnitary& m = grp.matrix(CliffordElement(static_cast<std::uint8_t>(g)));
        if (seen.insert(psu2_key(m)).second) level.push_back(m);
    }
    out.levels.push_back(level);
    for (int n = 0; n < t_max; ++n) {
        std::vector<ExactUnitary> next;
        for (const ExactUnitary& x : out.levels.back()) {
            ExactUnitary xt = x;
            xt.apply_right(Gate::T);
            for (auto& y : right_translates(xt)) {
                if (seen.insert(psu2_key(y)).second) next.push_back(std::move(y));
            }
        }
        out.levels.push_back(std::move(next));
    }
    return out;
}

std::uint64_t CosetCount::cumulative(int t) const {
    std::uint64_t n = 0;
    for (int i = 0; i <= t && i < static_cast<int>(counts.size()); ++i) n += counts[i];
    return n;
}

CosetCount coset_count(int t_max) {
    const ElementLevels el = bfs_elements(t_max);
    CosetCount out;
    std::unordered_set<Psu2Key, Psu2KeyHash> marked;
    for (const auto& level : el.levels) {
        std::uint64_t cosets = 0;
        for (const auto& x : level) {
            if (marked.count(psu2_key(x))) continue;
            ++cosets;
            for (const auto& gx : left_translates(x)) {
                for (const auto& gxg : right_translates(gx)) marked.insert(psu2_key(gxg));
            }
        }
        out.counts.push_back(cosets);
    }
    return out;
}

MinTCountOracle::MinTCountOracle(int t_max)
    : t_max_(t_max), levels_(level_quaternions(bfs_elements((t_max + 1) / 2))) {}

std::optional<int> MinTCountOracle::min_tcount(const Quat& target, double epsilon) const {
    const Quat u = positive(target.normalized());
    for (int s = 0; s <= t_max_; ++s) {
        const int a = (s + 1) / 2;
        const int b = s / 2;
        // dist(x . y, u) < eps  <=>  dist(x, u . y^-1) < eps
        for (const Quat& y : levels_[b]) {
            const Quat z = u * y.conjugate();
            for (const Quat& x : levels_[a]) {
                if (dist(x, z) < epsilon) return s;
            }
        }
    }
    return std::nullopt;
}

std::optional<int> MinTCountOracle::min_tcount_scan(const Quat& target, double epsilon, int t_max) const {
    const Quat u = positive(target.normalized());
    const int top = std::min<int>(t_max, static_cast<int>(levels_.size()) - 1);
    for (int s = 0; s <= top; ++s) {
        for (const Quat& x : levels_[s]) {
            if (dist(x, u) < epsilon) return s;
        }
    }
    return std::nullopt;
}

std::optional<int> brute_min_tcount(const Quat& target, double epsilon, int t_max) {
    return MinTCountOracle(t_max).min_tcount(target, epsilon);
}

std::optional<int> brute_min_tcount_bfs(const Quat& target, double epsilon, int t_max) {
    const Quat u = positive(target.normalized());
    const auto quats = level_quaternions(bfs_elements(t_max));
    for (int s = 0; s <= t_max; ++s) {
        for (const Quat& x : quats[s]) {
            if (dist(x, u) < epsilon) return s;
        }
    }
    return std::nullopt;
}

Theorem1Report theorem1_audit(const std::vector<NormalizedCircuit>& circuits) {
    Theorem1Report rep;
    rep.circuits = circuits.size();
    rep.pairs = static_cast<std::uint64_t>(circuits.size()) * (circuits.size() - (circuits.empty() ? 0 : 1)) / 2;
    std::vector<ExactUnitary> values;
    std::unordered_map<Psu2Key, std::size_t, Psu2KeyHash> index;
    for (std::size_t i = 0; i < circuits.size(); ++i) {
        values.push_back(evaluate(circuits[i]));
        index.emplace(psu2_key(values.back()), i);
    }
    // Every pair is covered: c2 = g1 . c1 . g2 exactly when some translate of c1 has c2's key.
    for (std::size_t i = 0; i < circuits.size(); ++i) {
        const auto lefts = left_translates(values[i]);
        for (int g1 = 0; g1 < kCliffordOrder; ++g1) {
            const auto rights = right_translates(lefts[g1]);
            for (int g2 = 0; g2 < kCliffordOrder; ++g2) {
                ++rep.translates;
                const auto it = index.find(psu2_key(rights[g2]));
                if (it == index.end() || it->second == i) continue;
                if (rep.ok) {
                    rep.ok = false;
                    rep.witness = "G" + std::to_string(g1) + "." + serialize(circuits[i]) + ".G" +
                                  std::to_string(g2) + " = " + serialize(circuits[it->second]);
                }
            }
        }
    }
    return rep;
}

Theorem1Report theorem1_audit(int t_max) { return theorem1_audit(enumerate_canonical(t_max)); }

ParityReport parity_audit(std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> tdist(1, 40);
    std::bernoulli_distribution bit(0.5);
    ParityReport rep;
    for (std::size_t s = 0; s < samples; ++s) {
        const int t = tdist(rng);
        std::vector<bool> blocks(t);
        for (int i = 1; i < t; ++i) blocks[i] = bit(rng);
        const NormalizedCircuit c(std::move(blocks));
        const PauliVector p = adjoint_z(c);
        ++rep.samples;
        if (!p.satisfies_parity()) {
            ++rep.violations;
            if (rep.witness.empty()) rep.witness = serialize(c);
        }
        // Cross-check against c Z c^dagger from the matrix.
        const Eigen::Matrix3d r = positive(to_quaternion(evaluate(c))).toRotationMatrix();
        const auto comps = p.components();
        const Eigen::Vector3d v(comps[0].to_double(), comps[1].to_double(), comps[2].to_double());
        if ((v - r.col(2)).norm() > 1e-9) {
            ++rep.mismatches;
            if (rep.witness.empty()) rep.witness = serialize(c);
        }
    }
    return rep;
}

}  // namespace qcanon
