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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qcanon/catalog.hpp"
#include "qcanon/circuit.hpp"
#include "qcanon/exact_unitary.hpp"
#include "qcanon/psu2.hpp"

namespace qcanon {

struct ApproxResult {
    bool found = false;
    CosetForm circuit;  ///< g1 . c . g2 approximating the target
    int t_count = 0;
    double dist = 1.0;
};

struct SearchStats {
    std::size_t coset_targets = 0;
    std::size_t buckets_visited = 0;
    std::size_t candidates = 0;
    std::size_t full_scans = 0;
};

/// Indexes of buckets whose key lies within 4 eps (+ bucket tolerance) of the target trace.
std::vector<std::size_t> candidate_levels(double target_trace, double epsilon, const Catalog& db);

/// Which face, edge and vertex lists of a trace level can hold entries within eps of a target.
///
/// An entry within eps of target (cos a/2, sin a/2 . n) has its axis within
/// asin(sqrt(2) eps / sin(a/2)) of n (or of -n once cos(a/2) < sqrt(2) eps). Such an entry sits in
/// the face list of n's tile or in the edge list of an edge within twice that radius.
struct TileQuery {
    bool full_scan = false;
    double radius = 0.0;
    std::vector<int> faces;
    std::vector<int> edges;
    std::vector<int> vertices;
};

TileQuery make_tile_query(const Quat& target, double epsilon);

/// Candidate entry indexes of one bucket for the query, sorted and unique.
std::vector<std::uint32_t> scan_tile(const TraceBucket& bucket, const TileQuery& query);
std::vector<std::uint32_t> scan_tile(const TraceBucket& bucket, const Quat& target, double epsilon);

/// Minimum-T-count circuit within eps of the target over the Clifford double coset, using the
/// trace and tile indexes. Ties go to the smaller distance, then the smaller block sequence.
ApproxResult approximate(const Quat& target, double epsilon, const Catalog& db, SearchStats* stats = nullptr);
ApproxResult approximate(const ExactUnitary& target, double epsilon, const Catalog& db,
                         SearchStats* stats = nullptr);

/// Same query answered by scanning every entry against every coset target.
ApproxResult approximate_linear(const Quat& target, double epsilon, const Catalog& db);

/// Closest catalog circuit to the target regardless of T-count; eps doubles until the
/// indexed search finds a match, which is then the global minimum.
ApproxResult nearest(const Quat& target, const Catalog& db, double initial_epsilon = 1e-3);

/// The distinct conjugated coset targets g . U . h . g^-1, with (g, h) recorded; at most 576.
struct CosetTarget {
    Quat q;
    CliffordElement g;
    CliffordElement h;
};
std::vector<CosetTarget> coset_targets(const Quat& target);

}  // namespace qcanon
