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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcanon/circuit.hpp"
#include "qcanon/clifford.hpp"
#include "qcanon/exact_unitary.hpp"
#include "qcanon/psu2.hpp"

namespace qcanon {

/// PSU(2) elements of the {H, T} group sorted by minimal T-count, found breadth first:
/// level 0 is the Clifford group, level n+1 the new elements among x . T . g for x in level n.
struct ElementLevels {
    std::vector<std::vector<ExactUnitary>> levels;

    std::size_t total() const;
};

ElementLevels bfs_elements(int t_max);

/// Number of Clifford double cosets per minimal T-count, from a breadth-first search with exact
/// deduplication. counts[t] is the number of cosets of minimal T-count exactly t.
struct CosetCount {
    std::vector<std::uint64_t> counts;
    std::uint64_t cumulative(int t) const;
};

CosetCount coset_count(int t_max);

/// Breadth-first levels kept as quaternions for repeated minimal-T-count queries up to t_max.
class MinTCountOracle {
public:
    explicit MinTCountOracle(int t_max);

    int t_max() const { return t_max_; }
    /// Meet in the middle over levels ceil(s/2) and floor(s/2).
    std::optional<int> min_tcount(const Quat& target, double epsilon) const;
    /// Direct scan of the levels; only up to the depth the levels were built for.
    std::optional<int> min_tcount_scan(const Quat& target, double epsilon, int t_max) const;

private:
    int t_max_;
    std::vector<std::vector<Quat>> levels_;
};

/// Minimal T-count of any {H, T} circuit within eps of the target, or nullopt above t_max.
/// Meets in the middle: a circuit of T-count s splits as x . y with x, y of T-count ceil(s/2), floor(s/2).
std::optional<int> brute_min_tcount(const Quat& target, double epsilon, int t_max);
/// Second opinion for t_max <= 10: scans the breadth-first levels directly.
std::optional<int> brute_min_tcount_bfs(const Quat& target, double epsilon, int t_max);

struct Theorem1Report {
    std::size_t circuits = 0;
    std::uint64_t pairs = 0;       ///< unordered pairs of distinct circuits covered
    std::uint64_t translates = 0;  ///< g1 . c . g2 products evaluated
    bool ok = true;
    std::string witness;           ///< first violation, if any
};

/// Checks that no two circuits of the list lie in the same Clifford double coset, exactly.
Theorem1Report theorem1_audit(const std::vector<NormalizedCircuit>& circuits);
/// All canonical circuits of T-count <= t_max.
Theorem1Report theorem1_audit(int t_max);

struct ParityReport {
    std::size_t samples = 0;
    std::size_t violations = 0;
    std::size_t mismatches = 0;  ///< adjoint_z disagreeing with the matrix product
    std::string witness;
    bool ok() const { return violations == 0 && mismatches == 0; }
};

/// Random normalized circuits starting with TH (T-count uniform in [1, 40], uniform block bits):
/// the unreduced ad_c(Z) must have x0 odd and y0, z0 of opposite parity.
ParityReport parity_audit(std::size_t samples, std::uint64_t seed);

/// Exact key identifying an element of PSU(2): the numerators with the phase w^j fixed
/// canonically, and the sqrt(2) exponent. Throws std::overflow_error past 62-bit coefficients.
struct Psu2Key {
    std::array<std::int64_t, 16> c{};
    int k = 0;
    bool operator==(const Psu2Key&) const = default;
};

struct Psu2KeyHash {
    std::size_t operator()(const Psu2Key& key) const;
};

Psu2Key psu2_key(const ExactUnitary& u);

}  // namespace qcanon
