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
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qcanon/circuit.hpp"
#include "qcanon/psu2.hpp"
#include "qcanon/tiling.hpp"

namespace qcanon {

/// Largest T-count the packed entry representation supports.
inline constexpr int kMaxCatalogTCount = 64;
/// Trace keys closer than this are the same level.
inline constexpr double kBucketTol = 1e-10;

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CatalogEntry {
    std::uint64_t bits = 0;  ///< bit i set iff block i is SHTH
    std::uint8_t t = 0;
    double trace = 0.0;      ///< |tr|
    Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();

    NormalizedCircuit circuit() const;
    /// Unit quaternion rebuilt from (trace, axis), scalar part >= 0.
    Quat quaternion() const;
};

/// Lexicographic order on block sequences of equal length.
bool blocks_less(std::uint64_t a, std::uint64_t b);
/// Catalog order: T-count first, then blocks.
bool entry_less(const CatalogEntry& a, const CatalogEntry& b);

struct TraceBucket {
    double key = 0.0;
    std::vector<CatalogEntry> entries;
    std::array<std::vector<std::uint32_t>, Tiling::kFaces> face_idx;
    std::array<std::vector<std::uint32_t>, Tiling::kEdges> edge_idx;
    std::array<std::vector<std::uint32_t>, Tiling::kVertices> vertex_idx;

    /// Only the identity has |tr| = 2; it has no axis and is not indexed.
    bool degenerate() const { return key > 2.0 - 1e-9; }
    void build_index();
};

class Catalog {
public:
    static constexpr std::uint32_t kFormatVersion = 1;

    /// Enumerates, evaluates and indexes every canonical circuit with T-count <= t_max.
    /// threads = 0 selects the hardware concurrency.
    static Catalog build(int t_max, unsigned threads = 0);

    int t_max() const { return t_max_; }
    const std::vector<TraceBucket>& buckets() const { return buckets_; }
    std::size_t size() const;

    std::vector<std::uint8_t> serialize() const;
    static Catalog deserialize(const std::vector<std::uint8_t>& bytes);
    void save(const std::filesystem::path& path) const;
    static Catalog load(const std::filesystem::path& path);

private:
    int t_max_ = 0;
    std::vector<TraceBucket> buckets_;
};

/// Canonical circuits with T-count <= t_max in catalog order, built without recursion:
/// (TH)^min(t,4) followed by free TH / SHTH blocks.
std::vector<NormalizedCircuit> enumerate_canonical(int t_max);
void for_each_canonical(int t_max, const std::function<void(const NormalizedCircuit&)>& fn);

/// Number of canonical circuits with T-count <= t from the block grammar: t + 1 below 4, else 2^(t-3) + 3.
std::uint64_t canonical_count_grammar(int t);
/// The closed form quoted in the literature, 2^(t-3) + 4; not an integer below t = 3.
std::optional<std::uint64_t> canonical_count_published(int t);

struct HomogeneityViolation {
    double key = 0.0;
    int min_t = 0;
    int max_t = 0;
};

/// Trace levels holding circuits of more than one T-count.
std::vector<HomogeneityViolation> homogeneity_violations(const Catalog& db);

/// Number of distinct trace levels among entries with T-count <= k.
std::size_t distinct_trace_keys(const Catalog& db, int k);

}  // namespace qcanon
