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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcanon/catalog.hpp"
#include "qcanon/circuit.hpp"
#include "qcanon/psu2.hpp"
#include "qcanon/rewrite.hpp"

namespace qcanon {

/// Recursion depth accepted without SkConfig::allow_deep; deeper levels hit double precision.
inline constexpr int kSkDefaultDepthLimit = 4;

struct SkConfig {
    const Catalog* db = nullptr;
    int max_depth = 3;
    /// Starting radius of the level-0 nearest-entry search.
    double level0_epsilon = 1e-3;
    bool allow_deep = false;
};

struct SkLevel {
    int depth = 0;
    double dist = 0.0;
    int t_count = 0;
};

struct SkResult {
    NormalForm circuit;
    Quat value = Quat::Identity();  ///< tracked numeric product of the circuit
    std::vector<SkLevel> levels;    ///< U_0 .. U_n against the target
    int t_count = 0;
    double dist = 1.0;
    CompositionStats composition;
    std::size_t shape_failures = 0;  ///< intermediate circuits without the normalized gate shape
    std::size_t resyncs = 0;         ///< exact re-evaluations after numeric drift
};

class SkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dawson-Nielsen recursion U_n = V W V^-1 W^-1 U_(n-1) with nearest-entry lookups at level 0.
SkResult sk_approximate(const Quat& target, int depth, const SkConfig& cfg);

struct GroupCommutator {
    Quat v = Quat::Identity();
    Quat w = Quat::Identity();
};

Quat group_commutator(const Quat& v, const Quat& w);

/// Balanced commutator: V, W rotate by the same angle about perpendicular axes and
/// V W V^-1 W^-1 = delta. Requires dist(delta, I) < 0.5.
GroupCommutator gc_decompose(const Quat& delta);

/// dist(V' W' V'^-1 W'^-1, delta) where V' = V e1 and W' = W e2 perturb the decomposition of delta.
double gc_perturbed_error(const Quat& delta, const Quat& e1, const Quat& e2);

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::vector<double> x;  ///< log dist(delta, I)
    std::vector<double> y;  ///< log mean reconstruction error
};

/// Least-squares log-log slope of the commutator reconstruction error against dist(delta, I) when
/// V and W carry errors of size dist(delta, I), over `angles` geometrically spaced magnitudes.
SlopeFit gc_error_slope(int angles, int samples_per_angle, std::uint64_t seed);

/// "depth,dist,t_count" rows.
std::string sk_trace_csv(const SkResult& r);

}  // namespace qcanon
