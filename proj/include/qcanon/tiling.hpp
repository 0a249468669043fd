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
#include <vector>

#include <Eigen/Core>

namespace qcanon {

/// Octahedral tiling of the unit sphere of rotation axes into 24 spherical triangles.
///
/// F0 has corners X, Z and (1,1,1)/sqrt(3); tile g is the image of F0 under the adjoint action of
/// Clifford element g.
class Tiling {
public:
    static constexpr int kFaces = 24;
    static constexpr int kVertices = 14;
    static constexpr int kEdges = 36;

    struct Edge {
        int a = 0;  ///< vertex indices, a < b
        int b = 0;
        std::array<int, 2> faces{};
    };

    static const Tiling& instance();

    /// Vertices 0..5 are +X, -X, +Y, -Y, +Z, -Z; 6..13 are the cube corners (+-1,+-1,+-1)/sqrt(3).
    const Eigen::Vector3d& vertex(int v) const { return vertices_[v]; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::array<int, 3>& face_vertices(int f) const { return face_vertices_[f]; }
    const std::array<int, 3>& face_edges(int f) const { return face_edges_[f]; }
    /// Rotation carrying F0 onto tile f.
    const Eigen::Matrix3d& rotation(int f) const { return rotations_[f]; }

    int find_edge(int a, int b) const;

private:
    Tiling();

    std::array<Eigen::Vector3d, kVertices> vertices_;
    std::vector<Edge> edges_;
    std::array<std::array<int, 3>, kFaces> face_vertices_{};
    std::array<std::array<int, 3>, kFaces> face_edges_{};
    std::array<Eigen::Matrix3d, kFaces> rotations_;
};

/// Largest violation of the F0 predicate 0 <= y <= x, y <= z; non-positive inside F0.
double f0_violation(const Eigen::Vector3d& p);

/// Great-circle distance between unit vectors.
double arc_distance(const Eigen::Vector3d& p, const Eigen::Vector3d& q);

/// Great-circle distance from p to the minor arc between unit vectors a and b.
double arc_segment_distance(const Eigen::Vector3d& p, const Eigen::Vector3d& a, const Eigen::Vector3d& b);

struct TileLocation {
    int face = 0;
    int nearest_edge = 0;    ///< index into Tiling::edge, among the edges of `face`
    int nearest_vertex = 0;  ///< over all 14 vertices
    double boundary_dist = 0.0;  ///< distance to the nearest edge of `face`
    double vertex_dist = 0.0;
};

/// Locates a unit axis. The face is the first tile whose closure contains it (tolerance 1e-12);
/// if none does within tolerance, the tile with the smallest violation.
TileLocation tile_of(const Eigen::Vector3d& axis);

}  // namespace qcanon
