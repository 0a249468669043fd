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

#include "qcanon/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qcanon/clifford.hpp"

namespace qcanon {

namespace {

constexpr double kInsideTol = 1e-12;

int vertex_index(const std::array<Eigen::Vector3d, Tiling::kVertices>& vs, const Eigen::Vector3d& p) {
    for (int i = 0; i < Tiling::kVertices; ++i) {
        if ((vs[i] - p).norm() < 1e-9) return i;
    }
    throw std::logic_error("tile corner is not a tiling vertex");
}

}  // namespace

double f0_violation(const Eigen::Vector3d& p) { return std::max({-p.y(), p.y() - p.x(), p.y() - p.z()}); }

double arc_distance(const Eigen::Vector3d& p, const Eigen::Vector3d& q) {
    return std::atan2(p.cross(q).norm(), p.dot(q));
}

double arc_segment_distance(const Eigen::Vector3d& p, const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    const Eigen::Vector3d n = a.cross(b);
    const double nn = n.norm();
    if (nn > 1e-15) {
        const Eigen::Vector3d u = n / nn;
        const Eigen::Vector3d foot = p - p.dot(u) * u;
        const double fn = foot.norm();
        if (fn > 1e-15) {
            const Eigen::Vector3d f = foot / fn;
            // On the minor arc iff f lies between a and b on the same side.
            if (a.cross(f).dot(u) >= 0.0 && f.cross(b).dot(u) >= 0.0) return arc_distance(p, f);
        }
    }
    return std::min(arc_distance(p, a), arc_distance(p, b));
}

Tiling::Tiling() {
    const double c = 1.0 / std::sqrt(3.0);
    vertices_ = {Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(-1, 0, 0), Eigen::Vector3d(0, 1, 0),
                 Eigen::Vector3d(0, -1, 0), Eigen::Vector3d(0, 0, 1), Eigen::Vector3d(0, 0, -1)};
    int v = 6;
    for (int sx : {1, -1}) {
        for (int sy : {1, -1}) {
            for (int sz : {1, -1}) vertices_[v++] = Eigen::Vector3d(sx * c, sy * c, sz * c);
        }
    }

    const auto& grp = CliffordGroup::instance();
    const std::array<Eigen::Vector3d, 3> f0 = {Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 0, 1),
                                                Eigen::Vector3d(c, c, c)};
    for (int f = 0; f < kFaces; ++f) {
        rotations_[f] = grp.rotation(CliffordElement(static_cast<std::uint8_t>(f)));
        for (int k = 0; k < 3; ++k) face_vertices_[f][k] = vertex_index(vertices_, rotations_[f] * f0[k]);
    }

    for (int f = 0; f < kFaces; ++f) {
        const auto& fv = face_vertices_[f];
        for (int k = 0; k < 3; ++k) {
            int a = fv[k];
            int b = fv[(k + 1) % 3];
            if (a > b) std::swap(a, b);
            int e = find_edge(a, b);
            if (e < 0) {
                edges_.push_back(Edge{a, b, {f, -1}});
                e = static_cast<int>(edges_.size()) - 1;
            } else if (edges_[e].faces[1] < 0) {
                edges_[e].faces[1] = f;
            } else {
                throw std::logic_error("tiling edge shared by more than two tiles");
            }
            face_edges_[f][k] = e;
        }
    }
    if (static_cast<int>(edges_.size()) != kEdges) throw std::logic_error("tiling does not have 36 edges");
}

const Tiling& Tiling::instance() {
    static const Tiling t;
    return t;
}

int Tiling::find_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].a == a && edges_[i].b == b) return static_cast<int>(i);
    }
    return -1;
}

TileLocation tile_of(const Eigen::Vector3d& axis) {
    const Tiling& tiling = Tiling::instance();
    TileLocation loc;
    int best = 0;
    double best_violation = std::numeric_limits<double>::infinity();
    for (int f = 0; f < Tiling::kFaces; ++f) {
        const double viol = f0_violation(tiling.rotation(f).transpose() * axis);
        if (viol <= kInsideTol) {
            best = f;
            break;
        }
        if (viol < best_violation) {
            best_violation = viol;
            best = f;
        }
    }
    loc.face = best;

    loc.boundary_dist = std::numeric_limits<double>::infinity();
    for (int e : tiling.face_edges(best)) {
        const auto& edge = tiling.edge(e);
        const double d = arc_segment_distance(axis, tiling.vertex(edge.a), tiling.vertex(edge.b));
        if (d < loc.boundary_dist) {
            loc.boundary_dist = d;
            loc.nearest_edge = e;
        }
    }
    loc.vertex_dist = std::numeric_limits<double>::infinity();
    for (int v = 0; v < Tiling::kVertices; ++v) {
        const double d = arc_distance(axis, tiling.vertex(v));
        if (d < loc.vertex_dist) {
            loc.vertex_dist = d;
            loc.nearest_vertex = v;
        }
    }
    return loc;
}

}  // namespace qcanon
