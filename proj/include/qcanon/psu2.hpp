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

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include "qcanon/exact_unitary.hpp"

namespace qcanon {

/// Floating-point PSU(2) element as a unit quaternion.
///
/// U = w I - i (x X + y Y + z Z) maps to w + x i + y j + z k, so matrix products are Hamilton
/// products and the SO(3) rotation of the quaternion is the adjoint action on the Pauli vector.
/// q and -q are the same element.
using Quat = Eigen::Quaterniond;

struct BlochAxis {
    Eigen::Vector3d n;  ///< unit rotation axis
    double theta;       ///< rotation angle in (0, pi]
};

/// Projective conversion; the matrix must be invertible (any global phase is accepted).
Quat to_quaternion(const Eigen::Matrix2cd& m);
Quat to_quaternion(const ExactUnitary& u);
Eigen::Matrix2cd to_matrix(const Quat& q);

/// Rotation by `angle` about unit axis `n`: exp(-i angle n.sigma / 2).
Quat axis_rotation(const Eigen::Vector3d& n, double angle);

/// |tr U| = 2|w|.
inline double abs_trace(const Quat& q) { return 2.0 * std::abs(q.w()); }

/// sqrt((2 - |tr(U V^dagger)|) / 2), evaluated as min(|q - r|, |q + r|) / sqrt(2) so that
/// nearby elements keep full relative precision.
double dist(const Quat& a, const Quat& b);
double dist(const ExactUnitary& u, const ExactUnitary& v);

/// Axis-angle of the SO(3) image with theta in (0, pi]. At theta == pi the axis sign is fixed so
/// that its first nonzero coordinate is positive. Throws std::domain_error("no axis") at identity.
BlochAxis bloch_axis(const Quat& q);
BlochAxis bloch_axis(const ExactUnitary& u);

/// Sign fix used at theta == pi.
Eigen::Vector3d canonical_axis_sign(const Eigen::Vector3d& n);

}  // namespace qcanon
