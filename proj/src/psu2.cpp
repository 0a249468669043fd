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

#include "qcanon/psu2.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qcanon {

namespace {

constexpr double kAxisZeroTol = 1e-12;

BlochAxis axis_from_unit(Quat q, bool force_half_turn) {
    if (q.w() < 0) q.coeffs() = -q.coeffs();
    Eigen::Vector3d v = q.vec();
    const double s = v.norm();
    if (s == 0.0) throw std::domain_error("no axis");
    BlochAxis a{v / s, 2.0 * std::atan2(s, q.w())};
    if (force_half_turn || q.w() == 0.0) {
        a.theta = M_PI;
        a.n = canonical_axis_sign(a.n);
    }
    return a;
}

}  // namespace

Quat to_quaternion(const Eigen::Matrix2cd& m) {
    const std::complex<double> det = m.determinant();
    if (std::abs(det) == 0.0) throw std::invalid_argument("singular matrix");
    const std::complex<double> scale = 1.0 / std::sqrt(det);
    const Eigen::Matrix2cd v = m * scale;
    // V = w - i (x X + y Y + z Z)
    Quat q(0.5 * (v(0, 0) + v(1, 1)).real(), -0.5 * (v(0, 1) + v(1, 0)).imag(), 0.5 * (v(1, 0) - v(0, 1)).real(),
           0.5 * (v(1, 1) - v(0, 0)).imag());
    q.normalize();
    return q;
}

Quat to_quaternion(const ExactUnitary& u) {
    Quat q = to_quaternion(u.to_matrix());
    if (u.abs_trace_sq().is_zero()) q.w() = 0.0;
    return q;
}

Eigen::Matrix2cd to_matrix(const Quat& q) {
    using C = std::complex<double>;
    const C i(0.0, 1.0);
    Eigen::Matrix2cd m;
    m << C(q.w(), -q.z()), -q.y() - i * q.x(), q.y() - i * q.x(), C(q.w(), q.z());
    return m;
}

Quat axis_rotation(const Eigen::Vector3d& n, double angle) {
    const Eigen::Vector3d u = n.normalized();
    const double s = std::sin(angle / 2);
    return Quat(std::cos(angle / 2), s * u.x(), s * u.y(), s * u.z());
}

double dist(const Quat& a, const Quat& b) {
    const double minus = (a.coeffs() - b.coeffs()).norm();
    const double plus = (a.coeffs() + b.coeffs()).norm();
    return std::min(1.0, std::min(minus, plus) * M_SQRT1_2);
}

double dist(const ExactUnitary& u, const ExactUnitary& v) { return dist(to_quaternion(u), to_quaternion(v)); }

Eigen::Vector3d canonical_axis_sign(const Eigen::Vector3d& n) {
    for (int i = 0; i < 3; ++i) {
        if (std::abs(n[i]) > kAxisZeroTol) return n[i] < 0 ? Eigen::Vector3d(-n) : n;
    }
    return n;
}

BlochAxis bloch_axis(const Quat& q) { return axis_from_unit(q.normalized(), false); }

BlochAxis bloch_axis(const ExactUnitary& u) {
    if (u.abs_trace_sq() == Real2(4, 0, 0)) throw std::domain_error("no axis");
    return axis_from_unit(to_quaternion(u), u.abs_trace_sq().is_zero());
}

}  // namespace qcanon
