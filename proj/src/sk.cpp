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

#include "qcanon/sk.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Geometry>

#include "qcanon/search.hpp"

namespace qcanon {

namespace {

constexpr double kDriftTol = 1e-8;

struct Approx {
    NormalForm circuit;
    Quat value;
};

Quat positive(Quat q) {
    if (q.w() < 0) q.coeffs() = -q.coeffs();
    return q;
}

class Recursion {
public:
    Recursion(const SkConfig& cfg, SkResult& out) : cfg_(cfg), out_(out) {}

    Approx run(const Quat& u, int n, bool record) {
        if (n == 0) {
            const ApproxResult r = nearest(u, *cfg_.db, cfg_.level0_epsilon);
            if (!r.found) throw SkError("level-0 lookup failed; use a larger catalog");
            Approx a{to_normal_form(r.circuit), evaluate_numeric(r.circuit)};
            check(a);
            if (record) out_.levels.push_back({0, dist(a.value, u), a.circuit.t_count()});
            return a;
        }
        const Approx prev = run(u, n - 1, record);
        const GroupCommutator gc = gc_decompose(u * prev.value.conjugate());
        const Approx v = run(gc.v, n - 1, false);
        const Approx w = run(gc.w, n - 1, false);

        RewriteStats rs;
        const NormalForm v_inv = inverse(v.circuit, &rs);
        const NormalForm w_inv = inverse(w.circuit, &rs);
        NormalForm c = compose(v.circuit, w.circuit, &out_.composition);
        c = compose(c, v_inv, &out_.composition);
        c = compose(c, w_inv, &out_.composition);
        c = compose(c, prev.circuit, &out_.composition);
        Approx a{std::move(c), (v.value * w.value * v.value.conjugate() * w.value.conjugate() * prev.value).normalized()};
        check(a);
        if (record) out_.levels.push_back({n, dist(a.value, u), a.circuit.t_count()});
        return a;
    }

private:
    void check(Approx& a) {
        if (!has_normal_shape(to_gate_word(a.circuit))) ++out_.shape_failures;
        if (dist(a.value, evaluate_numeric(a.circuit)) > kDriftTol) {
            a.value = to_quaternion(evaluate(a.circuit));
            ++out_.resyncs;
        }
    }

    const SkConfig& cfg_;
    SkResult& out_;
};

}  // namespace

SkResult sk_approximate(const Quat& target, int depth, const SkConfig& cfg) {
    if (cfg.db == nullptr) throw std::invalid_argument("sk_approximate needs a catalog");
    if (depth < 0 || depth > cfg.max_depth) throw std::invalid_argument("depth exceeds the configured maximum");
    if (depth > kSkDefaultDepthLimit && !cfg.allow_deep) {
        throw std::invalid_argument("depth beyond 4 exceeds double precision; set allow_deep to force");
    }
    SkResult out;
    const Quat u = positive(target.normalized());
    Recursion rec(cfg, out);
    Approx a = rec.run(u, depth, true);
    out.circuit = std::move(a.circuit);
    out.value = a.value;
    out.t_count = out.circuit.t_count();
    out.dist = dist(out.value, u);
    return out;
}

Quat group_commutator(const Quat& v, const Quat& w) {
    return (v * w * v.conjugate() * w.conjugate()).normalized();
}

GroupCommutator gc_decompose(const Quat& delta) {
    const Quat d = positive(delta.normalized());
    if (dist(d, Quat::Identity()) >= 0.5) throw std::invalid_argument("gc_decompose: delta too far from identity");
    const double s = d.vec().norm();
    if (s == 0.0) return {};

    // sin(theta/2) = 2 sin^2(phi/2) sqrt(1 - sin^4(phi/2))  <=>  sin^4(phi/2) = (1 - cos(theta/2)) / 2
    const double phi = 2.0 * std::asin(std::pow(0.5 * (1.0 - d.w()), 0.25));
    const Quat v0 = axis_rotation(Eigen::Vector3d::UnitX(), phi);
    const Quat w0 = axis_rotation(Eigen::Vector3d::UnitY(), phi);
    const Quat c0 = positive(group_commutator(v0, w0));
    const double cs = c0.vec().norm();
    if (cs == 0.0) return {};
    Quat r;
    r.setFromTwoVectors(c0.vec() / cs, d.vec() / s);
    return {(r * v0 * r.conjugate()).normalized(), (r * w0 * r.conjugate()).normalized()};
}

double gc_perturbed_error(const Quat& delta, const Quat& e1, const Quat& e2) {
    const GroupCommutator gc = gc_decompose(delta);
    return dist(group_commutator(gc.v * e1, gc.w * e2), delta);
}

SlopeFit gc_error_slope(int angles, int samples_per_angle, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    auto random_axis = [&] {
        Eigen::Vector3d v(normal(rng), normal(rng), normal(rng));
        return Eigen::Vector3d(v.normalized());
    };
    SlopeFit fit;
    for (int i = 0; i < angles; ++i) {
        // dist(delta, I) from 1e-4 to 1e-1
        const double size = 1e-4 * std::pow(1e3, static_cast<double>(i) / std::max(1, angles - 1));
        const double angle = 4.0 * std::asin(size / std::sqrt(2.0));
        double sum = 0.0;
        for (int k = 0; k < samples_per_angle; ++k) {
            const Quat delta = axis_rotation(random_axis(), angle);
            const double d = dist(delta, Quat::Identity());
            const Quat e1 = axis_rotation(random_axis(), 4.0 * std::asin(d / std::sqrt(2.0)));
            const Quat e2 = axis_rotation(random_axis(), 4.0 * std::asin(d / std::sqrt(2.0)));
            sum += gc_perturbed_error(delta, e1, e2);
        }
        fit.x.push_back(std::log(size));
        fit.y.push_back(std::log(sum / samples_per_angle));
    }
    const double n = static_cast<double>(fit.x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < fit.x.size(); ++i) {
        sx += fit.x[i];
        sy += fit.y[i];
        sxx += fit.x[i] * fit.x[i];
        sxy += fit.x[i] * fit.y[i];
    }
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

std::string sk_trace_csv(const SkResult& r) {
    std::ostringstream os;
    os.precision(17);
    os << "depth,dist,t_count\n";
    for (const auto& l : r.levels) os << l.depth << ',' << l.dist << ',' << l.t_count << '\n';
    return os.str();
}

}  // namespace qcanon
