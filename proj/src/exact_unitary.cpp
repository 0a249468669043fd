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

#include "qcanon/exact_unitary.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qcanon {

char gate_symbol(Gate g) {
    switch (g) {
        case Gate::H:
            return 'H';
        case Gate::T:
            return 'T';
        case Gate::S:
            return 'S';
    }
    return '?';
}

std::optional<Gate> gate_from_symbol(char c) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'H':
            return Gate::H;
        case 'T':
            return Gate::T;
        case 'S':
            return Gate::S;
        default:
            return std::nullopt;
    }
}

ExactUnitary::ExactUnitary() : num_{ZOmega::from_int(1), ZOmega{}, ZOmega{}, ZOmega::from_int(1)} {}

ExactUnitary::ExactUnitary(std::array<ZOmega, 4> num, int k) : num_(std::move(num)), k_(k) { reduce(); }

ExactUnitary ExactUnitary::gate(Gate g) {
    const ZOmega one = ZOmega::from_int(1);
    switch (g) {
        case Gate::H: {
            const ZOmega i = ZOmega::omega_power(2);
            return ExactUnitary({i, i, i, -i}, 1);
        }
        case Gate::T:
            return ExactUnitary({one, ZOmega{}, ZOmega{}, ZOmega::omega_power(1)}, 0);
        case Gate::S:
            return ExactUnitary({one, ZOmega{}, ZOmega{}, ZOmega::omega_power(2)}, 0);
    }
    throw std::invalid_argument("unknown gate");
}

ExactUnitary ExactUnitary::gate(char symbol) {
    auto g = gate_from_symbol(symbol);
    if (!g) throw std::invalid_argument(std::string("unknown gate symbol '") + symbol + "'");
    return gate(*g);
}

void ExactUnitary::reduce() {
    if (num_[0].is_zero() && num_[1].is_zero() && num_[2].is_zero() && num_[3].is_zero()) {
        k_ = 0;
        return;
    }
    while (k_ > 0 && num_[0].divisible_by_sqrt2() && num_[1].divisible_by_sqrt2() &&
           num_[2].divisible_by_sqrt2() && num_[3].divisible_by_sqrt2()) {
        for (auto& x : num_) x = x.div_sqrt2();
        --k_;
    }
}

ExactUnitary ExactUnitary::operator*(const ExactUnitary& o) const {
    std::array<ZOmega, 4> r{num_[0] * o.num_[0] + num_[1] * o.num_[2], num_[0] * o.num_[1] + num_[1] * o.num_[3],
                            num_[2] * o.num_[0] + num_[3] * o.num_[2], num_[2] * o.num_[1] + num_[3] * o.num_[3]};
    return ExactUnitary(std::move(r), k_ + o.k_);
}

ExactUnitary ExactUnitary::adjoint() const {
    ExactUnitary r;
    r.num_ = {num_[0].conj(), num_[2].conj(), num_[1].conj(), num_[3].conj()};
    r.k_ = k_;
    return r;
}

ExactUnitary ExactUnitary::times_phase(int j) const {
    ExactUnitary r = *this;
    for (auto& x : r.num_) x = x.times_omega(j);
    return r;
}

ExactUnitary& ExactUnitary::apply_right(Gate g) {
    switch (g) {
        case Gate::T:
            num_[1] = num_[1].times_omega(1);
            num_[3] = num_[3].times_omega(1);
            return *this;
        case Gate::S:
            num_[1] = num_[1].times_omega(2);
            num_[3] = num_[3].times_omega(2);
            return *this;
        case Gate::H:
            for (int r = 0; r < 2; ++r) {
                ZOmega a = num_[2 * r];
                ZOmega b = num_[2 * r + 1];
                num_[2 * r] = (a + b).times_omega(2);
                num_[2 * r + 1] = (a - b).times_omega(2);
            }
            ++k_;
            reduce();
            return *this;
    }
    return *this;
}

ExactUnitary& ExactUnitary::apply_left(Gate g) {
    switch (g) {
        case Gate::T:
            num_[2] = num_[2].times_omega(1);
            num_[3] = num_[3].times_omega(1);
            return *this;
        case Gate::S:
            num_[2] = num_[2].times_omega(2);
            num_[3] = num_[3].times_omega(2);
            return *this;
        case Gate::H:
            for (int c = 0; c < 2; ++c) {
                ZOmega a = num_[c];
                ZOmega b = num_[2 + c];
                num_[c] = (a + b).times_omega(2);
                num_[2 + c] = (a - b).times_omega(2);
            }
            ++k_;
            reduce();
            return *this;
    }
    return *this;
}

Real2 ExactUnitary::abs_trace_sq() const {
    ZOmega t = trace_num();
    return Real2::from_real_zomega(t * t.conj(), 2 * k_);
}

bool ExactUnitary::is_unitary() const {
    if (!(*this * adjoint() == ExactUnitary())) return false;
    RingScalar det(num_[0] * num_[3] - num_[1] * num_[2], 2 * k_);
    for (int j = 0; j < 8; ++j) {
        if (det == RingScalar(ZOmega::omega_power(j), 0)) return true;
    }
    return false;
}

Eigen::Matrix2cd ExactUnitary::to_matrix() const {
    Eigen::Matrix2cd m;
    m << num_[0].to_complex(k_), num_[1].to_complex(k_), num_[2].to_complex(k_), num_[3].to_complex(k_);
    return m;
}

bool psu2_equal(const ExactUnitary& u, const ExactUnitary& v) {
    // tr(U V^dagger) = sum_ij U_ij conj(V_ij); only the trace is needed, not the product.
    ZOmega t;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) t += u.num(r, c) * v.num(r, c).conj();
    }
    return Real2::from_real_zomega(t * t.conj(), 2 * (u.k() + v.k())) == Real2(4, 0, 0);
}

double abs_trace(const ExactUnitary& u) { return std::sqrt(std::max(0.0, u.abs_trace_sq().to_double())); }

}  // namespace qcanon
