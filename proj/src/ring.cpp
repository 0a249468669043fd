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

#include "qcanon/ring.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcanon {

double scaled_to_double(const BigInt& v, int k) {
    if (v == 0) return 0.0;
    BigInt mag = abs(v);
    int shift = 0;
    const auto bits = static_cast<int>(boost::multiprecision::msb(mag)) + 1;
    if (bits > 62) {
        shift = bits - 62;
        mag >>= shift;
    }
    double d = mag.convert_to<double>();
    if (v < 0) d = -d;
    // v / 2^(k/2) / sqrt(2)^(k%2), carrying the shift as a power of two.
    int k_half = k >= 0 ? k / 2 : -((-k + 1) / 2);
    int k_odd = k - 2 * k_half;
    d = std::ldexp(d, shift - k_half);
    if (k_odd != 0) d *= M_SQRT1_2;
    return d;
}

ZOmega ZOmega::omega_power(int j) {
    j = ((j % 8) + 8) % 8;
    ZOmega x = from_int(1);
    return x.times_omega(j);
}

ZOmega ZOmega::operator+(const ZOmega& o) const {
    return ZOmega(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]);
}

ZOmega ZOmega::operator-(const ZOmega& o) const {
    return ZOmega(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]);
}

ZOmega ZOmega::operator-() const { return ZOmega(-c_[0], -c_[1], -c_[2], -c_[3]); }

ZOmega& ZOmega::operator+=(const ZOmega& o) {
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
}

ZOmega& ZOmega::operator-=(const ZOmega& o) {
    for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
}

ZOmega ZOmega::operator*(const ZOmega& o) const {
    // w^4 = -1 folds the degree 4..6 terms back with a sign flip.
    std::array<BigInt, 4> r{};
    for (int i = 0; i < 4; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            if (o.c_[j] == 0) continue;
            BigInt t = c_[i] * o.c_[j];
            int e = i + j;
            if (e >= 4) {
                r[e - 4] -= t;
            } else {
                r[e] += t;
            }
        }
    }
    return ZOmega(std::move(r[0]), std::move(r[1]), std::move(r[2]), std::move(r[3]));
}

ZOmega ZOmega::times_omega(int j) const {
    j = ((j % 8) + 8) % 8;
    ZOmega x = *this;
    for (int s = 0; s < j; ++s) {
        // (a, b, c, d) * w = (-d, a, b, c)
        x = ZOmega(-x.c_[3], x.c_[0], x.c_[1], x.c_[2]);
    }
    return x;
}

ZOmega ZOmega::conj() const { return ZOmega(c_[0], -c_[3], -c_[2], -c_[1]); }

ZOmega ZOmega::times_sqrt2() const {
    // sqrt(2) = w - w^3
    return ZOmega(c_[1] - c_[3], c_[0] + c_[2], c_[1] + c_[3], c_[2] - c_[0]);
}

bool ZOmega::divisible_by_sqrt2() const {
    // bit_test reads the magnitude, which has the same parity as the value.
    return bit_test(c_[0], 0) == bit_test(c_[2], 0) && bit_test(c_[1], 0) == bit_test(c_[3], 0);
}

ZOmega ZOmega::div_sqrt2() const {
    ZOmega t = times_sqrt2();
    return ZOmega(t.c_[0] / 2, t.c_[1] / 2, t.c_[2] / 2, t.c_[3] / 2);
}

bool ZOmega::is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

std::complex<double> ZOmega::to_complex(int k) const {
    // Re = a + (b - d)/sqrt2, Im = c + (b + d)/sqrt2
    double re = scaled_to_double(c_[0], k) + scaled_to_double(c_[1] - c_[3], k + 1);
    double im = scaled_to_double(c_[2], k) + scaled_to_double(c_[1] + c_[3], k + 1);
    return {re, im};
}

std::ostream& operator<<(std::ostream& os, const ZOmega& x) {
    return os << "(" << x.c_[0] << "," << x.c_[1] << "," << x.c_[2] << "," << x.c_[3] << ")";
}

Real2::Real2(BigInt p, BigInt q, int l) : p_(std::move(p)), q_(std::move(q)), l_(l) { reduce(); }

void Real2::reduce() {
    if (p_ == 0 && q_ == 0) {
        l_ = 0;
        return;
    }
    // Bring negative exponents up first: x * sqrt(2) = 2q + p*sqrt(2).
    while (l_ < 0) {
        BigInt np = q_ * 2;
        q_ = p_;
        p_ = std::move(np);
        ++l_;
    }
    while (l_ > 0 && !bit_test(p_, 0)) {
        BigInt nq = p_ / 2;
        p_ = q_;
        q_ = std::move(nq);
        --l_;
    }
}

Real2 Real2::from_real_zomega(const ZOmega& x, int k) {
    if (x[2] != 0 || x[1] != -x[3]) throw std::invalid_argument("ZOmega value is not real");
    return Real2(x[0], x[1], k);
}

double Real2::to_double() const { return scaled_to_double(p_, l_) + scaled_to_double(q_, l_ - 1); }

int Real2::sign() const {
    const int sp = p_.sign();
    const int sq = q_.sign();
    if (sp >= 0 && sq >= 0) return (sp | sq) ? 1 : 0;
    if (sp <= 0 && sq <= 0) return -1;
    // Opposite signs: compare p^2 with 2 q^2.
    BigInt lhs = p_ * p_;
    BigInt rhs = 2 * q_ * q_;
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sp : sq;
}

Real2 Real2::operator+(const Real2& o) const {
    // Lift both to the larger exponent: multiplying by sqrt(2) maps (p, q) -> (2q, p).
    BigInt p1 = p_, q1 = q_, p2 = o.p_, q2 = o.q_;
    int l1 = l_, l2 = o.l_;
    while (l1 < l2) {
        BigInt np = 2 * q1;
        q1 = p1;
        p1 = std::move(np);
        ++l1;
    }
    while (l2 < l1) {
        BigInt np = 2 * q2;
        q2 = p2;
        p2 = std::move(np);
        ++l2;
    }
    return Real2(p1 + p2, q1 + q2, l1);
}

std::string Real2::to_string() const {
    std::ostringstream os;
    os << "(" << p_ << (q_ < 0 ? "" : "+") << q_ << "*sqrt2)";
    if (l_ != 0) os << "/sqrt2^" << l_;
    return os.str();
}

RingScalar::RingScalar(ZOmega num, int k) : num_(std::move(num)), k_(k) {
    if (num_.is_zero()) {
        k_ = 0;
        return;
    }
    while (k_ > 0 && num_.divisible_by_sqrt2()) {
        num_ = num_.div_sqrt2();
        --k_;
    }
}

}  // namespace qcanon
