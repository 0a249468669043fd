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
#include <complex>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcanon {

using BigInt = boost::multiprecision::cpp_int;

/// Returns v / sqrt(2)^k as a double without overflowing for large v or k.
double scaled_to_double(const BigInt& v, int k);

/// Element a + b*w + c*w^2 + d*w^3 of the cyclotomic ring Z[w], w = exp(i*pi/4).
class ZOmega {
public:
    ZOmega() = default;
    ZOmega(BigInt a, BigInt b, BigInt c, BigInt d) : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    static ZOmega from_int(long v) { return ZOmega(v, 0, 0, 0); }
    /// w^j for any integer j.
    static ZOmega omega_power(int j);

    const BigInt& operator[](int i) const { return c_[i]; }

    ZOmega operator+(const ZOmega& o) const;
    ZOmega operator-(const ZOmega& o) const;
    ZOmega operator-() const;
    ZOmega operator*(const ZOmega& o) const;
    ZOmega& operator+=(const ZOmega& o);
    ZOmega& operator-=(const ZOmega& o);

    /// Multiplies by w^j; a coefficient rotation with sign flips.
    ZOmega times_omega(int j) const;
    ZOmega conj() const;
    ZOmega times_sqrt2() const;

    /// x is divisible by sqrt(2) = w - w^3 iff a == c and b == d modulo 2.
    bool divisible_by_sqrt2() const;
    /// Exact division; requires divisible_by_sqrt2().
    ZOmega div_sqrt2() const;

    bool is_zero() const;
    bool operator==(const ZOmega& o) const = default;

    /// Value of x / sqrt(2)^k.
    std::complex<double> to_complex(int k) const;

    friend std::ostream& operator<<(std::ostream& os, const ZOmega& x);

private:
    std::array<BigInt, 4> c_{};
};

/// Real number (p + q*sqrt(2)) / sqrt(2)^l, kept reduced: l == 0 or p odd.
class Real2 {
public:
    Real2() = default;
    Real2(BigInt p, BigInt q, int l);

    const BigInt& p() const { return p_; }
    const BigInt& q() const { return q_; }
    int l() const { return l_; }

    /// Real element x of Z[w] (c == 0, b == -d) divided by sqrt(2)^k.
    static Real2 from_real_zomega(const ZOmega& x, int k);

    double to_double() const;
    int sign() const;
    bool is_zero() const { return p_ == 0 && q_ == 0; }

    Real2 operator-() const { return Real2(-p_, -q_, l_); }
    Real2 operator+(const Real2& o) const;
    Real2 operator-(const Real2& o) const { return *this + (-o); }

    bool operator==(const Real2& o) const = default;
    /// Numeric ordering (exact).
    friend bool operator<(const Real2& a, const Real2& b) { return (a - b).sign() < 0; }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Real2& x) { return os << x.to_string(); }

private:
    void reduce();

    BigInt p_{0};
    BigInt q_{0};
    int l_ = 0;
};

/// Ring scalar x / sqrt(2)^k with x in Z[w], reduced so that k == 0 or x is not divisible by sqrt(2).
class RingScalar {
public:
    RingScalar() = default;
    RingScalar(ZOmega num, int k);

    const ZOmega& num() const { return num_; }
    int k() const { return k_; }

    RingScalar operator*(const RingScalar& o) const { return RingScalar(num_ * o.num_, k_ + o.k_); }
    RingScalar conj() const { return RingScalar(num_.conj(), k_); }
    std::complex<double> to_complex() const { return num_.to_complex(k_); }
    bool operator==(const RingScalar& o) const = default;

private:
    ZOmega num_{};
    int k_ = 0;
};

}  // namespace qcanon
