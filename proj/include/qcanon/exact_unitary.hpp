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
#include <optional>

#include <Eigen/Dense>

#include "qcanon/ring.hpp"

namespace qcanon {

enum class Gate : std::uint8_t { H, T, S };

char gate_symbol(Gate g);
/// Parses one of H, T, S (case-insensitive); empty on anything else.
std::optional<Gate> gate_from_symbol(char c);

/// Exact 2x2 unitary with entries in Z[w] / sqrt(2)^k sharing one denominator exponent.
///
/// Values are U(2) representatives; equality modulo global phase is psu2_equal().
/// The representation is always reduced: k == 0 or some numerator is not divisible by sqrt(2),
/// which makes operator== an exact test of matrix equality.
class ExactUnitary {
public:
    ExactUnitary();
    ExactUnitary(std::array<ZOmega, 4> num, int k);

    static ExactUnitary identity() { return {}; }
    /// H = (i/sqrt2)[[1,1],[1,-1]], T = diag(1, w), S = diag(1, w^2).
    static ExactUnitary gate(Gate g);
    /// Throws std::invalid_argument for symbols other than H, T, S.
    static ExactUnitary gate(char symbol);

    const ZOmega& num(int r, int c) const { return num_[2 * r + c]; }
    int k() const { return k_; }
    RingScalar entry(int r, int c) const { return RingScalar(num(r, c), k_); }

    ExactUnitary operator*(const ExactUnitary& o) const;
    ExactUnitary& operator*=(const ExactUnitary& o) { return *this = *this * o; }
    ExactUnitary adjoint() const;
    /// w^j * U.
    ExactUnitary times_phase(int j) const;

    /// In-place right/left multiplication by a generator; column/row operations only.
    ExactUnitary& apply_right(Gate g);
    ExactUnitary& apply_left(Gate g);

    /// Numerator of the trace (denominator sqrt(2)^k).
    ZOmega trace_num() const { return num_[0] + num_[3]; }
    /// Exact |tr U|^2 in Z[sqrt2] / sqrt(2)^l.
    Real2 abs_trace_sq() const;
    /// U U^dagger == I and det U is a power of w.
    bool is_unitary() const;

    Eigen::Matrix2cd to_matrix() const;

    bool operator==(const ExactUnitary& o) const = default;

private:
    void reduce();

    std::array<ZOmega, 4> num_;
    int k_ = 0;
};

/// U == lambda V for some unit-modulus lambda, decided by |tr(U V^dagger)|^2 == 4 in Z[sqrt2].
bool psu2_equal(const ExactUnitary& u, const ExactUnitary& v);

inline Real2 abs_trace_sq(const ExactUnitary& u) { return u.abs_trace_sq(); }
double abs_trace(const ExactUnitary& u);

}  // namespace qcanon
