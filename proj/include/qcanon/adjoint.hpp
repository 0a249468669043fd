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

#include "qcanon/circuit.hpp"
#include "qcanon/ring.hpp"

namespace qcanon {

/// Pauli-basis vector sqrt(2)^-l ((x0 + x1 sqrt2) X + (y0 + y1 sqrt2) Y + (z0 + z1 sqrt2) Z).
///
/// The raw integers are kept unreduced, one factor of sqrt(2) per block, because the parity
/// argument that separates normalized circuits from Clifford elements is stated on them.
struct PauliVector {
    BigInt x0, x1, y0, y1, z0, z1;
    int l = 0;

    std::array<Real2, 3> components() const {
        return {Real2(x0, x1, l), Real2(y0, y1, l), Real2(z0, z1, l)};
    }
    /// x0 odd, and y0 and z0 of opposite parity.
    bool satisfies_parity() const;
};

/// ad_c(Z) = c Z c^dagger, built block by block from the rightmost block using
///   ad_TH:   (x, y, z) -> ((y + z)/sqrt2, (z - y)/sqrt2, x)
///   ad_SHTH: (x, y, z) -> ((z - y)/sqrt2, x, (y + z)/sqrt2)
PauliVector adjoint_z(const NormalizedCircuit& c);

}  // namespace qcanon
