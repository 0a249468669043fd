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

#include "qcanon/adjoint.hpp"

namespace qcanon {

bool PauliVector::satisfies_parity() const {
    return bit_test(x0, 0) && (bit_test(y0, 0) != bit_test(z0, 0));
}

PauliVector adjoint_z(const NormalizedCircuit& c) {
    PauliVector a;
    a.z0 = 1;
    const auto& blocks = c.blocks();
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        // sqrt2 * (x0 + x1 sqrt2) = 2 x1 + x0 sqrt2
        BigInt sum0 = a.y0 + a.z0, sum1 = a.y1 + a.z1;
        BigInt dif0 = a.z0 - a.y0, dif1 = a.z1 - a.y1;
        BigInt sx0 = 2 * a.x1, sx1 = a.x0;
        if (*it) {
            a.x0 = std::move(dif0), a.x1 = std::move(dif1);
            a.y0 = std::move(sx0), a.y1 = std::move(sx1);
            a.z0 = std::move(sum0), a.z1 = std::move(sum1);
        } else {
            a.x0 = std::move(sum0), a.x1 = std::move(sum1);
            a.y0 = std::move(dif0), a.y1 = std::move(dif1);
            a.z0 = std::move(sx0), a.z1 = std::move(sx1);
        }
        ++a.l;
    }
    return a;
}

}  // namespace qcanon
