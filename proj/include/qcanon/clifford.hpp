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
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>

#include "qcanon/exact_unitary.hpp"
#include "qcanon/psu2.hpp"

namespace qcanon {

inline constexpr int kCliffordOrder = 24;

/// Element G_idx of the 24-element group generated by H and S in PSU(2), indexed as in
/// Fowler's multiplication table.
struct CliffordElement {
    std::uint8_t idx = 0;

    constexpr CliffordElement() = default;
    explicit constexpr CliffordElement(int i) : idx(static_cast<std::uint8_t>(i)) {}

    constexpr bool is_identity() const { return idx == 0; }
    friend constexpr auto operator<=>(CliffordElement, CliffordElement) = default;
};

std::ostream& operator<<(std::ostream& os, CliffordElement g);

namespace cliff {
inline constexpr CliffordElement Id{0};
inline constexpr CliffordElement H{1};
inline constexpr CliffordElement HSSH{2};
inline constexpr CliffordElement SS{3};
inline constexpr CliffordElement S{4};
inline constexpr CliffordElement SSS{5};
inline constexpr CliffordElement SH{8};
inline constexpr CliffordElement HSSS{14};
inline constexpr CliffordElement HSH{18};
}  // namespace cliff

/// g.T = T.r (Plain), g.T = H.T.r (HPrefix) or g.T = HSH.T.r (HshPrefix).
enum class CommutationKind : std::uint8_t { Plain, HPrefix, HshPrefix };

struct CommutationRule {
    CommutationKind kind = CommutationKind::Plain;
    CliffordElement residual;
    bool operator==(const CommutationRule&) const = default;
};

struct CliffordTables {
    std::array<std::array<CliffordElement, kCliffordOrder>, kCliffordOrder> mult{};
    std::array<CliffordElement, kCliffordOrder> inv{};
    /// Entry 0 is unused.
    std::array<CommutationRule, kCliffordOrder> comm{};
};

/// Words over {H, S} for G_0 .. G_23; G_0 is the empty word.
const std::array<std::string_view, kCliffordOrder>& clifford_words();

/// Derives all tables from exact products of the element words and checks every transcribed
/// C/T commutation row against them. Throws std::logic_error naming the first failing row.
CliffordTables build_tables();

/// Process-wide immutable group data, built on first use.
class CliffordGroup {
public:
    static const CliffordGroup& instance();

    std::string_view word(CliffordElement g) const { return clifford_words()[g.idx]; }
    const ExactUnitary& matrix(CliffordElement g) const { return matrices_[g.idx]; }
    const Quat& quaternion(CliffordElement g) const { return quats_[g.idx]; }
    const Eigen::Matrix3d& rotation(CliffordElement g) const { return rotations_[g.idx]; }

    CliffordElement mul(CliffordElement a, CliffordElement b) const { return tables_.mult[a.idx][b.idx]; }
    CliffordElement inverse(CliffordElement g) const { return tables_.inv[g.idx]; }
    /// Throws std::invalid_argument for the identity.
    CommutationRule commute_through_t(CliffordElement g) const;

    /// Index of the element equal to u in PSU(2), if any.
    std::optional<CliffordElement> classify(const ExactUnitary& u) const;
    /// Floating-point membership test with dist < tol.
    std::optional<CliffordElement> classify(const Quat& q, double tol = 1e-9) const;

    const CliffordTables& tables() const { return tables_; }

private:
    CliffordGroup();

    CliffordTables tables_;
    std::array<ExactUnitary, kCliffordOrder> matrices_;
    std::array<Quat, kCliffordOrder> quats_;
    std::array<Eigen::Matrix3d, kCliffordOrder> rotations_;
};

/// Convenience wrappers over CliffordGroup::instance().
CliffordElement operator*(CliffordElement a, CliffordElement b);
CliffordElement inverse(CliffordElement g);
CommutationRule commute_through_t(CliffordElement g);
std::optional<CliffordElement> classify(const ExactUnitary& u);

/// Exact product of a word over {H, S, T}; throws std::invalid_argument on other symbols.
ExactUnitary evaluate_word(std::string_view word);

}  // namespace qcanon
