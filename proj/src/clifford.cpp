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

#include "qcanon/clifford.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace qcanon {

namespace {

constexpr std::array<std::string_view, kCliffordOrder> kWords = {
    "",        "H",        "HSSH",     "SS",       "S",     "SSS",   "HSS",     "SSH",
    "SH",      "SSSH",     "SSHSSH",   "SHSSH",    "SSSHSSH", "HS",  "HSSS",    "SSHSS",
    "SHSS",    "SSSHSS",   "HSH",      "HSSSH",    "HSHSSH", "HSSSHSSH", "SSSHS", "SHSSS",
};

struct TranscribedRow {
    int g;
    CommutationKind kind;
    int residual;
};

// C/T commutation relations as published; checked against exact arithmetic in build_tables().
constexpr std::array<TranscribedRow, kCliffordOrder - 1> kPublishedCommutation = {{
    {1, CommutationKind::HPrefix, 0},    {2, CommutationKind::Plain, 12},     {3, CommutationKind::Plain, 3},
    {4, CommutationKind::Plain, 4},      {5, CommutationKind::Plain, 5},      {6, CommutationKind::HPrefix, 3},
    {7, CommutationKind::HPrefix, 12},   {8, CommutationKind::HshPrefix, 2},  {9, CommutationKind::HshPrefix, 4},
    {10, CommutationKind::Plain, 11},    {11, CommutationKind::Plain, 2},     {12, CommutationKind::Plain, 10},
    {13, CommutationKind::HPrefix, 4},   {14, CommutationKind::HPrefix, 5},   {15, CommutationKind::HPrefix, 11},
    {16, CommutationKind::HshPrefix, 10}, {17, CommutationKind::HshPrefix, 5}, {18, CommutationKind::HshPrefix, 0},
    {19, CommutationKind::HshPrefix, 12}, {20, CommutationKind::HPrefix, 2},  {21, CommutationKind::HPrefix, 10},
    {22, CommutationKind::HshPrefix, 3}, {23, CommutationKind::HshPrefix, 11},
}};

std::string_view kind_name(CommutationKind k) {
    switch (k) {
        case CommutationKind::Plain:
            return "T";
        case CommutationKind::HPrefix:
            return "H.T";
        case CommutationKind::HshPrefix:
            return "H.SH.T";
    }
    return "?";
}

std::optional<int> find_element(const std::array<ExactUnitary, kCliffordOrder>& m, const ExactUnitary& u) {
    for (int i = 0; i < kCliffordOrder; ++i) {
        if (psu2_equal(m[i], u)) return i;
    }
    return std::nullopt;
}

std::array<ExactUnitary, kCliffordOrder> element_matrices() {
    std::array<ExactUnitary, kCliffordOrder> m;
    for (int i = 0; i < kCliffordOrder; ++i) m[i] = evaluate_word(kWords[i]);
    return m;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, CliffordElement g) { return os << "G" << static_cast<int>(g.idx); }

const std::array<std::string_view, kCliffordOrder>& clifford_words() { return kWords; }

ExactUnitary evaluate_word(std::string_view word) {
    ExactUnitary u;
    for (char c : word) {
        auto g = gate_from_symbol(c);
        if (!g) throw std::invalid_argument(std::string("unknown gate symbol '") + c + "'");
        u.apply_right(*g);
    }
    return u;
}

CliffordTables build_tables() {
    const auto m = element_matrices();
    for (int i = 0; i < kCliffordOrder; ++i) {
        for (int j = 0; j < i; ++j) {
            if (psu2_equal(m[i], m[j])) {
                throw std::logic_error("Clifford words G" + std::to_string(j) + " and G" + std::to_string(i) +
                                       " are the same element");
            }
        }
    }

    CliffordTables t;
    for (int i = 0; i < kCliffordOrder; ++i) {
        for (int j = 0; j < kCliffordOrder; ++j) {
            auto k = find_element(m, m[i] * m[j]);
            if (!k) throw std::logic_error("Clifford words are not closed under multiplication");
            t.mult[i][j] = CliffordElement(*k);
            if (*k == 0) t.inv[i] = CliffordElement(j);
        }
    }

    const ExactUnitary tgate = ExactUnitary::gate(Gate::T);
    const ExactUnitary ht = evaluate_word("HT");
    const ExactUnitary hsht = evaluate_word("HSHT");
    for (int g = 1; g < kCliffordOrder; ++g) {
        const ExactUnitary lhs = m[g] * tgate;
        std::optional<CommutationRule> found;
        for (int r = 0; r < kCliffordOrder && !found; ++r) {
            if (psu2_equal(lhs, tgate * m[r])) found = CommutationRule{CommutationKind::Plain, CliffordElement(r)};
            else if (psu2_equal(lhs, ht * m[r])) found = CommutationRule{CommutationKind::HPrefix, CliffordElement(r)};
            else if (psu2_equal(lhs, hsht * m[r])) found = CommutationRule{CommutationKind::HshPrefix, CliffordElement(r)};
        }
        if (!found) throw std::logic_error("G" + std::to_string(g) + ".T has no commutation relation");
        t.comm[g] = *found;
    }

    for (const auto& row : kPublishedCommutation) {
        const CommutationRule published{row.kind, CliffordElement(row.residual)};
        if (!(t.comm[row.g] == published)) {
            std::ostringstream os;
            os << "commutation row G" << row.g << ".T = " << kind_name(row.kind) << ".G" << row.residual
               << " disagrees with exact arithmetic (G" << row.g << ".T = " << kind_name(t.comm[row.g].kind) << "."
               << t.comm[row.g].residual << ")";
            throw std::logic_error(os.str());
        }
    }
    return t;
}

CliffordGroup::CliffordGroup() : tables_(build_tables()), matrices_(element_matrices()) {
    for (int i = 0; i < kCliffordOrder; ++i) {
        quats_[i] = to_quaternion(matrices_[i]);
        rotations_[i] = quats_[i].toRotationMatrix();
    }
}

const CliffordGroup& CliffordGroup::instance() {
    static const CliffordGroup group;
    return group;
}

CommutationRule CliffordGroup::commute_through_t(CliffordElement g) const {
    if (g.is_identity()) throw std::invalid_argument("identity commutes with T trivially");
    return tables_.comm[g.idx];
}

std::optional<CliffordElement> CliffordGroup::classify(const ExactUnitary& u) const {
    auto i = find_element(matrices_, u);
    if (!i) return std::nullopt;
    return CliffordElement(*i);
}

std::optional<CliffordElement> CliffordGroup::classify(const Quat& q, double tol) const {
    for (int i = 0; i < kCliffordOrder; ++i) {
        if (dist(quats_[i], q) < tol) return CliffordElement(i);
    }
    return std::nullopt;
}

CliffordElement operator*(CliffordElement a, CliffordElement b) { return CliffordGroup::instance().mul(a, b); }
CliffordElement inverse(CliffordElement g) { return CliffordGroup::instance().inverse(g); }
CommutationRule commute_through_t(CliffordElement g) { return CliffordGroup::instance().commute_through_t(g); }
std::optional<CliffordElement> classify(const ExactUnitary& u) { return CliffordGroup::instance().classify(u); }

}  // namespace qcanon
