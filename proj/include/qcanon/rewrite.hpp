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

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "qcanon/circuit.hpp"
#include "qcanon/clifford.hpp"

namespace qcanon {

/// Rewriting alphabet: a T gate or a Clifford element.
struct Token {
    bool is_t = false;
    CliffordElement g;

    static Token t() { return Token{true, cliff::Id}; }
    static Token clifford(CliffordElement c) { return Token{false, c}; }
};

using TokenList = std::vector<Token>;

TokenList tokens_of(const GateWord& w);
TokenList tokens_of(const NormalForm& f);
TokenList tokens_of(const CosetForm& f);

/// Counters for the rewriting procedures. Accumulates across calls.
struct RewriteStats {
    std::size_t rewrites = 0;  ///< elementary rewrites (table lookups, pushes, pops)
    std::size_t t_merges = 0;  ///< T.T -> S collapses
    std::size_t clause3 = 0;   ///< canonicalization passes that lost T-count and had to restart
};

/// Right-coset normal form [H.] c . g in a single left-to-right pass.
///
/// The left stack holds one marker per emitted T (nothing, H, or HSH in front of it) and a
/// pending Clifford to its right. An incoming T first commutes the pending Clifford through
/// itself; a bare T landing on the previous T collapses both into S and pops the stack.
/// Rewrites are linear in the input length.
NormalForm normalize(std::span<const Token> tokens, RewriteStats* stats = nullptr);
NormalForm normalize(const GateWord& w, RewriteStats* stats = nullptr);

/// Double-coset form g1 . c . g2 with c canonical.
CosetForm canonicalize(const NormalForm& f, RewriteStats* stats = nullptr);
CosetForm canonicalize(const GateWord& w, RewriteStats* stats = nullptr);

/// Normal form of c^-1, shaped H.c'.H or H.c'.H.S^3 when c starts with TH.
NormalForm invert_normalized(const NormalizedCircuit& c, RewriteStats* stats = nullptr);
NormalForm inverse(const NormalForm& f, RewriteStats* stats = nullptr);

/// How often each cancellation pattern fired while composing.
struct CompositionStats {
    std::size_t compositions = 0;
    std::size_t no_cancellation = 0;  ///< no T.T collapse at the seam
    std::size_t single = 0;           ///< exactly one collapse (trailing T meets a leading TH)
    std::size_t cascade = 0;          ///< a collapse uncovered TH.(SH)^2.TH and kept cancelling
    std::size_t t_removed = 0;
};

/// Normal form of a.b; T-count never exceeds the sum of the parts.
NormalForm compose_reduce(const CosetForm& a, const NormalForm& b, CompositionStats* stats = nullptr);
NormalForm compose(const NormalForm& a, const NormalForm& b, CompositionStats* stats = nullptr);
NormalForm to_normal_form(const CosetForm& f);

/// THxT.. prefix spanned by up to four T gates, rewritten as left . (TH)^(n-1) T . right.
struct SqueezeIdentity {
    std::string_view pattern;
    CliffordElement left;
    std::string_view core;
    CliffordElement right;
};

/// The eleven squeeze identities, one per SH placement among the first four syllables.
const std::vector<SqueezeIdentity>& squeeze_identities();

/// Checks every squeeze identity and SHTH = HSHT.HSS exactly and that the table covers all SH
/// placements. Throws std::logic_error naming the failing identity.
void verify_rewrite_identities();

}  // namespace qcanon
