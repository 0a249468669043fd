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

#include "qcanon/rewrite.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace qcanon {

namespace {

using cliff::H;
using cliff::HSH;
using cliff::Id;

CliffordElement marker_element(CommutationKind k) {
    switch (k) {
        case CommutationKind::Plain:
            return Id;
        case CommutationKind::HPrefix:
            return H;
        case CommutationKind::HshPrefix:
            return HSH;
    }
    return Id;
}

void push_blocks(TokenList& out, const NormalizedCircuit& c) {
    for (bool sh : c.blocks()) {
        if (sh) out.push_back(Token::clifford(cliff::SH));
        out.push_back(Token::t());
        out.push_back(Token::clifford(H));
    }
}

// SH placement among blocks 1..m-1 of the prefix spanned by the first m T gates.
struct SqueezeKey {
    int m = 0;
    unsigned flags = 0;
    bool operator==(const SqueezeKey&) const = default;
};

std::optional<SqueezeKey> squeeze_key(std::string_view pattern) {
    SqueezeKey key;
    std::string segment;
    bool seen_t = false;
    int block = 0;
    for (char c : pattern) {
        if (c == 'T') {
            if (seen_t) {
                if (segment == "HSH") {
                    key.flags |= 1u << block;
                } else if (segment != "H") {
                    return std::nullopt;
                }
            } else if (!segment.empty()) {
                return std::nullopt;
            }
            seen_t = true;
            ++block;
            ++key.m;
            segment.clear();
        } else {
            segment.push_back(c);
        }
    }
    if (!segment.empty()) return std::nullopt;
    key.flags >>= 1;  // bit 0 <-> block 1
    return key;
}

const std::vector<SqueezeIdentity> kSqueeze = {
    {"THSHT", CliffordElement(2), "THT", CliffordElement(4)},
    {"THTHSHT", CliffordElement(3), "THTHT", CliffordElement(4)},
    {"THSHTHT", CliffordElement(10), "THTHT", CliffordElement(11)},
    {"THSHTHSHT", CliffordElement(2), "THTHT", CliffordElement(5)},
    {"THTHTHSHT", CliffordElement(11), "THTHTHT", CliffordElement(4)},
    {"THTHSHTHT", CliffordElement(12), "THTHTHT", CliffordElement(11)},
    {"THSHTHTHT", CliffordElement(4), "THTHTHT", CliffordElement(12)},
    {"THTHSHTHSHT", CliffordElement(3), "THTHTHT", CliffordElement(5)},
    {"THSHTHSHTHT", CliffordElement(5), "THTHTHT", CliffordElement(3)},
    {"THSHTHTHSHT", CliffordElement(10), "THTHTHT", CliffordElement(10)},
    {"THSHTHSHTHSHT", CliffordElement(2), "THTHTHT", CliffordElement(2)},
};

struct SqueezeLookup {
    // [m][flags] -> identity index
    std::array<std::array<int, 8>, 5> index{};
};

const SqueezeLookup& squeeze_lookup() {
    static const SqueezeLookup lookup = [] {
        verify_rewrite_identities();
        SqueezeLookup l;
        for (auto& row : l.index) row.fill(-1);
        for (std::size_t i = 0; i < kSqueeze.size(); ++i) {
            auto key = squeeze_key(kSqueeze[i].pattern);
            l.index[key->m][key->flags] = static_cast<int>(i);
        }
        return l;
    }();
    return lookup;
}

}  // namespace

TokenList tokens_of(const GateWord& w) {
    TokenList out;
    out.reserve(w.size());
    for (Gate g : w.gates) {
        switch (g) {
            case Gate::T:
                out.push_back(Token::t());
                break;
            case Gate::H:
                out.push_back(Token::clifford(H));
                break;
            case Gate::S:
                out.push_back(Token::clifford(cliff::S));
                break;
        }
    }
    return out;
}

TokenList tokens_of(const NormalForm& f) {
    TokenList out;
    out.reserve(3 * f.body.blocks().size() + 2);
    if (f.h_prefix) out.push_back(Token::clifford(H));
    push_blocks(out, f.body);
    out.push_back(Token::clifford(f.tail));
    return out;
}

TokenList tokens_of(const CosetForm& f) {
    TokenList out;
    out.reserve(3 * f.body.blocks().size() + 2);
    out.push_back(Token::clifford(f.g1));
    push_blocks(out, f.body.circuit());
    out.push_back(Token::clifford(f.g2));
    return out;
}

NormalForm normalize(std::span<const Token> tokens, RewriteStats* stats) {
    const auto& grp = CliffordGroup::instance();
    std::vector<CommutationKind> markers;
    markers.reserve(tokens.size() / 2 + 1);
    CliffordElement pending = Id;
    std::size_t rewrites = 0;
    std::size_t merges = 0;

    for (const Token& tok : tokens) {
        if (!tok.is_t) {
            pending = grp.mul(pending, tok.g);
            ++rewrites;
            continue;
        }
        const CommutationRule rule =
            pending.is_identity() ? CommutationRule{CommutationKind::Plain, Id} : grp.commute_through_t(pending);
        ++rewrites;
        if (rule.kind == CommutationKind::Plain && !markers.empty()) {
            // m.T.(T.r) = m.S.r: both T gates fold into the pending Clifford.
            const CliffordElement m = marker_element(markers.back());
            markers.pop_back();
            pending = grp.mul(grp.mul(m, cliff::S), rule.residual);
            rewrites += 2;
            ++merges;
        } else {
            markers.push_back(rule.kind);
            pending = rule.residual;
            ++rewrites;
        }
    }

    NormalForm f;
    if (markers.empty()) {
        f.tail = pending;
    } else {
        // m1.T.m2.T...mn.T.p = [H.] (TH)[SH](TH)... . (H.p)
        std::vector<bool> blocks(markers.size());
        f.h_prefix = markers.front() != CommutationKind::Plain;
        for (std::size_t i = 0; i < markers.size(); ++i) blocks[i] = markers[i] == CommutationKind::HshPrefix;
        f.body = NormalizedCircuit(std::move(blocks));
        f.tail = grp.mul(H, pending);
        ++rewrites;
    }
    if (stats) {
        stats->rewrites += rewrites;
        stats->t_merges += merges;
    }
    return f;
}

NormalForm normalize(const GateWord& w, RewriteStats* stats) {
    const TokenList tokens = tokens_of(w);
    return normalize(tokens, stats);
}

CosetForm canonicalize(const NormalForm& input, RewriteStats* stats) {
    const auto& grp = CliffordGroup::instance();
    const SqueezeLookup& lookup = squeeze_lookup();

    CliffordElement g1 = Id;
    NormalForm f = input;
    for (;;) {
        // Leading H and a leading SH syllable are absorbed into the left coset factor.
        if (f.h_prefix) {
            g1 = grp.mul(g1, H);
            f.h_prefix = false;
            if (stats) ++stats->rewrites;
        }
        std::vector<bool> blocks = f.body.blocks();
        if (blocks.empty()) return CosetForm{grp.mul(g1, f.tail), CanonicalCircuit(), Id};
        if (blocks[0]) {
            g1 = grp.mul(g1, cliff::SH);
            blocks[0] = false;
            if (stats) ++stats->rewrites;
        }

        const int n = static_cast<int>(blocks.size());
        const int m = std::min(n, 4);
        unsigned flags = 0;
        for (int i = 1; i < m; ++i) flags |= static_cast<unsigned>(blocks[i]) << (i - 1);
        if (flags == 0) return CosetForm{g1, CanonicalCircuit(NormalizedCircuit(std::move(blocks))), f.tail};

        const SqueezeIdentity& sq = kSqueeze[static_cast<std::size_t>(lookup.index[m][flags])];
        g1 = grp.mul(g1, sq.left);

        // (TH)^(m-1) T . right . H . rest . tail, renormalized in one pass. The normalizer emits a
        // fresh H or HSH marker after the m-th T, which is the SH -> H.SH rewrite of the SH lemma.
        TokenList tokens;
        tokens.reserve(3 * blocks.size() + 4);
        for (int i = 0; i < m - 1; ++i) {
            tokens.push_back(Token::t());
            tokens.push_back(Token::clifford(H));
        }
        tokens.push_back(Token::t());
        tokens.push_back(Token::clifford(sq.right));
        tokens.push_back(Token::clifford(H));
        push_blocks(tokens, NormalizedCircuit(std::vector<bool>(blocks.begin() + m, blocks.end())));
        tokens.push_back(Token::clifford(f.tail));
        if (stats) stats->rewrites += 2;

        NormalForm next = normalize(tokens, stats);
        if (next.t_count() >= n) {
            if (next.t_count() > n) throw std::logic_error("canonicalization increased the T-count");
        } else if (stats) {
            ++stats->clause3;
        }
        f = std::move(next);
    }
}

CosetForm canonicalize(const GateWord& w, RewriteStats* stats) { return canonicalize(normalize(w, stats), stats); }

NormalForm invert_normalized(const NormalizedCircuit& c, RewriteStats* stats) {
    // (TH)^-1 = H.T.S^3 and (SHTH)^-1 = H.T.S^3.H.S^3, since T^-1 = T.S^3 up to phase.
    TokenList tokens;
    tokens.reserve(5 * c.blocks().size());
    const auto& blocks = c.blocks();
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        tokens.push_back(Token::clifford(H));
        tokens.push_back(Token::t());
        tokens.push_back(Token::clifford(cliff::SSS));
        if (*it) {
            tokens.push_back(Token::clifford(H));
            tokens.push_back(Token::clifford(cliff::SSS));
        }
    }
    return normalize(tokens, stats);
}

NormalForm inverse(const NormalForm& f, RewriteStats* stats) {
    const auto& grp = CliffordGroup::instance();
    TokenList tokens;
    tokens.reserve(5 * f.body.blocks().size() + 2);
    tokens.push_back(Token::clifford(grp.inverse(f.tail)));
    const auto& blocks = f.body.blocks();
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        tokens.push_back(Token::clifford(H));
        tokens.push_back(Token::t());
        tokens.push_back(Token::clifford(cliff::SSS));
        if (*it) {
            tokens.push_back(Token::clifford(H));
            tokens.push_back(Token::clifford(cliff::SSS));
        }
    }
    if (f.h_prefix) tokens.push_back(Token::clifford(H));
    return normalize(tokens, stats);
}

namespace {

NormalForm compose_tokens(TokenList tokens, int t_before, CompositionStats* stats) {
    RewriteStats rs;
    NormalForm out = normalize(tokens, &rs);
    if (stats) {
        ++stats->compositions;
        if (rs.t_merges == 0) {
            ++stats->no_cancellation;
        } else if (rs.t_merges == 1) {
            ++stats->single;
        } else {
            ++stats->cascade;
        }
        stats->t_removed += static_cast<std::size_t>(t_before - out.t_count());
    }
    return out;
}

}  // namespace

NormalForm compose_reduce(const CosetForm& a, const NormalForm& b, CompositionStats* stats) {
    TokenList tokens = tokens_of(a);
    TokenList rhs = tokens_of(b);
    tokens.insert(tokens.end(), rhs.begin(), rhs.end());
    return compose_tokens(std::move(tokens), a.t_count() + b.t_count(), stats);
}

NormalForm compose(const NormalForm& a, const NormalForm& b, CompositionStats* stats) {
    TokenList tokens = tokens_of(a);
    TokenList rhs = tokens_of(b);
    tokens.insert(tokens.end(), rhs.begin(), rhs.end());
    return compose_tokens(std::move(tokens), a.t_count() + b.t_count(), stats);
}

NormalForm to_normal_form(const CosetForm& f) {
    const TokenList tokens = tokens_of(f);
    return normalize(tokens);
}

const std::vector<SqueezeIdentity>& squeeze_identities() {
    squeeze_lookup();
    return kSqueeze;
}

void verify_rewrite_identities() {
    std::array<std::array<bool, 8>, 5> covered{};
    for (const auto& sq : kSqueeze) {
        const auto key = squeeze_key(sq.pattern);
        const auto core_key = squeeze_key(sq.core);
        const std::string name = std::string(sq.pattern) + " = G" + std::to_string(sq.left.idx) + "." +
                                 std::string(sq.core) + ".G" + std::to_string(sq.right.idx);
        if (!key || !core_key || core_key->flags != 0 || core_key->m != key->m || key->m < 2 || key->m > 4) {
            throw std::logic_error("malformed squeeze identity " + name);
        }
        const ExactUnitary lhs = evaluate_word(sq.pattern);
        const ExactUnitary rhs = evaluate_word(std::string(clifford_words()[sq.left.idx]) + std::string(sq.core) +
                                               std::string(clifford_words()[sq.right.idx]));
        if (!psu2_equal(lhs, rhs)) throw std::logic_error("squeeze identity fails: " + name);
        covered[key->m][key->flags] = true;
    }
    for (int m = 2; m <= 4; ++m) {
        for (unsigned flags = 1; flags < (1u << (m - 1)); ++flags) {
            if (!covered[m][flags]) throw std::logic_error("squeeze table misses an SH placement");
        }
    }
    if (!psu2_equal(evaluate_word("SHTH"), evaluate_word("HSHTHSS"))) {
        throw std::logic_error("SHTH = HSHT.HSS fails");
    }
}

}  // namespace qcanon
