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
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qcanon/clifford.hpp"
#include "qcanon/exact_unitary.hpp"
#include "qcanon/psu2.hpp"

namespace qcanon {

/// Plain gate sequence over {H, T, S}, read left to right as a matrix product.
struct GateWord {
    std::vector<Gate> gates;

    std::size_t size() const { return gates.size(); }
    bool operator==(const GateWord&) const = default;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position) : std::invalid_argument(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Accepts H, T, S in either case; whitespace is skipped. Throws ParseError with the offending offset.
GateWord parse(std::string_view text);
std::string serialize(const GateWord& w);

/// Product of TH / SH.TH blocks; bit i is set iff block i is SH.TH. The empty circuit is the identity.
class NormalizedCircuit {
public:
    NormalizedCircuit() = default;
    explicit NormalizedCircuit(std::vector<bool> blocks) : blocks_(std::move(blocks)) {}

    /// Parses syllable form such as "THSHTH". Throws ParseError if the text is not a block sequence.
    static NormalizedCircuit from_syllables(std::string_view text);

    const std::vector<bool>& blocks() const { return blocks_; }
    int t_count() const { return static_cast<int>(blocks_.size()); }
    bool empty() const { return blocks_.empty(); }
    /// No SH syllable before the fifth syllable.
    bool is_canonical() const;

    bool operator==(const NormalizedCircuit&) const = default;
    /// Lexicographic on the block sequence.
    friend bool operator<(const NormalizedCircuit& a, const NormalizedCircuit& b) { return a.blocks_ < b.blocks_; }

private:
    std::vector<bool> blocks_;
};

/// A normalized circuit that is also canonical; construction validates.
class CanonicalCircuit {
public:
    CanonicalCircuit() = default;
    /// Throws std::invalid_argument if the circuit has an SH syllable in its first four blocks.
    explicit CanonicalCircuit(NormalizedCircuit c);

    const NormalizedCircuit& circuit() const { return c_; }
    const std::vector<bool>& blocks() const { return c_.blocks(); }
    int t_count() const { return c_.t_count(); }

    bool operator==(const CanonicalCircuit&) const = default;

private:
    NormalizedCircuit c_;
};

/// [H.] body . tail
struct NormalForm {
    bool h_prefix = false;
    NormalizedCircuit body;
    CliffordElement tail;

    int t_count() const { return body.t_count(); }
    bool operator==(const NormalForm&) const = default;
};

/// g1 . body . g2
struct CosetForm {
    CliffordElement g1;
    CanonicalCircuit body;
    CliffordElement g2;

    int t_count() const { return body.t_count(); }
    bool operator==(const CosetForm&) const = default;
};

std::string serialize(const NormalizedCircuit& c);  ///< syllable form, "" for the identity

GateWord to_gate_word(const NormalizedCircuit& c);
GateWord to_gate_word(const NormalForm& f);
GateWord to_gate_word(const CosetForm& f);

/// Gate strings; Clifford factors are spelled with their H/S words.
inline std::string gate_string(const NormalForm& f) { return serialize(to_gate_word(f)); }
inline std::string gate_string(const CosetForm& f) { return serialize(to_gate_word(f)); }

ExactUnitary evaluate(const GateWord& w);
ExactUnitary evaluate(const NormalizedCircuit& c);
ExactUnitary evaluate(const NormalForm& f);
ExactUnitary evaluate(const CosetForm& f);

/// Gate-by-gate double-precision product.
Quat evaluate_numeric(const GateWord& w);
Quat evaluate_numeric(const NormalForm& f);
Quat evaluate_numeric(const CosetForm& f);

/// Interior Clifford segments between consecutive T gates are exactly H or HSH.
bool has_normal_shape(const GateWord& w);

/// Blocks packed LSB-first, ceil(n/8) bytes.
std::vector<std::uint8_t> pack_blocks(const std::vector<bool>& blocks);
std::vector<bool> unpack_blocks(const std::uint8_t* bytes, std::size_t n_blocks);

std::string base64_encode(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> base64_decode(std::string_view text);

/// {g1: int, blocks: base64 bitstring, t_count: int, g2: int}
void to_json(nlohmann::json& j, const CosetForm& f);
void from_json(const nlohmann::json& j, CosetForm& f);
/// {h_prefix: bool, blocks: base64, t_count: int, tail: int, gates: string}
void to_json(nlohmann::json& j, const NormalForm& f);

}  // namespace qcanon
