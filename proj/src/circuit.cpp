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

#include "qcanon/circuit.hpp"

#include <algorithm>
#include <cctype>

#include <boost/archive/iterators/base64_from_binary.hpp>
#include <boost/archive/iterators/binary_from_base64.hpp>
#include <boost/archive/iterators/transform_width.hpp>

namespace qcanon {

namespace {

void append_word(GateWord& w, std::string_view letters) {
    for (char c : letters) w.gates.push_back(*gate_from_symbol(c));
}

void append_blocks(GateWord& w, const NormalizedCircuit& c) {
    for (bool sh : c.blocks()) {
        if (sh) append_word(w, "SH");
        append_word(w, "TH");
    }
}

Quat gate_quaternion(Gate g) {
    static const std::array<Quat, 3> q = {to_quaternion(ExactUnitary::gate(Gate::H)),
                                          to_quaternion(ExactUnitary::gate(Gate::T)),
                                          to_quaternion(ExactUnitary::gate(Gate::S))};
    return q[static_cast<int>(g)];
}

}  // namespace

GateWord parse(std::string_view text) {
    GateWord w;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        auto g = gate_from_symbol(c);
        if (!g) {
            throw ParseError("illegal gate symbol '" + std::string(1, c) + "' at position " + std::to_string(i), i);
        }
        w.gates.push_back(*g);
    }
    return w;
}

std::string serialize(const GateWord& w) {
    std::string s;
    s.reserve(w.size());
    for (Gate g : w.gates) s.push_back(gate_symbol(g));
    return s;
}

NormalizedCircuit NormalizedCircuit::from_syllables(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::toupper(c)));
    }
    std::vector<bool> blocks;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s.compare(i, 4, "SHTH") == 0) {
            blocks.push_back(true);
            i += 4;
        } else if (s.compare(i, 2, "TH") == 0) {
            blocks.push_back(false);
            i += 2;
        } else {
            throw ParseError("not a TH/SHTH block sequence at position " + std::to_string(i), i);
        }
    }
    return NormalizedCircuit(std::move(blocks));
}

bool NormalizedCircuit::is_canonical() const {
    const std::size_t n = std::min<std::size_t>(4, blocks_.size());
    return std::none_of(blocks_.begin(), blocks_.begin() + static_cast<std::ptrdiff_t>(n), [](bool b) { return b; });
}

CanonicalCircuit::CanonicalCircuit(NormalizedCircuit c) : c_(std::move(c)) {
    if (!c_.is_canonical()) throw std::invalid_argument("circuit has an SH syllable in its first four blocks");
}

std::string serialize(const NormalizedCircuit& c) {
    std::string s;
    for (bool sh : c.blocks()) s += sh ? "SHTH" : "TH";
    return s;
}

GateWord to_gate_word(const NormalizedCircuit& c) {
    GateWord w;
    append_blocks(w, c);
    return w;
}

GateWord to_gate_word(const NormalForm& f) {
    GateWord w;
    if (f.h_prefix) append_word(w, "H");
    append_blocks(w, f.body);
    append_word(w, clifford_words()[f.tail.idx]);
    return w;
}

GateWord to_gate_word(const CosetForm& f) {
    GateWord w;
    append_word(w, clifford_words()[f.g1.idx]);
    append_blocks(w, f.body.circuit());
    append_word(w, clifford_words()[f.g2.idx]);
    return w;
}

ExactUnitary evaluate(const GateWord& w) {
    ExactUnitary u;
    for (Gate g : w.gates) u.apply_right(g);
    return u;
}

ExactUnitary evaluate(const NormalizedCircuit& c) { return evaluate(to_gate_word(c)); }
ExactUnitary evaluate(const NormalForm& f) { return evaluate(to_gate_word(f)); }
ExactUnitary evaluate(const CosetForm& f) { return evaluate(to_gate_word(f)); }

Quat evaluate_numeric(const GateWord& w) {
    Quat q = Quat::Identity();
    for (Gate g : w.gates) q = q * gate_quaternion(g);
    return q.normalized();
}

Quat evaluate_numeric(const NormalForm& f) { return evaluate_numeric(to_gate_word(f)); }
Quat evaluate_numeric(const CosetForm& f) { return evaluate_numeric(to_gate_word(f)); }

bool has_normal_shape(const GateWord& w) {
    std::string segment;
    bool seen_t = false;
    for (Gate g : w.gates) {
        if (g == Gate::T) {
            if (seen_t && segment != "H" && segment != "HSH") return false;
            seen_t = true;
            segment.clear();
        } else {
            segment.push_back(gate_symbol(g));
        }
    }
    return true;
}

std::vector<std::uint8_t> pack_blocks(const std::vector<bool>& blocks) {
    std::vector<std::uint8_t> bytes((blocks.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i]) bytes[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
    }
    return bytes;
}

std::vector<bool> unpack_blocks(const std::uint8_t* bytes, std::size_t n_blocks) {
    std::vector<bool> blocks(n_blocks);
    for (std::size_t i = 0; i < n_blocks; ++i) blocks[i] = (bytes[i / 8] >> (i % 8)) & 1u;
    return blocks;
}

std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
    using namespace boost::archive::iterators;
    using Encoder = base64_from_binary<transform_width<const std::uint8_t*, 6, 8>>;
    std::string s(Encoder(bytes.data()), Encoder(bytes.data() + bytes.size()));
    s.append((3 - bytes.size() % 3) % 3, '=');
    return s;
}

std::vector<std::uint8_t> base64_decode(std::string_view text) {
    using namespace boost::archive::iterators;
    using Decoder = transform_width<binary_from_base64<const char*>, 8, 6>;
    std::string s(text);
    const auto pad = static_cast<std::size_t>(std::count(s.begin(), s.end(), '='));
    std::replace(s.begin(), s.end(), '=', 'A');
    std::vector<std::uint8_t> out(Decoder(s.data()), Decoder(s.data() + s.size()));
    out.resize(out.size() - std::min(pad, out.size()));
    return out;
}

void to_json(nlohmann::json& j, const CosetForm& f) {
    j = nlohmann::json{{"g1", f.g1.idx},
                       {"blocks", base64_encode(pack_blocks(f.body.blocks()))},
                       {"t_count", f.t_count()},
                       {"g2", f.g2.idx}};
}

void from_json(const nlohmann::json& j, CosetForm& f) {
    const int g1 = j.at("g1").get<int>();
    const int g2 = j.at("g2").get<int>();
    const int t = j.at("t_count").get<int>();
    if (g1 < 0 || g1 >= kCliffordOrder || g2 < 0 || g2 >= kCliffordOrder || t < 0) {
        throw std::invalid_argument("CosetForm JSON field out of range");
    }
    const auto bytes = base64_decode(j.at("blocks").get<std::string>());
    if (bytes.size() < static_cast<std::size_t>((t + 7) / 8)) throw std::invalid_argument("CosetForm blocks too short");
    f.g1 = CliffordElement(g1);
    f.g2 = CliffordElement(g2);
    f.body = CanonicalCircuit(NormalizedCircuit(unpack_blocks(bytes.data(), static_cast<std::size_t>(t))));
}

void to_json(nlohmann::json& j, const NormalForm& f) {
    j = nlohmann::json{{"h_prefix", f.h_prefix},
                       {"blocks", base64_encode(pack_blocks(f.body.blocks()))},
                       {"body", serialize(f.body)},
                       {"t_count", f.t_count()},
                       {"tail", f.tail.idx},
                       {"gates", gate_string(f)}};
}

}  // namespace qcanon
