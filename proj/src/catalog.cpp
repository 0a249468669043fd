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

#include "qcanon/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <thread>

#include <boost/crc.hpp>

#include "qcanon/exact_unitary.hpp"

namespace qcanon {

namespace {

using Crc64 = boost::crc_optimal<64, 0x42F0E1EBA9EA3693ULL, ~0ULL, ~0ULL, true, true>;

constexpr char kMagic[4] = {'Q', 'C', 'A', 'N'};

struct RawEntry {
    CatalogEntry entry;
    Real2 trace_sq;
};

void append_block(ExactUnitary& u, bool sh) {
    if (sh) {
        u.apply_right(Gate::S);
        u.apply_right(Gate::H);
    }
    u.apply_right(Gate::T);
    u.apply_right(Gate::H);
}

RawEntry make_entry(const ExactUnitary& u, std::uint64_t bits, int t) {
    RawEntry r;
    r.entry.bits = bits;
    r.entry.t = static_cast<std::uint8_t>(t);
    r.trace_sq = u.abs_trace_sq();
    r.entry.trace = std::sqrt(std::max(0.0, r.trace_sq.to_double()));
    if (!(r.trace_sq == Real2(4, 0, 0))) r.entry.axis = bloch_axis(u).n;
    return r;
}

struct Node {
    ExactUnitary u;
    std::uint64_t bits = 0;
    int t = 0;
};

void dfs(const Node& node, int t_max, std::vector<RawEntry>& out) {
    out.push_back(make_entry(node.u, node.bits, node.t));
    if (node.t >= t_max) return;
    for (int sh = 0; sh < (node.t >= 4 ? 2 : 1); ++sh) {
        Node child{node.u, node.bits | (static_cast<std::uint64_t>(sh) << node.t), node.t + 1};
        append_block(child.u, sh != 0);
        dfs(child, t_max, out);
    }
}

class Writer {
public:
    void u8(std::uint8_t v) { buf_.push_back(v); }
    void u32(std::uint32_t v) { le(v, 4); }
    void u64(std::uint64_t v) { le(v, 8); }
    void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
    void bytes(const void* p, std::size_t n) {
        const auto* b = static_cast<const std::uint8_t*>(p);
        buf_.insert(buf_.end(), b, b + n);
    }
    std::vector<std::uint8_t>& buffer() { return buf_; }

private:
    void le(std::uint64_t v, int n) {
        for (int i = 0; i < n; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    std::vector<std::uint8_t> buf_;
};

class Reader {
public:
    Reader(const std::uint8_t* data, std::size_t size) : data_(data), size_(size) {}
    std::size_t remaining() const { return size_ - pos_; }
    std::uint8_t u8() { return static_cast<std::uint8_t>(le(1)); }
    std::uint32_t u32() { return static_cast<std::uint32_t>(le(4)); }
    std::uint64_t u64() { return le(8); }
    double f64() { return std::bit_cast<double>(u64()); }
    const std::uint8_t* take(std::size_t n) {
        need(n);
        const std::uint8_t* p = data_ + pos_;
        pos_ += n;
        return p;
    }

private:
    void need(std::size_t n) const {
        if (remaining() < n) throw CatalogError("catalog file truncated");
    }
    std::uint64_t le(int n) {
        need(static_cast<std::size_t>(n));
        std::uint64_t v = 0;
        for (int i = 0; i < n; ++i) v |= static_cast<std::uint64_t>(data_[pos_ + i]) << (8 * i);
        pos_ += static_cast<std::size_t>(n);
        return v;
    }
    const std::uint8_t* data_;
    std::size_t size_;
    std::size_t pos_ = 0;
};

}  // namespace

NormalizedCircuit CatalogEntry::circuit() const {
    std::vector<bool> blocks(t);
    for (int i = 0; i < t; ++i) blocks[i] = (bits >> i) & 1u;
    return NormalizedCircuit(std::move(blocks));
}

Quat CatalogEntry::quaternion() const {
    const double w = std::clamp(0.5 * trace, 0.0, 1.0);
    const double s = std::sqrt(std::max(0.0, (1.0 - w) * (1.0 + w)));
    return Quat(w, s * axis.x(), s * axis.y(), s * axis.z());
}

bool blocks_less(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    return (a & (diff & (~diff + 1))) == 0;
}

bool entry_less(const CatalogEntry& a, const CatalogEntry& b) {
    if (a.t != b.t) return a.t < b.t;
    return blocks_less(a.bits, b.bits);
}

void TraceBucket::build_index() {
    for (auto& v : face_idx) v.clear();
    for (auto& v : edge_idx) v.clear();
    for (auto& v : vertex_idx) v.clear();
    if (degenerate()) return;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const TileLocation loc = tile_of(entries[i].axis);
        const auto id = static_cast<std::uint32_t>(i);
        face_idx[loc.face].push_back(id);
        edge_idx[loc.nearest_edge].push_back(id);
        vertex_idx[loc.nearest_vertex].push_back(id);
    }
}

std::size_t Catalog::size() const {
    std::size_t n = 0;
    for (const auto& b : buckets_) n += b.entries.size();
    return n;
}

Catalog Catalog::build(int t_max, unsigned threads) {
    if (t_max < 0 || t_max > kMaxCatalogTCount) throw std::invalid_argument("t_max out of range");
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

    // Entries shallower than the split depth are produced serially; deeper subtrees are shared out.
    const int split = std::min(t_max, 4 + static_cast<int>(std::bit_width(threads)) + 1);
    std::vector<RawEntry> raw;
    std::vector<Node> roots;
    {
        Node n{ExactUnitary::identity(), 0, 0};
        std::vector<Node> frontier{n};
        for (int depth = 0; depth < split; ++depth) {
            std::vector<Node> next;
            for (const Node& node : frontier) {
                raw.push_back(make_entry(node.u, node.bits, node.t));
                for (int sh = 0; sh < (node.t >= 4 ? 2 : 1); ++sh) {
                    Node child{node.u, node.bits | (static_cast<std::uint64_t>(sh) << node.t), node.t + 1};
                    append_block(child.u, sh != 0);
                    next.push_back(std::move(child));
                }
            }
            frontier = std::move(next);
        }
        roots = std::move(frontier);
    }

    std::vector<std::vector<RawEntry>> parts(roots.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t i = cursor++; i < roots.size(); i = cursor++) dfs(roots[i], t_max, parts[i]);
    };
    const unsigned n_workers = std::min<std::size_t>(threads, std::max<std::size_t>(1, roots.size()));
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    }
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(raw));

    // Group by exact |tr|^2; doubles only pre-sort.
    std::sort(raw.begin(), raw.end(), [](const RawEntry& a, const RawEntry& b) {
        if (a.entry.trace != b.entry.trace) return a.entry.trace < b.entry.trace;
        return entry_less(a.entry, b.entry);
    });
    Catalog db;
    db.t_max_ = t_max;
    std::size_t i = 0;
    while (i < raw.size()) {
        std::size_t j = i + 1;
        while (j < raw.size() && raw[j].entry.trace - raw[j - 1].entry.trace <= 1e-9) ++j;
        std::vector<std::pair<Real2, TraceBucket>> groups;
        for (std::size_t k = i; k < j; ++k) {
            auto it = std::find_if(groups.begin(), groups.end(),
                                   [&](const auto& g) { return g.first == raw[k].trace_sq; });
            if (it == groups.end()) {
                TraceBucket b;
                b.key = std::sqrt(std::max(0.0, raw[k].trace_sq.to_double()));
                groups.emplace_back(raw[k].trace_sq, std::move(b));
                it = std::prev(groups.end());
            }
            it->second.entries.push_back(raw[k].entry);
        }
        for (auto& g : groups) db.buckets_.push_back(std::move(g.second));
        i = j;
    }
    std::sort(db.buckets_.begin(), db.buckets_.end(),
              [](const TraceBucket& a, const TraceBucket& b) { return a.key < b.key; });
    for (auto& b : db.buckets_) {
        for (auto& e : b.entries) e.trace = b.key;
        std::sort(b.entries.begin(), b.entries.end(), entry_less);
        b.build_index();
    }
    return db;
}

std::vector<std::uint8_t> Catalog::serialize() const {
    Writer w;
    w.bytes(kMagic, sizeof kMagic);
    w.u32(kFormatVersion);
    w.u32(static_cast<std::uint32_t>(t_max_));
    for (const auto& b : buckets_) {
        w.f64(b.key);
        w.u64(b.entries.size());
        for (const auto& e : b.entries) {
            w.u8(e.t);
            for (int k = 0; k < (e.t + 7) / 8; ++k) w.u8(static_cast<std::uint8_t>(e.bits >> (8 * k)));
            w.f64(e.trace);
            w.f64(e.axis.x());
            w.f64(e.axis.y());
            w.f64(e.axis.z());
        }
    }
    Crc64 crc;
    crc.process_bytes(w.buffer().data(), w.buffer().size());
    w.u64(crc.checksum());
    return std::move(w.buffer());
}

Catalog Catalog::deserialize(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < sizeof kMagic + 8 + 8) throw CatalogError("catalog file truncated");
    if (std::memcmp(bytes.data(), kMagic, sizeof kMagic) != 0) throw CatalogError("not a catalog file");
    const std::size_t body = bytes.size() - 8;
    Crc64 crc;
    crc.process_bytes(bytes.data(), body);
    Reader tail(bytes.data() + body, 8);
    if (tail.u64() != crc.checksum()) throw CatalogError("catalog checksum mismatch");

    Reader r(bytes.data(), body);
    r.take(sizeof kMagic);
    const std::uint32_t version = r.u32();
    if (version != kFormatVersion) {
        throw CatalogError("unsupported catalog version " + std::to_string(version));
    }
    Catalog db;
    const std::uint32_t t_max = r.u32();
    if (t_max > static_cast<std::uint32_t>(kMaxCatalogTCount)) throw CatalogError("catalog t_max out of range");
    db.t_max_ = static_cast<int>(t_max);
    while (r.remaining() > 0) {
        TraceBucket b;
        b.key = r.f64();
        if (!db.buckets_.empty() && !(b.key > db.buckets_.back().key)) {
            throw CatalogError("catalog bucket keys not increasing");
        }
        const std::uint64_t count = r.u64();
        // Smallest entry is 33 bytes; reject counts the remaining bytes cannot hold.
        if (count > r.remaining() / 33) throw CatalogError("catalog file truncated");
        b.entries.resize(count);
        for (auto& e : b.entries) {
            e.t = r.u8();
            if (e.t > t_max) throw CatalogError("catalog entry exceeds t_max");
            const std::uint8_t* p = r.take(static_cast<std::size_t>((e.t + 7) / 8));
            e.bits = 0;
            for (int k = 0; k < (e.t + 7) / 8; ++k) e.bits |= static_cast<std::uint64_t>(p[k]) << (8 * k);
            e.trace = r.f64();
            const double x = r.f64();
            const double y = r.f64();
            const double z = r.f64();
            e.axis = Eigen::Vector3d(x, y, z);
        }
        b.build_index();
        db.buckets_.push_back(std::move(b));
    }
    return db;
}

void Catalog::save(const std::filesystem::path& path) const {
    const auto bytes = serialize();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CatalogError("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw CatalogError("failed writing " + path.string());
}

Catalog Catalog::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CatalogError("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return deserialize(bytes);
}

void for_each_canonical(int t_max, const std::function<void(const NormalizedCircuit&)>& fn) {
    if (t_max < 0) return;
    for (int t = 0; t <= std::min(t_max, 4); ++t) fn(NormalizedCircuit(std::vector<bool>(t, false)));
    for (int t = 5; t <= t_max; ++t) {
        const int free = t - 4;
        std::vector<bool> blocks(t, false);
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << free); ++v) {
            // Block 4 is the most significant free bit, so counting up is lexicographic order.
            for (int k = 0; k < free; ++k) blocks[4 + k] = (v >> (free - 1 - k)) & 1u;
            fn(NormalizedCircuit(blocks));
        }
    }
}

std::vector<NormalizedCircuit> enumerate_canonical(int t_max) {
    std::vector<NormalizedCircuit> out;
    for_each_canonical(t_max, [&](const NormalizedCircuit& c) { out.push_back(c); });
    return out;
}

std::uint64_t canonical_count_grammar(int t) {
    if (t < 0) return 0;
    if (t < 4) return static_cast<std::uint64_t>(t) + 1;
    return (std::uint64_t{1} << (t - 3)) + 3;
}

std::optional<std::uint64_t> canonical_count_published(int t) {
    if (t < 3) return std::nullopt;
    return (std::uint64_t{1} << (t - 3)) + 4;
}

std::vector<HomogeneityViolation> homogeneity_violations(const Catalog& db) {
    std::vector<HomogeneityViolation> out;
    for (const auto& b : db.buckets()) {
        if (b.entries.empty()) continue;
        // Entries are sorted by T-count.
        const int lo = b.entries.front().t;
        const int hi = b.entries.back().t;
        if (lo != hi) out.push_back({b.key, lo, hi});
    }
    return out;
}

std::size_t distinct_trace_keys(const Catalog& db, int k) {
    std::size_t n = 0;
    for (const auto& b : db.buckets()) {
        if (!b.entries.empty() && b.entries.front().t <= k) ++n;
    }
    return n;
}

}  // namespace qcanon
