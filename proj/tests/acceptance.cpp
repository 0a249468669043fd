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

// Acceptance runner: one PASS/FAIL line per criterion. Pass criterion numbers as arguments to
// run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "qcanon/catalog.hpp"
#include "qcanon/circuit.hpp"
#include "qcanon/clifford.hpp"
#include "qcanon/oracle.hpp"
#include "qcanon/rewrite.hpp"
#include "qcanon/search.hpp"
#include "qcanon/sk.hpp"

using namespace qcanon;

namespace {

// Pinned tolerances and budgets.
constexpr double kBudget1 = 1.0;
constexpr double kBudget3 = 60.0;
constexpr double kBudget4 = 600.0;
constexpr double kBudget5 = 10.0;
constexpr double kBudget7 = 300.0;
constexpr double kBudget8 = 300.0;
constexpr double kBudget10 = 900.0;
constexpr std::size_t kRewriteConstant = 32;
constexpr double kLinearScanTol = 1e-12;
constexpr double kSlopeTarget = 1.5;
constexpr double kSlopeTol = 0.1;
constexpr double kGrowthFactor = 5.0;
constexpr double kGrowthConstant = 8.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string random_gates(std::mt19937_64& rng, int len) {
    std::string s;
    for (int i = 0; i < len; ++i) s += "HTS"[rng() % 3];
    return s;
}

Quat haar(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    return Quat(n(rng), n(rng), n(rng), n(rng)).normalized();
}

const Catalog& catalog20() {
    static const Catalog db = Catalog::build(20);
    return db;
}

Outcome clifford_tables() {
    Outcome o;
    const auto t0 = Clock::now();
    CliffordTables tables;
    try {
        tables = build_tables();
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
    const auto& words = clifford_words();
    int distinct_fail = 0;
    for (int a = 0; a < kCliffordOrder; ++a)
        for (int b = a + 1; b < kCliffordOrder; ++b)
            if (psu2_equal(evaluate_word(words[a]), evaluate_word(words[b]))) ++distinct_fail;
    const ExactUnitary t = ExactUnitary::gate(Gate::T);
    int rows = 0, row_fail = 0;
    for (int g = 1; g < kCliffordOrder; ++g) {
        const CommutationRule r = tables.comm[g];
        ExactUnitary prefix = ExactUnitary::identity();
        if (r.kind == CommutationKind::HPrefix) prefix = evaluate_word("H");
        if (r.kind == CommutationKind::HshPrefix) prefix = evaluate_word("HSH");
        ++rows;
        if (!psu2_equal(evaluate_word(words[g]) * t, prefix * t * evaluate_word(words[r.residual.idx]))) ++row_fail;
    }
    const double el = seconds_since(t0);
    o.pass = distinct_fail == 0 && rows == 23 && row_fail == 0 && el < kBudget1;
    std::ostringstream d;
    d << "24 words, " << distinct_fail << " coincident pairs, " << rows << " rows, " << row_fail << " failing, "
      << el << " s";
    o.detail = d.str();
    return o;
}

Outcome squeeze_identities_exact() {
    try {
        verify_rewrite_identities();
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
    const std::size_t n = squeeze_identities().size();
    const bool lemma = psu2_equal(evaluate_word("SHTH"), evaluate_word("HSHTHSS"));
    return {n == 11 && lemma, std::to_string(n) + " squeeze identities, SHTH = HSHT.HSS " + (lemma ? "holds" : "fails")};
}

Outcome rewrite_soundness() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20260301);
    std::size_t unsound = 0, bad_shape = 0, over_linear = 0, over_quadratic = 0;
    for (int i = 0; i < 10000; ++i) {
        const GateWord w = parse(random_gates(rng, static_cast<int>(rng() % 257)));
        const ExactUnitary u = evaluate(w);
        RewriteStats ns;
        const NormalForm nf = normalize(w, &ns);
        RewriteStats cs;
        const CosetForm cf = canonicalize(nf, &cs);
        if (!psu2_equal(evaluate(nf), u) || !psu2_equal(evaluate(cf), u)) ++unsound;
        if (!has_normal_shape(to_gate_word(nf)) || !cf.body.circuit().is_canonical()) ++bad_shape;
        if (ns.rewrites > kRewriteConstant * std::max<std::size_t>(1, w.size())) ++over_linear;
        const std::size_t t = static_cast<std::size_t>(std::max(1, nf.t_count()));
        if (cs.rewrites > kRewriteConstant * t * t) ++over_quadratic;
    }
    const double el = seconds_since(t0);
    std::ostringstream d;
    d << "10000 words, unsound " << unsound << ", bad shape " << bad_shape << ", over linear bound " << over_linear
      << ", over quadratic bound " << over_quadratic << ", " << el << " s";
    return {unsound + bad_shape + over_linear + over_quadratic == 0 && el < kBudget3, d.str()};
}

Outcome coset_audit() {
    const auto t0 = Clock::now();
    const Theorem1Report r = theorem1_audit(8);
    const double el = seconds_since(t0);
    std::ostringstream d;
    d << r.circuits << " circuits, " << r.pairs << " pairs, " << r.translates << " translates, " << el << " s";
    if (!r.ok) d << ", witness " << r.witness;
    const bool all = r.translates == static_cast<std::uint64_t>(r.circuits) * 576;
    return {r.ok && all && el < kBudget4, d.str()};
}

Outcome parity() {
    const auto t0 = Clock::now();
    const ParityReport r = parity_audit(1000, 20260305);
    const double el = seconds_since(t0);
    std::ostringstream d;
    d << r.samples << " circuits, " << r.violations << " violations, " << r.mismatches << " mismatches, " << el
      << " s";
    if (!r.ok()) d << ", witness " << r.witness;
    return {r.ok() && r.samples == 1000 && el < kBudget5, d.str()};
}

Outcome counts() {
    const CosetCount oracle = coset_count(10);
    bool pass = true;
    std::ostringstream d;
    d << "t:enumerated/oracle/grammar/published";
    for (int t = 0; t <= 10; ++t) {
        const std::uint64_t e = enumerate_canonical(t).size();
        const std::uint64_t o = oracle.cumulative(t);
        const auto p = canonical_count_published(t);
        d << ' ' << t << ':' << e << '/' << o << '/' << canonical_count_grammar(t) << '/';
        if (p) {
            d << *p;
            const std::int64_t diff = static_cast<std::int64_t>(*p) - static_cast<std::int64_t>(e);
            if (std::abs(diff) > 1) pass = false;
        } else {
            d << '-';
        }
        if (e != o) pass = false;
    }
    return {pass, d.str()};
}

Outcome trace_scaling() {
    const auto t0 = Clock::now();
    const Catalog& db = catalog20();
    bool pass = true;
    std::ostringstream d;
    d << "k:keys/bound";
    for (int k = 10; k <= 20; ++k) {
        const std::size_t n = distinct_trace_keys(db, k);
        const double bound = 6.0 * std::pow(2.0, k / 2.0);
        d << ' ' << k << ':' << n << '/' << static_cast<long>(bound);
        if (static_cast<double>(n) > bound) pass = false;
    }
    const double el = seconds_since(t0);
    d << ", " << db.size() << " entries, " << el << " s";
    return {pass && el < kBudget7, d.str()};
}

Outcome search_optimality() {
    const auto t0 = Clock::now();
    const Catalog db = Catalog::build(12);
    const MinTCountOracle oracle(12);
    std::mt19937_64 rng(20260308);
    std::size_t queries = 0, found = 0, tcount_mismatch = 0, linear_mismatch = 0;
    for (int i = 0; i < 100; ++i) {
        const Quat q = haar(rng);
        for (double eps : {0.3, 0.1}) {
            ++queries;
            const ApproxResult a = approximate(q, eps, db);
            const ApproxResult l = approximate_linear(q, eps, db);
            const std::optional<int> brute = oracle.min_tcount(q, eps);
            if (a.found) ++found;
            if (a.found != brute.has_value() || (a.found && a.t_count != *brute)) ++tcount_mismatch;
            if (a.found != l.found ||
                (a.found && (a.t_count != l.t_count || std::abs(a.dist - l.dist) > kLinearScanTol)))
                ++linear_mismatch;
        }
    }
    const double el = seconds_since(t0);
    std::ostringstream d;
    d << queries << " queries, " << found << " found, " << tcount_mismatch << " t-count mismatches, "
      << linear_mismatch << " linear-scan mismatches, " << el << " s";
    return {tcount_mismatch == 0 && linear_mismatch == 0 && el < kBudget8, d.str()};
}

Outcome homogeneity() {
    const Catalog db = Catalog::build(14);
    const auto v = homogeneity_violations(db);
    std::ostringstream d;
    d << db.buckets().size() << " buckets, " << db.size() << " entries, " << v.size() << " violations";
    if (!v.empty()) d << ", first key " << v.front().key << " t " << v.front().min_t << ".." << v.front().max_t;
    return {v.empty(), d.str()};
}

Outcome sk_behaviour() {
    const auto t0 = Clock::now();
    const Catalog& db = catalog20();
    SkConfig cfg;
    cfg.db = &db;
    std::mt19937_64 rng(20260310);
    constexpr int kTargets = 100;
    std::vector<double> mean_dist(4, 0.0), mean_t(4, 0.0);
    std::size_t shape_failures = 0;
    for (int i = 0; i < kTargets; ++i) {
        const SkResult r = sk_approximate(haar(rng), 3, cfg);
        shape_failures += r.shape_failures;
        for (int k = 0; k < 4; ++k) {
            mean_dist[k] += r.levels[k].dist / kTargets;
            mean_t[k] += static_cast<double>(r.levels[k].t_count) / kTargets;
        }
    }
    bool decreasing = true, growth = true;
    for (int k = 0; k < 3; ++k) {
        if (!(mean_dist[k + 1] < mean_dist[k])) decreasing = false;
        if (mean_t[k + 1] > kGrowthFactor * mean_t[k] + kGrowthConstant) growth = false;
    }
    const SlopeFit fit = gc_error_slope(10, 20, 20260311);
    const bool slope_ok = std::abs(fit.slope - kSlopeTarget) <= kSlopeTol;
    const double el = seconds_since(t0);
    std::ostringstream d;
    d << "mean dist";
    for (double x : mean_dist) d << ' ' << x;
    d << ", mean t-count";
    for (double x : mean_t) d << ' ' << x;
    d << ", shape failures " << shape_failures << ", slope " << fit.slope << ", " << el << " s";
    return {decreasing && growth && slope_ok && shape_failures == 0 && el < kBudget10, d.str()};
}

Outcome persistence() {
    const Catalog db = Catalog::build(16);
    const auto path = std::filesystem::temp_directory_path() / ("qcanon_accept_" + std::to_string(::getpid()) + ".bin");
    db.save(path);
    std::vector<std::uint8_t> on_disk;
    {
        std::ifstream in(path, std::ios::binary);
        on_disk.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    bool pass = on_disk == db.serialize();
    std::string detail;
    try {
        const Catalog back = Catalog::load(path);
        pass = pass && back.serialize() == on_disk && back.size() == db.size();
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    int rejected = 0;
    const std::vector<std::size_t> offsets = {0, 5, on_disk.size() / 3, on_disk.size() / 2, on_disk.size() - 1};
    for (std::size_t off : offsets) {
        auto bad = on_disk;
        bad[off] ^= 0x01;
        {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            out.write(reinterpret_cast<const char*>(bad.data()), static_cast<std::streamsize>(bad.size()));
        }
        try {
            (void)Catalog::load(path);
        } catch (const CatalogError&) {
            ++rejected;
        }
    }
    auto truncated = on_disk;
    truncated.resize(truncated.size() / 2);
    try {
        (void)Catalog::deserialize(truncated);
    } catch (const CatalogError&) {
        ++rejected;
    }
    std::filesystem::remove(path);
    pass = pass && rejected == static_cast<int>(offsets.size()) + 1;
    std::ostringstream d;
    d << db.size() << " entries, " << on_disk.size() << " bytes, " << rejected << "/" << offsets.size() + 1
      << " damaged files rejected";
    if (!detail.empty()) d << ", " << detail;
    return {pass, d.str()};
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "clifford-tables", clifford_tables},
        {2, "squeeze-identities", squeeze_identities_exact},
        {3, "rewrite-soundness", rewrite_soundness},
        {4, "double-coset-audit", coset_audit},
        {5, "parity-audit", parity},
        {6, "canonical-counts", counts},
        {7, "trace-scaling", trace_scaling},
        {8, "search-optimality", search_optimality},
        {9, "bucket-homogeneity", homogeneity},
        {10, "sk-behaviour", sk_behaviour},
        {11, "catalog-persistence", persistence},
    };
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
    int failed = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << c.id << ' ' << c.name << ": " << o.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
