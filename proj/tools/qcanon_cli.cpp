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

// qcanon command-line front end.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcanon/catalog.hpp"
#include "qcanon/circuit.hpp"
#include "qcanon/oracle.hpp"
#include "qcanon/rewrite.hpp"
#include "qcanon/search.hpp"
#include "qcanon/sk.hpp"

using nlohmann::json;
using namespace qcanon;

namespace {

constexpr int kUsage = 2;
constexpr int kFailure = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TargetOptions {
    std::string matrix;
    std::string axis;
    double angle = 0.0;
    std::string gates;
};

void add_target_options(CLI::App* cmd, TargetOptions& t) {
    auto* m = cmd->add_option("--matrix", t.matrix, "2x2 unitary as [[[re,im],[re,im]],[[re,im],[re,im]]]");
    auto* a = cmd->add_option("--axis", t.axis, "rotation axis X,Y,Z (with --angle)");
    cmd->add_option("--angle", t.angle, "rotation angle in radians");
    auto* g = cmd->add_option("--gates", t.gates, "gate string over H, T, S");
    m->excludes(a)->excludes(g);
    a->excludes(g);
}

Quat parse_target(const TargetOptions& t) {
    if (!t.matrix.empty()) {
        json j;
        try {
            j = json::parse(t.matrix);
        } catch (const json::exception& e) {
            throw UsageError(std::string("--matrix: ") + e.what());
        }
        if (!j.is_array() || j.size() != 2) throw UsageError("--matrix must be a 2x2 array of [re,im] pairs");
        Eigen::Matrix2cd m;
        for (int r = 0; r < 2; ++r) {
            if (!j[r].is_array() || j[r].size() != 2) throw UsageError("--matrix must be a 2x2 array of [re,im] pairs");
            for (int c = 0; c < 2; ++c) {
                const auto& z = j[r][c];
                if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                    throw UsageError("--matrix entries must be [re,im] pairs");
                }
                m(r, c) = {z[0].get<double>(), z[1].get<double>()};
            }
        }
        const double err = (m * m.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
        if (err > 1e-8) throw UsageError("--matrix is not unitary (deviation " + std::to_string(err) + ")");
        return to_quaternion(m);
    }
    if (!t.axis.empty()) {
        std::vector<double> v;
        std::stringstream ss(t.axis);
        for (std::string part; std::getline(ss, part, ',');) {
            try {
                v.push_back(std::stod(part));
            } catch (const std::exception&) {
                throw UsageError("--axis must be X,Y,Z");
            }
        }
        if (v.size() != 3) throw UsageError("--axis must be X,Y,Z");
        const Eigen::Vector3d n(v[0], v[1], v[2]);
        if (n.norm() == 0.0) throw UsageError("--axis must be nonzero");
        return axis_rotation(n, t.angle);
    }
    if (!t.gates.empty()) return evaluate_numeric(parse(t.gates));
    throw UsageError("a target is required: --matrix, --axis/--angle or --gates");
}

Catalog load_db(const std::string& path) {
    if (path.empty()) throw UsageError("--db (or QCANON_DB) is required");
    return Catalog::load(path);
}

std::string clifford_name(CliffordElement g) {
    const auto w = CliffordGroup::instance().word(g);
    return "G" + std::to_string(g.idx) + "(" + (w.empty() ? std::string("I") : std::string(w)) + ")";
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) {
        try {
            out.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw UsageError("bad integer list: " + text);
        }
    }
    return out;
}

Quat haar(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    return Quat(n(rng), n(rng), n(rng), n(rng)).normalized();
}

json result_json(const ApproxResult& r) {
    json j{{"found", r.found}};
    if (r.found) {
        j["gates"] = gate_string(r.circuit);
        j["t_count"] = r.t_count;
        j["dist"] = r.dist;
        j["circuit"] = r.circuit;
    }
    return j;
}

int cmd_build(int t_max, const std::string& out, unsigned threads) {
    const Catalog db = Catalog::build(t_max, threads);
    db.save(out);
    std::cout << "entries: " << db.size() << "\n";
    std::cout << "trace levels: " << db.buckets().size() << "\n";
    std::cout << "canonical count, grammar 2^(t-3)+3: " << canonical_count_grammar(t_max) << "\n";
    if (const auto pub = canonical_count_published(t_max)) {
        std::cout << "canonical count, published 2^(t-3)+4: " << *pub << "\n";
    }
    std::cout << "k,distinct_trace_keys,bound_6_2^(k/2)\n";
    for (int k = 0; k <= t_max; ++k) {
        std::cout << k << ',' << distinct_trace_keys(db, k) << ',' << 6.0 * std::pow(2.0, k / 2.0) << "\n";
    }
    const auto viol = homogeneity_violations(db);
    std::cout << "T-count-mixed trace levels: " << viol.size() << "\n";
    return 0;
}

int cmd_normalize(const std::string& text, bool as_json) {
    RewriteStats stats;
    const NormalForm f = normalize(parse(text), &stats);
    if (as_json) {
        json j = f;
        j["rewrites"] = stats.rewrites;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (f.h_prefix ? "H . " : "") << (f.body.empty() ? "I" : serialize(f.body)) << " . "
                  << clifford_name(f.tail) << "\n";
        std::cout << "T-count: " << f.t_count() << "\n";
    }
    return 0;
}

int cmd_canonicalize(const std::string& text, bool as_json) {
    RewriteStats stats;
    const CosetForm f = canonicalize(parse(text), &stats);
    if (as_json) {
        json j = f;
        j["body"] = serialize(f.body.circuit());
        j["gates"] = gate_string(f);
        j["rewrites"] = stats.rewrites;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << clifford_name(f.g1) << " . " << (f.body.circuit().empty() ? "I" : serialize(f.body.circuit()))
                  << " . " << clifford_name(f.g2) << "\n";
        std::cout << "T-count: " << f.t_count() << "\n";
    }
    return 0;
}

int cmd_approx(const TargetOptions& t, double eps, const std::string& db_path) {
    if (!(eps > 0.0 && eps <= 1.0)) throw UsageError("--eps must be in (0, 1]");
    const Quat target = parse_target(t);
    const Catalog db = load_db(db_path);
    const ApproxResult r = approximate(target, eps, db);
    std::cout << result_json(r).dump(2) << "\n";
    return r.found ? 0 : kFailure;
}

int cmd_sk(const TargetOptions& t, int depth, const std::string& db_path, const std::string& trace, bool deep) {
    const Quat target = parse_target(t);
    const Catalog db = load_db(db_path);
    SkConfig cfg;
    cfg.db = &db;
    cfg.max_depth = std::max(depth, 0);
    cfg.allow_deep = deep;
    const SkResult r = sk_approximate(target, depth, cfg);
    json levels = json::array();
    for (const auto& l : r.levels) levels.push_back({{"depth", l.depth}, {"dist", l.dist}, {"t_count", l.t_count}});
    json j{{"circuit", r.circuit}, {"t_count", r.t_count}, {"dist", r.dist}, {"levels", levels}};
    std::cout << j.dump(2) << "\n";
    if (!trace.empty()) {
        std::ofstream out(trace);
        if (!out) throw std::runtime_error("cannot write " + trace);
        out << sk_trace_csv(r);
    }
    return 0;
}

int cmd_bench(const std::string& db_path, int samples, std::uint64_t seed, const std::string& depths_text,
              const std::string& eps_text) {
    if (samples <= 0) throw UsageError("--samples must be positive");
    const Catalog db = load_db(db_path);
    std::cout << "method,param,samples,found,mean_t_count,mean_dist\n";
    if (!eps_text.empty()) {
        std::vector<double> eps;
        std::stringstream ss(eps_text);
        for (std::string part; std::getline(ss, part, ',');) eps.push_back(std::stod(part));
        for (double e : eps) {
            std::mt19937_64 rng(seed);
            int found = 0;
            double t_sum = 0;
            double d_sum = 0;
            for (int i = 0; i < samples; ++i) {
                const ApproxResult r = approximate(haar(rng), e, db);
                if (!r.found) continue;
                ++found;
                t_sum += r.t_count;
                d_sum += r.dist;
            }
            std::cout << "approx," << e << ',' << samples << ',' << found << ',' << (found ? t_sum / found : NAN) << ','
                      << (found ? d_sum / found : NAN) << "\n";
        }
    }
    const std::vector<int> depths = parse_int_list(depths_text);
    int top = 0;
    for (int d : depths) {
        if (d < 0) throw UsageError("--sk-depths must be non-negative");
        top = std::max(top, d);
    }
    if (top > kSkDefaultDepthLimit) throw UsageError("--sk-depths beyond 4 are not supported");
    SkConfig cfg;
    cfg.db = &db;
    cfg.max_depth = top;
    std::vector<double> t_sum(top + 1, 0.0);
    std::vector<double> d_sum(top + 1, 0.0);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        // One run to the deepest level records every shallower level on the way.
        const SkResult r = sk_approximate(haar(rng), top, cfg);
        for (const auto& l : r.levels) {
            t_sum[l.depth] += l.t_count;
            d_sum[l.depth] += l.dist;
        }
    }
    for (int d : depths) {
        std::cout << "sk," << d << ',' << samples << ',' << samples << ',' << t_sum[d] / samples << ','
                  << d_sum[d] / samples << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, int t_max, std::uint64_t seed, int samples, bool as_json) {
    json report{{"suite", suite}};
    bool ok = true;
    if (suite == "theorem1") {
        if (t_max > 10) throw UsageError("theorem1 supports --t-max <= 10");
        const Theorem1Report r = theorem1_audit(t_max);
        ok = r.ok;
        report.update({{"t_max", t_max}, {"circuits", r.circuits}, {"pairs", r.pairs}, {"translates", r.translates}});
        if (!r.ok) report["witness"] = r.witness;
    } else if (suite == "parity") {
        const ParityReport r = parity_audit(static_cast<std::size_t>(samples), seed);
        ok = r.ok();
        report.update({{"samples", r.samples}, {"violations", r.violations}, {"mismatches", r.mismatches}});
        if (!r.ok()) report["witness"] = r.witness;
    } else if (suite == "counts") {
        if (t_max > 12) throw UsageError("counts supports --t-max <= 12");
        const CosetCount cc = coset_count(t_max);
        json rows = json::array();
        for (int t = 0; t <= t_max; ++t) {
            const std::uint64_t enumerated = enumerate_canonical(t).size();
            const std::uint64_t oracle = cc.cumulative(t);
            ok = ok && enumerated == oracle;
            rows.push_back({{"t", t},
                            {"oracle", oracle},
                            {"enumerated", enumerated},
                            {"grammar", canonical_count_grammar(t)},
                            {"published", canonical_count_published(t) ? json(*canonical_count_published(t)) : json()}});
        }
        report["rows"] = rows;
    } else if (suite == "optimality") {
        if (t_max > 14) throw UsageError("optimality supports --t-max <= 14");
        const Catalog db = Catalog::build(t_max);
        const MinTCountOracle oracle(t_max);
        std::mt19937_64 rng(seed);
        int mismatches = 0;
        for (int i = 0; i < samples; ++i) {
            const Quat q = haar(rng);
            for (double eps : {0.3, 0.1}) {
                const ApproxResult r = approximate(q, eps, db);
                const auto brute = oracle.min_tcount(q, eps);
                const bool agree = r.found ? (brute && *brute == r.t_count) : !brute.has_value();
                if (!agree) ++mismatches;
            }
        }
        ok = mismatches == 0;
        report.update({{"t_max", t_max}, {"samples", samples}, {"mismatches", mismatches}});
    } else {
        throw UsageError("unknown suite " + suite);
    }
    report["pass"] = ok;
    if (as_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        for (const auto& [k, v] : report.items()) std::cout << k << ": " << v.dump() << "\n";
        std::cout << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? 0 : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical forms and approximation for single-qubit {H,T} circuits"};
    app.require_subcommand(1);

    const char* env_db = std::getenv("QCANON_DB");
    std::string db_path = env_db ? env_db : "";
    unsigned threads = 0;

    int t_max = 16;
    std::string out_path;
    auto* build = app.add_subcommand("build-db", "enumerate and index canonical circuits");
    build->add_option("--max-tcount", t_max, "largest T-count")->required()->check(CLI::Range(0, kMaxCatalogTCount));
    build->add_option("--out", out_path, "catalog file")->required();
    build->add_option("--threads", threads, "worker threads (default: all)");

    std::string gates;
    bool as_json = false;
    auto* norm = app.add_subcommand("normalize", "right-coset normal form [H.] c . g");
    norm->add_option("gates", gates, "gate string over H, T, S")->required();
    norm->add_flag("--json", as_json, "JSON output");
    auto* canon = app.add_subcommand("canonicalize", "double-coset form g1 . c . g2");
    canon->add_option("gates", gates, "gate string over H, T, S")->required();
    canon->add_flag("--json", as_json, "JSON output");

    TargetOptions target;
    double eps = 0.1;
    auto* approx = app.add_subcommand("approx", "minimum-T-count circuit within eps of a target");
    approx->add_option("--eps", eps, "distance bound")->required();
    approx->add_option("--db", db_path, "catalog file (default $QCANON_DB)");
    add_target_options(approx, target);

    int depth = 2;
    std::string trace_path;
    bool deep = false;
    auto* sk = app.add_subcommand("sk", "Solovay-Kitaev approximation backed by the catalog");
    sk->add_option("--depth", depth, "recursion depth")->check(CLI::NonNegativeNumber);
    sk->add_option("--db", db_path, "catalog file (default $QCANON_DB)");
    sk->add_option("--trace", trace_path, "write depth,dist,t_count rows to this CSV file");
    sk->add_flag("--allow-deep", deep, "permit depth beyond 4");
    add_target_options(sk, target);

    int samples = 100;
    std::uint64_t seed = 1;
    std::string sk_depths = "0,1,2,3";
    std::string bench_eps;
    auto* bench = app.add_subcommand(
        "bench", "CSV columns: method (approx|sk), param (eps or depth), samples, found, mean_t_count, mean_dist");
    bench->add_option("--db", db_path, "catalog file (default $QCANON_DB)");
    bench->add_option("--samples", samples, "random Haar targets");
    bench->add_option("--seed", seed, "random seed");
    bench->add_option("--sk-depths", sk_depths, "comma-separated recursion depths");
    bench->add_option("--eps", bench_eps, "comma-separated eps values for direct lookups");

    std::string suite;
    int verify_t = 8;
    auto* verify = app.add_subcommand("verify", "run an oracle audit");
    verify->add_option("--suite", suite, "theorem1 | parity | counts | optimality")
        ->required()
        ->check(CLI::IsMember({"theorem1", "parity", "counts", "optimality"}));
    verify->add_option("--t-max", verify_t, "T-count bound");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--samples", samples, "random samples (parity, optimality)");
    verify->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*build) return cmd_build(t_max, out_path, threads);
        if (*norm) return cmd_normalize(gates, as_json);
        if (*canon) return cmd_canonicalize(gates, as_json);
        if (*approx) return cmd_approx(target, eps, db_path);
        if (*sk) return cmd_sk(target, depth, db_path, trace_path, deep);
        if (*bench) return cmd_bench(db_path, samples, seed, sk_depths, bench_eps);
        if (*verify) return cmd_verify(suite, verify_t, seed, samples, as_json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}
