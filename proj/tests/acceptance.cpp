// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exact comparisons throughout; the
// regression anchors live in tests/data/regression_pins.json.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <flagc/cli.hpp>
#include <flagc/curvature.hpp>
#include <flagc/generators.hpp>
#include <flagc/hyperbolicity.hpp>
#include <flagc/io.hpp>

#include "oracles.hpp"

using namespace flagc;
namespace fs = std::filesystem;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int number, const std::string& name, bool ok, double secs,
            const std::string& detail = {}) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << " (" << name << ") ["
              << std::fixed << std::setprecision(1) << secs << "s]";
    if (!detail.empty()) std::cout << " " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

struct NamedComplex {
    std::string name;
    FlagComplex c;
};

std::vector<NamedComplex> oracle_corpus() {
    std::vector<NamedComplex> out;
    out.push_back({"vertex", build_complex(1, {})});
    out.push_back({"edge", build_complex(2, {{0, 1}})});
    out.push_back({"triangle", build_complex(3, {{0, 1}, {1, 2}, {0, 2}})});
    for (int n = 4; n <= 10; ++n) out.push_back({"cycle" + std::to_string(n), cycle_complex(n)});
    for (int k = 4; k <= 8; ++k) out.push_back({"wheel" + std::to_string(k), wheel_complex(k)});
    out.push_back({"octahedron", octahedron()});
    out.push_back({"disk(6,1)", disk(6, 1).complex});
    out.push_back({"cylinder(4,2)", cylinder(4, 2).complex});
    out.push_back({"strip(2,5)", strip(2, 5).complex});
    out.push_back({"strip(3,3)", strip(3, 3).complex});
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        int n = 6 + static_cast<int>(seed % 5);
        double p = 0.20 + 0.05 * static_cast<double>(seed % 8);
        out.push_back({"random(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")",
                       random_flag(n, p, seed)});
    }
    return out;
}

std::vector<NamedComplex> crosscheck_corpus() {
    auto out = oracle_corpus();
    out.push_back({"icosahedron", icosahedron()});
    out.push_back({"disk(6,2)", disk(6, 2).complex});
    out.push_back({"disk(6,3)", disk(6, 3).complex});
    out.push_back({"disk(7,2)", disk(7, 2).complex});
    out.push_back({"disk(7,3)", disk(7, 3).complex});
    out.push_back({"cylinder(6,3)", cylinder(6, 3).complex});
    out.push_back({"cylinder(8,5)", cylinder(8, 5).complex});
    out.push_back({"strip(2,20)", strip(2, 20).complex});
    out.push_back({"strip(3,20)", strip(3, 20).complex});
    return out;
}

// --------------------------------------------------------------------------
// 1. Exact agreement with the naive enumeration oracles on every small
//    corpus complex: distances, full cycles, k-largeness (local and global),
//    m-location under an effectively unlimited budget, sphere conditions,
//    wheels.

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream why;
    bool ok = true;
    Options opts;
    opts.fill_state_cap = 4'000'000;

    for (const auto& [name, c] : oracle_corpus()) {
        auto fw = oracles::floyd_warshall(c);
        DistanceMatrix dm(c);
        for (Vertex u = 0; u < c.vertex_count() && ok; ++u)
            for (Vertex v = 0; v < c.vertex_count(); ++v) {
                int want = fw[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
                int got = dm(u, v);
                if ((want >= oracles::kInf) != (got == kUnreachable) ||
                    (want < oracles::kInf && got != want)) {
                    ok = false;
                    why << name << ": distance(" << u << "," << v << ")";
                    break;
                }
            }
        if (enumerate_full_cycles(c, 10, opts) != oracles::full_cycles(c, 10)) {
            ok = false;
            why << name << ": full cycles;";
        }
        for (int k = 4; k <= 7 && ok; ++k) {
            if ((is_k_large(c, k, opts).status == Status::Pass) != oracles::is_k_large(c, k)) {
                ok = false;
                why << name << ": klarge " << k << ";";
            }
            if (k <= 6 && (is_locally_k_large(c, k, opts).status == Status::Pass) !=
                              oracles::is_locally_k_large(c, k)) {
                ok = false;
                why << name << ": locally klarge " << k << ";";
            }
        }
        for (int m : {4, 6, 8}) {
            auto v = is_m_located(c, m, 1 << 20, opts);
            if (v.status == Status::Unknown || (v.status == Status::Pass) != oracles::m_located(c, m)) {
                ok = false;
                why << name << ": mlocated " << m << ";";
            }
        }
        for (Vertex o = 0; o < c.vertex_count() && ok; ++o)
            for (int n = 1; n <= 3; ++n)
                if (check_sd_n(c, o, n).passed() != oracles::sd_holds(c, o, n)) {
                    ok = false;
                    why << name << ": sd n=" << n << " origin=" << o << ";";
                    break;
                }
        for (int k = 4; k <= 6 && ok; ++k) {
            auto got = find_wheels(c, k, opts);
            auto want = oracles::wheels(c, k);
            bool same = got.size() == want.size();
            for (std::size_t i = 0; same && i < got.size(); ++i)
                same = got[i].hub == want[i].first && got[i].rim.vertices == want[i].second;
            if (!same) {
                ok = false;
                why << name << ": wheels " << k << ";";
            }
        }
        if (!ok) break;
    }
    report(1, "oracle equivalence on small complexes", ok, seconds_since(t0), why.str());
}

// --------------------------------------------------------------------------
// 2. Named-complex pins.

void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream why;
    bool ok = true;

    auto oct_ingest = ingest_explicit(maximal_simplices(octahedron(), 16), 6);
    if (!oct_ingest.ok()) { ok = false; why << "octahedron not flag;"; }
    if (is_k_large(octahedron(), 4).status != Status::Pass) { ok = false; why << "octahedron not 4-large;"; }
    auto oct5 = is_k_large(octahedron(), 5);
    if (oct5.status != Status::Fail || std::get<LoopPath>(oct5.witness).length() != 4) {
        ok = false;
        why << "octahedron 5-large verdict;";
    }

    auto ico_ingest = ingest_explicit(maximal_simplices(icosahedron(), 16), 12);
    if (!ico_ingest.ok()) { ok = false; why << "icosahedron not flag;"; }
    if (is_locally_k_large(icosahedron(), 5).status != Status::Pass) { ok = false; why << "icosahedron locally 5-large;"; }
    if (is_locally_k_large(icosahedron(), 6).status != Status::Fail) { ok = false; why << "icosahedron locally 6-large verdict;"; }

    for (int r : {2, 3}) {
        auto v = is_m_located(disk(6, r).complex, 8, 64);
        if (v.status != Status::Fail || std::get<LoopPath>(v.witness).length() != 8) {
            ok = false;
            why << "disk(6," << r << ") 8-location verdict;";
        }
    }
    if (is_m_located(disk(7, 3).complex, 8, 64).status != Status::Pass) {
        ok = false;
        why << "disk(7,3) 8-location;";
    }
    report(2, "named-complex pins", ok, seconds_since(t0), why.str());
}

// --------------------------------------------------------------------------
// 3. Complexes whose sphere conditions hold at every origin up to its
//    eccentricity must never fail the simple-connectivity check.

void criterion_3() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream why;
    bool ok = true;
    int checked = 0;
    Options opts;
    opts.fill_state_cap = 4'000'000;

    for (const auto& [name, c] : crosscheck_corpus()) {
        if (c.vertex_count() == 0 || !is_connected(c)) continue;
        bool sd_all = true;
        for (Vertex o = 0; o < c.vertex_count() && sd_all; ++o) {
            int depth = std::max(1, eccentricity(c, o));
            if (!check_sd_n(c, o, depth).passed()) sd_all = false;
        }
        if (!sd_all) continue;
        ++checked;
        if (check_simple_connectivity(c, 1 << 20, opts).status == Status::Fail) {
            ok = false;
            why << name << " fails connectivity after passing the sphere conditions;";
        }
    }
    report(3, "sphere conditions imply no connectivity failure", ok, seconds_since(t0),
           "(" + std::to_string(checked) + " qualifying complexes)" + why.str());
}

// --------------------------------------------------------------------------
// Strip families shared by criteria 4-7.

struct StripCase {
    int width, length, power;
    FlagComplex c;
    Isometry h;
};

std::vector<StripCase> strip_cases() {
    std::vector<StripCase> out;
    for (int w = 1; w <= 4; ++w)
        for (int len : {20, 30, 40})
            for (int s : {4, 5, 6}) {
                auto g = strip(w, len);
                out.push_back({w, len, s, g.complex, g.map->power(s)});
            }
    return out;
}

void criterion_4(const std::vector<StripCase>& cases) {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream why;
    bool ok = true;
    for (const auto& sc : cases) {
        auto rep = displacement_profile(sc.c, sc.h);
        if (rep.translation_length != sc.power) {
            ok = false;
            why << "strip(" << sc.width << "," << sc.length << ")^" << sc.power
                << ": translation " << rep.translation_length << ";";
            continue;
        }
        auto v = check_isometric_embedding(sc.c, min_set(sc.c, sc.h, rep));
        if (v.status != Status::Pass) {
            ok = false;
            why << "strip(" << sc.width << "," << sc.length << ")^" << sc.power << ": embed;";
        }
    }
    report(4, "minimal sets embed isometrically (strip families)", ok, seconds_since(t0),
           why.str());
}

void criterion_5(const std::vector<StripCase>& cases) {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream why;
    bool ok = true;
    for (const auto& sc : cases) {
        auto re = as_complex(min_set(sc.c, sc.h));
        if (is_locally_k_large(re.complex, 6).status != Status::Pass) {
            ok = false;
            why << "min set not locally 6-large (w=" << sc.width << ",s=" << sc.power << ");";
        }
        if (check_simple_connectivity(re.complex, 1 << 10).status != Status::Pass) {
            ok = false;
            why << "min set connectivity (w=" << sc.width << ",s=" << sc.power << ");";
        }
        if (!find_wheels(re.complex, 4).empty() || !find_wheels(re.complex, 5).empty()) {
            ok = false;
            why << "wheel inside a min set (w=" << sc.width << ",s=" << sc.power << ");";
        }
    }
    report(5, "minimal sets are systolic-shaped (strip families)", ok, seconds_since(t0),
           why.str());
}

void criterion_6(const std::vector<StripCase>& cases) {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream why;
    bool ok = true;
    for (const auto& sc : cases) {
        auto res = invariant_geodesics(sc.c, sc.h, 1);
        if (res.power != 1 || res.axes.empty()) {
            ok = false;
            why << "no axis (w=" << sc.width << ",s=" << sc.power << ");";
            continue;
        }
        WindowMargins margins(sc.c);
        for (const auto& axis : res.axes) {
            const auto& vs = axis.vertices;
            for (std::size_t i = 0; i < vs.size() && ok; ++i) {
                auto dist = bfs_distances(sc.c, vs[i]);
                for (std::size_t j = i + 1; j < vs.size() && j <= i + static_cast<std::size_t>(res.translation); ++j) {
                    int d = dist[static_cast<std::size_t>(vs[j])];
                    if (!margins.certifies(vs[i], vs[j], d)) continue;
                    if (d != static_cast<int>(j - i)) {
                        ok = false;
                        why << "axis pair (" << vs[i] << "," << vs[j] << ") w=" << sc.width
                            << " s=" << sc.power << ";";
                        break;
                    }
                }
            }
        }
    }
    report(6, "stitched axes realize parameter distances", ok, seconds_since(t0), why.str());
}

void criterion_7(const std::vector<StripCase>& cases) {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream why;
    bool ok = true;
    for (const auto& sc : cases) {
        auto g = graph_of_axes(sc.c, sc.h, 1);
        bool path_shape = static_cast<int>(g.axes.size()) == sc.width &&
                          g.edges.size() == static_cast<std::size_t>(sc.width - 1);
        std::vector<int> degree(g.axes.size(), 0);
        for (auto [a, b] : g.edges) {
            ++degree[static_cast<std::size_t>(a)];
            ++degree[static_cast<std::size_t>(b)];
        }
        for (int d : degree)
            if (d > 2) path_shape = false;
        auto mg = MetricGraph::from_axes_graph(g);
        auto delta = delta_four_point(mg);
        auto bottleneck = bottleneck_check(mg, 0);
        if (!path_shape || delta.doubled_delta != 0 || bottleneck.status != Status::Pass) {
            ok = false;
            why << "axes graph (w=" << sc.width << ",len=" << sc.length << ",s=" << sc.power
                << "): axes=" << g.axes.size() << " edges=" << g.edges.size()
                << " delta=" << delta.delta_string() << ";";
        }
    }
    report(7, "graphs of axes are tree-like paths", ok, seconds_since(t0), why.str());
}

// --------------------------------------------------------------------------
// 8. Exact hyperbolicity constants, pinned.

void criterion_8() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream why;
    bool ok = true;

    json pins = json::parse(read_file(std::string(FLAGC_SOURCE_DIR) +
                                      "/tests/data/regression_pins.json"));

    std::vector<Edge> path_edges;
    for (Vertex v = 0; v + 1 < 10; ++v) path_edges.emplace_back(v, v + 1);
    if (delta_four_point(MetricGraph::from_complex(build_complex(10, path_edges))).doubled_delta !=
        0) { ok = false; why << "tree delta;"; }
    std::vector<Edge> k5;
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v) k5.emplace_back(u, v);
    if (delta_four_point(MetricGraph::from_complex(build_complex(5, k5))).doubled_delta != 0) {
        ok = false;
        why << "complete graph delta;";
    }
    if (delta_four_point(MetricGraph::from_complex(cycle_complex(6))).doubled_delta != 2) {
        ok = false;
        why << "hexagon delta;";
    }

    int prev = -1;
    for (int r : {2, 3, 4}) {
        auto res = delta_four_point(MetricGraph::from_complex(disk(7, r).complex));
        std::string key = "disk d=7 r=" + std::to_string(r);
        int pinned = pins.at("doubled_delta").at(key).get<int>();
        if (res.doubled_delta != pinned) {
            ok = false;
            why << key << ": " << res.doubled_delta << " != pinned " << pinned << ";";
        }
        if (res.doubled_delta < prev) {
            ok = false;
            why << key << ": delta decreased;";
        }
        prev = res.doubled_delta;
    }

    int pinned_edges = pins.at("random_edges").at("random n=12 p=0.3 seed=42").get<int>();
    if (static_cast<int>(random_flag(12, 0.3, 42).edges().size()) != pinned_edges) {
        ok = false;
        why << "random edge count;";
    }
    report(8, "exact delta measurements and pins", ok, seconds_since(t0), why.str());
}

// --------------------------------------------------------------------------
// 9. Local lemma configuration scan on the degree-7 disk.

void criterion_9() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream why;
    bool ok = true;
    auto d75 = disk(7, 5).complex;
    for (int n : {2, 3}) {
        auto v = check_local_lemmas(d75, 0, n);
        if (v.status != Status::Pass) {
            ok = false;
            why << "depth " << n << " fails;";
            if (const auto* w = std::get_if<LemmaWitness>(&v.witness)) {
                why << " [" << w->lemma;
                for (const auto& [k, x] : w->assignment) why << " " << k << "=" << x;
                why << "]";
            }
        }
    }
    report(9, "local lemma scans on the degree-7 disk", ok, seconds_since(t0), why.str());
}

// --------------------------------------------------------------------------
// 10. Byte-identical reports across repeats and worker counts.

void criterion_10() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    fs::path dir = fs::temp_directory_path() / "flagc_acceptance_reports";
    fs::create_directories(dir);
    auto input = (dir / "disk.json").string();
    {
        std::ostringstream out, err;
        if (cli::run({"gen", "disk d=6 r=2", "-o", input}, out, err) != 0) ok = false;
    }
    auto run_once = [&](const std::string& jobs) {
        std::ostringstream out, err;
        cli::run({"check", input, "--checks",
                  "klarge=6,locallyklarge=6,mlocated=8,sd=2,simplyconnected,lemmas=2@0",
                  "--jobs", jobs},
                 out, err);
        return out.str();
    };
    auto a = run_once("1");
    auto b = run_once("1");
    auto c = run_once("4");
    auto d = run_once("3");
    if (a.empty() || a != b || a != c || a != d) {
        ok = false;
        detail = "reports differ across runs or job counts";
    }
    fs::remove_all(dir);
    report(10, "deterministic reports", ok, seconds_since(t0), detail);
}

}  // namespace

int main() {
    auto cases = strip_cases();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4(cases);
    criterion_5(cases);
    criterion_6(cases);
    criterion_7(cases);
    criterion_8();
    criterion_9();
    criterion_10();
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
              << "\n";
    return failures;
}
