#pragma once

// Verdict-producing checkers: k-largeness, local k-largeness, m-location,
// the sphere conditions SD'_n, simple connectivity, and the two local
// adjacency-transfer lemmas used by the displacement analysis.

#include <string>
#include <tuple>
#include <variant>

#include "loops.hpp"

namespace flagc {

enum class Status { Pass, Fail, Unknown };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "unknown";
    }
}

struct LinkWitness {
    Simplex simplex;
    LoopPath cycle;  // full cycle inside the link, in parent vertex ids
};

struct EmbeddingWitness {
    Vertex u = -1, v = -1;
    std::optional<int> sub_distance;      // nullopt: unreachable inside the subcomplex
    std::optional<int> ambient_distance;
};

struct LemmaWitness {
    std::string lemma;  // "pentagon" or "square" configuration scan
    std::vector<std::pair<std::string, Vertex>> assignment;
};

using Witness = std::variant<std::monostate, LoopPath, LinkWitness, EmbeddingWitness,
                             LemmaWitness, std::vector<Vertex>>;

struct Verdict {
    Status status = Status::Pass;
    Witness witness;
    std::vector<LoopPath> undecided;  // loops whose filling search was inconclusive
    std::string note;

    static Verdict pass(std::string note = {}) {
        Verdict v;
        v.status = Status::Pass;
        v.note = std::move(note);
        return v;
    }
    static Verdict fail(Witness w, std::string note = {}) {
        Verdict v;
        v.status = Status::Fail;
        v.witness = std::move(w);
        v.note = std::move(note);
        return v;
    }
    static Verdict unknown(std::vector<LoopPath> loops, std::string note = {}) {
        Verdict v;
        v.status = Status::Unknown;
        v.undecided = std::move(loops);
        v.note = std::move(note);
        return v;
    }
};

// ---------------------------------------------------------------------------
// k-largeness.

/// Pass iff the complex has no full cycle shorter than k. The witness is the
/// shortest (canonically least) full cycle otherwise.
inline Verdict is_k_large(const FlagComplex& c, int k, const Options& opts = {}) {
    if (k < 4) throw std::invalid_argument("k must be >= 4");
    auto cycles = enumerate_full_cycles(c, k - 1, opts);
    if (cycles.empty()) return Verdict::pass();
    return Verdict::fail(cycles.front(),
                         "full cycle of length " + std::to_string(cycles.front().length()));
}

inline Verdict is_locally_k_large(const FlagComplex& c, int k, const Options& opts = {}) {
    if (k < 4) throw std::invalid_argument("k must be >= 4");
    Verdict out = Verdict::pass();
    bool failed = false;
    for_each_clique(c, opts.clique_cap, [&](const std::vector<Vertex>& q) {
        if (failed) return;
        Simplex s;
        s.vertices = q;
        auto lk = link(c, s);
        if (lk.complex.vertex_count() < 4) return;
        auto verdict = is_k_large(lk.complex, k, opts);
        if (verdict.status == Status::Fail) {
            auto cycle = std::get<LoopPath>(verdict.witness);
            for (auto& v : cycle.vertices) v = lk.to_parent[static_cast<std::size_t>(v)];
            cycle.vertices = canonical_cycle(cycle.vertices);
            out = Verdict::fail(LinkWitness{s, cycle},
                                "link fails " + std::to_string(k) + "-largeness");
            failed = true;
        }
    });
    return out;
}

// ---------------------------------------------------------------------------
// m-location: every full, homotopically trivial loop of length <= m must lie
// in some closed unit ball. Loops certified essential in mod-2 homology are
// exempt; loops the filling search cannot decide surface as Unknown.

inline Verdict is_m_located(const FlagComplex& c, int m, int area_budget,
                            const Options& opts = {}) {
    if (m < 4) throw std::invalid_argument("m must be >= 4");
    auto cycles = enumerate_full_cycles(c, m, opts);
    FillContext ctx(c);

    enum class R { Ok, Fail, Unknown };
    auto results = map_indexed<R>(static_cast<int>(cycles.size()), opts.jobs, [&](int i) {
        const auto& loop = cycles[static_cast<std::size_t>(i)];
        if (in_one_ball(c, loop)) return R::Ok;
        auto cert = fill(ctx, loop, area_budget, opts);
        switch (cert.kind) {
            case FillingCertificate::Kind::OneBall:
            case FillingCertificate::Kind::Diagram: return R::Fail;
            case FillingCertificate::Kind::HomologyObstruction: return R::Ok;
            default: return R::Unknown;
        }
    });

    std::vector<LoopPath> unknowns;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (results[i] == R::Fail)
            return Verdict::fail(cycles[i], "null-homotopic full cycle outside every 1-ball");
        if (results[i] == R::Unknown) unknowns.push_back(cycles[i]);
    }
    if (!unknowns.empty())
        return Verdict::unknown(std::move(unknowns), "filling search inconclusive");
    return Verdict::pass();
}

// ---------------------------------------------------------------------------
// Sphere conditions SD'_n(O): for each radius i in 1..n,
//   (T) every edge in the sphere of radius i+1 has a common neighbor in the
//       ball of radius i;
//   (V) for every sphere-(i+1) vertex v and all u, w among v's neighbors in
//       the ball of radius i, some t there is adjacent (or equal) to both.

struct SDReport {
    Vertex origin = -1;
    int depth = 0;
    std::vector<std::pair<int, Edge>> triangle_failures;
    std::vector<std::tuple<int, Vertex, Vertex, Vertex>> vertex_failures;  // (i, v, u, w)
    bool passed() const { return triangle_failures.empty() && vertex_failures.empty(); }
};

/// Adjacency in the convention where a vertex spans a simplex with itself.
inline bool sim(const FlagComplex& c, Vertex a, Vertex b) {
    return a == b || c.adjacent(a, b);
}

inline SDReport check_sd_n(const FlagComplex& c, Vertex origin, int n) {
    if (n < 1) throw std::invalid_argument("depth must be >= 1");
    c.check_vertex(origin);
    SDReport report;
    report.origin = origin;
    report.depth = n;
    auto dist = bfs_distances(c, origin);
    auto d = [&](Vertex v) { return dist[static_cast<std::size_t>(v)]; };

    for (int i = 1; i <= n; ++i) {
        for (const auto& [u, v] : c.edges()) {
            if (d(u) != i + 1 || d(v) != i + 1) continue;
            bool ok = false;
            for (Vertex t : c.neighbors(u))
                if (d(t) != kUnreachable && d(t) <= i && c.adjacent(t, v)) {
                    ok = true;
                    break;
                }
            if (!ok) report.triangle_failures.emplace_back(i, Edge{u, v});
        }
        for (Vertex v = 0; v < c.vertex_count(); ++v) {
            if (d(v) != i + 1) continue;
            std::vector<Vertex> low;
            for (Vertex u : c.neighbors(v))
                if (d(u) != kUnreachable && d(u) <= i) low.push_back(u);
            for (std::size_t a = 0; a < low.size(); ++a)
                for (std::size_t b = a; b < low.size(); ++b) {
                    Vertex u = low[a], w = low[b];
                    bool ok = false;
                    for (Vertex t : low)
                        if (sim(c, t, u) && sim(c, t, w)) {
                            ok = true;
                            break;
                        }
                    if (!ok) report.vertex_failures.emplace_back(i, v, u, w);
                }
        }
    }
    return report;
}

inline std::vector<SDReport> check_sd_all(const FlagComplex& c, int n, const Options& opts = {}) {
    return map_indexed<SDReport>(c.vertex_count(), opts.jobs,
                                 [&](int o) { return check_sd_n(c, static_cast<Vertex>(o), n); });
}

// ---------------------------------------------------------------------------
// Simple connectivity, semi-decided: the fundamental cycles of a spanning
// tree generate the fundamental group, so certifying each of them
// null-homotopic certifies the whole complex. A homology obstruction on any
// of them is a sound failure.

inline Verdict check_simple_connectivity(const FlagComplex& c, int area_budget,
                                         const Options& opts = {}) {
    if (c.vertex_count() == 0) return Verdict::pass("empty complex");
    if (!is_connected(c)) throw std::invalid_argument("complex is disconnected");

    // BFS spanning tree rooted at vertex 0.
    std::vector<Vertex> parent(static_cast<std::size_t>(c.vertex_count()), -1);
    std::vector<int> depth(static_cast<std::size_t>(c.vertex_count()), -1);
    std::vector<Vertex> frontier{0}, next;
    depth[0] = 0;
    while (!frontier.empty()) {
        next.clear();
        for (Vertex v : frontier)
            for (Vertex u : c.neighbors(v))
                if (depth[static_cast<std::size_t>(u)] < 0) {
                    depth[static_cast<std::size_t>(u)] = depth[static_cast<std::size_t>(v)] + 1;
                    parent[static_cast<std::size_t>(u)] = v;
                    next.push_back(u);
                }
        frontier.swap(next);
    }

    auto tree_path = [&](Vertex u, Vertex v) {
        std::vector<Vertex> pu{u}, pv{v};
        Vertex a = u, b = v;
        while (a != b) {
            if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
                a = parent[static_cast<std::size_t>(a)];
                pu.push_back(a);
            } else {
                b = parent[static_cast<std::size_t>(b)];
                pv.push_back(b);
            }
        }
        pu.insert(pu.end(), pv.rbegin(), pv.rend());
        pu.erase(std::unique(pu.begin(), pu.end()), pu.end());  // lca listed twice
        return pu;
    };

    std::vector<LoopPath> loops;
    for (const auto& [u, v] : c.edges()) {
        if (parent[static_cast<std::size_t>(u)] == v || parent[static_cast<std::size_t>(v)] == u)
            continue;
        LoopPath loop;
        loop.vertices = tree_path(u, v);
        loop.closed = true;
        if (loop.vertices.size() < 3) continue;
        loops.push_back(std::move(loop));
    }

    FillContext ctx(c);
    enum class R { Ok, Fail, Unknown };
    auto results = map_indexed<R>(static_cast<int>(loops.size()), opts.jobs, [&](int i) {
        auto cert = fill(ctx, loops[static_cast<std::size_t>(i)], area_budget, opts);
        switch (cert.kind) {
            case FillingCertificate::Kind::OneBall:
            case FillingCertificate::Kind::Diagram: return R::Ok;
            case FillingCertificate::Kind::HomologyObstruction: return R::Fail;
            default: return R::Unknown;
        }
    });

    std::vector<LoopPath> unknowns;
    for (std::size_t i = 0; i < loops.size(); ++i) {
        if (results[i] == R::Fail)
            return Verdict::fail(loops[i], "fundamental cycle is essential in mod-2 homology");
        if (results[i] == R::Unknown) unknowns.push_back(loops[i]);
    }
    if (!unknowns.empty())
        return Verdict::unknown(std::move(unknowns), "filling search inconclusive");
    return Verdict::pass();
}

// ---------------------------------------------------------------------------
// Local adjacency-transfer lemmas, verified over every matching
// configuration around an origin.
//
// Pentagon scan: v in the sphere of radius n+1; y, z neighbors of v in the
// ball of radius n at mutual distance 2; w a common neighbor of y, v, z in
// that ball; u1, u2 common neighbors of (y,w) and (w,z) one ball lower.
// Whenever u1 is not adjacent to z and u2 not adjacent to y, u1 and u2 must
// be adjacent.
//
// Square scan: v1 ~ v2 ~ v3 on the sphere of radius n-1; w1, w2 common
// neighbors of the two edges in the ball of radius n-2; p1, p2 common
// neighbors in the ball of radius n. Whenever p1 and p2 are adjacent, w1
// and w2 must be adjacent. (Only this direction of the transfer is stable
// under arbitrary witness choices; it is the one the displacement analysis
// uses.)

inline Verdict check_local_lemmas(const FlagComplex& c, Vertex origin, int n,
                                  const Options& opts = {}) {
    (void)opts;
    c.check_vertex(origin);
    if (n < 2) return Verdict::pass("depth below 2: no configurations to scan");
    auto dist = bfs_distances(c, origin);
    auto d = [&](Vertex v) { return dist[static_cast<std::size_t>(v)]; };
    auto in_ball = [&](Vertex v, int r) { return d(v) != kUnreachable && d(v) <= r; };
    DistanceMatrix pair_dist(c);

    // pentagon configurations
    for (Vertex v = 0; v < c.vertex_count(); ++v) {
        if (d(v) != n + 1) continue;
        std::vector<Vertex> around;
        for (Vertex y : c.neighbors(v))
            if (in_ball(y, n)) around.push_back(y);
        for (Vertex y : around)
            for (Vertex z : around) {
                if (y >= z || pair_dist(y, z) != 2) continue;
                for (Vertex w : around) {
                    if (!c.adjacent(w, y) || !c.adjacent(w, z)) continue;
                    for (Vertex u1 : c.neighbors(w)) {
                        if (!in_ball(u1, n - 1) || !c.adjacent(u1, y)) continue;
                        if (sim(c, u1, z)) continue;
                        for (Vertex u2 : c.neighbors(w)) {
                            if (!in_ball(u2, n - 1) || !c.adjacent(u2, z)) continue;
                            if (sim(c, u2, y) || sim(c, u1, u2)) continue;
                            return Verdict::fail(
                                LemmaWitness{"pentagon",
                                             {{"v", v},
                                              {"y", y},
                                              {"z", z},
                                              {"w", w},
                                              {"u1", u1},
                                              {"u2", u2}}},
                                "side witnesses fail to be adjacent");
                        }
                    }
                }
            }
    }

    // square configurations
    for (Vertex v2 = 0; v2 < c.vertex_count(); ++v2) {
        if (d(v2) != n - 1) continue;
        std::vector<Vertex> ring;
        for (Vertex u : c.neighbors(v2))
            if (d(u) == n - 1) ring.push_back(u);
        for (Vertex v1 : ring)
            for (Vertex v3 : ring) {
                std::vector<Vertex> w1s, w2s, p1s, p2s;
                for (Vertex t : c.neighbors(v2)) {
                    if (c.adjacent(t, v1)) {
                        if (in_ball(t, n - 2)) w1s.push_back(t);
                        if (in_ball(t, n)) p1s.push_back(t);
                    }
                    if (c.adjacent(t, v3)) {
                        if (in_ball(t, n - 2)) w2s.push_back(t);
                        if (in_ball(t, n)) p2s.push_back(t);
                    }
                }
                for (Vertex p1 : p1s)
                    for (Vertex p2 : p2s) {
                        if (!sim(c, p1, p2)) continue;
                        for (Vertex w1 : w1s)
                            for (Vertex w2 : w2s) {
                                if (sim(c, w1, w2)) continue;
                                return Verdict::fail(
                                    LemmaWitness{"square",
                                                 {{"v1", v1},
                                                  {"v2", v2},
                                                  {"v3", v3},
                                                  {"w1", w1},
                                                  {"w2", w2},
                                                  {"p1", p1},
                                                  {"p2", p2}}},
                                    "inner witnesses fail to be adjacent");
                            }
                    }
            }
    }
    return Verdict::pass();
}

}  // namespace flagc
