#pragma once

// Cycle and path machinery: full-cycle enumeration, path tightening,
// 1-ball containment, bounded null-homotopy certification (filling
// diagrams with a mod-2 homology obstruction as the sound "no"), wheels.

#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>

#include "core.hpp"
#include "parallel.hpp"

namespace flagc {

/// Vertex sequence along 1-skeleton edges. A closed loop stores each vertex
/// once; the edge back to the front is implicit.
struct LoopPath {
    std::vector<Vertex> vertices;
    bool closed = false;

    int length() const {
        if (vertices.empty()) return 0;
        return static_cast<int>(vertices.size()) - (closed ? 0 : 1);
    }
    bool operator==(const LoopPath& o) const {
        return closed == o.closed && vertices == o.vertices;
    }
    bool operator<(const LoopPath& o) const {
        if (vertices.size() != o.vertices.size())
            return vertices.size() < o.vertices.size();
        return vertices < o.vertices;
    }
};

inline bool valid_path(const FlagComplex& c, const LoopPath& p) {
    if (p.vertices.empty()) return false;
    for (Vertex v : p.vertices)
        if (v < 0 || v >= c.vertex_count()) return false;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        if (!c.adjacent(p.vertices[i], p.vertices[i + 1])) return false;
    if (p.closed) {
        if (p.vertices.size() < 3) return false;
        if (!c.adjacent(p.vertices.back(), p.vertices.front())) return false;
        std::vector<Vertex> sorted = p.vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    }
    return true;
}

/// A path is full when it is induced: distinct vertices and no adjacency
/// other than consecutive ones.
inline bool is_full_path(const FlagComplex& c, const LoopPath& p) {
    if (!valid_path(c, p)) return false;
    const auto& vs = p.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (vs[i] == vs[j]) return false;
            bool consecutive = (j == i + 1) || (p.closed && i == 0 && j + 1 == vs.size());
            if (!consecutive && c.adjacent(vs[i], vs[j])) return false;
        }
    return true;
}

/// Lexicographically least rotation/reflection of a closed vertex sequence.
inline std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& cycle) {
    std::vector<Vertex> best;
    std::vector<Vertex> cur(cycle.size());
    const std::size_t n = cycle.size();
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t start = 0; start < n; ++start) {
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t idx = dir == 0 ? (start + i) % n : (start + n - i % n) % n;
                cur[i] = cycle[idx];
            }
            if (best.empty() || cur < best) best = cur;
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Full-cycle enumeration: every induced cycle of length 4..max_len, emitted
// once in canonical form. (Length-3 cycles always span a simplex in a flag
// complex, so they are never full.)

inline std::vector<LoopPath> enumerate_full_cycles(const FlagComplex& c, int max_len,
                                                   const Options& opts = {}) {
    if (max_len < 3) throw std::invalid_argument("max_len must be >= 3");
    if (max_len > opts.cycle_cap)
        throw cap_exceeded("cycle length " + std::to_string(max_len) + " above cap " +
                           std::to_string(opts.cycle_cap));

    auto scan_from = [&](Vertex s) {
        std::vector<LoopPath> found;
        std::vector<Vertex> path;
        // Path is induced with minimum vertex s; beyond the second vertex,
        // adjacency to s may only close the cycle. Requiring the second
        // vertex below the last kills the reflected duplicate.
        auto extend = [&](auto&& self) -> void {
            Vertex last = path.back();
            for (Vertex u : c.neighbors(last)) {
                if (u <= s) continue;
                bool chord = false;
                for (std::size_t i = 1; i + 1 < path.size(); ++i)
                    if (u == path[i] || c.adjacent(u, path[i])) {
                        chord = true;
                        break;
                    }
                if (chord) continue;
                if (c.adjacent(u, s)) {
                    if (path.size() >= 3 && path[1] < u) {
                        LoopPath loop;
                        loop.vertices = path;
                        loop.vertices.push_back(u);
                        loop.closed = true;
                        found.push_back(std::move(loop));
                    }
                    continue;
                }
                if (static_cast<int>(path.size()) + 1 >= max_len) continue;
                path.push_back(u);
                self(self);
                path.pop_back();
            }
        };
        if (max_len >= 4) {
            for (Vertex second : c.neighbors(s)) {
                if (second <= s) continue;
                path = {s, second};
                extend(extend);
            }
        }
        return found;
    };

    auto parts = map_indexed<std::vector<LoopPath>>(
        c.vertex_count(), opts.jobs, [&](int s) { return scan_from(static_cast<Vertex>(s)); });
    std::vector<LoopPath> out;
    for (auto& part : parts)
        for (auto& l : part) out.push_back(std::move(l));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Tightening (chord and coincidence removal, deterministic order: leftmost
// applicable pair, nearest partner, restart).

inline LoopPath tighten(const FlagComplex& c, const LoopPath& path) {
    if (path.closed) throw std::invalid_argument("tighten expects an open path");
    if (!valid_path(c, path)) throw std::invalid_argument("invalid path");
    std::vector<Vertex> vs = path.vertices;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < vs.size() && !changed; ++i) {
            for (std::size_t j = i + 2; j < vs.size() && !changed; ++j) {
                if (vs[i] == vs[j]) {
                    // coincidence: drop everything in (i, j]
                    vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                             vs.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                    changed = true;
                } else if (c.adjacent(vs[i], vs[j])) {
                    // chord: drop everything in (i, j)
                    vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                             vs.begin() + static_cast<std::ptrdiff_t>(j));
                    changed = true;
                }
            }
        }
    }
    LoopPath out;
    out.vertices = std::move(vs);
    out.closed = false;
    return out;
}

// ---------------------------------------------------------------------------
// 1-ball containment.

/// Smallest vertex whose closed unit ball contains the loop, if any.
inline std::optional<Vertex> in_one_ball(const FlagComplex& c, const LoopPath& loop) {
    if (!loop.closed) throw std::invalid_argument("in_one_ball expects a closed loop");
    for (Vertex v = 0; v < c.vertex_count(); ++v) {
        bool all = true;
        for (Vertex u : loop.vertices)
            if (u != v && !c.adjacent(u, v)) {
                all = false;
                break;
            }
        if (all) return v;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Mod-2 edge-space linear algebra: membership of a cycle in the triangle
// boundary image. Nonzero class in first homology is a sound certificate
// that the loop is not null-homotopic.

class FillContext {
public:
    explicit FillContext(const FlagComplex& c) : c_(&c) {
        for (std::size_t i = 0; i < c.edges().size(); ++i) edge_index_[c.edges()[i]] = i;
        words_ = (c.edges().size() + 63) / 64;
        // Reduced basis of the triangle boundary image over F2.
        for (Vertex a = 0; a < c.vertex_count(); ++a)
            for (Vertex b : c.neighbors(a)) {
                if (b <= a) continue;
                for (Vertex t : c.neighbors(a)) {
                    if (t <= b || !c.adjacent(t, b)) continue;
                    std::vector<std::uint64_t> vec(words_, 0);
                    flip(vec, a, b);
                    flip(vec, b, t);
                    flip(vec, a, t);
                    reduce(vec);
                    if (auto pivot = lowest_bit(vec)) {
                        basis_.emplace(*pivot, std::move(vec));
                    }
                }
            }
    }

    const FlagComplex& complex() const { return *c_; }
    std::size_t boundary_rank() const { return basis_.size(); }

    /// Mod-2 edge vector of a closed walk.
    std::vector<std::uint64_t> loop_vector(const LoopPath& loop) const {
        std::vector<std::uint64_t> vec(words_, 0);
        const auto& vs = loop.vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            Vertex a = vs[i];
            Vertex b = vs[(i + 1) % vs.size()];
            if (a != b) flip(vec, a, b);
        }
        return vec;
    }

    bool null_homologous(const LoopPath& loop) const {
        auto vec = loop_vector(loop);
        reduce(vec);
        return std::all_of(vec.begin(), vec.end(), [](std::uint64_t w) { return w == 0; });
    }

    std::size_t edge_id(Vertex a, Vertex b) const {
        if (a > b) std::swap(a, b);
        return edge_index_.at(Edge{a, b});
    }

private:
    void flip(std::vector<std::uint64_t>& vec, Vertex a, Vertex b) const {
        std::size_t id = edge_id(a, b);
        vec[id / 64] ^= 1ull << (id % 64);
    }
    static std::optional<std::size_t> lowest_bit(const std::vector<std::uint64_t>& vec) {
        for (std::size_t w = 0; w < vec.size(); ++w)
            if (vec[w]) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(vec[w]));
        return std::nullopt;
    }
    void reduce(std::vector<std::uint64_t>& vec) const {
        while (auto pivot = lowest_bit(vec)) {
            auto it = basis_.find(*pivot);
            if (it == basis_.end()) return;
            for (std::size_t w = 0; w < vec.size(); ++w) vec[w] ^= it->second[w];
        }
    }

    const FlagComplex* c_;
    std::map<Edge, std::size_t> edge_index_;
    std::size_t words_ = 0;
    std::map<std::size_t, std::vector<std::uint64_t>> basis_;
};

/// Rank of first homology over the two-element field.
inline int h1_rank(const FlagComplex& c) {
    FillContext ctx(c);
    long cycles = static_cast<long>(c.edges().size()) - c.vertex_count() + component_count(c);
    return static_cast<int>(cycles - static_cast<long>(ctx.boundary_rank()));
}

// ---------------------------------------------------------------------------
// Filling certificates.

struct FillingCertificate {
    enum class Kind { OneBall, Diagram, HomologyObstruction, Unknown };
    Kind kind = Kind::Unknown;
    Vertex apex = -1;                // OneBall
    std::vector<Simplex> triangles;  // Diagram
    int budget = 0;                  // Unknown: the exhausted budget
};

/// Exact re-verification of a diagram: the triangles are simplices and their
/// boundary sum over F2 equals the loop's edge vector.
inline bool verify_diagram(const FlagComplex& c, const LoopPath& loop,
                           const std::vector<Simplex>& triangles) {
    std::map<Edge, int> parity;
    auto flip = [&](Vertex a, Vertex b) {
        if (a > b) std::swap(a, b);
        parity[Edge{a, b}] ^= 1;
    };
    for (const auto& t : triangles) {
        if (t.vertices.size() != 3 || !is_simplex(c, t)) return false;
        flip(t.vertices[0], t.vertices[1]);
        flip(t.vertices[1], t.vertices[2]);
        flip(t.vertices[0], t.vertices[2]);
    }
    const auto& vs = loop.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        Vertex a = vs[i], b = vs[(i + 1) % vs.size()];
        if (a != b) flip(a, b);
    }
    return std::all_of(parity.begin(), parity.end(),
                       [](const auto& kv) { return kv.second == 0; });
}

namespace detail {

/// Canonical form of a closed walk: least rotation in either orientation.
inline std::vector<Vertex> canonical_walk(const std::vector<Vertex>& walk) {
    return canonical_cycle(walk);
}

struct FillNode {
    std::vector<Vertex> walk;  // closed walk, canonical form
    int cost = 0;              // triangles used
    long parent = -1;          // index into the node arena
    Simplex triangle;          // move that produced this node
};

/// Best-first search over loop reductions: spur removal is free, triangle
/// shortcuts and expansions cost one triangle each. Shorter walks are
/// explored first (any diagram within the budget is acceptable, minimality is
/// not required), so cone-style fillings surface quickly. Terminates with a
/// diagram when the walk collapses to length <= 2.
inline std::optional<std::vector<Simplex>> search_diagram(const FlagComplex& c,
                                                          const LoopPath& loop,
                                                          int area_budget,
                                                          const Options& opts) {
    const std::size_t max_len = loop.vertices.size() +
                                static_cast<std::size_t>(opts.fill_length_slack);
    std::vector<FillNode> arena;
    // priority: (walk length, cost, walk) — deterministic best-first
    using Key = std::tuple<std::size_t, int, std::vector<Vertex>, long>;
    std::priority_queue<Key, std::vector<Key>, std::greater<Key>> queue;
    std::set<std::vector<Vertex>> visited;

    auto push = [&](std::vector<Vertex> walk, int cost, long parent, Simplex tri) {
        // collapse spurs for free before canonicalizing
        bool changed = true;
        while (changed && walk.size() > 2) {
            changed = false;
            const std::size_t n = walk.size();
            for (std::size_t i = 0; i < n; ++i) {
                if (walk[(i + n - 1) % n] == walk[(i + 1) % n]) {
                    std::vector<Vertex> next;
                    for (std::size_t k = 0; k < n; ++k)
                        if (k != i && k != (i + 1) % n) next.push_back(walk[k]);
                    walk = std::move(next);
                    changed = true;
                    break;
                }
            }
        }
        if (walk.size() > max_len) return;
        auto canon = canonical_walk(walk);
        if (visited.count(canon)) return;
        arena.push_back(FillNode{canon, cost, parent, std::move(tri)});
        queue.push(Key{canon.size(), cost, std::move(canon),
                       static_cast<long>(arena.size()) - 1});
    };

    push(loop.vertices, 0, -1, Simplex{});
    while (!queue.empty()) {
        auto [len, cost, walk, idx] = queue.top();
        queue.pop();
        if (!visited.insert(walk).second) continue;
        if (static_cast<long>(arena.size()) > opts.fill_state_cap) return std::nullopt;
        if (len <= 2) {
            std::vector<Simplex> tris;
            for (long at = idx; at >= 0; at = arena[static_cast<std::size_t>(at)].parent)
                if (!arena[static_cast<std::size_t>(at)].triangle.vertices.empty())
                    tris.push_back(arena[static_cast<std::size_t>(at)].triangle);
            std::reverse(tris.begin(), tris.end());
            return tris;
        }
        if (cost >= area_budget) continue;
        const std::size_t n = walk.size();

        // shortcut: (a, m, b) with a ~ b collapses across the triangle
        for (std::size_t i = 0; i < n; ++i) {
            Vertex a = walk[i], m = walk[(i + 1) % n], b = walk[(i + 2) % n];
            if (a == b || a == m || m == b) continue;
            if (!c.adjacent(a, b)) continue;
            std::vector<Vertex> next;
            for (std::size_t k = 0; k < n; ++k)
                if (k != (i + 1) % n) next.push_back(walk[k]);
            push(std::move(next), cost + 1, idx, Simplex{{a, m, b}});
        }
        // expansion: replace edge (a, b) by (a, t, b) for a common neighbor t
        if (n + 1 <= max_len) {
            for (std::size_t i = 0; i < n; ++i) {
                Vertex a = walk[i], b = walk[(i + 1) % n];
                for (Vertex t : c.neighbors(a)) {
                    if (t == b || !c.adjacent(t, b)) continue;
                    std::vector<Vertex> next;
                    for (std::size_t k = 0; k < n; ++k) {
                        next.push_back(walk[k]);
                        if (k == i) next.push_back(t);
                    }
                    push(std::move(next), cost + 1, idx, Simplex{{a, t, b}});
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Bounded null-homotopy certification of a closed loop.
inline FillingCertificate fill(const FillContext& ctx, const LoopPath& loop,
                               int area_budget, const Options& opts = {}) {
    if (!loop.closed) throw std::invalid_argument("fill expects a closed loop");
    if (area_budget < 1) throw std::invalid_argument("area budget must be >= 1");
    const FlagComplex& c = ctx.complex();
    if (auto apex = in_one_ball(c, loop)) {
        FillingCertificate cert;
        cert.kind = FillingCertificate::Kind::OneBall;
        cert.apex = *apex;
        return cert;
    }
    if (!ctx.null_homologous(loop)) {
        FillingCertificate cert;
        cert.kind = FillingCertificate::Kind::HomologyObstruction;
        return cert;
    }
    if (auto tris = detail::search_diagram(c, loop, area_budget, opts)) {
        FillingCertificate cert;
        cert.kind = FillingCertificate::Kind::Diagram;
        cert.triangles = std::move(*tris);
        return cert;
    }
    FillingCertificate cert;
    cert.kind = FillingCertificate::Kind::Unknown;
    cert.budget = area_budget;
    return cert;
}

inline FillingCertificate fill(const FlagComplex& c, const LoopPath& loop, int area_budget,
                               const Options& opts = {}) {
    FillContext ctx(c);
    return fill(ctx, loop, area_budget, opts);
}

// ---------------------------------------------------------------------------
// Wheels: hub adjacent to every vertex of a full k-cycle.

struct Wheel {
    Vertex hub = -1;
    LoopPath rim;  // closed full cycle, canonical form

    bool operator<(const Wheel& o) const {
        if (hub != o.hub) return hub < o.hub;
        return rim < o.rim;
    }
    bool operator==(const Wheel& o) const { return hub == o.hub && rim == o.rim; }
};

inline std::vector<Wheel> find_wheels(const FlagComplex& c, int k, const Options& opts = {}) {
    if (k < 4) throw std::invalid_argument("wheel rim length must be >= 4");
    std::vector<Wheel> out;
    for (const auto& cyc : enumerate_full_cycles(c, k, opts)) {
        if (cyc.length() != k) continue;
        for (Vertex hub = 0; hub < c.vertex_count(); ++hub)
            if (c.adjacent_to_all(hub, cyc.vertices)) out.push_back(Wheel{hub, cyc});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace flagc
