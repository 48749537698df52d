#pragma once

// Exact four-point hyperbolicity constant and a bottleneck criterion for
// being quasi-isometric to a tree. Delta is a half-integer and is kept as a
// doubled integer, never floating point.

#include <array>
#include <string>

#include "core.hpp"
#include "isometry.hpp"
#include "parallel.hpp"

namespace flagc {

/// Plain graph view for metric diagnostics (complex 1-skeletons, axes graphs).
struct MetricGraph {
    Vertex n = 0;
    std::vector<std::vector<Vertex>> adj;

    static MetricGraph from_complex(const FlagComplex& c) {
        MetricGraph g;
        g.n = c.vertex_count();
        g.adj.reserve(static_cast<std::size_t>(g.n));
        for (Vertex v = 0; v < g.n; ++v) g.adj.push_back(c.neighbors(v));
        return g;
    }
    static MetricGraph from_axes_graph(const AxesGraph& ag) {
        MetricGraph g;
        g.n = static_cast<Vertex>(ag.axes.size());
        g.adj.assign(ag.axes.size(), {});
        for (auto [a, b] : ag.edges) {
            g.adj[static_cast<std::size_t>(a)].push_back(b);
            g.adj[static_cast<std::size_t>(b)].push_back(a);
        }
        for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
        return g;
    }

    std::vector<int> bfs(Vertex source) const {
        std::vector<int> dist(static_cast<std::size_t>(n), kUnreachable);
        std::vector<Vertex> frontier{source}, next;
        dist[static_cast<std::size_t>(source)] = 0;
        int d = 0;
        while (!frontier.empty()) {
            ++d;
            next.clear();
            for (Vertex v : frontier)
                for (Vertex u : adj[static_cast<std::size_t>(v)])
                    if (dist[static_cast<std::size_t>(u)] == kUnreachable) {
                        dist[static_cast<std::size_t>(u)] = d;
                        next.push_back(u);
                    }
            frontier.swap(next);
        }
        return dist;
    }
};

struct DeltaResult {
    int doubled_delta = 0;  // 2 * delta, exact
    std::array<Vertex, 4> witness{{-1, -1, -1, -1}};
    std::string delta_string() const {
        if (doubled_delta % 2 == 0) return std::to_string(doubled_delta / 2);
        return std::to_string(doubled_delta) + "/2";
    }
};

/// Max over vertex quadruples of half the gap between the largest and
/// second-largest of the three pairwise distance sums. Witness is the
/// lexicographically least maximizing quadruple.
inline DeltaResult delta_four_point(const MetricGraph& g, const Options& opts = {}) {
    if (g.n == 0) throw std::invalid_argument("empty graph");
    if (g.n > opts.delta_cap)
        throw cap_exceeded("graph has " + std::to_string(g.n) + " vertices, cap " +
                           std::to_string(opts.delta_cap));

    std::vector<std::vector<int>> dist(static_cast<std::size_t>(g.n));
    for (Vertex v = 0; v < g.n; ++v) {
        dist[static_cast<std::size_t>(v)] = g.bfs(v);
        for (int d : dist[static_cast<std::size_t>(v)])
            if (d == kUnreachable) throw std::invalid_argument("graph is disconnected");
    }

    struct Best {
        int gap = -1;
        std::array<Vertex, 4> quad{{-1, -1, -1, -1}};
    };
    auto merge = [](Best& acc, const Best& b) {
        if (b.gap > acc.gap || (b.gap == acc.gap && b.gap >= 0 && b.quad < acc.quad)) acc = b;
    };

    auto rows = map_indexed<Best>(g.n, opts.jobs, [&](int ai) {
        Best best;
        Vertex a = static_cast<Vertex>(ai);
        const auto& da = dist[static_cast<std::size_t>(a)];
        for (Vertex b = a + 1; b < g.n; ++b) {
            const auto& db = dist[static_cast<std::size_t>(b)];
            for (Vertex c = b + 1; c < g.n; ++c) {
                const auto& dc = dist[static_cast<std::size_t>(c)];
                for (Vertex d = c + 1; d < g.n; ++d) {
                    int s1 = da[static_cast<std::size_t>(b)] + dc[static_cast<std::size_t>(d)];
                    int s2 = da[static_cast<std::size_t>(c)] + db[static_cast<std::size_t>(d)];
                    int s3 = da[static_cast<std::size_t>(d)] + db[static_cast<std::size_t>(c)];
                    int hi = std::max({s1, s2, s3});
                    int lo = std::min({s1, s2, s3});
                    int mid = s1 + s2 + s3 - hi - lo;
                    int gap = hi - mid;
                    if (gap > best.gap)
                        best = Best{gap, {a, b, c, d}};
                }
            }
        }
        return best;
    });
    Best total;
    for (const auto& b : rows) merge(total, b);

    DeltaResult res;
    res.doubled_delta = std::max(total.gap, 0);  // fewer than four vertices: delta 0
    res.witness = total.quad;
    return res;
}

/// Recomputes the three sums on a quadruple; used for witness replay.
inline int doubled_delta_of_quadruple(const MetricGraph& g, const std::array<Vertex, 4>& q) {
    auto d0 = g.bfs(q[0]), d1 = g.bfs(q[1]);
    int s1 = d0[static_cast<std::size_t>(q[1])] + g.bfs(q[2])[static_cast<std::size_t>(q[3])];
    int s2 = d0[static_cast<std::size_t>(q[2])] + d1[static_cast<std::size_t>(q[3])];
    int s3 = d0[static_cast<std::size_t>(q[3])] + d1[static_cast<std::size_t>(q[2])];
    int hi = std::max({s1, s2, s3});
    int lo = std::min({s1, s2, s3});
    return hi - (s1 + s2 + s3 - hi - lo);
}

// ---------------------------------------------------------------------------
// Bottleneck property: for every vertex pair some near-midpoint ball of
// radius delta_param meets every path between them (checked by removing the
// ball and testing disconnection).

inline Verdict bottleneck_check(const MetricGraph& g, int delta_param,
                                const Options& opts = {}) {
    if (delta_param < 0) throw std::invalid_argument("negative radius");
    if (g.n > opts.delta_cap)
        throw cap_exceeded("graph has " + std::to_string(g.n) + " vertices, cap " +
                           std::to_string(opts.delta_cap));
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(g.n));
    for (Vertex v = 0; v < g.n; ++v) {
        dist[static_cast<std::size_t>(v)] = g.bfs(v);
        for (int d : dist[static_cast<std::size_t>(v)])
            if (d == kUnreachable) throw std::invalid_argument("graph is disconnected");
    }

    auto reachable_avoiding = [&](Vertex x, Vertex y, const std::vector<char>& blocked) {
        if (blocked[static_cast<std::size_t>(x)] || blocked[static_cast<std::size_t>(y)])
            return false;  // endpoint inside the ball: every path meets it
        std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
        std::vector<Vertex> stack{x};
        seen[static_cast<std::size_t>(x)] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            if (v == y) return true;
            for (Vertex u : g.adj[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(u)] && !blocked[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    stack.push_back(u);
                }
        }
        return false;
    };

    for (Vertex x = 0; x < g.n; ++x)
        for (Vertex y = x + 1; y < g.n; ++y) {
            int d = dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            bool ok = false;
            for (Vertex m = 0; m < g.n && !ok; ++m) {
                int dxm = dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(m)];
                int dmy = dist[static_cast<std::size_t>(m)][static_cast<std::size_t>(y)];
                if (dxm + dmy != d) continue;             // midpoint lies on a geodesic
                if (std::abs(2 * dxm - d) > 1) continue;  // within a half step of the middle
                std::vector<char> blocked(static_cast<std::size_t>(g.n), 0);
                for (Vertex v = 0; v < g.n; ++v)
                    if (dist[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)] <=
                        delta_param)
                        blocked[static_cast<std::size_t>(v)] = 1;
                if (!reachable_avoiding(x, y, blocked)) ok = true;
            }
            if (!ok)
                return Verdict::fail(EmbeddingWitness{x, y, std::nullopt, d},
                                     "pair admits no separating midpoint ball of radius " +
                                         std::to_string(delta_param));
        }
    return Verdict::pass();
}

}  // namespace flagc
