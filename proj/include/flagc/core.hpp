#pragma once

// Immutable model of a flag simplicial complex. Only the 1-skeleton is
// stored; simplices are exactly the cliques of the adjacency relation and
// are enumerated on demand under a configurable size cap.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flagc {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown when an enumeration would exceed a configured cap
/// (clique size, cycle length, delta kernel size).
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Tuning knobs shared by the enumeration kernels. Defaults match the
/// documented CLI defaults.
struct Options {
    int area_budget = 64;     // max triangles in a filling diagram
    int cycle_cap = 12;       // max full-cycle length the enumerator accepts
    int clique_cap = 16;      // max clique size enumerated
    int delta_cap = 400;      // max vertices for the four-point kernel
    int jobs = 1;             // worker threads for the scan kernels
    int fill_length_slack = 6;     // extra loop length allowed during filling search
    long fill_state_cap = 200000;  // explored-state cap of the filling search
    long geodesic_cap = 20000;     // max geodesics enumerated per axis seed
};

class FlagComplex {
public:
    FlagComplex() = default;

    FlagComplex(Vertex vertex_count, std::vector<Edge> edge_list)
        : n_(vertex_count) {
        if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
        for (auto& [u, v] : edge_list) {
            check_vertex(u);
            check_vertex(v);
            if (u == v) throw std::invalid_argument("self-loop edge " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edge_list.begin(), edge_list.end());
        edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
        edges_ = std::move(edge_list);

        row_words_ = (static_cast<std::size_t>(n_) + 63) / 64;
        adj_bits_.assign(row_words_ * static_cast<std::size_t>(n_), 0);
        neighbors_.assign(static_cast<std::size_t>(n_), {});
        for (auto [u, v] : edges_) {
            set_bit(u, v);
            set_bit(v, u);
            neighbors_[static_cast<std::size_t>(u)].push_back(v);
            neighbors_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
    }

    Vertex vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(Vertex u, Vertex v) const {
        return u != v && test_bit(u, v);
    }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return neighbors_[static_cast<std::size_t>(v)];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    // Raw bit row, for common-neighbor scans.
    const std::uint64_t* row(Vertex v) const {
        return adj_bits_.data() + static_cast<std::size_t>(v) * row_words_;
    }
    std::size_t row_words() const { return row_words_; }

    /// True when v is adjacent to every vertex in `set` (v itself excluded).
    bool adjacent_to_all(Vertex v, const std::vector<Vertex>& set) const {
        for (Vertex u : set)
            if (!adjacent(v, u)) return false;
        return true;
    }

    // Optional per-vertex labels and boundary marks. Boundary marks flag
    // window vertices that have neighbors outside the represented window of
    // an infinite complex; distance certification relies on them.
    void set_labels(std::vector<std::string> labels) {
        if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_))
            throw std::invalid_argument("label count mismatch");
        labels_ = std::move(labels);
    }
    const std::vector<std::string>& labels() const { return labels_; }

    void set_boundary(std::vector<Vertex> marks) {
        for (Vertex v : marks) check_vertex(v);
        std::sort(marks.begin(), marks.end());
        marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
        boundary_ = std::move(marks);
        is_boundary_.assign(static_cast<std::size_t>(n_), 0);
        for (Vertex v : boundary_) is_boundary_[static_cast<std::size_t>(v)] = 1;
    }
    const std::vector<Vertex>& boundary_vertices() const { return boundary_; }
    bool is_boundary(Vertex v) const {
        return !is_boundary_.empty() && is_boundary_[static_cast<std::size_t>(v)] != 0;
    }
    bool has_boundary() const { return !boundary_.empty(); }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }

    bool operator==(const FlagComplex& other) const {
        return n_ == other.n_ && edges_ == other.edges_ &&
               labels_ == other.labels_ && boundary_ == other.boundary_;
    }

private:
    void set_bit(Vertex u, Vertex v) {
        adj_bits_[static_cast<std::size_t>(u) * row_words_ +
                  static_cast<std::size_t>(v) / 64] |= 1ull << (v % 64);
    }
    bool test_bit(Vertex u, Vertex v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
        return (adj_bits_[static_cast<std::size_t>(u) * row_words_ +
                          static_cast<std::size_t>(v) / 64] >>
                (v % 64)) & 1u;
    }

    Vertex n_ = 0;
    std::size_t row_words_ = 0;
    std::vector<std::uint64_t> adj_bits_;
    std::vector<std::vector<Vertex>> neighbors_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::vector<Vertex> boundary_;
    std::vector<char> is_boundary_;
};

/// A simplex is held as a strictly increasing vertex list.
struct Simplex {
    std::vector<Vertex> vertices;

    Simplex() = default;
    explicit Simplex(std::vector<Vertex> vs) : vertices(std::move(vs)) {
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    }

    int dimension() const { return static_cast<int>(vertices.size()) - 1; }
    bool operator==(const Simplex& o) const { return vertices == o.vertices; }
    bool operator<(const Simplex& o) const {
        if (vertices.size() != o.vertices.size())
            return vertices.size() < o.vertices.size();
        return vertices < o.vertices;
    }
};

inline bool is_simplex(const FlagComplex& c, const Simplex& s) {
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        c.check_vertex(s.vertices[i]);
        for (std::size_t j = i + 1; j < s.vertices.size(); ++j)
            if (!c.adjacent(s.vertices[i], s.vertices[j])) return false;
    }
    return !s.vertices.empty();
}

/// Full (induced) subcomplex of a parent complex, kept as a vertex set view.
struct SubcomplexView {
    const FlagComplex* parent = nullptr;
    std::vector<Vertex> vertices;  // sorted

    bool contains(Vertex v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }
    std::size_t size() const { return vertices.size(); }
};

inline FlagComplex build_complex(Vertex vertex_count, std::vector<Edge> edges) {
    return FlagComplex(vertex_count, std::move(edges));
}

inline SubcomplexView span(const FlagComplex& c, std::vector<Vertex> vertex_set) {
    for (Vertex v : vertex_set) c.check_vertex(v);
    std::sort(vertex_set.begin(), vertex_set.end());
    vertex_set.erase(std::unique(vertex_set.begin(), vertex_set.end()), vertex_set.end());
    return SubcomplexView{&c, std::move(vertex_set)};
}

/// Re-indexes a view as a standalone complex; `to_parent[i]` maps the new
/// vertex i back to the parent vertex. Boundary marks carry over.
struct ReindexedComplex {
    FlagComplex complex;
    std::vector<Vertex> to_parent;
};

inline ReindexedComplex as_complex(const SubcomplexView& view) {
    const FlagComplex& p = *view.parent;
    std::vector<Vertex> back(static_cast<std::size_t>(p.vertex_count()), -1);
    for (std::size_t i = 0; i < view.vertices.size(); ++i)
        back[static_cast<std::size_t>(view.vertices[i])] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (Vertex v : view.vertices)
        for (Vertex u : p.neighbors(v))
            if (u > v && back[static_cast<std::size_t>(u)] >= 0)
                edges.emplace_back(back[static_cast<std::size_t>(v)],
                                   back[static_cast<std::size_t>(u)]);
    FlagComplex c(static_cast<Vertex>(view.vertices.size()), std::move(edges));
    std::vector<Vertex> marks;
    for (std::size_t i = 0; i < view.vertices.size(); ++i)
        if (p.is_boundary(view.vertices[i])) marks.push_back(static_cast<Vertex>(i));
    if (!marks.empty()) c.set_boundary(std::move(marks));
    return ReindexedComplex{std::move(c), view.vertices};
}

struct LinkResult {
    FlagComplex complex;
    std::vector<Vertex> to_parent;
};

/// Link of a simplex: the induced complex on the vertices adjacent to every
/// vertex of the simplex (and not in it).
inline LinkResult link(const FlagComplex& c, const Simplex& s) {
    if (!is_simplex(c, s)) throw std::invalid_argument("not a simplex of the complex");
    std::vector<Vertex> verts;
    for (Vertex v = 0; v < c.vertex_count(); ++v) {
        if (std::binary_search(s.vertices.begin(), s.vertices.end(), v)) continue;
        if (c.adjacent_to_all(v, s.vertices)) verts.push_back(v);
    }
    auto re = as_complex(SubcomplexView{&c, std::move(verts)});
    return LinkResult{std::move(re.complex), std::move(re.to_parent)};
}

// ---------------------------------------------------------------------------
// Combinatorial metric (shortest-path edge count in the 1-skeleton).

inline constexpr int kUnreachable = -1;

inline std::vector<int> bfs_distances(const FlagComplex& c, Vertex source) {
    c.check_vertex(source);
    std::vector<int> dist(static_cast<std::size_t>(c.vertex_count()), kUnreachable);
    std::vector<Vertex> frontier{source}, next;
    dist[static_cast<std::size_t>(source)] = 0;
    int d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (Vertex v : frontier)
            for (Vertex u : c.neighbors(v))
                if (dist[static_cast<std::size_t>(u)] == kUnreachable) {
                    dist[static_cast<std::size_t>(u)] = d;
                    next.push_back(u);
                }
        frontier.swap(next);
    }
    return dist;
}

/// BFS restricted to an allowed vertex set (induced 1-skeleton).
inline std::vector<int> bfs_distances_within(const FlagComplex& c,
                                             const std::vector<Vertex>& allowed,
                                             Vertex source) {
    std::vector<char> ok(static_cast<std::size_t>(c.vertex_count()), 0);
    for (Vertex v : allowed) ok[static_cast<std::size_t>(v)] = 1;
    if (!ok[static_cast<std::size_t>(source)])
        throw std::invalid_argument("source not in subcomplex");
    std::vector<int> dist(static_cast<std::size_t>(c.vertex_count()), kUnreachable);
    std::vector<Vertex> frontier{source}, next;
    dist[static_cast<std::size_t>(source)] = 0;
    int d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (Vertex v : frontier)
            for (Vertex u : c.neighbors(v))
                if (ok[static_cast<std::size_t>(u)] &&
                    dist[static_cast<std::size_t>(u)] == kUnreachable) {
                    dist[static_cast<std::size_t>(u)] = d;
                    next.push_back(u);
                }
        frontier.swap(next);
    }
    return dist;
}

inline std::optional<int> distance(const FlagComplex& c, Vertex u, Vertex v) {
    c.check_vertex(u);
    c.check_vertex(v);
    int d = bfs_distances(c, u)[static_cast<std::size_t>(v)];
    if (d == kUnreachable) return std::nullopt;
    return d;
}

/// Dense all-pairs distance table; kUnreachable marks distinct components.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const FlagComplex& c) : n_(c.vertex_count()) {
        d_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
        for (Vertex v = 0; v < n_; ++v) {
            auto row = bfs_distances(c, v);
            std::copy(row.begin(), row.end(),
                      d_.begin() + static_cast<std::size_t>(v) * static_cast<std::size_t>(n_));
        }
    }
    int operator()(Vertex u, Vertex v) const {
        return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(v)];
    }
    Vertex size() const { return n_; }

private:
    Vertex n_;
    std::vector<int> d_;
};

inline SubcomplexView ball(const FlagComplex& c, Vertex v, int radius) {
    if (radius < 0) throw std::invalid_argument("negative radius");
    auto dist = bfs_distances(c, v);
    std::vector<Vertex> verts;
    for (Vertex u = 0; u < c.vertex_count(); ++u)
        if (dist[static_cast<std::size_t>(u)] != kUnreachable &&
            dist[static_cast<std::size_t>(u)] <= radius)
            verts.push_back(u);
    return SubcomplexView{&c, std::move(verts)};
}

inline SubcomplexView sphere(const FlagComplex& c, Vertex v, int radius) {
    if (radius < 0) throw std::invalid_argument("negative radius");
    auto dist = bfs_distances(c, v);
    std::vector<Vertex> verts;
    for (Vertex u = 0; u < c.vertex_count(); ++u)
        if (dist[static_cast<std::size_t>(u)] == radius) verts.push_back(u);
    return SubcomplexView{&c, std::move(verts)};
}

inline bool is_connected(const FlagComplex& c) {
    if (c.vertex_count() == 0) return true;
    auto dist = bfs_distances(c, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

inline int component_count(const FlagComplex& c) {
    std::vector<char> seen(static_cast<std::size_t>(c.vertex_count()), 0);
    int comps = 0;
    for (Vertex v = 0; v < c.vertex_count(); ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        ++comps;
        auto dist = bfs_distances(c, v);
        for (Vertex u = 0; u < c.vertex_count(); ++u)
            if (dist[static_cast<std::size_t>(u)] != kUnreachable)
                seen[static_cast<std::size_t>(u)] = 1;
    }
    return comps;
}

/// Largest finite distance from v (0 on a single vertex).
inline int eccentricity(const FlagComplex& c, Vertex v) {
    auto dist = bfs_distances(c, v);
    int e = 0;
    for (int d : dist) e = std::max(e, d);
    return e;
}

// ---------------------------------------------------------------------------
// Clique enumeration (simplices of the flag complex).

/// Visits every clique (size >= 1) in lexicographic DFS order, as a sorted
/// vertex list. Throws cap_exceeded if a clique larger than max_size exists.
template <class Fn>
void for_each_clique(const FlagComplex& c, int max_size, Fn&& fn) {
    if (max_size < 1) throw std::invalid_argument("clique cap must be >= 1");
    std::vector<Vertex> current;
    auto extend = [&](auto&& self, Vertex from) -> void {
        for (Vertex v = from; v < c.vertex_count(); ++v) {
            if (!c.adjacent_to_all(v, current)) continue;
            if (static_cast<int>(current.size()) == max_size)
                throw cap_exceeded("clique cap " + std::to_string(max_size) + " exceeded");
            current.push_back(v);
            fn(const_cast<const std::vector<Vertex>&>(current));
            self(self, v + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
}

inline std::vector<Simplex> all_simplices(const FlagComplex& c, int max_size) {
    std::vector<Simplex> out;
    for_each_clique(c, max_size, [&](const std::vector<Vertex>& q) {
        Simplex s;
        s.vertices = q;
        out.push_back(std::move(s));
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Maximal cliques only (each emitted once, canonical order).
inline std::vector<Simplex> maximal_simplices(const FlagComplex& c, int max_size) {
    std::vector<Simplex> out;
    for_each_clique(c, max_size, [&](const std::vector<Vertex>& q) {
        for (Vertex v = 0; v < c.vertex_count(); ++v)
            if (!std::binary_search(q.begin(), q.end(), v) && c.adjacent_to_all(v, q))
                return;
        Simplex s;
        s.vertices = q;
        out.push_back(std::move(s));
    });
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Explicit simplex-list ingestion with flagness verification.

struct FlagViolation {
    std::vector<Vertex> witness_clique;  // smallest clique absent from the input
};

struct IngestResult {
    std::optional<FlagComplex> complex;
    std::optional<FlagViolation> violation;
    bool ok() const { return complex.has_value(); }
};

/// Accepts a simplex list iff the complex it describes (closed under faces)
/// equals the flag completion of its own 1-skeleton. On failure reports the
/// smallest clique of the 1-skeleton that is not a face of any input simplex.
inline IngestResult ingest_explicit(const std::vector<Simplex>& simplices,
                                    Vertex vertex_count = -1,
                                    int clique_cap = 16) {
    Vertex n = vertex_count;
    if (n < 0) {
        n = 0;
        for (const auto& s : simplices)
            for (Vertex v : s.vertices) n = std::max(n, v + 1);
    }
    std::vector<Edge> edges;
    for (const auto& s : simplices) {
        for (std::size_t i = 0; i < s.vertices.size(); ++i) {
            if (s.vertices[i] < 0 || s.vertices[i] >= n)
                throw std::out_of_range("simplex vertex out of range");
            for (std::size_t j = i + 1; j < s.vertices.size(); ++j)
                edges.emplace_back(s.vertices[i], s.vertices[j]);
        }
    }
    FlagComplex c(n, std::move(edges));

    auto covered = [&](const std::vector<Vertex>& q) {
        for (const auto& s : simplices)
            if (std::includes(s.vertices.begin(), s.vertices.end(), q.begin(), q.end()))
                return true;
        return false;
    };

    // Cliques of size 1 and 2 are covered by construction; scan by size so
    // the reported witness is minimal.
    std::optional<std::vector<Vertex>> witness;
    for (int k = 3; k <= clique_cap && !witness; ++k) {
        bool any = false;
        std::vector<Vertex> current;
        auto extend = [&](auto&& self, Vertex from) -> void {
            if (witness) return;
            if (static_cast<int>(current.size()) == k) {
                any = true;
                if (!covered(current)) witness = current;
                return;
            }
            for (Vertex v = from; v < n && !witness; ++v) {
                if (!c.adjacent_to_all(v, current)) continue;
                current.push_back(v);
                self(self, v + 1);
                current.pop_back();
            }
        };
        extend(extend, 0);
        if (!any) break;
    }
    if (witness) return IngestResult{std::nullopt, FlagViolation{*witness}};
    return IngestResult{std::move(c), std::nullopt};
}

}  // namespace flagc
