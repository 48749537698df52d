#pragma once

// Simplicial isometries, total or window-restricted: displacement profiles,
// translation length, minimal displacement sets, elliptic/hyperbolic
// classification, invariant geodesics (axes) and the graph of axes.
//
// Window convention: a complex may mark boundary vertices, meaning vertices
// with neighbors outside the represented window of an infinite complex. A
// distance computed inside the window is certified to equal the ambient one
// whenever it does not exceed the distance to the nearest marked vertex
// (any escaping path is strictly longer).

#include <string>

#include "core.hpp"
#include "curvature.hpp"
#include "loops.hpp"
#include "parallel.hpp"

namespace flagc {

class Isometry {
public:
    Isometry() = default;

    static Isometry permutation(std::vector<Vertex> images) {
        Isometry h;
        h.images_.reserve(images.size());
        for (Vertex v : images) h.images_.emplace_back(v);
        h.validate();
        if (!h.total())
            throw std::invalid_argument("permutation must be total");
        return h;
    }

    static Isometry partial(std::vector<std::optional<Vertex>> images) {
        Isometry h;
        h.images_ = std::move(images);
        h.validate();
        return h;
    }

    Vertex size() const { return static_cast<Vertex>(images_.size()); }

    bool total() const {
        return std::all_of(images_.begin(), images_.end(),
                           [](const auto& i) { return i.has_value(); });
    }

    std::optional<Vertex> apply(Vertex v) const {
        if (v < 0 || v >= size()) return std::nullopt;
        return images_[static_cast<std::size_t>(v)];
    }

    bool in_domain(Vertex v) const { return apply(v).has_value(); }

    std::vector<Vertex> domain() const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < size(); ++v)
            if (in_domain(v)) out.push_back(v);
        return out;
    }

    Isometry inverse() const {
        std::vector<std::optional<Vertex>> inv(images_.size());
        for (Vertex v = 0; v < size(); ++v)
            if (auto w = images_[static_cast<std::size_t>(v)])
                inv[static_cast<std::size_t>(*w)] = v;
        Isometry h;
        h.images_ = std::move(inv);
        return h;
    }

    /// n-fold composition; the domain shrinks per factor for partial maps.
    /// Negative powers go through the inverse; n = 0 yields the identity and
    /// is allowed for total maps only.
    Isometry power(int n) const {
        if (n == 0) {
            if (!total()) throw std::invalid_argument("zero power of a partial map");
            std::vector<Vertex> id(static_cast<std::size_t>(size()));
            for (Vertex v = 0; v < size(); ++v) id[static_cast<std::size_t>(v)] = v;
            return permutation(std::move(id));
        }
        const Isometry base = n > 0 ? *this : inverse();
        int steps = n > 0 ? n : -n;
        Isometry acc = base;
        for (int i = 1; i < steps; ++i) {
            std::vector<std::optional<Vertex>> next(images_.size());
            for (Vertex v = 0; v < size(); ++v)
                if (auto mid = acc.apply(v))
                    next[static_cast<std::size_t>(v)] = base.apply(*mid);
            acc.images_ = std::move(next);
        }
        return acc;
    }

    bool operator==(const Isometry& o) const { return images_ == o.images_; }

private:
    void validate() const {
        std::vector<char> seen(images_.size(), 0);
        for (const auto& img : images_) {
            if (!img) continue;
            if (*img < 0 || *img >= size())
                throw std::out_of_range("image vertex out of range");
            if (seen[static_cast<std::size_t>(*img)]++)
                throw std::invalid_argument("map is not injective");
        }
    }

    std::vector<std::optional<Vertex>> images_;
};

// ---------------------------------------------------------------------------
// Validation against a complex.

struct AutomorphismCheck {
    bool ok = false;
    std::optional<Edge> witness;  // vertex pair whose adjacency is not preserved
    std::string reason;
};

/// Total map: bijective and adjacency-preserving in both directions.
inline AutomorphismCheck check_automorphism(const FlagComplex& c,
                                            const std::vector<Vertex>& images) {
    if (static_cast<Vertex>(images.size()) != c.vertex_count())
        return {false, std::nullopt, "map size differs from vertex count"};
    std::vector<char> seen(images.size(), 0);
    for (Vertex v : images) {
        if (v < 0 || v >= c.vertex_count()) return {false, std::nullopt, "image out of range"};
        if (seen[static_cast<std::size_t>(v)]++)
            return {false, std::nullopt, "map is not injective"};
    }
    for (Vertex u = 0; u < c.vertex_count(); ++u)
        for (Vertex v = u + 1; v < c.vertex_count(); ++v)
            if (c.adjacent(u, v) !=
                c.adjacent(images[static_cast<std::size_t>(u)],
                           images[static_cast<std::size_t>(v)]))
                return {false, Edge{u, v}, "adjacency not preserved"};
    return {true, std::nullopt, ""};
}

/// Partial map: injective, adjacency-preserving both ways on its domain,
/// domain spanning a connected subcomplex.
inline AutomorphismCheck check_partial_automorphism(const FlagComplex& c, const Isometry& h) {
    if (h.size() != c.vertex_count())
        return {false, std::nullopt, "map size differs from vertex count"};
    auto dom = h.domain();
    if (dom.empty()) return {false, std::nullopt, "empty domain"};
    for (std::size_t a = 0; a < dom.size(); ++a)
        for (std::size_t b = a + 1; b < dom.size(); ++b) {
            Vertex u = dom[a], v = dom[b];
            if (c.adjacent(u, v) != c.adjacent(*h.apply(u), *h.apply(v)))
                return {false, Edge{u, v}, "adjacency not preserved on domain"};
        }
    auto dist = bfs_distances_within(c, dom, dom.front());
    for (Vertex v : dom)
        if (dist[static_cast<std::size_t>(v)] == kUnreachable)
            return {false, std::nullopt, "domain is not connected"};
    return {true, std::nullopt, ""};
}

// ---------------------------------------------------------------------------
// Certified window distances.

class WindowMargins {
public:
    explicit WindowMargins(const FlagComplex& c) : c_(&c) {
        if (!c.has_boundary()) return;
        margin_.assign(static_cast<std::size_t>(c.vertex_count()), kUnreachable);
        std::vector<Vertex> frontier = c.boundary_vertices(), next;
        for (Vertex v : frontier) margin_[static_cast<std::size_t>(v)] = 0;
        int d = 0;
        while (!frontier.empty()) {
            ++d;
            next.clear();
            for (Vertex v : frontier)
                for (Vertex u : c_->neighbors(v))
                    if (margin_[static_cast<std::size_t>(u)] == kUnreachable) {
                        margin_[static_cast<std::size_t>(u)] = d;
                        next.push_back(u);
                    }
            frontier.swap(next);
        }
    }

    /// Distance to the nearest marked vertex; infinite when nothing is marked.
    std::optional<int> margin(Vertex v) const {
        if (margin_.empty()) return std::nullopt;
        int m = margin_[static_cast<std::size_t>(v)];
        return m == kUnreachable ? std::optional<int>() : std::optional<int>(m);
    }

    /// True when a window distance d between u and v equals the ambient one.
    bool certifies(Vertex u, Vertex v, int d) const {
        if (margin_.empty()) return true;
        auto mu = margin(u), mv = margin(v);
        int best = -1;
        if (mu) best = std::max(best, *mu);
        if (mv) best = std::max(best, *mv);
        if (best < 0) return true;  // both unreachable from the boundary
        return d <= best;
    }

private:
    const FlagComplex* c_;
    std::vector<int> margin_;
};

// ---------------------------------------------------------------------------
// Displacement profile.

struct DisplacementReport {
    std::vector<std::optional<int>> displacement;  // window distance x -> h(x)
    std::vector<char> certified;                   // equals the ambient distance
    int translation_length = 0;                    // min over certified vertices
    std::vector<Vertex> min_vertices;              // certified argmin set
    bool elliptic = false;
    std::optional<Simplex> invariant_simplex;
};

namespace detail {

/// Orbits of the map that close up inside the domain, as sorted vertex sets.
inline std::vector<std::vector<Vertex>> closed_orbits(const Isometry& h) {
    std::vector<std::vector<Vertex>> orbits;
    std::vector<char> done(static_cast<std::size_t>(h.size()), 0);
    for (Vertex start = 0; start < h.size(); ++start) {
        if (done[static_cast<std::size_t>(start)] || !h.in_domain(start)) continue;
        std::vector<Vertex> trail{start};
        Vertex cur = start;
        bool closes = false;
        for (int step = 0; step < h.size(); ++step) {
            auto next = h.apply(cur);
            if (!next) break;
            cur = *next;
            if (cur == start) {
                closes = true;
                break;
            }
            trail.push_back(cur);
        }
        if (closes) {
            for (Vertex v : trail) done[static_cast<std::size_t>(v)] = 1;
            std::sort(trail.begin(), trail.end());
            orbits.push_back(std::move(trail));
        }
    }
    return orbits;
}

}  // namespace detail

inline DisplacementReport displacement_profile(const FlagComplex& c, const Isometry& h,
                                               const Options& opts = {}) {
    if (h.size() != c.vertex_count())
        throw std::invalid_argument("map size differs from vertex count");
    WindowMargins margins(c);
    DisplacementReport rep;
    rep.displacement.assign(static_cast<std::size_t>(c.vertex_count()), std::nullopt);
    rep.certified.assign(static_cast<std::size_t>(c.vertex_count()), 0);

    auto rows = map_indexed<std::optional<int>>(c.vertex_count(), opts.jobs, [&](int x) {
        auto img = h.apply(static_cast<Vertex>(x));
        if (!img) return std::optional<int>();
        int d = bfs_distances(c, static_cast<Vertex>(x))[static_cast<std::size_t>(*img)];
        return d == kUnreachable ? std::optional<int>() : std::optional<int>(d);
    });
    for (Vertex x = 0; x < c.vertex_count(); ++x) {
        rep.displacement[static_cast<std::size_t>(x)] = rows[static_cast<std::size_t>(x)];
        if (rows[static_cast<std::size_t>(x)] &&
            margins.certifies(x, *h.apply(x), *rows[static_cast<std::size_t>(x)]))
            rep.certified[static_cast<std::size_t>(x)] = 1;
    }

    int best = -1;
    for (Vertex x = 0; x < c.vertex_count(); ++x)
        if (rep.certified[static_cast<std::size_t>(x)]) {
            int d = *rep.displacement[static_cast<std::size_t>(x)];
            if (best < 0 || d < best) best = d;
        }
    if (best < 0)
        throw std::runtime_error("no certified displacements: window too small");
    rep.translation_length = best;
    for (Vertex x = 0; x < c.vertex_count(); ++x)
        if (rep.certified[static_cast<std::size_t>(x)] &&
            *rep.displacement[static_cast<std::size_t>(x)] == best)
            rep.min_vertices.push_back(x);

    // Elliptic iff some simplex is setwise invariant; such a simplex exists
    // exactly when some closed orbit is a clique.
    std::optional<Simplex> inv;
    for (const auto& orbit : detail::closed_orbits(h)) {
        bool clique = true;
        for (std::size_t a = 0; a < orbit.size() && clique; ++a)
            for (std::size_t b = a + 1; b < orbit.size() && clique; ++b)
                if (!c.adjacent(orbit[a], orbit[b])) clique = false;
        if (!clique) continue;
        Simplex s;
        s.vertices = orbit;
        if (!inv || s < *inv) inv = std::move(s);
    }
    rep.elliptic = inv.has_value();
    rep.invariant_simplex = std::move(inv);
    return rep;
}

/// Full subcomplex spanned by the displacement minimizers. Verifies that the
/// set is invariant under the map wherever the image is certified.
inline SubcomplexView min_set(const FlagComplex& c, const Isometry& h,
                              const DisplacementReport& rep) {
    SubcomplexView view{&c, rep.min_vertices};
    for (Vertex x : rep.min_vertices) {
        auto img = h.apply(x);
        if (!img || !rep.certified[static_cast<std::size_t>(*img)]) continue;
        if (!view.contains(*img))
            throw std::logic_error("minimal displacement set not invariant");
    }
    return view;
}

inline SubcomplexView min_set(const FlagComplex& c, const Isometry& h,
                              const Options& opts = {}) {
    return min_set(c, h, displacement_profile(c, h, opts));
}

// ---------------------------------------------------------------------------
// Isometric embedding of a subcomplex's 1-skeleton.

inline Verdict check_isometric_embedding(const FlagComplex& c, const SubcomplexView& sub,
                                         const Options& opts = {}) {
    if (sub.vertices.empty()) throw std::invalid_argument("empty subcomplex");
    WindowMargins margins(c);
    auto witnesses = map_indexed<std::optional<EmbeddingWitness>>(
        static_cast<int>(sub.vertices.size()), opts.jobs,
        [&](int i) -> std::optional<EmbeddingWitness> {
            Vertex u = sub.vertices[static_cast<std::size_t>(i)];
            auto ambient = bfs_distances(c, u);
            auto inner = bfs_distances_within(c, sub.vertices, u);
            for (Vertex v : sub.vertices) {
                if (v <= u) continue;
                int da = ambient[static_cast<std::size_t>(v)];
                int di = inner[static_cast<std::size_t>(v)];
                if (da == kUnreachable) continue;
                if (!margins.certifies(u, v, da)) continue;
                if (di != da)
                    return EmbeddingWitness{
                        u, v, di == kUnreachable ? std::optional<int>() : std::optional<int>(di),
                        da};
            }
            return std::nullopt;
        });
    for (const auto& w : witnesses)
        if (w) return Verdict::fail(*w, "subcomplex distance differs from ambient distance");
    return Verdict::pass();
}

// ---------------------------------------------------------------------------
// Idempotence of the minimal displacement set: recomputing the displacement
// inside the spanned set must select every certified vertex again.

inline Verdict min_idempotence(const FlagComplex& c, const Isometry& h,
                               const Options& opts = {}) {
    auto rep = displacement_profile(c, h, opts);
    auto view = min_set(c, h, rep);
    auto re = as_complex(view);

    // Inside the subcomplex, vertices that see the rest of the ambient
    // complex also behave like window boundary.
    std::vector<Vertex> marks;
    for (std::size_t i = 0; i < re.to_parent.size(); ++i) {
        Vertex pv = re.to_parent[i];
        if (c.is_boundary(pv) ||
            static_cast<std::size_t>(c.degree(pv)) != re.complex.neighbors(
                static_cast<Vertex>(i)).size())
            marks.push_back(static_cast<Vertex>(i));
    }
    re.complex.set_boundary(marks);

    std::vector<Vertex> back(static_cast<std::size_t>(c.vertex_count()), -1);
    for (std::size_t i = 0; i < re.to_parent.size(); ++i)
        back[static_cast<std::size_t>(re.to_parent[i])] = static_cast<Vertex>(i);
    std::vector<std::optional<Vertex>> images(re.to_parent.size());
    for (std::size_t i = 0; i < re.to_parent.size(); ++i) {
        auto img = h.apply(re.to_parent[i]);
        if (!img) continue;
        if (back[static_cast<std::size_t>(*img)] < 0) {
            if (h.total())
                return Verdict::fail(std::vector<Vertex>{re.to_parent[i]},
                                     "map does not restrict to its minimal set");
            continue;
        }
        images[i] = back[static_cast<std::size_t>(*img)];
    }

    DisplacementReport inner;
    try {
        inner = displacement_profile(re.complex, Isometry::partial(std::move(images)), opts);
    } catch (const std::runtime_error&) {
        return Verdict::unknown({}, "window too small to certify the restricted displacement");
    }
    if (inner.translation_length != rep.translation_length)
        return Verdict::fail(std::monostate{},
                             "restricted translation length " +
                                 std::to_string(inner.translation_length) + " differs from " +
                                 std::to_string(rep.translation_length));
    std::vector<Vertex> uncovered;
    for (Vertex i = 0; i < re.complex.vertex_count(); ++i)
        if (inner.certified[static_cast<std::size_t>(i)] &&
            *inner.displacement[static_cast<std::size_t>(i)] != inner.translation_length)
            uncovered.push_back(re.to_parent[static_cast<std::size_t>(i)]);
    if (!uncovered.empty())
        return Verdict::fail(uncovered, "vertices of the minimal set lose minimality inside it");
    return Verdict::pass();
}

// ---------------------------------------------------------------------------
// Axes: stitched invariant geodesics.

struct Axis {
    std::vector<Vertex> vertices;
    bool closed = false;

    bool operator<(const Axis& o) const {
        if (closed != o.closed) return closed < o.closed;
        if (vertices.size() != o.vertices.size()) return vertices.size() < o.vertices.size();
        return vertices < o.vertices;
    }
    bool operator==(const Axis& o) const {
        return closed == o.closed && vertices == o.vertices;
    }
};

struct AxesResult {
    int power = 0;        // smallest power with an accepted axis; 0 when none
    int translation = 0;  // certified translation length of that power
    std::vector<Axis> axes;
    bool exhaustive = false;  // every geodesic from every seed was examined
};

namespace detail {

/// All shortest paths u -> v in the 1-skeleton, capped; deterministic order.
inline std::vector<std::vector<Vertex>> all_geodesics(const FlagComplex& c, Vertex u, Vertex v,
                                                      long cap, bool& complete) {
    auto dist = bfs_distances(c, u);
    std::vector<std::vector<Vertex>> out;
    complete = true;
    if (dist[static_cast<std::size_t>(v)] == kUnreachable) return out;
    std::vector<Vertex> rev{v};
    auto walk = [&](auto&& self, Vertex cur) -> void {
        if (!complete) return;
        if (cur == u) {
            if (static_cast<long>(out.size()) >= cap) {
                complete = false;
                return;
            }
            out.emplace_back(rev.rbegin(), rev.rend());
            return;
        }
        for (Vertex p : c.neighbors(cur)) {
            if (dist[static_cast<std::size_t>(p)] != dist[static_cast<std::size_t>(cur)] - 1)
                continue;
            rev.push_back(p);
            self(self, p);
            rev.pop_back();
        }
    };
    walk(walk, v);
    return out;
}

/// Concatenates images of a geodesic x -> g(x) in both directions, as far
/// as the map allows, with a vertex-wise tail/head so window truncation
/// does not split one line into shifted fragments. Closes into a loop when
/// the orbit returns to the seed.
inline Axis stitch(const Isometry& g, const std::vector<Vertex>& alpha) {
    Axis axis;
    std::vector<Vertex> seq = alpha;
    std::vector<Vertex> segment = alpha;
    const Vertex seed = alpha.front();
    bool truncated = false;
    while (true) {
        if (seq.back() == seed) {
            axis.closed = true;
            seq.pop_back();
            break;
        }
        std::vector<Vertex> next;
        next.reserve(segment.size());
        for (Vertex v : segment) {
            auto img = g.apply(v);
            if (!img) {
                truncated = true;
                break;
            }
            next.push_back(*img);
        }
        if (truncated) {
            // partial image of the last copy: still a path, cut at the window
            seq.insert(seq.end(), next.size() > 1 ? next.begin() + 1 : next.end(), next.end());
            break;
        }
        seq.insert(seq.end(), next.begin() + 1, next.end());
        segment = std::move(next);
        if (seq.size() > static_cast<std::size_t>(g.size()) * (segment.size() + 1)) break;
    }
    if (!axis.closed) {
        Isometry ginv = g.inverse();
        segment = alpha;
        std::vector<Vertex> prefix;
        bool cut = false;
        while (!cut) {
            std::vector<Vertex> prev;
            prev.reserve(segment.size());
            for (auto it = segment.rbegin(); it != segment.rend(); ++it) {
                auto img = ginv.apply(*it);
                if (!img) {
                    cut = true;
                    break;
                }
                prev.insert(prev.begin(), *img);
            }
            if (cut) {
                if (prev.size() > 1)
                    prefix.insert(prefix.begin(), prev.begin(), prev.end() - 1);
                break;
            }
            prefix.insert(prefix.begin(), prev.begin(), prev.end() - 1);
            segment = std::move(prev);
            if (prefix.size() > static_cast<std::size_t>(g.size()) * (segment.size() + 1)) break;
        }
        seq.insert(seq.begin(), prefix.begin(), prefix.end());
    }
    if (axis.closed) {
        axis.vertices = canonical_cycle(seq);
    } else {
        std::vector<Vertex> reversed(seq.rbegin(), seq.rend());
        axis.vertices = std::min(seq, reversed);
    }
    return axis;
}

/// Every pair of positions at parameter distance <= scale must realize that
/// distance in the window (certified pairs only).
inline bool locally_geodesic(const FlagComplex& c, const WindowMargins& margins,
                             const Axis& axis, int scale) {
    const auto& vs = axis.vertices;
    const int n = static_cast<int>(vs.size());
    for (int i = 0; i < n; ++i) {
        auto dist = bfs_distances(c, vs[static_cast<std::size_t>(i)]);
        int reach = axis.closed ? std::min(scale, n / 2) : scale;
        for (int t = 1; t <= reach; ++t) {
            int j = axis.closed ? (i + t) % n : i + t;
            if (!axis.closed && j >= n) break;
            Vertex a = vs[static_cast<std::size_t>(i)], b = vs[static_cast<std::size_t>(j)];
            int d = dist[static_cast<std::size_t>(b)];
            // The window distance bounds the ambient one from above, so a
            // short window distance refutes geodesity outright; a longer one
            // refutes it only when certified.
            if (d != kUnreachable && d < t) return false;
            if (d == kUnreachable) {
                if (!c.has_boundary()) return false;
                continue;
            }
            if (!margins.certifies(a, b, d)) continue;
            if (d != t) return false;
        }
    }
    return true;
}

inline std::vector<Axis> discover_axes(const FlagComplex& c, const Isometry& g,
                                       const DisplacementReport& rep, int scale,
                                       const Options& opts, bool& exhaustive) {
    WindowMargins margins(c);
    exhaustive = true;
    auto per_seed = map_indexed<std::pair<std::vector<Axis>, bool>>(
        static_cast<int>(rep.min_vertices.size()), opts.jobs, [&](int i) {
            Vertex x = rep.min_vertices[static_cast<std::size_t>(i)];
            bool complete = true;
            std::vector<Axis> found;
            for (const auto& alpha :
                 detail::all_geodesics(c, x, *g.apply(x), opts.geodesic_cap, complete)) {
                Axis axis = detail::stitch(g, alpha);
                if (detail::locally_geodesic(c, margins, axis, scale))
                    found.push_back(std::move(axis));
            }
            return std::make_pair(std::move(found), complete);
        });
    std::vector<Axis> axes;
    for (auto& [found, complete] : per_seed) {
        if (!complete) exhaustive = false;
        for (auto& a : found) axes.push_back(std::move(a));
    }
    std::sort(axes.begin(), axes.end());
    axes.erase(std::unique(axes.begin(), axes.end()), axes.end());
    return axes;
}

}  // namespace detail

/// Smallest power n <= max_power whose stitched orbits yield an axis that is
/// locally geodesic at the given scale (default: the translation length).
inline AxesResult invariant_geodesics(const FlagComplex& c, const Isometry& h, int max_power,
                                      const Options& opts = {}, int scale_override = 0) {
    if (max_power < 1) throw std::invalid_argument("max_power must be >= 1");
    auto base = displacement_profile(c, h, opts);
    if (base.elliptic)
        throw std::invalid_argument("map is elliptic: it fixes a simplex");
    AxesResult result;
    for (int n = 1; n <= max_power; ++n) {
        Isometry g = h.power(n);
        if (g.domain().empty()) break;
        DisplacementReport rep;
        try {
            rep = displacement_profile(c, g, opts);
        } catch (const std::runtime_error&) {
            continue;
        }
        if (rep.elliptic) continue;  // a finite-order power fixes a simplex
        int scale = scale_override > 0 ? scale_override : rep.translation_length;
        bool exhaustive = true;
        auto axes = detail::discover_axes(c, g, rep, scale, opts, exhaustive);
        if (!axes.empty()) {
            result.power = n;
            result.translation = rep.translation_length;
            result.axes = std::move(axes);
            result.exhaustive = exhaustive;
            return result;
        }
    }
    return result;
}

/// Does every certified vertex of the minimal set of h^n lie on some
/// discovered axis?
inline Verdict union_of_axes_check(const FlagComplex& c, const Isometry& h, int n,
                                   const Options& opts = {}, int scale_override = 0) {
    Isometry g = h.power(n);
    auto rep = displacement_profile(c, g, opts);
    if (rep.elliptic) throw std::invalid_argument("power is elliptic: it fixes a simplex");
    int scale = scale_override > 0 ? scale_override : rep.translation_length;
    bool exhaustive = true;
    auto axes = detail::discover_axes(c, g, rep, scale, opts, exhaustive);
    std::vector<char> covered(static_cast<std::size_t>(c.vertex_count()), 0);
    for (const auto& axis : axes)
        for (Vertex v : axis.vertices) covered[static_cast<std::size_t>(v)] = 1;
    std::vector<Vertex> uncovered;
    for (Vertex v : rep.min_vertices)
        if (!covered[static_cast<std::size_t>(v)]) uncovered.push_back(v);
    if (uncovered.empty())
        return Verdict::pass(exhaustive ? "exhaustive" : "search incomplete");
    return Verdict::fail(uncovered, exhaustive
                                        ? "vertices provably on no axis (exhaustive search)"
                                        : "vertices uncovered (search incomplete)");
}

struct AxesGraph {
    int power = 0;
    std::vector<Axis> axes;
    std::vector<std::pair<int, int>> edges;  // indices into axes, d_min <= 1
};

inline AxesGraph graph_of_axes(const FlagComplex& c, const Isometry& h, int n,
                               const Options& opts = {}, int scale_override = 0) {
    Isometry g = h.power(n);
    auto rep = displacement_profile(c, g, opts);
    if (rep.elliptic) throw std::invalid_argument("power is elliptic: it fixes a simplex");
    int scale = scale_override > 0 ? scale_override : rep.translation_length;
    bool exhaustive = true;
    AxesGraph graph;
    graph.power = n;
    graph.axes = detail::discover_axes(c, g, rep, scale, opts, exhaustive);
    WindowMargins margins(c);
    for (std::size_t a = 0; a < graph.axes.size(); ++a) {
        for (std::size_t b = a + 1; b < graph.axes.size(); ++b) {
            int dmin = kUnreachable;
            for (Vertex u : graph.axes[a].vertices) {
                auto dist = bfs_distances(c, u);
                for (Vertex v : graph.axes[b].vertices) {
                    int d = dist[static_cast<std::size_t>(v)];
                    if (d == kUnreachable || !margins.certifies(u, v, d)) continue;
                    if (dmin == kUnreachable || d < dmin) dmin = d;
                }
            }
            if (dmin != kUnreachable && dmin <= 1)
                graph.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    return graph;
}

}  // namespace flagc
