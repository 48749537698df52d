#pragma once

// Deterministic corpus builders: named small complexes, layered triangulated
// disks of constant interior degree, triangulated strips and cylinders with
// their canonical shift/rotation maps, and seeded random flag complexes.

#include <cmath>
#include <sstream>
#include <string>

#include "core.hpp"
#include "isometry.hpp"

namespace flagc {

struct CorpusSpec {
    enum class Kind {
        Cycle,
        Wheel,
        Octahedron,
        Icosahedron,
        Disk,
        Strip,
        Cylinder,
        RandomFlag,
    };
    Kind kind = Kind::Cycle;
    int n = 0;           // cycle/wheel/random size
    int degree = 0;      // disk interior degree
    int radius = 0;      // disk radius
    int width = 0;       // strip rows
    int length = 0;      // strip columns
    int circumference = 0, height = 0;  // cylinder
    double p = 0.0;      // random edge probability
    std::uint64_t seed = 0;

    std::string to_string() const {
        std::ostringstream os;
        switch (kind) {
            case Kind::Cycle: os << "cycle n=" << n; break;
            case Kind::Wheel: os << "wheel k=" << n; break;
            case Kind::Octahedron: os << "octahedron"; break;
            case Kind::Icosahedron: os << "icosahedron"; break;
            case Kind::Disk: os << "disk d=" << degree << " r=" << radius; break;
            case Kind::Strip: os << "strip w=" << width << " l=" << length; break;
            case Kind::Cylinder: os << "cylinder c=" << circumference << " h=" << height; break;
            case Kind::RandomFlag:
                os << "random n=" << n << " p=" << p << " seed=" << seed;
                break;
        }
        return os.str();
    }

    static CorpusSpec parse(const std::string& text);
};

/// A generated complex plus its canonical map, when one is defined
/// (disk and cylinder rotations are total, the strip shift is partial).
struct Generated {
    FlagComplex complex;
    std::optional<Isometry> map;
    std::string map_kind;  // "rotation", "shift" or empty
};

// ---------------------------------------------------------------------------

inline FlagComplex cycle_complex(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return FlagComplex(n, std::move(edges));
}

/// Hub vertex 0 joined to every vertex of a full k-cycle.
inline FlagComplex wheel_complex(int k) {
    if (k < 4) throw std::invalid_argument("wheel needs rim length >= 4");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(1 + i, 1 + (i + 1) % k);
        edges.emplace_back(0, 1 + i);
    }
    return FlagComplex(k + 1, std::move(edges));
}

/// Boundary of the octahedron: three antipodal pairs (0,1), (2,3), (4,5),
/// every non-pair adjacent.
inline FlagComplex octahedron() {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < 6; ++u)
        for (Vertex v = u + 1; v < 6; ++v)
            if (!(u / 2 == v / 2)) edges.emplace_back(u, v);
    return FlagComplex(6, std::move(edges));
}

/// Boundary of the icosahedron: poles 0 and 11, antiprism rings 1..5, 6..10.
inline FlagComplex icosahedron() {
    std::vector<Edge> edges;
    for (int k = 0; k < 5; ++k) {
        Vertex up = 1 + k, up_next = 1 + (k + 1) % 5;
        Vertex lo = 6 + k, lo_next = 6 + (k + 1) % 5;
        edges.emplace_back(0, up);
        edges.emplace_back(11, lo);
        edges.emplace_back(up, up_next);
        edges.emplace_back(lo, lo_next);
        edges.emplace_back(up, lo);
        edges.emplace_back(up_next, lo);
    }
    return FlagComplex(12, std::move(edges));
}

// ---------------------------------------------------------------------------
// Layered disk with every interior vertex of degree exactly d. Ring k+1 is
// built around ring k: consecutive ring vertices share one child, and each
// vertex receives extra children until its degree reaches d. The build is
// sector-symmetric, so rotating every ring by ring_size/d positions is an
// automorphism.

struct Generated;

inline Generated disk(int d, int radius) {
    if (d < 6) throw std::invalid_argument("disk degree must be >= 6");
    if (radius < 0) throw std::invalid_argument("negative radius");
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> rings;
    Vertex next_id = 0;
    rings.push_back({next_id++});

    if (radius >= 1) {
        std::vector<Vertex> ring1;
        for (int i = 0; i < d; ++i) ring1.push_back(next_id++);
        for (int i = 0; i < d; ++i) {
            edges.emplace_back(rings[0][0], ring1[static_cast<std::size_t>(i)]);
            edges.emplace_back(ring1[static_cast<std::size_t>(i)],
                               ring1[static_cast<std::size_t>((i + 1) % d)]);
        }
        rings.push_back(std::move(ring1));
    }

    // parent counts: ring-1 vertices have one parent (the center); later
    // rings alternate edge children (two parents) and vertex children (one).
    std::vector<int> parents(rings.back().size(), 1);
    for (int k = 1; k < radius; ++k) {
        const auto& ring = rings.back();
        const int m = static_cast<int>(ring.size());
        std::vector<Vertex> next_ring;
        std::vector<int> next_parents;
        std::vector<std::vector<Vertex>> children(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            // child shared between ring[i] and ring[i+1]
            Vertex shared = next_id++;
            next_ring.push_back(shared);
            next_parents.push_back(2);
            children[static_cast<std::size_t>(i)].push_back(shared);
            children[static_cast<std::size_t>((i + 1) % m)].push_back(shared);
            // own children of ring[i+1]
            int own = d - parents[static_cast<std::size_t>((i + 1) % m)] - 4;
            for (int t = 0; t < own; ++t) {
                Vertex v = next_id++;
                next_ring.push_back(v);
                next_parents.push_back(1);
                children[static_cast<std::size_t>((i + 1) % m)].push_back(v);
            }
        }
        for (int i = 0; i < m; ++i)
            for (Vertex ch : children[static_cast<std::size_t>(i)])
                edges.emplace_back(ring[static_cast<std::size_t>(i)], ch);
        const int mm = static_cast<int>(next_ring.size());
        for (int i = 0; i < mm; ++i)
            edges.emplace_back(next_ring[static_cast<std::size_t>(i)],
                               next_ring[static_cast<std::size_t>((i + 1) % mm)]);
        rings.push_back(std::move(next_ring));
        parents = std::move(next_parents);
    }

    FlagComplex c(next_id, std::move(edges));
    c.set_boundary(rings.back());

    // rotation by one sector
    std::vector<Vertex> images(static_cast<std::size_t>(next_id));
    for (const auto& ring : rings) {
        const int m = static_cast<int>(ring.size());
        const int shift = m / d;
        for (int i = 0; i < m; ++i)
            images[static_cast<std::size_t>(ring[static_cast<std::size_t>(i)])] =
                ring[static_cast<std::size_t>((i + shift) % std::max(m, 1))];
    }
    Generated out;
    out.complex = std::move(c);
    if (radius >= 1) {
        out.map = Isometry::permutation(std::move(images));
        out.map_kind = "rotation";
    }
    return out;
}

/// Triangulated strip: `width` rows of `length` columns, edges along rows
/// and columns plus the fixed diagonal (r, c) -- (r+1, c+1). The canonical
/// map shifts one column ahead; the end columns are window boundary.
inline Generated strip(int width, int length) {
    if (width < 1 || length < 2) throw std::invalid_argument("strip needs width >= 1, length >= 2");
    auto id = [&](int r, int c) { return static_cast<Vertex>(r * length + c); };
    std::vector<Edge> edges;
    for (int r = 0; r < width; ++r)
        for (int c = 0; c < length; ++c) {
            if (c + 1 < length) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < width) edges.emplace_back(id(r, c), id(r + 1, c));
            if (r + 1 < width && c + 1 < length) edges.emplace_back(id(r, c), id(r + 1, c + 1));
        }
    FlagComplex c(static_cast<Vertex>(width * length), std::move(edges));
    std::vector<Vertex> marks;
    for (int r = 0; r < width; ++r) {
        marks.push_back(id(r, 0));
        marks.push_back(id(r, length - 1));
    }
    c.set_boundary(std::move(marks));

    std::vector<std::optional<Vertex>> images(static_cast<std::size_t>(width * length));
    for (int r = 0; r < width; ++r)
        for (int col = 0; col + 1 < length; ++col)
            images[static_cast<std::size_t>(id(r, col))] = id(r, col + 1);
    Generated out;
    out.complex = std::move(c);
    out.map = Isometry::partial(std::move(images));
    out.map_kind = "shift";
    return out;
}

/// Triangulated cylinder: `height` rings of `circumference` vertices, with
/// vertical and diagonal edges between consecutive rings. The canonical map
/// rotates every ring one step.
inline Generated cylinder(int circumference, int height) {
    if (circumference < 4 || height < 1)
        throw std::invalid_argument("cylinder needs circumference >= 4, height >= 1");
    auto id = [&](int r, int j) {
        return static_cast<Vertex>(r * circumference + ((j % circumference + circumference) %
                                                        circumference));
    };
    std::vector<Edge> edges;
    for (int r = 0; r < height; ++r)
        for (int j = 0; j < circumference; ++j) {
            edges.emplace_back(id(r, j), id(r, j + 1));
            if (r + 1 < height) {
                edges.emplace_back(id(r, j), id(r + 1, j));
                edges.emplace_back(id(r, j), id(r + 1, j + 1));
            }
        }
    FlagComplex c(static_cast<Vertex>(circumference * height), std::move(edges));
    std::vector<Vertex> images(static_cast<std::size_t>(circumference * height));
    for (int r = 0; r < height; ++r)
        for (int j = 0; j < circumference; ++j)
            images[static_cast<std::size_t>(id(r, j))] = id(r, j + 1);
    Generated out;
    out.complex = std::move(c);
    out.map = Isometry::permutation(std::move(images));
    out.map_kind = "rotation";
    return out;
}

// ---------------------------------------------------------------------------
// Seeded random flag complex. The edge stream is fixed for cross-language
// reproducibility: one splitmix64 draw per vertex pair in lexicographic
// order; the pair becomes an edge when the top 53 bits, scaled to [0, 1),
// fall below p.

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline FlagComplex random_flag(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("bad random spec");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.next_unit() < p) edges.emplace_back(u, v);
    return FlagComplex(n, std::move(edges));
}

// ---------------------------------------------------------------------------

inline Generated generate(const CorpusSpec& spec) {
    Generated out;
    switch (spec.kind) {
        case CorpusSpec::Kind::Cycle: {
            out.complex = cycle_complex(spec.n);
            std::vector<Vertex> images;
            for (Vertex v = 0; v < spec.n; ++v) images.push_back((v + 1) % spec.n);
            out.map = Isometry::permutation(std::move(images));
            out.map_kind = "rotation";
            break;
        }
        case CorpusSpec::Kind::Wheel: out.complex = wheel_complex(spec.n); break;
        case CorpusSpec::Kind::Octahedron: out.complex = octahedron(); break;
        case CorpusSpec::Kind::Icosahedron: out.complex = icosahedron(); break;
        case CorpusSpec::Kind::Disk: return disk(spec.degree, spec.radius);
        case CorpusSpec::Kind::Strip: return strip(spec.width, spec.length);
        case CorpusSpec::Kind::Cylinder: return cylinder(spec.circumference, spec.height);
        case CorpusSpec::Kind::RandomFlag:
            out.complex = random_flag(spec.n, spec.p, spec.seed);
            break;
    }
    return out;
}

inline CorpusSpec CorpusSpec::parse(const std::string& text) {
    std::istringstream is(text);
    std::string head;
    is >> head;
    auto params = [&] {
        std::vector<std::pair<std::string, std::string>> kv;
        std::string tok;
        while (is >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("expected key=value, got '" + tok + "'");
            kv.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
        }
        return kv;
    }();
    auto get = [&](const std::string& key) -> std::string {
        for (const auto& [k, v] : params)
            if (k == key) return v;
        throw std::invalid_argument("missing parameter '" + key + "'");
    };
    auto geti = [&](const std::string& key) { return std::stoi(get(key)); };

    CorpusSpec spec;
    if (head == "cycle") {
        spec.kind = Kind::Cycle;
        spec.n = geti("n");
    } else if (head == "wheel") {
        spec.kind = Kind::Wheel;
        spec.n = geti("k");
    } else if (head == "octahedron") {
        spec.kind = Kind::Octahedron;
    } else if (head == "icosahedron") {
        spec.kind = Kind::Icosahedron;
    } else if (head == "disk") {
        spec.kind = Kind::Disk;
        spec.degree = geti("d");
        spec.radius = geti("r");
    } else if (head == "strip") {
        spec.kind = Kind::Strip;
        spec.width = geti("w");
        spec.length = geti("l");
    } else if (head == "cylinder") {
        spec.kind = Kind::Cylinder;
        spec.circumference = geti("c");
        spec.height = geti("h");
    } else if (head == "random") {
        spec.kind = Kind::RandomFlag;
        spec.n = geti("n");
        spec.p = std::stod(get("p"));
        spec.seed = std::stoull(get("seed"));
    } else {
        throw std::invalid_argument("unknown generator '" + head + "'");
    }
    return spec;
}

}  // namespace flagc
