#pragma once

// Versioned file formats (complexes, vertex maps, reports), all JSON with
// fixed field names. Unknown fields are rejected rather than ignored, and
// serialization is canonical so that parse-then-serialize is the identity.

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "core.hpp"
#include "curvature.hpp"
#include "hyperbolicity.hpp"
#include "isometry.hpp"

namespace flagc {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "flagc 0.1.0";
inline constexpr int kFormatVersion = 1;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string locate(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error("JSON syntax error at " + locate(text, e.byte) + ": " + e.what());
    }
}

inline void reject_unknown_fields(const json& obj, const std::vector<std::string>& allowed,
                                  const std::string& what) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw parse_error("unknown field '" + key + "' in " + what);
    }
}

inline void expect_header(const json& obj, const std::string& format) {
    if (!obj.is_object()) throw parse_error("expected a JSON object");
    if (!obj.contains("format") || obj.at("format") != format)
        throw parse_error("missing or wrong format marker; expected \"" + format + "\"");
    if (!obj.contains("version") || !obj.at("version").is_number_integer() ||
        obj.at("version").get<int>() != kFormatVersion)
        throw parse_error("unsupported format version");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Complex documents.

struct ComplexDoc {
    Vertex vertices = 0;
    std::vector<Edge> edges;
    std::vector<std::pair<Vertex, std::string>> labels;
    std::vector<Vertex> boundary;
    std::optional<std::vector<Simplex>> simplices;  // explicit simplex list

    /// The effective complex described by the document: edges plus every
    /// pair inside an explicit simplex.
    FlagComplex to_complex() const {
        std::vector<Edge> all = edges;
        if (simplices)
            for (const auto& s : *simplices)
                for (std::size_t i = 0; i < s.vertices.size(); ++i)
                    for (std::size_t j = i + 1; j < s.vertices.size(); ++j)
                        all.emplace_back(s.vertices[i], s.vertices[j]);
        FlagComplex c(vertices, std::move(all));
        if (!labels.empty()) {
            std::vector<std::string> names(static_cast<std::size_t>(vertices));
            for (const auto& [v, name] : labels) names[static_cast<std::size_t>(v)] = name;
            c.set_labels(std::move(names));
        }
        if (!boundary.empty()) c.set_boundary(boundary);
        return c;
    }

    static ComplexDoc from_complex(const FlagComplex& c, bool with_simplices = false,
                                   int clique_cap = 16) {
        ComplexDoc doc;
        doc.vertices = c.vertex_count();
        doc.edges = c.edges();
        for (std::size_t v = 0; v < c.labels().size(); ++v)
            if (!c.labels()[v].empty())
                doc.labels.emplace_back(static_cast<Vertex>(v), c.labels()[v]);
        doc.boundary = c.boundary_vertices();
        if (with_simplices) doc.simplices = maximal_simplices(c, clique_cap);
        return doc;
    }
};

inline json to_json(const ComplexDoc& doc) {
    json j;
    j["format"] = "flagc-complex";
    j["version"] = kFormatVersion;
    j["vertices"] = doc.vertices;
    json edges = json::array();
    for (auto [u, v] : doc.edges) edges.push_back(json::array({u, v}));
    j["edges"] = edges;
    if (!doc.labels.empty()) {
        json labels = json::array();
        for (const auto& [v, name] : doc.labels) labels.push_back(json::array({v, name}));
        j["labels"] = labels;
    }
    if (!doc.boundary.empty()) j["boundary"] = doc.boundary;
    if (doc.simplices) {
        json simplices = json::array();
        for (const auto& s : *doc.simplices) simplices.push_back(s.vertices);
        j["simplices"] = simplices;
    }
    return j;
}

inline ComplexDoc parse_complex_doc(const std::string& text) {
    json j = detail::parse_json(text);
    detail::expect_header(j, "flagc-complex");
    detail::reject_unknown_fields(
        j, {"format", "version", "vertices", "edges", "labels", "boundary", "simplices"},
        "complex document");
    ComplexDoc doc;
    if (!j.contains("vertices") || !j.at("vertices").is_number_integer())
        throw parse_error("missing integer field 'vertices'");
    doc.vertices = j.at("vertices").get<Vertex>();
    if (doc.vertices < 0) throw parse_error("negative vertex count");
    if (j.contains("edges")) {
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw parse_error("edges must be [u, v] integer pairs");
            doc.edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
        }
    }
    if (j.contains("labels")) {
        for (const auto& l : j.at("labels")) {
            if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() || !l[1].is_string())
                throw parse_error("labels must be [vertex, text] pairs");
            doc.labels.emplace_back(l[0].get<Vertex>(), l[1].get<std::string>());
        }
        std::sort(doc.labels.begin(), doc.labels.end());
    }
    if (j.contains("boundary")) {
        for (const auto& b : j.at("boundary")) {
            if (!b.is_number_integer()) throw parse_error("boundary must list vertex ids");
            doc.boundary.push_back(b.get<Vertex>());
        }
        std::sort(doc.boundary.begin(), doc.boundary.end());
        doc.boundary.erase(std::unique(doc.boundary.begin(), doc.boundary.end()),
                           doc.boundary.end());
    }
    if (j.contains("simplices")) {
        std::vector<Simplex> ss;
        for (const auto& s : j.at("simplices")) {
            if (!s.is_array() || s.empty()) throw parse_error("simplices must be vertex arrays");
            std::vector<Vertex> vs;
            for (const auto& v : s) {
                if (!v.is_number_integer()) throw parse_error("simplex vertices must be integers");
                vs.push_back(v.get<Vertex>());
            }
            ss.push_back(Simplex(std::move(vs)));
        }
        std::sort(ss.begin(), ss.end());
        ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
        doc.simplices = std::move(ss);
    }
    // normalize edge orientation and order for canonical round trips
    for (auto& [u, v] : doc.edges) {
        if (u < 0 || u >= doc.vertices || v < 0 || v >= doc.vertices)
            throw parse_error("edge endpoint out of range");
        if (u == v) throw parse_error("self-loop edge");
        if (u > v) std::swap(u, v);
    }
    std::sort(doc.edges.begin(), doc.edges.end());
    doc.edges.erase(std::unique(doc.edges.begin(), doc.edges.end()), doc.edges.end());
    return doc;
}

inline std::string serialize(const ComplexDoc& doc) { return to_json(doc).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Vertex map documents. `images[v]` is the image of v, or null when v is
// outside the domain of a window-restricted map.

struct MapDoc {
    Vertex vertices = 0;
    std::vector<std::optional<Vertex>> images;

    Isometry to_isometry() const { return Isometry::partial(images); }
};

inline json to_json(const MapDoc& doc) {
    json j;
    j["format"] = "flagc-map";
    j["version"] = kFormatVersion;
    j["vertices"] = doc.vertices;
    json images = json::array();
    for (const auto& img : doc.images) {
        if (img)
            images.push_back(*img);
        else
            images.push_back(nullptr);
    }
    j["images"] = images;
    return j;
}

inline MapDoc parse_map_doc(const std::string& text) {
    json j = detail::parse_json(text);
    detail::expect_header(j, "flagc-map");
    detail::reject_unknown_fields(j, {"format", "version", "vertices", "images"},
                                  "map document");
    MapDoc doc;
    if (!j.contains("vertices") || !j.at("vertices").is_number_integer())
        throw parse_error("missing integer field 'vertices'");
    doc.vertices = j.at("vertices").get<Vertex>();
    if (!j.contains("images") || !j.at("images").is_array())
        throw parse_error("missing array field 'images'");
    for (const auto& img : j.at("images")) {
        if (img.is_null())
            doc.images.emplace_back(std::nullopt);
        else if (img.is_number_integer())
            doc.images.emplace_back(img.get<Vertex>());
        else
            throw parse_error("images must be integers or null");
    }
    if (static_cast<Vertex>(doc.images.size()) != doc.vertices)
        throw parse_error("images array length differs from the vertex count");
    return doc;
}

inline std::string serialize(const MapDoc& doc) { return to_json(doc).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Digest of the canonical complex serialization (FNV-1a, 64 bit).

inline std::string digest(const ComplexDoc& doc) {
    std::string text = serialize(doc);
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001B3ull;
    }
    std::ostringstream os;
    os << "fnv1a:" << std::hex << std::setfill('0') << std::setw(16) << h;
    return os.str();
}

// ---------------------------------------------------------------------------
// Witness and verdict serialization for reports.

inline json to_json(const LoopPath& loop) {
    json j;
    j["vertices"] = loop.vertices;
    j["closed"] = loop.closed;
    return j;
}

inline json to_json(const Witness& w) {
    return std::visit(
        [](const auto& value) -> json {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, LoopPath>) {
                json j = to_json(value);
                j["kind"] = "cycle";
                return j;
            } else if constexpr (std::is_same_v<T, LinkWitness>) {
                json j;
                j["kind"] = "link_cycle";
                j["simplex"] = value.simplex.vertices;
                j["cycle"] = value.cycle.vertices;
                return j;
            } else if constexpr (std::is_same_v<T, EmbeddingWitness>) {
                json j;
                j["kind"] = "vertex_pair";
                j["u"] = value.u;
                j["v"] = value.v;
                if (value.sub_distance)
                    j["subcomplex_distance"] = *value.sub_distance;
                else
                    j["subcomplex_distance"] = nullptr;
                if (value.ambient_distance)
                    j["ambient_distance"] = *value.ambient_distance;
                else
                    j["ambient_distance"] = nullptr;
                return j;
            } else if constexpr (std::is_same_v<T, LemmaWitness>) {
                json j;
                j["kind"] = "configuration";
                j["lemma"] = value.lemma;
                json a = json::object();
                for (const auto& [name, v] : value.assignment) a[name] = v;
                j["assignment"] = a;
                return j;
            } else {
                json j;
                j["kind"] = "vertex_set";
                j["vertices"] = value;
                return j;
            }
        },
        w);
}

inline json to_json(const Verdict& v) {
    json j;
    j["status"] = to_string(v.status);
    j["witness"] = to_json(v.witness);
    if (!v.undecided.empty()) {
        json loops = json::array();
        for (const auto& l : v.undecided) loops.push_back(to_json(l));
        j["undecided"] = loops;
    }
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

inline json to_json(const SDReport& r) {
    json j;
    j["origin"] = r.origin;
    j["depth"] = r.depth;
    j["status"] = r.passed() ? "pass" : "fail";
    json tf = json::array();
    for (const auto& [i, e] : r.triangle_failures)
        tf.push_back(json::array({i, json::array({e.first, e.second})}));
    j["triangle_failures"] = tf;
    json vf = json::array();
    for (const auto& [i, v, u, w] : r.vertex_failures) vf.push_back(json::array({i, v, u, w}));
    j["vertex_failures"] = vf;
    return j;
}

/// Report skeleton shared by the CLI commands. Execution details that vary
/// between equivalent runs (thread count, timing) stay out unless asked for.
inline json make_report(const std::string& input_digest, const Options& opts) {
    json j;
    j["format"] = "flagc-report";
    j["version"] = kFormatVersion;
    j["tool"] = kToolVersion;
    json input;
    input["digest"] = input_digest;
    j["input"] = input;
    json config;
    config["area_budget"] = opts.area_budget;
    config["cycle_cap"] = opts.cycle_cap;
    config["clique_cap"] = opts.clique_cap;
    config["delta_cap"] = opts.delta_cap;
    j["config"] = config;
    j["checks"] = json::array();
    return j;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

}  // namespace flagc
