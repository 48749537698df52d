#pragma once

// Command-line front end: complex/map ingestion, check orchestration,
// machine-readable reports, corpus generation. Exit codes: 0 all pass,
// 1 any fail (or a failed precondition), 2 unknown-only or cap exceeded,
// 64 usage or parse errors.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "core.hpp"
#include "curvature.hpp"
#include "generators.hpp"
#include "hyperbolicity.hpp"
#include "io.hpp"
#include "isometry.hpp"
#include "loops.hpp"

namespace flagc::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;

struct CheckRequest {
    std::string name;  // flag | klarge | locallyklarge | mlocated | sd | simplyconnected | lemmas
    int value = 0;     // k, m or n
    std::optional<Vertex> origin;
};

inline CheckRequest parse_check_token(const std::string& token) {
    CheckRequest req;
    auto eq = token.find('=');
    req.name = token.substr(0, eq);
    if (req.name == "flag" || req.name == "simplyconnected") {
        if (eq != std::string::npos) throw parse_error("check '" + req.name + "' takes no value");
        return req;
    }
    if (req.name != "klarge" && req.name != "locallyklarge" && req.name != "mlocated" &&
        req.name != "sd" && req.name != "lemmas")
        throw parse_error("unknown check '" + req.name + "'");
    if (eq == std::string::npos) throw parse_error("check '" + req.name + "' needs a value");
    std::string rest = token.substr(eq + 1);
    auto at = rest.find('@');
    try {
        req.value = std::stoi(rest.substr(0, at));
        if (at != std::string::npos) req.origin = std::stoi(rest.substr(at + 1));
    } catch (const std::exception&) {
        throw parse_error("bad check parameter in '" + token + "'");
    }
    if (req.origin && req.name != "sd" && req.name != "lemmas")
        throw parse_error("check '" + req.name + "' takes no origin");
    if (req.name == "lemmas" && !req.origin)
        throw parse_error("check 'lemmas' needs an origin: lemmas=N@O");
    return req;
}

struct ExitTracker {
    bool fail = false, unknown = false;
    void add(Status s) {
        if (s == Status::Fail) fail = true;
        if (s == Status::Unknown) unknown = true;
    }
    int code() const { return fail ? kExitFail : (unknown ? kExitUnknown : kExitPass); }
};

inline void emit(const json& report, const std::string& out_path, std::ostream& out) {
    std::string text = report.dump(2) + "\n";
    if (out_path.empty())
        out << text;
    else
        write_file(out_path, text);
}

// ---------------------------------------------------------------------------

inline int cmd_check(const std::string& input_path, const std::vector<std::string>& tokens,
                     const Options& opts, const std::string& out_path, bool timings,
                     std::ostream& out) {
    ComplexDoc doc = parse_complex_doc(read_file(input_path));
    FlagComplex c = doc.to_complex();
    json report = make_report(digest(doc), opts);
    report["input"]["path"] = input_path;
    ExitTracker exit_code;

    for (const auto& token : tokens) {
        CheckRequest req = parse_check_token(token);
        auto started = std::chrono::steady_clock::now();
        json entry;
        entry["check"] = req.name;
        if (req.name == "flag") {
            if (!doc.simplices) {
                entry["status"] = "pass";
                entry["note"] = "graph input: the flag completion is taken by definition";
            } else {
                auto res = ingest_explicit(*doc.simplices, doc.vertices, opts.clique_cap);
                entry["status"] = res.ok() ? "pass" : "fail";
                if (!res.ok()) {
                    entry["witness"] = json::object();
                    entry["witness"]["kind"] = "clique";
                    entry["witness"]["vertices"] = res.violation->witness_clique;
                    entry["note"] = "clique of the 1-skeleton spans no input simplex";
                }
                exit_code.add(res.ok() ? Status::Pass : Status::Fail);
            }
        } else if (req.name == "klarge") {
            entry["k"] = req.value;
            Verdict v = is_k_large(c, req.value, opts);
            entry.update(to_json(v));
            exit_code.add(v.status);
        } else if (req.name == "locallyklarge") {
            entry["k"] = req.value;
            Verdict v = is_locally_k_large(c, req.value, opts);
            entry.update(to_json(v));
            exit_code.add(v.status);
        } else if (req.name == "mlocated") {
            entry["m"] = req.value;
            Verdict v = is_m_located(c, req.value, opts.area_budget, opts);
            entry.update(to_json(v));
            exit_code.add(v.status);
        } else if (req.name == "sd") {
            entry["depth"] = req.value;
            if (req.origin) {
                SDReport r = check_sd_n(c, *req.origin, req.value);
                entry["report"] = to_json(r);
                entry["status"] = r.passed() ? "pass" : "fail";
                exit_code.add(r.passed() ? Status::Pass : Status::Fail);
            } else {
                auto reports = check_sd_all(c, req.value, opts);
                json failures = json::array();
                for (const auto& r : reports)
                    if (!r.passed()) failures.push_back(to_json(r));
                entry["origins"] = static_cast<int>(reports.size());
                entry["failures"] = failures;
                entry["status"] = failures.empty() ? "pass" : "fail";
                exit_code.add(failures.empty() ? Status::Pass : Status::Fail);
            }
        } else if (req.name == "simplyconnected") {
            Verdict v = check_simple_connectivity(c, opts.area_budget, opts);
            entry.update(to_json(v));
            exit_code.add(v.status);
        } else if (req.name == "lemmas") {
            entry["depth"] = req.value;
            entry["origin"] = *req.origin;
            Verdict v = check_local_lemmas(c, *req.origin, req.value, opts);
            entry.update(to_json(v));
            exit_code.add(v.status);
        }
        if (timings)
            entry["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                      std::chrono::steady_clock::now() - started)
                                      .count();
        report["checks"].push_back(entry);
    }
    emit(report, out_path, out);
    return exit_code.code();
}

// ---------------------------------------------------------------------------

inline int cmd_isom(const std::string& action, const std::string& input_path,
                    const std::string& map_path, int power, const Options& opts,
                    const std::string& out_path, std::ostream& out) {
    ComplexDoc doc = parse_complex_doc(read_file(input_path));
    FlagComplex c = doc.to_complex();
    MapDoc mdoc = parse_map_doc(read_file(map_path));
    if (mdoc.vertices != c.vertex_count())
        throw parse_error("map describes " + std::to_string(mdoc.vertices) +
                          " vertices, complex has " + std::to_string(c.vertex_count()));
    Isometry h = mdoc.to_isometry();
    {
        auto check = h.total() ? check_automorphism(c, [&] {
            std::vector<Vertex> images;
            for (Vertex v = 0; v < h.size(); ++v) images.push_back(*h.apply(v));
            return images;
        }())
                               : check_partial_automorphism(c, h);
        if (!check.ok) throw parse_error("invalid map: " + check.reason);
    }

    json report = make_report(digest(doc), opts);
    report["input"]["path"] = input_path;
    report["input"]["map"] = map_path;
    json entry;
    entry["action"] = action;
    ExitTracker exit_code;

    try {
        if (action == "profile" || action == "minset") {
            auto rep = displacement_profile(c, h, opts);
            entry["translation_length"] = rep.translation_length;
            entry["classification"] = rep.elliptic ? "elliptic" : "hyperbolic";
            if (rep.invariant_simplex)
                entry["invariant_simplex"] = rep.invariant_simplex->vertices;
            entry["min_vertices"] = rep.min_vertices;
            int certified = 0;
            for (char f : rep.certified) certified += f;
            entry["certified_vertices"] = certified;
            if (action == "minset") {
                auto view = min_set(c, h, rep);
                entry["status"] = "pass";
                entry["note"] = "minimal set is invariant where certified";
                (void)view;
            } else {
                entry["status"] = "pass";
            }
        } else if (action == "embed") {
            Verdict v = check_isometric_embedding(c, min_set(c, h, opts), opts);
            entry.update(to_json(v));
            exit_code.add(v.status);
        } else if (action == "axes") {
            auto res = invariant_geodesics(c, h, power, opts);
            entry["power"] = res.power;
            entry["translation_length"] = res.translation;
            entry["exhaustive"] = res.exhaustive;
            json axes = json::array();
            for (const auto& a : res.axes) {
                json ja;
                ja["vertices"] = a.vertices;
                ja["closed"] = a.closed;
                axes.push_back(ja);
            }
            entry["axes"] = axes;
            entry["status"] = res.power > 0 ? "pass" : "unknown";
            if (res.power == 0) entry["note"] = "no axis found within the requested power";
            exit_code.add(res.power > 0 ? Status::Pass : Status::Unknown);
        } else if (action == "axesgraph") {
            auto graph = graph_of_axes(c, h, power, opts);
            json axes = json::array();
            for (const auto& a : graph.axes) {
                json ja;
                ja["vertices"] = a.vertices;
                ja["closed"] = a.closed;
                axes.push_back(ja);
            }
            entry["power"] = graph.power;
            entry["axes"] = axes;
            json edges = json::array();
            for (auto [a, b] : graph.edges) edges.push_back(json::array({a, b}));
            entry["edges"] = edges;
            auto mg = MetricGraph::from_axes_graph(graph);
            if (mg.n > 0) {
                auto delta = delta_four_point(mg, opts);
                entry["delta"] = delta.delta_string();
                entry["delta_witness"] = delta.witness;
                Verdict bn = bottleneck_check(mg, (delta.doubled_delta + 1) / 2, opts);
                entry["bottleneck"] = to_json(bn);
                exit_code.add(bn.status);
            }
            entry["status"] = "pass";
        } else {
            throw parse_error("unknown isom action '" + action + "'");
        }
    } catch (const std::invalid_argument& e) {
        entry["status"] = "error";
        entry["error"] = e.what();
        exit_code.add(Status::Fail);
    } catch (const std::runtime_error& e) {
        entry["status"] = "error";
        entry["error"] = e.what();
        exit_code.add(Status::Fail);
    }
    report["checks"].push_back(entry);
    emit(report, out_path, out);
    return exit_code.code();
}

// ---------------------------------------------------------------------------

inline int cmd_gen(const std::string& spec_text, const std::string& out_path,
                   std::optional<std::uint64_t> seed_override, std::ostream& out) {
    (void)out;
    CorpusSpec spec = CorpusSpec::parse(spec_text);
    if (seed_override && spec.kind == CorpusSpec::Kind::RandomFlag) spec.seed = *seed_override;
    Generated gen = generate(spec);
    ComplexDoc doc = ComplexDoc::from_complex(gen.complex);
    write_file(out_path, serialize(doc));
    if (gen.map) {
        MapDoc mdoc;
        mdoc.vertices = gen.complex.vertex_count();
        for (Vertex v = 0; v < gen.complex.vertex_count(); ++v)
            mdoc.images.push_back(gen.map->apply(v));
        std::string map_path = out_path;
        const std::string suffix = ".json";
        if (map_path.size() > suffix.size() &&
            map_path.compare(map_path.size() - suffix.size(), suffix.size(), suffix) == 0)
            map_path.insert(map_path.size() - suffix.size(), ".map");
        else
            map_path += ".map.json";
        write_file(map_path, serialize(mdoc));
    }
    return kExitPass;
}

// ---------------------------------------------------------------------------

inline int cmd_delta(const std::string& input_path, const Options& opts,
                     const std::string& out_path, std::ostream& out) {
    ComplexDoc doc = parse_complex_doc(read_file(input_path));
    FlagComplex c = doc.to_complex();
    json report = make_report(digest(doc), opts);
    report["input"]["path"] = input_path;
    json entry;
    entry["check"] = "delta";
    int code = kExitPass;
    try {
        auto res = delta_four_point(MetricGraph::from_complex(c), opts);
        entry["delta"] = res.delta_string();
        entry["doubled_delta"] = res.doubled_delta;
        entry["witness"] = res.witness;
        entry["status"] = "pass";
    } catch (const cap_exceeded& e) {
        entry["status"] = "error";
        entry["error"] = e.what();
        code = kExitUnknown;
    } catch (const std::invalid_argument& e) {
        entry["status"] = "error";
        entry["error"] = e.what();
        code = kExitUnknown;
    }
    report["checks"].push_back(entry);
    emit(report, out_path, out);
    return code;
}

// ---------------------------------------------------------------------------

/// `args` in natural order, program name excluded.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    std::reverse(args.begin(), args.end());  // CLI11 consumes args back to front
    CLI::App app{"verification toolkit for flag simplicial complexes"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opts;
    std::string out_path;
    std::uint64_t seed_value = 0;
    bool seed_given = false;
    bool timings = false;
    app.add_option("--budget", opts.area_budget, "filling area budget (triangles)")
        ->envname("FLAGC_BUDGET");
    app.add_option("--cycle-cap", opts.cycle_cap, "full cycle length cap")
        ->envname("FLAGC_CYCLE_CAP");
    app.add_option("--clique-cap", opts.clique_cap, "clique size cap")
        ->envname("FLAGC_CLIQUE_CAP");
    app.add_option("--delta-cap", opts.delta_cap, "four-point kernel vertex cap")
        ->envname("FLAGC_DELTA_CAP");
    app.add_option("--jobs", opts.jobs, "worker threads")->envname("FLAGC_JOBS");
    app.add_option("-o,--out", out_path, "write the report/complex to this path");
    app.add_flag("--timings", timings,
                 "record wall-clock timings per check (off by default: timings vary between "
                 "otherwise identical runs)");
    auto* seed_opt =
        app.add_option("--seed", seed_value, "seed override for random generation")
            ->envname("FLAGC_SEED");

    auto* check = app.add_subcommand("check", "run curvature checkers on a complex file");
    std::string check_input;
    std::vector<std::string> check_tokens;
    check->add_option("input", check_input, "complex file")->required();
    check->add_option("--checks", check_tokens,
                      "checks: flag, klarge=K, locallyklarge=K, mlocated=M, sd=N[@O], "
                      "simplyconnected, lemmas=N@O")
        ->required()
        ->delimiter(',');

    auto* isom = app.add_subcommand("isom", "analyze a simplicial isometry");
    std::string isom_action, isom_input, isom_map;
    int isom_power = 1;
    isom->add_option("action", isom_action, "profile | minset | embed | axes | axesgraph")
        ->required();
    isom->add_option("input", isom_input, "complex file")->required();
    isom->add_option("map", isom_map, "map file")->required();
    isom->add_option("-n,--power", isom_power, "power of the map (axes, axesgraph)");

    auto* gen = app.add_subcommand("gen", "generate a corpus complex");
    std::string gen_spec;
    gen->add_option("spec", gen_spec,
                    "generator spec, e.g. \"disk d=7 r=3\", \"cycle n=6\", \"strip w=2 l=10\"")
        ->required();

    auto* delta = app.add_subcommand("delta", "exact four-point hyperbolicity constant");
    std::string delta_input;
    delta->add_option("input", delta_input, "complex file")->required();

    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    seed_given = seed_opt->count() > 0;

    try {
        if (app.got_subcommand(check))
            return cmd_check(check_input, check_tokens, opts, out_path, timings, out);
        if (app.got_subcommand(isom))
            return cmd_isom(isom_action, isom_input, isom_map, isom_power, opts, out_path, out);
        if (app.got_subcommand(gen)) {
            if (out_path.empty()) throw parse_error("gen requires -o/--out");
            return cmd_gen(gen_spec,
                           out_path,
                           seed_given ? std::optional<std::uint64_t>(seed_value) : std::nullopt,
                           out);
        }
        if (app.got_subcommand(delta)) return cmd_delta(delta_input, opts, out_path, out);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cap_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(std::move(args), out, err);
}

}  // namespace flagc::cli
