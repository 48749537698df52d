#include <catch2/catch_amalgamated.hpp>

#include <flagc/curvature.hpp>
#include <flagc/generators.hpp>

#include "oracles.hpp"

using namespace flagc;

namespace {

std::vector<FlagComplex> oracle_corpus() {
    std::vector<FlagComplex> out;
    out.push_back(build_complex(3, {{0, 1}, {1, 2}, {0, 2}}));
    out.push_back(cycle_complex(5));
    out.push_back(cycle_complex(8));
    out.push_back(wheel_complex(5));
    out.push_back(octahedron());
    out.push_back(cylinder(4, 2).complex);
    out.push_back(disk(6, 1).complex);
    for (std::uint64_t seed = 1; seed <= 12; ++seed)
        out.push_back(random_flag(6 + static_cast<int>(seed % 5), 0.25 + 0.05 * (seed % 7), seed));
    return out;
}

}  // namespace

TEST_CASE("k-largeness") {
    auto oct = octahedron();
    CHECK(is_k_large(oct, 4).status == Status::Pass);
    auto v5 = is_k_large(oct, 5);
    REQUIRE(v5.status == Status::Fail);
    CHECK(std::get<LoopPath>(v5.witness).length() == 4);

    auto c6 = cycle_complex(6);
    CHECK(is_k_large(c6, 6).status == Status::Pass);
    auto v7 = is_k_large(c6, 7);
    REQUIRE(v7.status == Status::Fail);
    CHECK(std::get<LoopPath>(v7.witness).length() == 6);

    SECTION("witness replays as a short full cycle") {
        for (const auto& c : oracle_corpus())
            for (int k = 4; k <= 7; ++k) {
                auto v = is_k_large(c, k);
                CHECK((v.status == Status::Pass) == oracles::is_k_large(c, k));
                if (v.status == Status::Fail) {
                    const auto& w = std::get<LoopPath>(v.witness);
                    CHECK(is_full_path(c, w));
                    CHECK(w.length() < k);
                }
            }
    }
    SECTION("monotone in k") {
        for (const auto& c : oracle_corpus()) {
            bool prev = true;
            for (int k = 4; k <= 8; ++k) {
                bool now = is_k_large(c, k).status == Status::Pass;
                if (!prev) CHECK_FALSE(now);
                prev = now;
            }
        }
    }
}

TEST_CASE("local k-largeness") {
    auto ico = icosahedron();
    CHECK(is_locally_k_large(ico, 5).status == Status::Pass);
    auto v6 = is_locally_k_large(ico, 6);
    REQUIRE(v6.status == Status::Fail);
    const auto& w = std::get<LinkWitness>(v6.witness);
    CHECK(w.cycle.length() == 5);
    // the witness cycle really lives in the link of the witness simplex
    for (Vertex u : w.cycle.vertices)
        CHECK(ico.adjacent_to_all(u, w.simplex.vertices));
    CHECK(is_full_path(ico, w.cycle));

    CHECK(is_locally_k_large(disk(6, 2).complex, 6).status == Status::Pass);
    CHECK(is_locally_k_large(disk(7, 2).complex, 7).status == Status::Pass);

    for (const auto& c : oracle_corpus())
        for (int k = 4; k <= 6; ++k)
            CHECK((is_locally_k_large(c, k).status == Status::Pass) ==
                  oracles::is_locally_k_large(c, k));
}

TEST_CASE("m-location") {
    CHECK(is_m_located(wheel_complex(6), 8, 64).status == Status::Pass);

    for (int r : {2, 3}) {
        auto v = is_m_located(disk(6, r).complex, 8, 64);
        REQUIRE(v.status == Status::Fail);
        const auto& w = std::get<LoopPath>(v.witness);
        CHECK(w.length() == 8);
        CHECK_FALSE(in_one_ball(disk(6, r).complex, w).has_value());
    }
    CHECK(is_m_located(disk(7, 3).complex, 8, 64).status == Status::Pass);

    SECTION("agrees with the literal oracle on small complexes") {
        Options opts;
        opts.fill_state_cap = 2'000'000;
        for (const auto& c : oracle_corpus())
            for (int m : {4, 6, 8}) {
                auto v = is_m_located(c, m, 1 << 20, opts);
                CHECK(v.status != Status::Unknown);
                CHECK((v.status == Status::Pass) == oracles::m_located(c, m));
            }
    }
}

TEST_CASE("sphere conditions") {
    auto tri = build_complex(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(check_sd_n(tri, 0, 1).passed());  // sphere of radius 2 is empty

    auto oct = octahedron();
    for (const auto& r : check_sd_all(oct, 1)) CHECK(r.passed());

    auto d75 = disk(7, 5).complex;
    CHECK(check_sd_n(d75, 0, 3).passed());

    auto d64 = disk(6, 4).complex;
    for (Vertex o : ball(d64, 0, 1).vertices) CHECK(check_sd_n(d64, o, 2).passed());

    // the cylinder wraps: the conditions fail once spheres meet themselves
    auto cyl = cylinder(8, 5).complex;
    CHECK(check_sd_n(cyl, 20, 2).passed());
    auto wrapped = check_sd_n(cyl, 20, 3);
    CHECK_FALSE(wrapped.passed());

    SECTION("failures re-verify against the definition") {
        auto dist = bfs_distances(cyl, 20);
        for (const auto& [i, e] : wrapped.triangle_failures) {
            CHECK(dist[static_cast<std::size_t>(e.first)] == i + 1);
            CHECK(dist[static_cast<std::size_t>(e.second)] == i + 1);
            for (Vertex t = 0; t < cyl.vertex_count(); ++t)
                if (cyl.adjacent(t, e.first) && cyl.adjacent(t, e.second))
                    CHECK(dist[static_cast<std::size_t>(t)] > i);
        }
        for (const auto& [i, v, u, w] : wrapped.vertex_failures) {
            CHECK(dist[static_cast<std::size_t>(v)] == i + 1);
            for (Vertex t : cyl.neighbors(v)) {
                if (dist[static_cast<std::size_t>(t)] > i) continue;
                CHECK_FALSE((sim(cyl, t, u) && sim(cyl, t, w)));
            }
        }
    }
    SECTION("agrees with the literal oracle on small complexes") {
        for (const auto& c : oracle_corpus())
            for (Vertex o = 0; o < c.vertex_count(); ++o)
                for (int n = 1; n <= 3; ++n)
                    CHECK(check_sd_n(c, o, n).passed() == oracles::sd_holds(c, o, n));
    }
}

TEST_CASE("simple connectivity") {
    CHECK(check_simple_connectivity(build_complex(3, {{0, 1}, {1, 2}, {0, 2}}), 64).status ==
          Status::Pass);
    auto cyl = check_simple_connectivity(cylinder(8, 5).complex, 64);
    REQUIRE(cyl.status == Status::Fail);
    CHECK_FALSE(oracles::DenseH1(cylinder(8, 5).complex)
                    .null_homologous(std::get<LoopPath>(cyl.witness)));

    CHECK(check_simple_connectivity(disk(7, 3).complex, 64).status == Status::Pass);
    CHECK(check_simple_connectivity(icosahedron(), 64).status == Status::Pass);
    CHECK_THROWS_AS(check_simple_connectivity(build_complex(4, {{0, 1}, {2, 3}}), 64),
                    std::invalid_argument);
}

TEST_CASE("sphere conditions at full depth imply no connectivity failure") {
    for (const auto& c : oracle_corpus()) {
        if (!is_connected(c) || c.vertex_count() == 0) continue;
        bool sd_everywhere = true;
        for (Vertex o = 0; o < c.vertex_count() && sd_everywhere; ++o) {
            int ecc = eccentricity(c, o);
            if (ecc >= 1 && !check_sd_n(c, o, ecc).passed()) sd_everywhere = false;
        }
        if (sd_everywhere)
            CHECK(check_simple_connectivity(c, 1 << 20).status != Status::Fail);
    }
}

TEST_CASE("local lemma configuration scans") {
    // no sphere of radius n+1: nothing to scan
    CHECK(check_local_lemmas(octahedron(), 0, 2).status == Status::Pass);
    CHECK(check_local_lemmas(build_complex(3, {{0, 1}, {1, 2}, {0, 2}}), 0, 2).status ==
          Status::Pass);

    auto d74 = disk(7, 4).complex;
    CHECK(check_local_lemmas(d74, 0, 2).status == Status::Pass);
    CHECK(check_local_lemmas(d74, 0, 3).status == Status::Pass);

    CHECK(check_local_lemmas(cycle_complex(6), 0, 1).status == Status::Pass);
}
