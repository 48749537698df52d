#include <catch2/catch_amalgamated.hpp>

#include <flagc/generators.hpp>
#include <flagc/hyperbolicity.hpp>
#include <flagc/isometry.hpp>

using namespace flagc;

namespace {

Isometry c6_rotation() { return Isometry::permutation({1, 2, 3, 4, 5, 0}); }
Isometry oct_quarter_turn() { return Isometry::permutation({0, 1, 4, 5, 3, 2}); }
Isometry oct_antipodal() { return Isometry::permutation({1, 0, 3, 2, 5, 4}); }

}  // namespace

TEST_CASE("isometry plumbing") {
    CHECK_THROWS_AS(Isometry::permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Isometry::permutation({0, 5}), std::out_of_range);

    auto rot = c6_rotation();
    CHECK(rot.power(6) == rot.power(0));
    CHECK(rot.power(1) == rot);
    CHECK(rot.power(-1) == rot.inverse());
    CHECK(rot.power(2).apply(0) == 2);

    auto shift = strip(2, 10).map.value();
    CHECK(shift.power(4).domain().size() == 2 * 6);  // columns with 4 ahead
    CHECK_THROWS_AS(shift.power(0), std::invalid_argument);
}

TEST_CASE("automorphism validation") {
    auto c6 = cycle_complex(6);
    CHECK(check_automorphism(c6, {1, 2, 3, 4, 5, 0}).ok);

    // swapping an end with an interior vertex of a path breaks adjacency
    auto path = build_complex(4, {{0, 1}, {1, 2}, {2, 3}});
    std::vector<Vertex> swapped{1, 0, 2, 3};
    auto bad = check_automorphism(path, swapped);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.witness.has_value());
    auto [u, v] = *bad.witness;
    CHECK(path.adjacent(u, v) != path.adjacent(swapped[static_cast<std::size_t>(u)],
                                               swapped[static_cast<std::size_t>(v)]));

    CHECK(check_automorphism(octahedron(), {1, 0, 3, 2, 5, 4}).ok);

    auto st = strip(2, 8);
    CHECK(check_partial_automorphism(st.complex, st.map.value()).ok);
    CHECK(check_partial_automorphism(st.complex, st.map->power(3)).ok);
}

TEST_CASE("displacement profiles") {
    SECTION("cycle rotation is hyperbolic with translation length 1") {
        auto c6 = cycle_complex(6);
        auto rep = displacement_profile(c6, c6_rotation());
        CHECK(rep.translation_length == 1);
        CHECK_FALSE(rep.elliptic);
        CHECK(rep.min_vertices.size() == 6);
        for (Vertex v = 0; v < 6; ++v) CHECK(rep.displacement[static_cast<std::size_t>(v)] == 1);
    }
    SECTION("octahedron quarter turn is elliptic with a fixed vertex") {
        auto rep = displacement_profile(octahedron(), oct_quarter_turn());
        CHECK(rep.translation_length == 0);
        CHECK(rep.elliptic);
        REQUIRE(rep.invariant_simplex.has_value());
        CHECK(rep.invariant_simplex->vertices == std::vector<Vertex>{0});
        CHECK(rep.min_vertices == std::vector<Vertex>{0, 1});
    }
    SECTION("octahedron antipodal map is hyperbolic by the fixed-simplex rule") {
        auto rep = displacement_profile(octahedron(), oct_antipodal());
        CHECK_FALSE(rep.elliptic);
        CHECK(rep.translation_length == 2);
        CHECK(rep.min_vertices.size() == 6);
    }
    SECTION("strip shift power certifies the whole domain of the window") {
        auto st = strip(2, 20);
        auto h4 = st.map->power(4);
        auto rep = displacement_profile(st.complex, h4);
        CHECK(rep.translation_length == 4);
        CHECK_FALSE(rep.elliptic);
        // a displacement certifies off either endpoint's margin, so every
        // domain column qualifies here
        for (Vertex v : rep.min_vertices) {
            CHECK(v % 20 <= 15);
            CHECK(rep.displacement[static_cast<std::size_t>(v)] == 4);
        }
        CHECK(rep.min_vertices.size() == 2 * 16);
    }
    SECTION("displacement is equivariant and the minimal set invariant") {
        struct Case {
            FlagComplex c;
            Isometry h;
        };
        std::vector<Case> cases;
        cases.push_back({cycle_complex(6), c6_rotation()});
        cases.push_back({octahedron(), oct_antipodal()});
        cases.push_back({octahedron(), oct_quarter_turn()});
        auto cyl = cylinder(8, 4);
        cases.push_back({cyl.complex, cyl.map.value()});
        for (const auto& [c, h] : cases) {
            auto rep = displacement_profile(c, h);
            for (Vertex x = 0; x < c.vertex_count(); ++x)
                CHECK(rep.displacement[static_cast<std::size_t>(x)] ==
                      rep.displacement[static_cast<std::size_t>(*h.apply(x))]);
            CHECK_NOTHROW(min_set(c, h, rep));
        }
    }
}

TEST_CASE("minimal displacement sets") {
    auto c6 = cycle_complex(6);
    CHECK(min_set(c6, c6_rotation()).vertices.size() == 6);

    auto quarter_min = min_set(octahedron(), oct_quarter_turn());
    CHECK(quarter_min.vertices == std::vector<Vertex>{0, 1});
    CHECK_FALSE(octahedron().adjacent(0, 1));  // two isolated vertices

    auto st = strip(2, 20);
    auto view = min_set(st.complex, st.map->power(4));
    CHECK(view.vertices.size() == 32);
}

TEST_CASE("isometric embedding checks") {
    auto c6 = cycle_complex(6);
    CHECK(check_isometric_embedding(c6, span(c6, {0, 1, 2, 3, 4, 5})).status == Status::Pass);
    CHECK(check_isometric_embedding(c6, span(c6, {0, 1, 2})).status == Status::Pass);

    auto v = check_isometric_embedding(c6, span(c6, {0, 3}));
    REQUIRE(v.status == Status::Fail);
    const auto& w = std::get<EmbeddingWitness>(v.witness);
    CHECK(w.u == 0);
    CHECK(w.v == 3);
    CHECK_FALSE(w.sub_distance.has_value());
    CHECK(w.ambient_distance == 3);

    CHECK_THROWS_AS(check_isometric_embedding(c6, span(c6, {})), std::invalid_argument);

    auto st = strip(3, 30);
    auto h5 = st.map->power(5);
    CHECK(check_isometric_embedding(st.complex, min_set(st.complex, h5)).status == Status::Pass);
}

TEST_CASE("minimal set idempotence") {
    CHECK(min_idempotence(cycle_complex(6), c6_rotation()).status == Status::Pass);
    CHECK(min_idempotence(octahedron(), oct_antipodal()).status == Status::Pass);
    auto st = strip(2, 30);
    CHECK(min_idempotence(st.complex, st.map->power(4)).status == Status::Pass);
}

TEST_CASE("invariant geodesics") {
    SECTION("strip rows are shift-invariant geodesics at power 1") {
        auto st = strip(2, 20);
        auto res = invariant_geodesics(st.complex, st.map->power(4), 1);
        CHECK(res.power == 1);
        CHECK(res.translation == 4);
        CHECK(res.exhaustive);
        REQUIRE(res.axes.size() == 2);
        for (const auto& axis : res.axes) {
            CHECK_FALSE(axis.closed);
            int row = axis.vertices.front() / 20;
            for (Vertex v : axis.vertices) CHECK(v / 20 == row);
        }
    }
    SECTION("cycle rotation axis survives a stricter scale") {
        auto c6 = cycle_complex(6);
        auto res = invariant_geodesics(c6, c6_rotation(), 1, {}, 3);
        CHECK(res.power == 1);
        REQUIRE(res.axes.size() == 1);
        CHECK(res.axes.front().closed);
        CHECK(res.axes.front().vertices.size() == 6);
    }
    SECTION("elliptic input is a precondition error") {
        CHECK_THROWS_AS(invariant_geodesics(octahedron(), oct_quarter_turn(), 1),
                        std::invalid_argument);
    }
}

TEST_CASE("union of axes") {
    CHECK(union_of_axes_check(cycle_complex(6), c6_rotation(), 1).status == Status::Pass);
    for (int w : {2, 3}) {
        auto st = strip(w, 20);
        CHECK(union_of_axes_check(st.complex, st.map->power(4), 1).status == Status::Pass);
    }
}

TEST_CASE("graph of axes") {
    SECTION("single axis, no edges") {
        auto st = strip(1, 20);
        auto g = graph_of_axes(st.complex, st.map->power(4), 1);
        CHECK(g.axes.size() == 1);
        CHECK(g.edges.empty());
    }
    SECTION("two rows meet, distant rows do not") {
        auto st2 = strip(2, 20);
        auto g2 = graph_of_axes(st2.complex, st2.map->power(4), 1);
        CHECK(g2.axes.size() == 2);
        CHECK(g2.edges == std::vector<std::pair<int, int>>{{0, 1}});

        auto st3 = strip(3, 20);
        auto g3 = graph_of_axes(st3.complex, st3.map->power(4), 1);
        CHECK(g3.axes.size() == 3);
        CHECK(g3.edges.size() == 2);  // a path: rows 1-2 and 2-3 only
        auto mg = MetricGraph::from_axes_graph(g3);
        CHECK(delta_four_point(mg).doubled_delta == 0);
    }
}

TEST_CASE("stitched axes realize parameter distance up to the translation length") {
    auto st = strip(3, 40);
    auto h5 = st.map->power(5);
    auto res = invariant_geodesics(st.complex, h5, 1);
    REQUIRE(res.power == 1);
    WindowMargins margins(st.complex);
    for (const auto& axis : res.axes) {
        auto dm = DistanceMatrix(st.complex);
        const auto& vs = axis.vertices;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size() && j <= i + 5; ++j) {
                int d = dm(vs[i], vs[j]);
                if (!margins.certifies(vs[i], vs[j], d)) continue;
                CHECK(d == static_cast<int>(j - i));
            }
    }
}
