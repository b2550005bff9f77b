#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <regex>

#include "pcarr/constructions.hpp"
#include "pcarr/render.hpp"
#include "test_util.hpp"

using namespace pcarr;
using namespace testutil;

namespace {

PlaneMap theta() {
    // two vertices joined by three parallel edges
    return PlaneMap({3, 5, 4, 0, 2, 1}, {1, 2, 0, 4, 5, 3});
}

PlaneMap path3() { return from_rotations({{1}, {0, 2}, {1}}); }

} // namespace

TEST(ParseMap, RejectsMalformedInput) {
    EXPECT_EQ(code_of([] { parse_map("planemap-v2 2\ntwin: 1 0\nnext: 0 1\n"); }), Errc::BadFormat);
    EXPECT_EQ(code_of([] { parse_map("planemap-v1 2\ntwin: 1 0\n"); }), Errc::BadFormat);
    EXPECT_EQ(code_of([] { parse_map("planemap-v1 2\ntwin: 1 x\nnext: 0 1\n"); }), Errc::BadFormat);
    EXPECT_EQ(code_of([] { parse_map("planemap-v1 3\ntwin: 1 0 2\nnext: 0 1 2\n"); }), Errc::BadFormat);
    EXPECT_EQ(code_of([] { parse_map("planemap-v1 2\ntwin: 1 0\nnext: 0 1\ncurve: 0 1\n"); }), Errc::BadFormat);
    EXPECT_EQ(code_of([] { parse_map("planemap-v1 2\ntwin: 1 0\nnext: 0 1\nextra: 1\n"); }), Errc::BadFormat);
}

TEST(ParseMap, StructuralErrors) {
    EXPECT_EQ(code_of([] { parse_map("planemap-v1 2\ntwin: 1 1\nnext: 0 1\n"); }), Errc::NotInvolution);
    EXPECT_EQ(code_of([] { parse_map("planemap-v1 2\ntwin: 0 1\nnext: 0 1\n"); }), Errc::NotInvolution);
    EXPECT_EQ(code_of([] { parse_map("planemap-v1 2\ntwin: 1 0\nnext: 0 0\n"); }), Errc::NotPermutation);
    EXPECT_EQ(code_of([] { parse_map("planemap-v1 4\ntwin: 1 0 3 2\nnext: 0 1 2 3\n"); }), Errc::Disconnected);
    // one vertex with two interleaved loops lives on the torus
    EXPECT_EQ(code_of([] { parse_map("planemap-v1 4\ntwin: 2 3 0 1\nnext: 1 2 3 0\n"); }), Errc::EulerViolation);
}

TEST(ParseMap, SingleEdge) {
    auto m = parse_map("planemap-v1 2\ntwin: 1 0\nnext: 0 1\n");
    EXPECT_EQ(m.vertex_count(), 2);
    EXPECT_EQ(m.edge_count(), 1);
    EXPECT_EQ(m.face_count(), 1);
}

TEST(ParseMap, RoundTripEveryFixture) {
    for (const auto& id : fixture_ids()) {
        if (id == "fig11") continue;
        auto m = fixture_map(id);
        auto text = serialize_map(m);
        EXPECT_EQ(parse_map(text), m) << id;
        EXPECT_EQ(serialize_map(parse_map(text)), text) << id;
    }
}

TEST(ParseMap, ToleratesBlankLinesAndCarriageReturns) {
    auto m = parse_map("\nplanemap-v1 2\r\n\ntwin: 1 0\r\nnext: 0 1\r\n\n");
    EXPECT_EQ(m.edge_count(), 1);
}

TEST(PlaneMap, EulerHoldsForFixtures) {
    for (const auto& id : fixture_ids()) {
        if (id == "fig11") continue;
        auto m = fixture_map(id);
        EXPECT_EQ(m.vertex_count() - m.edge_count() + m.face_count(), 2) << id;
        int sum = 0;
        for (int f = 0; f < m.face_count(); ++f) sum += m.face_size(f);
        EXPECT_EQ(sum, m.dart_count()) << id;
    }
}

TEST(PlaneMap, DualSwapsCounts) {
    auto c = fixture_map("cube");
    auto d = dual(c);
    EXPECT_EQ(d.vertex_count(), c.face_count());
    EXPECT_EQ(d.face_count(), c.vertex_count());
    EXPECT_TRUE(isomorphic(d, fixture_map("octahedron").without_curves()));
    EXPECT_TRUE(isomorphic(dual(d), c));
}

TEST(Analyze, TwoConnectedPolyhedra) {
    for (const char* id : {"k4", "cube", "octahedron", "fig6a"}) {
        auto r = analyze(fixture_map(id));
        EXPECT_TRUE(r.two_connected) << id;
        EXPECT_TRUE(r.bridgeless) << id;
        EXPECT_TRUE(r.cut_vertices.empty()) << id;
    }
    auto r = analyze(fixture_map("cube"));
    EXPECT_EQ(r.V, 8);
    EXPECT_EQ(r.E, 12);
    EXPECT_EQ(r.F, 6);
    EXPECT_EQ(r.degree_histogram, (std::map<int, int>{{3, 8}}));
}

TEST(Analyze, PathHasBridgesAndCutVertex) {
    auto r = analyze(path3());
    EXPECT_FALSE(r.two_connected);
    EXPECT_FALSE(r.bridgeless);
    EXPECT_EQ(r.bridges.size(), 2u);
    EXPECT_EQ(r.cut_vertices, std::vector<int>{1});
}

TEST(Analyze, ParallelEdgesAreNotBridges) {
    auto r = analyze(theta());
    EXPECT_TRUE(r.bridgeless);
    EXPECT_TRUE(r.two_connected);
}

TEST(Analyze, CutVertexWithoutBridge) {
    auto r = analyze(fixture_map("fig8"));
    EXPECT_FALSE(r.two_connected);
    EXPECT_TRUE(r.bridgeless);
    EXPECT_FALSE(r.cut_vertices.empty());
}

TEST(FaceTwoColoring, ClassSizes) {
    auto oct = fixture_map("octahedron");
    auto fc = face_two_coloring(oct);
    EXPECT_EQ(fc.faces_of(0).size(), 4u);
    EXPECT_EQ(fc.faces_of(1).size(), 4u);

    auto ico = fixture_map("fig6a");
    fc = face_two_coloring(ico);
    auto a = fc.faces_of(0).size(), b = fc.faces_of(1).size();
    EXPECT_EQ(std::min(a, b), 12u);
    EXPECT_EQ(std::max(a, b), 20u);
    EXPECT_EQ(fc.color[ico.face_of(0)], 0);
}

TEST(FaceTwoColoring, AdjacentFacesDiffer) {
    for (const char* id : {"octahedron", "cube_medial", "fig1b", "fig10", "koester", "crowning18"}) {
        auto m = fixture_map(id);
        auto fc = face_two_coloring(m);
        for (Dart d = 0; d < m.dart_count(); ++d) EXPECT_NE(fc.color[m.face_of(d)], fc.color[m.face_of(m.twin(d))]) << id;
    }
}

TEST(FaceTwoColoring, OddDegreeRejected) {
    EXPECT_EQ(code_of([] { face_two_coloring(fixture_map("cube")); }), Errc::OddVertex);
}

TEST(Medial, CountsFollowEdgesAndVerticesPlusFaces) {
    for (const auto& h : {k4_map(), fixture_map("cube"), prism(), theta()}) {
        auto m = medial(h).map;
        EXPECT_EQ(m.vertex_count(), h.edge_count());
        EXPECT_EQ(m.face_count(), h.vertex_count() + h.face_count());
        for (int v = 0; v < m.vertex_count(); ++v) EXPECT_EQ(m.degree(v), 4);
    }
}

TEST(Medial, KnownMedials) {
    EXPECT_TRUE(isomorphic(medial(fixture_map("cube")).map, fixture_map("cube_medial")));
    EXPECT_TRUE(isomorphic(medial(k4_map()).map, fixture_map("octahedron")));
    EXPECT_TRUE(isomorphic(medial(fixture_map("cube")).map, medial(fixture_map("octahedron").without_curves()).map));
    auto t = medial(theta()).map;
    EXPECT_EQ(t.vertex_count(), 3);
    EXPECT_EQ(t.curve_count(), 1); // the trefoil shadow
}

TEST(Medial, VertexOfEdgeIsBijective) {
    auto h = fixture_map("cube");
    auto r = medial(h);
    std::vector<int> seen(r.map.vertex_count(), 0);
    for (int v : r.vertex_of_edge) ++seen[v];
    for (int c : seen) EXPECT_EQ(c, 1);
}

TEST(Premedial, PairIsDualAndInvertsMedial) {
    for (const char* id : {"cube_medial", "octahedron", "fig6a", "fig1b"}) {
        auto g = fixture_map(id);
        auto [a, b] = premedial_pair(g);
        EXPECT_TRUE(isomorphic(b, dual(a))) << id;
        EXPECT_TRUE(isomorphic(medial(a).map, g)) << id;
        EXPECT_TRUE(isomorphic(medial(b).map, g)) << id;
    }
    auto [a, b] = premedial_pair(fixture_map("cube_medial"));
    bool cube_first = isomorphic(a, fixture_map("cube"));
    EXPECT_TRUE(isomorphic(cube_first ? a : b, fixture_map("cube")));
    EXPECT_TRUE(isomorphic(cube_first ? b : a, fixture_map("octahedron").without_curves()));
}

TEST(Premedial, OctahedronGivesTwoTetrahedra) {
    auto [a, b] = premedial_pair(fixture_map("octahedron"));
    EXPECT_TRUE(isomorphic(a, k4_map()));
    EXPECT_TRUE(isomorphic(b, k4_map()));
}

TEST(Premedial, RequiresFourRegular) {
    EXPECT_EQ(code_of([] { premedial_pair(fixture_map("cube")); }), Errc::NotFourRegular);
}

TEST(InsertCurve, AroundAVertex) {
    auto m = fixture_map("octahedron");
    auto [out, receipt] = insert_curve(m, m.vertex_darts(0));
    EXPECT_EQ(out.vertex_count(), 10);
    EXPECT_EQ(out.edge_count(), 20);
    EXPECT_EQ(out.curve_count(), 4);
    EXPECT_EQ(receipt.new_curve, 3);
    EXPECT_EQ(receipt.vertex_delta, 4);
    EXPECT_EQ(receipt.edge_delta, 8);
    for (Dart d = 0; d < m.dart_count(); ++d) EXPECT_EQ(receipt.dart_map[d], d);
    Arrangement a(out);
    EXPECT_FALSE(a.is_intersecting());
    EXPECT_EQ(a.crossing_count(3, m.curve_of(m.vertex_darts(0)[0])), 2);
}

TEST(InsertCurve, WithoutCurvesStaysUnlabelled) {
    auto m = fixture_map("cube");
    auto [out, receipt] = insert_curve(m, m.vertex_darts(0));
    EXPECT_FALSE(out.has_curves());
    EXPECT_FALSE(receipt.new_curve.has_value());
    EXPECT_EQ(out.vertex_count(), 11);
}

TEST(InsertCurve, Errors) {
    auto m = fixture_map("octahedron");
    EXPECT_EQ(code_of([&] { insert_curve(m, {}); }), Errc::NotCocycle);
    EXPECT_EQ(code_of([&] { insert_curve(m, {0}); }), Errc::NotCocycle);
    EXPECT_EQ(code_of([&] { insert_curve(m, {0, m.twin(0)}); }), Errc::DuplicateEdge);
    EXPECT_EQ(code_of([&] { insert_curve(m, {m.dart_count()}); }), Errc::BadIndex);
    // darts 0 and its opposite edge at the far side of the octahedron share no face
    std::vector<Dart> far;
    for (Dart d = 0; d < m.dart_count(); ++d)
        if (m.vertex_of(d) != m.vertex_of(0) && m.head(d) != m.vertex_of(0) && m.vertex_of(d) != m.head(0) && m.head(d) != m.head(0))
            far.push_back(d);
    ASSERT_FALSE(far.empty());
    EXPECT_EQ(code_of([&] { insert_curve(m, {0, far[0]}); }), Errc::NotCocycle);
}

TEST(CanonicalCode, InvariantUnderRelabelling) {
    std::mt19937 rng(7);
    for (const char* id : {"k4", "cube", "fig1b", "fig6a", "koester"}) {
        auto m = fixture_map(id);
        std::vector<int> sigma(m.dart_count());
        std::iota(sigma.begin(), sigma.end(), 0);
        for (int trial = 0; trial < 3; ++trial) {
            std::shuffle(sigma.begin(), sigma.end(), rng);
            auto r = relabel(m, sigma);
            EXPECT_EQ(canonical_code(r), canonical_code(m)) << id;
            EXPECT_EQ(canonical_code(r, false), canonical_code(m, false)) << id;
            EXPECT_TRUE(isomorphic(r.mirrored(), m)) << id;
        }
    }
}

TEST(CanonicalCode, DistinguishesMaps) {
    EXPECT_FALSE(isomorphic(fixture_map("cube"), fixture_map("octahedron")));
    EXPECT_FALSE(isomorphic(fixture_map("fig4_n10"), fixture_map("fig10")));
    EXPECT_FALSE(isomorphic(fixture_map("k4"), prism()));
}

TEST(FromRotations, RejectsAsymmetricLists) {
    EXPECT_EQ(code_of([] { from_rotations({{1}, {}}); }), Errc::BadFormat);
}

namespace {

using P = std::pair<Rational, Rational>;

int orient(const P& a, const P& b, const P& c) {
    Rational x = (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
    return x > 0 ? 1 : x < 0 ? -1 : 0;
}

bool proper_cross(const P& a, const P& b, const P& c, const P& d) {
    return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

} // namespace

TEST(Render, TutteLayoutIsAStraightLineEmbedding) {
    for (const char* id : {"k4", "cube", "octahedron", "cube_medial", "fig6a"}) {
        auto m = fixture_map(id);
        auto l = tutte_layout(m);
        EXPECT_FALSE(l.degenerate) << id;
        std::vector<std::pair<int, int>> es;
        for (int e = 0; e < m.edge_count(); ++e) es.emplace_back(m.vertex_of(m.edge_dart(e)), m.head(m.edge_dart(e)));
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = i + 1; j < es.size(); ++j)
                EXPECT_FALSE(proper_cross(l.pos[es[i].first], l.pos[es[i].second], l.pos[es[j].first], l.pos[es[j].second]))
                    << id << " edges " << i << "," << j;
    }
}

TEST(Render, SvgHasOneElementPerEdgeAndVertex) {
    auto m = fixture_map("cube_medial");
    auto svg = render_svg(m);
    auto count = [&](const std::string& what) {
        std::regex re(what);
        return std::distance(std::sregex_iterator(svg.begin(), svg.end(), re), std::sregex_iterator());
    };
    EXPECT_EQ(count("<line "), m.edge_count());
    EXPECT_EQ(count("<circle "), m.vertex_count());
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_EQ(svg.find("warning"), std::string::npos);
}
