#include <gtest/gtest.h>

#include <numeric>

#include "pcarr/coloring.hpp"
#include "pcarr/constructions.hpp"
#include "test_util.hpp"

using namespace pcarr;
using namespace testutil;

namespace {

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

} // namespace

TEST(Chromatic, MatchesBruteForce) {
    std::mt19937 rng(11);
    for (int i = 0; i < 60; ++i) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = random_graph(rng, n, 25 + static_cast<int>(rng() % 60));
        auto c = chromatic_number(g);
        EXPECT_EQ(c.k, brute_chromatic(g));
        EXPECT_TRUE(is_proper(g, c.color));
        for (int x : c.color) EXPECT_LT(x, c.k);
    }
}

TEST(Chromatic, SmallFamilies) {
    EXPECT_EQ(chromatic_number(Graph(0)).k, 0);
    EXPECT_EQ(chromatic_number(Graph(3)).k, 1);
    EXPECT_EQ(chromatic_number(cycle_graph(6)).k, 2);
    EXPECT_EQ(chromatic_number(cycle_graph(7)).k, 3);
    EXPECT_EQ(chromatic_number(complete_graph(5)).k, 5);
    EXPECT_EQ(chromatic_number(petersen()).k, 3);
}

TEST(Chromatic, CountsMatchBruteForce) {
    std::mt19937 rng(5);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 5), 50);
        for (int k : {2, 3})
            EXPECT_EQ(count_colorings(g, k), brute_count_colorings(g, k));
    }
    EXPECT_EQ(count_colorings(simple_graph(fixture_map("octahedron")), 3), 6);
}

TEST(Chromatic, FixtureWitnesses) {
    for (const char* id : {"fig1b", "koester", "crowning18", "k4"}) {
        Graph g = simple_graph(fixture_map(id));
        auto c = chromatic_number(g);
        EXPECT_EQ(c.k, 4) << id;
        EXPECT_TRUE(is_proper(g, c.color)) << id;
        EXPECT_FALSE(is_k_colorable(g, 3)) << id;
    }
}

TEST(EdgeColoring, PetersenHasNone) {
    auto h = Multigraph::of(petersen());
    EXPECT_EQ(code_of([&] { edge_three_coloring(h); }), Errc::NoColoring);
    EXPECT_EQ(count_edge_three_colorings(h), 0);
}

TEST(EdgeColoring, BridgeDetected) {
    // two K4s with one subdivided edge each, joined at the subdivision vertices
    Multigraph h{10, {}};
    for (int off : {0, 5}) {
        for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})
            h.edges.emplace_back(u + off, v + off);
    }
    h.edges.emplace_back(4, 9);
    EXPECT_EQ(h.bridges(), std::vector<int>{14});
    EXPECT_EQ(code_of([&] { edge_three_coloring(h); }), Errc::Bridged);
}

TEST(EdgeColoring, LoopsForceABridge) {
    Multigraph h{2, {{0, 0}, {0, 1}, {1, 1}}};
    EXPECT_EQ(code_of([&] { edge_three_coloring(h); }), Errc::Bridged);
}

TEST(Tait, TransfersThroughCubicPremedial) {
    for (const char* id : {"octahedron", "cube_medial", "fig4_n7", "fig4_n9", "fig4_n10", "fig6a", "fig10"}) {
        auto m = fixture_map(id);
        auto c = tait_vertex_coloring(m);
        EXPECT_EQ(c.k, 3) << id;
        EXPECT_TRUE(is_proper(simple_graph(m), c.color)) << id;
    }
}

TEST(Tait, Failures) {
    EXPECT_EQ(code_of([] { tait_vertex_coloring(fixture_map("fig1b")); }), Errc::NoCubicPremedial);
    EXPECT_EQ(code_of([] { tait_vertex_coloring(fixture_map("fig8")); }), Errc::BridgedPremedial);
    EXPECT_EQ(code_of([] { tait_vertex_coloring(fixture_map("cube")); }), Errc::NotFourRegular);
}

TEST(Criticality, Fig1bIsNotVertexCritical) {
    Graph g = simple_graph(fixture_map("fig1b"));
    auto r = criticality(g, CriticalMode::Vertex);
    EXPECT_FALSE(r.critical);
    EXPECT_EQ(r.witnesses, (std::vector<int>{3, 7, 13, 14}));
    for (int v : r.witnesses) EXPECT_EQ(chromatic_number(g.without_vertex(v)).k, 4);
    EXPECT_FALSE(criticality(g, CriticalMode::Edge).critical);
}

TEST(Criticality, CriticalGraphs) {
    for (const char* id : {"k4", "koester", "crowning18"}) {
        Graph g = simple_graph(fixture_map(id));
        EXPECT_TRUE(criticality(g, CriticalMode::Vertex).critical) << id;
        EXPECT_TRUE(criticality(g, CriticalMode::Edge).critical) << id;
    }
    // odd wheel W5 is 4-chromatic and edge-critical
    Graph w(6);
    for (int i = 0; i < 5; ++i) {
        w.add_edge(i, (i + 1) % 5);
        w.add_edge(i, 5);
    }
    EXPECT_TRUE(criticality(w, CriticalMode::Edge).critical);
}

TEST(Criticality, RequiresFourChromatic) {
    EXPECT_EQ(code_of([] { criticality(simple_graph(fixture_map("octahedron")), CriticalMode::Vertex); }), Errc::NotFourChromatic);
    EXPECT_EQ(code_of([] { criticality(complete_graph(5), CriticalMode::Edge); }), Errc::NotFourChromatic);
}

TEST(AntipodalColoring, ColouringsOfGreatArrangements) {
    for (const char* id : {"octahedron", "cube_medial", "fig10"}) {
        auto a = fixture_arr(id);
        auto c = antipodal_three_coloring(a);
        ASSERT_TRUE(c.has_value()) << id;
        auto pair = antipodal_involution(a);
        EXPECT_TRUE(is_proper(simple_graph(a.map()), c->color)) << id;
        for (int v = 0; v < a.vertex_count(); ++v) EXPECT_EQ(c->color[v], c->color[pair[v]]) << id;
    }
}

TEST(AntipodalColoring, SixGreatCirclesHaveNone) {
    auto a = fixture_arr("fig6a");
    EXPECT_FALSE(antipodal_three_coloring(a).has_value());
    // independent check on the quotient graph
    auto pair = antipodal_involution(a);
    Graph g = simple_graph(a.map());
    std::vector<int> cls(g.size(), -1);
    int k = 0;
    for (int v = 0; v < g.size(); ++v)
        if (cls[v] < 0) cls[v] = cls[pair[v]] = k++;
    Graph q(k);
    for (auto [u, v] : g.edges()) q.add_edge(cls[u], cls[v]);
    EXPECT_EQ(q.size(), 15);
    EXPECT_EQ(brute_count_colorings(q, 3), 0);
}

TEST(AntipodalColoring, Failures) {
    EXPECT_EQ(code_of([] { antipodal_three_coloring(fixture_arr("two_circles")); }), Errc::AdjacentAntipodes);
    EXPECT_EQ(code_of([] { antipodal_three_coloring(fixture_arr("fig1b")); }), Errc::NoInvolution);
    EXPECT_EQ(code_of([] { antipodal_three_coloring(fixture_arr("koester")); }), Errc::NoInvolution);
}

TEST(BFold, K4AndKoester) {
    for (const char* id : {"k4", "koester"}) {
        Graph g = simple_graph(fixture_map(id));
        auto bf = bfold_from_critical(g);
        EXPECT_EQ(bf.b, g.size() - 1) << id;
        EXPECT_EQ(bf.m, 3 * g.size()) << id;
        EXPECT_TRUE(is_valid_bfold(g, bf)) << id;
    }
}

TEST(BFold, ValidatorRejectsTampering) {
    Graph g = complete_graph(4);
    auto bf = bfold_from_critical(g);
    auto clash = bf;
    clash.sets[1][0] = clash.sets[0][0];
    EXPECT_FALSE(is_valid_bfold(g, clash));
    auto range = bf;
    range.sets[2][0] = 13;
    EXPECT_FALSE(is_valid_bfold(g, range));
    auto dup = bf;
    dup.sets[3][1] = dup.sets[3][0];
    EXPECT_FALSE(is_valid_bfold(g, dup));
    auto shortset = bf;
    shortset.sets[0].pop_back();
    EXPECT_FALSE(is_valid_bfold(g, shortset));
    EXPECT_NE(bf.to_text().find("bfold-v1 3 12"), std::string::npos);
}

TEST(BFold, NeedsVertexCriticalGraph) {
    EXPECT_EQ(code_of([] { bfold_from_critical(simple_graph(fixture_map("fig1b"))); }), Errc::NotVertexCritical);
    EXPECT_EQ(code_of([] { bfold_from_critical(cycle_graph(5)); }), Errc::NotVertexCritical);
}

TEST(Split, PartitionsVertices) {
    for (const char* id : {"cube_medial", "fig1b", "fig6a", "koester"}) {
        auto a = fixture_arr(id);
        for (int c = 0; c < a.curve_count(); ++c) {
            auto s = split_by_curve(a, c, a.map().face_of(0));
            std::vector<int> all = s.on_curve;
            all.insert(all.end(), s.inside.begin(), s.inside.end());
            all.insert(all.end(), s.outside.begin(), s.outside.end());
            std::sort(all.begin(), all.end());
            std::vector<int> expect(a.vertex_count());
            std::iota(expect.begin(), expect.end(), 0);
            EXPECT_EQ(all, expect) << id;
            EXPECT_EQ(s.on_curve.size(), a.curve_darts(c).size()) << id;
            // no edge joins the two sides
            Graph g = simple_graph(a.map());
            for (int u : s.inside)
                for (int v : s.outside) EXPECT_FALSE(g.adjacent(u, v)) << id;
            if (a.is_intersecting()) EXPECT_TRUE(s.disjoint_curves_vertices.empty()) << id;
        }
    }
}

TEST(Split, CircleSubgraphIsBipartite) {
    for (const char* id : {"octahedron", "fig1b", "fig4_n9", "koester"}) {
        auto a = fixture_arr(id);
        Graph g = simple_graph(a.map());
        for (int c = 0; c < a.curve_count(); ++c) EXPECT_TRUE(two_coloring(g.induced(a.curve_vertices(c))).has_value()) << id;
    }
}

TEST(CurveSplitSets, BoundHoldsForUnitAndRandomWeights) {
    std::mt19937 rng(3);
    for (const char* id : {"octahedron", "cube_medial", "fig1b", "fig4_n7", "fig6a"}) {
        auto a = fixture_arr(id);
        Graph g = simple_graph(a.map());
        std::vector<std::vector<Rational>> weights{std::vector<Rational>(g.size(), Rational(1))};
        for (int t = 0; t < 3; ++t) {
            std::vector<Rational> w;
            for (int v = 0; v < g.size(); ++v) w.emplace_back(static_cast<int>(1 + rng() % 9), static_cast<int>(1 + rng() % 4));
            weights.push_back(w);
        }
        for (const auto& w : weights) {
            bool min_curve_hits = false;
            for (int c = 0; c < a.curve_count(); ++c) {
                auto r = claim3_independent_set(a, c, w);
                EXPECT_TRUE(is_independent(g, r.set)) << id;
                EXPECT_EQ(r.sets_examined, 18);
                Rational sw = 0;
                for (int v : r.set) sw += w[v];
                EXPECT_EQ(sw, r.weight);
                if (r.min_weight_curve) {
                    min_curve_hits = true;
                    EXPECT_GE(r.weight, r.bound) << id << " curve " << c;
                }
            }
            EXPECT_TRUE(min_curve_hits) << id;
        }
    }
}

TEST(CurveSplitSets, RequiresIntersecting) {
    auto a = fixture_arr("koester");
    EXPECT_EQ(code_of([&] { claim3_independent_set(a, 0, std::vector<Rational>(a.vertex_count(), Rational(1))); }),
              Errc::NotIntersecting);
}

TEST(Degeneracy, RemovalLeavesTwoDegenerateGraph) {
    for (const char* id : {"octahedron", "cube_medial", "fig4_n7", "fig6a"}) {
        auto a = fixture_arr(id);
        auto removal = find_degeneracy_removal(a);
        ASSERT_TRUE(removal.has_value()) << id;
        EXPECT_LE(removal->size(), static_cast<std::size_t>(a.curve_count()));
        Graph g = simple_graph(a.map());
        auto c = degeneracy_three_coloring(g, *removal);
        for (int v : *removal) EXPECT_EQ(c.color[v], -1);
        for (auto [u, v] : g.edges())
            if (c.color[u] >= 0 && c.color[v] >= 0) EXPECT_NE(c.color[u], c.color[v]) << id;
    }
}

TEST(Degeneracy, FourRegularGraphIsNotTwoDegenerate) {
    Graph g = simple_graph(fixture_map("octahedron"));
    EXPECT_EQ(code_of([&] { degeneracy_three_coloring(g, {}); }), Errc::NotTwoDegenerate);
    EXPECT_EQ(two_core(g, std::vector<char>(g.size(), 0)).size(), 6u);
    EXPECT_TRUE(two_core(cycle_graph(7), std::vector<char>(7, 0)).empty());
}
