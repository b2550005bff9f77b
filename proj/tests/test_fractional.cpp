#include <gtest/gtest.h>

#include "pcarr/fractional.hpp"
#include "pcarr/oracle.hpp"
#include "test_util.hpp"

using namespace pcarr;
using namespace testutil;

TEST(Mwis, MatchesBruteForce) {
    std::mt19937 rng(17);
    for (int i = 0; i < 80; ++i) {
        int n = 1 + static_cast<int>(rng() % 14);
        Graph g = random_graph(rng, n, 15 + static_cast<int>(rng() % 70));
        std::vector<Rational> w;
        for (int v = 0; v < n; ++v) w.emplace_back(static_cast<int>(rng() % 7), static_cast<int>(1 + rng() % 5));
        auto r = mwis(g, w);
        EXPECT_TRUE(is_independent(g, r.set));
        Rational sw = 0;
        for (int v : r.set) sw += w[v];
        EXPECT_EQ(sw, r.weight);
        EXPECT_EQ(r.weight, brute_mwis(g, w));
        EXPECT_EQ(independence_number(g).weight, brute_mwis(g, std::vector<int>(n, 1)));
    }
}

TEST(Mwis, FixtureIndependenceNumbers) {
    EXPECT_EQ(independence_number(simple_graph(fixture_map("octahedron"))).weight, 2);
    EXPECT_EQ(independence_number(simple_graph(fixture_map("cube"))).weight, 4);
    EXPECT_EQ(independence_number(simple_graph(fixture_map("fig6a"))).weight, 10);
    EXPECT_EQ(independence_number(simple_graph(fixture_map("koester"))).weight, 13);
}

TEST(Mwis, HugeWeightsUseBigIntegers) {
    Graph g = cycle_graph(5);
    Rational big = Rational(BigInt("1000000000000000000000000"), 7);
    std::vector<Rational> w(5, big);
    EXPECT_EQ(mwis(g, w).weight, 2 * big);
}

TEST(Mwis, Errors) {
    Graph g = cycle_graph(4);
    EXPECT_EQ(code_of([&] { mwis(g, {1, 1, -1, 1}); }), Errc::NegativeWeight);
    EXPECT_EQ(code_of([&] { mwis(g, {1, 1}); }), Errc::BadFormat);
}

TEST(Fractional, KnownValues) {
    EXPECT_EQ(fractional_chromatic(cycle_graph(5)).value, Rational(5, 2));
    EXPECT_EQ(fractional_chromatic(cycle_graph(7)).value, Rational(7, 3));
    EXPECT_EQ(fractional_chromatic(cycle_graph(8)).value, Rational(2));
    EXPECT_EQ(fractional_chromatic(complete_graph(4)).value, Rational(4));
    EXPECT_EQ(fractional_chromatic(Graph(3)).value, Rational(1));
    Graph p(10);
    for (int i = 0; i < 5; ++i) {
        p.add_edge(i, (i + 1) % 5);
        p.add_edge(i, i + 5);
        p.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    EXPECT_EQ(fractional_chromatic(p).value, Rational(5, 2));
}

TEST(Fractional, Fixtures) {
    EXPECT_EQ(fractional_chromatic(simple_graph(fixture_map("fig1b"))).value, Rational(3));
    EXPECT_EQ(fractional_chromatic(simple_graph(fixture_map("koester"))).value, Rational(40, 13));
    EXPECT_EQ(fractional_chromatic(simple_graph(fixture_map("fig8"))).value, Rational(7, 2));
}

TEST(Fractional, AgreesWithDenseOracle) {
    std::mt19937 rng(20240611);
    for (int i = 0; i < 40; ++i) {
        int n = 3 + static_cast<int>(rng() % 11);
        Graph g = random_graph(rng, n, 20 + static_cast<int>(rng() % 60));
        auto c = fractional_chromatic(g);
        EXPECT_EQ(c.value, oracle::fractional_chromatic_dense(g)) << "graph " << i;
        EXPECT_TRUE(verify_certificate(g, c).ok);
        EXPECT_LE(c.value, Rational(chromatic_number(g).k));
        EXPECT_GE(c.value, Rational(n, independence_number(g).weight));
    }
}

TEST(Oracle, MaximalIndependentSets) {
    auto c5 = oracle::maximal_independent_sets(cycle_graph(5));
    EXPECT_EQ(c5.size(), 5u);
    auto k4 = oracle::maximal_independent_sets(complete_graph(4));
    EXPECT_EQ(k4.size(), 4u);
    EXPECT_EQ(code_of([] { oracle::maximal_independent_sets(Graph(31)); }), Errc::BadFormat);
}

TEST(Certificate, RoundTrip) {
    Graph g = simple_graph(fixture_map("cube_medial"));
    auto c = fractional_chromatic(g);
    auto text = c.to_text();
    auto back = parse_certificate(text);
    EXPECT_EQ(back.value, c.value);
    EXPECT_EQ(back.primal.size(), c.primal.size());
    EXPECT_EQ(back.dual, c.dual);
    EXPECT_TRUE(verify_certificate(g, back).ok);
    EXPECT_EQ(back.to_text(), text);
}

TEST(Certificate, TamperingIsCaught) {
    Graph g = cycle_graph(5);
    auto c = fractional_chromatic(g);
    auto bad_value = c;
    bad_value.value = Rational(2);
    EXPECT_FALSE(verify_certificate(g, bad_value).ok);

    auto bad_dual = c;
    bad_dual.dual[0] += Rational(1, 2);
    bad_dual.dual[1] -= Rational(1, 2);
    EXPECT_FALSE(verify_certificate(g, bad_dual).ok);

    auto neg = c;
    neg.dual[0] = Rational(-1);
    EXPECT_FALSE(verify_certificate(g, neg).ok);

    auto dep = c;
    dep.primal[0].first = {0, 1};
    EXPECT_FALSE(verify_certificate(g, dep).ok);

    auto uncovered = c;
    uncovered.primal.pop_back();
    auto r = verify_certificate(g, uncovered);
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(r.diagnostic.empty());

    auto range = c;
    range.primal[0].first = {7};
    EXPECT_FALSE(verify_certificate(g, range).ok);
}

TEST(Certificate, ParseErrors) {
    EXPECT_EQ(code_of([] { parse_certificate(""); }), Errc::BadFormat);
    EXPECT_EQ(code_of([] { parse_certificate("fraccert-v2 1\n"); }), Errc::BadFormat);
    EXPECT_EQ(code_of([] { parse_certificate("fraccert-v1 1\nset: 0 w: 1\n"); }), Errc::BadFormat);
    EXPECT_EQ(code_of([] { parse_certificate("fraccert-v1 1\ndual:\n1 1\n"); }), Errc::BadFormat);
}

TEST(BoundSuite, AllApplicableBoundsHold) {
    for (const char* id : {"octahedron", "cube_medial", "fig1b", "fig6a", "koester"}) {
        auto r = bound_suite(fixture_arr(id));
        EXPECT_TRUE(r.all_hold()) << id << "\n" << r.to_text();
    }
    auto r = bound_suite(fixture_arr("fig1b"));
    EXPECT_EQ(r.chi, 4);
    EXPECT_EQ(r.chi_f, Rational(3));
    EXPECT_EQ(r.alpha, 7);
    for (const auto& b : r.bounds)
        if (b.name == "intersecting_n") {
            EXPECT_TRUE(b.applicable);
            EXPECT_EQ(b.rhs, Rational(3) + Rational(6, 13));
        }
    auto k = bound_suite(fixture_arr("koester"));
    for (const auto& b : k.bounds)
        if (b.name == "vertex_critical") {
            EXPECT_TRUE(b.applicable);
            EXPECT_EQ(b.rhs, Rational(3) + Rational(3, 39));
        }
}
