#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pcarr/arrangement.hpp"
#include "pcarr/coloring.hpp"
#include "pcarr/constructions.hpp"
#include "pcarr/fixtures.hpp"
#include "pcarr/fractional.hpp"
#include "pcarr/oracle.hpp"

namespace pcarr {

struct CheckResult {
    std::string id;
    std::string citation;
    bool pass = false;
    std::string computed;
    std::string expected;
    double seconds = 0;
};

struct VerificationReport {
    std::string scope;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    /// Runtimes are left out so that reports compare byte for byte.
    std::string to_text() const {
        std::ostringstream out;
        out << "report-v1 " << scope << "\n";
        for (const auto& c : checks) {
            out << "check " << c.id << ' ' << (c.pass ? "pass" : "fail") << ' ' << c.citation << "\n";
            out << "  computed: " << c.computed << "\n  expected: " << c.expected << "\n";
        }
        return out.str();
    }
};

namespace detail {

struct SuiteContext {
    std::filesystem::path dir;
    bool all = false;
    std::optional<std::pair<Arrangement, ConstructionReceipt>> corona_out;

    PlaneMap map(const std::string& id) const { return load_fixture(id, dir).map; }
    Arrangement arr(const std::string& id) const { return as_arrangement(map(id)); }

    static int first_face_of_size(const PlaneMap& m, int s) {
        for (int f = 0; f < m.face_count(); ++f)
            if (m.face_size(f) == s) return f;
        return -1;
    }

    const std::pair<Arrangement, ConstructionReceipt>& corona6() {
        if (!corona_out) {
            Arrangement a = arr("fig6a");
            corona_out = corona(a, first_face_of_size(a.map(), 5));
        }
        return *corona_out;
    }
};

inline std::string yes(bool b) { return b ? "yes" : "no"; }

inline void fig1b_colors(SuiteContext& cx, CheckResult& r) {
    Graph g = simple_graph(cx.map("fig1b"));
    int chi = chromatic_number(g).k;
    Rational f = fractional_chromatic(g).value;
    r.computed = "chi=" + std::to_string(chi) + " chi_f=" + to_pq(f);
    r.expected = "chi=4 chi_f=3/1";
    r.pass = chi == 4 && f == 3;
}

inline void corona_critical(SuiteContext& cx, CheckResult& r) {
    const auto& [a, rc] = cx.corona6();
    Graph g = simple_graph(a.map());
    int chi = chromatic_number(g).k;
    bool crit = chi == 4 && criticality(g, CriticalMode::Edge).critical;
    r.computed = "V=" + std::to_string(a.vertex_count()) + " chi=" + std::to_string(chi) + " edge_critical=" + yes(crit);
    r.expected = "V=40 chi=4 edge_critical=yes";
    r.pass = a.vertex_count() == 40 && chi == 4 && crit;
}

inline void corona_independence(SuiteContext& cx, CheckResult& r) {
    const auto& [a, rc] = cx.corona6();
    const PlaneMap& m = a.map();
    auto fc = face_two_coloring(m);
    // the class made of triangles and exactly one pentagon
    int t = 0;
    bool only_triangles = false;
    for (int cls : {0, 1}) {
        int tri = 0, pent = 0, other = 0;
        for (int f = 0; f < m.face_count(); ++f) {
            if (fc.color[f] != cls) continue;
            int s = m.face_size(f);
            (s == 3 ? tri : s == 5 ? pent : other) += 1;
        }
        if (pent == 1 && other == 0) {
            t = tri;
            only_triangles = true;
        }
    }
    int V = a.vertex_count();
    int alpha = independence_number(simple_graph(m)).weight;
    r.computed = "t=" + std::to_string(t) + " 3t+5=" + std::to_string(3 * t + 5) + " 2V=" + std::to_string(2 * V) +
                 " alpha=" + std::to_string(alpha) + " 3alpha=" + std::to_string(3 * alpha) + " class_triangles=" + yes(only_triangles);
    r.expected = "t=25 3t+5=2V=80 alpha<=13 2alpha<=t+1 3alpha<V";
    r.pass = only_triangles && t == 25 && 3 * t + 5 == 2 * V && alpha <= 13 && 2 * alpha <= t + 1 && 3 * alpha < V;
}

inline void tait_saturated(SuiteContext& cx, CheckResult& r) {
    std::vector<std::string> ids = {"fig4_n7", "fig4_n9", "fig4_n10", "fig6a", "fig10"};
    if (cx.all) ids.push_back("fig11");
    r.pass = true;
    for (const auto& id : ids) {
        std::string res;
        try {
            Arrangement a = cx.arr(id);
            bool sat = properties(a).triangle_saturated;
            auto c = tait_vertex_coloring(a.map());
            bool ok = sat && c.k == 3 && is_proper(simple_graph(a.map()), c.color);
            res = ok ? "proper" : "improper";
            r.pass = r.pass && ok;
        } catch (const Error& e) {
            res = std::string(errc_name(e.code()));
            r.pass = false;
        }
        r.computed += (r.computed.empty() ? "" : " ") + id + "=" + res;
        r.expected += (r.expected.empty() ? "" : " ") + id + "=proper";
    }
}

inline void intersecting_bound(SuiteContext& cx, CheckResult& r) {
    r.pass = true;
    for (const std::string id : {"octahedron", "cube_medial", "fig1b", "fig6a"}) {
        Arrangement a = cx.arr(id);
        int n = a.curve_count();
        Rational f = fractional_chromatic(simple_graph(a.map())).value;
        Rational bound = Rational(3) + Rational(6, 3 * n - 2);
        bool ok = a.is_intersecting() && f <= bound;
        r.pass = r.pass && ok;
        r.computed += (r.computed.empty() ? "" : " ") + id + ":n=" + std::to_string(n) + ",chi_f=" + to_pq(f);
        r.expected += (r.expected.empty() ? "" : " ") + id + ":chi_f<=" + to_pq(bound);
    }
}

/// One round of bundling curve 0 and replacing two opposite grids.
struct GrowStep {
    Arrangement arrangement;
    VertexColoring coloring;
};

inline std::optional<GrowStep> grow_intersecting(const Arrangement& a, const VertexColoring& phi) {
    auto b = add_parallel_triple(a, 0);
    auto lifted = lift_coloring(a, phi, b);
    const int k = static_cast<int>(b.tracks.size());
    auto out = make_intersecting(b, {b.base, 0}, {b.base, k / 2}, Variant::Middle, Variant::Right).first;
    VertexColoring partial{3, std::vector<int>(out.vertex_count(), -1)};
    for (int v = 0; v < b.arrangement.vertex_count(); ++v) partial.color[v] = lifted.color[v];
    auto ext = extend_coloring(simple_graph(out.map()), partial);
    if (!ext) return std::nullopt;
    return GrowStep{out, *ext};
}

inline void bundle_intersecting(SuiteContext& cx, CheckResult& r) {
    Arrangement a = cx.arr("octahedron");
    auto c = k_coloring(simple_graph(a.map()), 3);
    VertexColoring phi{3, *c};
    r.pass = true;
    r.computed = "n=" + std::to_string(a.curve_count());
    r.expected = "n=3";
    for (int step = 0; step < 2; ++step) {
        auto s = grow_intersecting(a, phi);
        if (!s) {
            r.pass = false;
            r.computed += " ->extension_failed";
            break;
        }
        a = s->arrangement;
        phi = s->coloring;
        bool ok = a.is_intersecting() && is_proper(simple_graph(a.map()), phi.color);
        r.pass = r.pass && ok;
        r.computed += " ->n=" + std::to_string(a.curve_count()) + ",V=" + std::to_string(a.vertex_count()) +
                      ",intersecting=" + yes(a.is_intersecting()) + ",proper=" + yes(ok);
    }
    r.expected += " ->n=5,V=20,intersecting=yes,proper=yes ->n=7,V=42,intersecting=yes,proper=yes";
    r.pass = r.pass && r.computed == r.expected;
}

inline void crowning18_base(SuiteContext& cx, CheckResult& r) {
    PlaneMap m = cx.map("crowning18");
    Graph g = simple_graph(m);
    int chi = chromatic_number(g).k;
    Rational f = fractional_chromatic(g).value;
    bool crit = chi == 4 && criticality(g, CriticalMode::Edge).critical;
    r.computed = "V=" + std::to_string(g.size()) + " chi=" + std::to_string(chi) + " chi_f=" + to_pq(f) + " edge_critical=" + yes(crit);
    r.expected = "V=18 chi=4 chi_f=3/1 edge_critical=yes";
    r.pass = r.computed == r.expected;
}

inline void crowning_preserves(SuiteContext& cx, CheckResult& r) {
    PlaneMap m = cx.map("crowning18");
    int tri = SuiteContext::first_face_of_size(m, 3);
    auto [c, rc] = crown(m, tri);
    Graph g = simple_graph(c);
    int chi = chromatic_number(g).k;
    bool crit = chi == 4 && criticality(g, CriticalMode::Edge).critical;
    Rational f = fractional_chromatic(g).value;
    r.computed = "V=" + std::to_string(g.size()) + " facial_triangle=" + yes(has_facial_triangle(c)) + " chi=" +
                 std::to_string(chi) + " chi_f=" + to_pq(f) + " edge_critical=" + yes(crit);
    r.expected = "V=27 facial_triangle=yes chi=4 chi_f=3/1 edge_critical=yes";
    r.pass = r.computed == r.expected;
}

inline void bfold_fig1b(SuiteContext& cx, CheckResult& r) {
    Graph g = simple_graph(cx.map("fig1b"));
    r.expected = "b=19 colours<=60 valid=yes";
    try {
        auto bf = bfold_from_critical(g);
        bool valid = is_valid_bfold(g, bf);
        r.computed = "b=" + std::to_string(bf.b) + " colours=" + std::to_string(bf.m) + " valid=" + yes(valid);
        r.pass = bf.b == 19 && bf.m <= 60 && valid;
    } catch (const Error& e) {
        r.computed = e.what();
        r.pass = false;
    }
}

inline void circle_bipartite(SuiteContext& cx, CheckResult& r) {
    r.pass = true;
    int curves = 0;
    for (const std::string id : {"two_circles", "octahedron", "cube_medial", "fig1b", "fig4_n7", "fig4_n9", "fig4_n10", "fig6a", "fig10"}) {
        Arrangement a = cx.arr(id);
        if (!a.is_intersecting()) continue;
        Graph g = simple_graph(a.map());
        for (int c = 0; c < a.curve_count(); ++c) {
            ++curves;
            if (!two_coloring(g.induced(a.curve_vertices(c)))) {
                r.pass = false;
                r.computed += id + ":curve" + std::to_string(c) + "_not_bipartite ";
            }
        }
    }
    r.computed += "curves_checked=" + std::to_string(curves);
    r.expected = "every circle subgraph bipartite";
}

inline void lp_oracle(SuiteContext&, CheckResult& r) {
    std::mt19937 rng(20240611u);
    int agree = 0, total = 0;
    auto run = [&](const Graph& g) {
        ++total;
        if (fractional_chromatic(g).value == oracle::fractional_chromatic_dense(g)) ++agree;
    };
    for (int i = 0; i < 50; ++i) {
        int n = 4 + static_cast<int>(rng() % 11);
        std::uint32_t p = 20 + rng() % 51; // edge probability in percent
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < p) g.add_edge(u, v);
        run(g);
    }
    Rational c5 = fractional_chromatic(cycle_graph(5)).value;
    run(cycle_graph(5));
    r.computed = "agree=" + std::to_string(agree) + "/" + std::to_string(total) + " C5=" + to_pq(c5);
    r.expected = "agree=51/51 C5=5/2";
    r.pass = r.computed == r.expected;
}

inline void antipodal_great(SuiteContext& cx, CheckResult& r) {
    std::vector<std::string> ids = {"fig6a", "fig10"};
    if (cx.all) ids.push_back("fig11");
    r.pass = true;
    for (const auto& id : ids) {
        std::string res;
        try {
            auto c = antipodal_three_coloring(cx.arr(id));
            res = c ? "exists" : "none";
        } catch (const Error& e) {
            res = std::string(errc_name(e.code()));
            r.pass = false;
        }
        r.computed += (r.computed.empty() ? "" : " ") + id + "=" + res;
        r.expected += (r.expected.empty() ? "" : " ") + id + "=exists|none";
    }
}

} // namespace detail

struct CheckSpec {
    std::string id;
    std::string citation;
    std::function<void(detail::SuiteContext&, CheckResult&)> run;
};

inline const std::vector<CheckSpec>& acceptance_checks() {
    using namespace detail;
    static const std::vector<CheckSpec> checks = {
        {"fig1b_colors", "intersecting 5-curve arrangement has chi=4 and chi_f=3", fig1b_colors},
        {"corona_critical", "corona of the 6 great-circle arrangement is 4-chromatic and 4-edge-critical", corona_critical},
        {"corona_independence", "corona triangle count t gives 3t+5=2|V| and 2alpha<=t+1", corona_independence},
        {"tait_saturated", "triangle-saturated arrangements are 3-colourable via the cubic premedial", tait_saturated},
        {"intersecting_bound", "intersecting arrangements satisfy chi_f<=3+6/(3n-2)", intersecting_bound},
        {"bundle_intersecting", "parallel triple plus grid replacement keeps a 3-colourable intersecting arrangement", bundle_intersecting},
        {"crowning18_base", "18-vertex 4-regular planar graph with chi=4, chi_f=3, 4-edge-critical", crowning18_base},
        {"crowning_preserves", "crowning at a facial triangle keeps 4-edge-criticality and chi_f=3", crowning_preserves},
        {"bfold_fig1b", "vertex-critical construction gives a 19-fold colouring with at most 60 colours", bfold_fig1b},
        {"circle_bipartite", "the circle subgraph of every curve is bipartite", circle_bipartite},
        {"lp_oracle", "column generation matches the dense LP over all maximal independent sets", lp_oracle},
        {"antipodal_great", "great-circle arrangements: antipodal 3-colouring search terminates", antipodal_great},
    };
    return checks;
}

/// Runs the acceptance checks in order. A check that throws fails with the
/// error as its computed value.
inline VerificationReport verify_suite(const std::string& scope, const std::filesystem::path& dir = PCARR_FIXTURE_DIR,
                                       const std::function<void(const CheckResult&)>& progress = {}) {
    if (scope != "fast" && scope != "all") throw Error(Errc::BadFormat, "scope must be fast or all");
    detail::SuiteContext cx{dir, scope == "all", std::nullopt};
    VerificationReport rep{scope, {}};
    for (const auto& spec : acceptance_checks()) {
        CheckResult r{spec.id, spec.citation};
        auto t0 = std::chrono::steady_clock::now();
        try {
            spec.run(cx, r);
        } catch (const std::exception& e) {
            r.pass = false;
            r.computed = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (progress) progress(r);
        rep.checks.push_back(std::move(r));
    }
    return rep;
}

} // namespace pcarr
