#pragma once

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pcarr/arrangement.hpp"
#include "pcarr/coloring.hpp"
#include "pcarr/constructions.hpp"
#include "pcarr/error.hpp"
#include "pcarr/fractional.hpp"
#include "pcarr/plane_map.hpp"

#ifndef PCARR_FIXTURE_DIR
#define PCARR_FIXTURE_DIR "fixtures"
#endif

namespace pcarr {

inline const std::vector<std::string>& fixture_ids() {
    static const std::vector<std::string> ids = {"two_circles", "k4",      "octahedron", "cube",     "cube_medial",
                                                 "fig1b",       "fig4_n7", "fig4_n9",    "fig4_n10", "fig6a",
                                                 "fig8",        "fig10",   "fig11",      "koester",  "crowning18"};
    return ids;
}

/// One `key: value tag` line of a .expected file. The tag says where the
/// value comes from: stated (a figure or claim), computed, or trivial.
struct Expectation {
    std::string key, value, tag;
};

struct Fixture {
    std::string id;
    std::string source;
    PlaneMap map;
    std::vector<Expectation> expected;

    const Expectation* find(const std::string& key) const {
        for (const auto& e : expected)
            if (e.key == key) return &e;
        return nullptr;
    }
};

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error(Errc::BadFormat, "cannot read " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline std::vector<Expectation> parse_expected(const std::string& text, std::string* source = nullptr) {
    std::vector<Expectation> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw Error(Errc::BadFormat, "bad expected line '" + line + "'");
        std::string key = line.substr(0, colon);
        std::string rest = line.substr(colon + 1);
        if (key == "source") {
            if (source) *source = rest.substr(rest.find_first_not_of(' '));
            continue;
        }
        std::istringstream r(rest);
        Expectation e{key, "", ""};
        if (!(r >> e.value >> e.tag)) throw Error(Errc::BadFormat, "expected line needs value and tag: '" + line + "'");
        if (e.tag != "stated" && e.tag != "computed" && e.tag != "trivial")
            throw Error(Errc::BadFormat, "unknown tag '" + e.tag + "'");
        out.push_back(std::move(e));
    }
    return out;
}

inline Fixture load_fixture(const std::string& id, const std::filesystem::path& dir = PCARR_FIXTURE_DIR) {
    const auto& ids = fixture_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw Error(Errc::UnknownFixture, "no fixture '" + id + "'");
    auto map_path = dir / (id + ".map");
    if (!std::filesystem::exists(map_path)) throw Error(Errc::UnknownFixture, "fixture '" + id + "' has no payload in " + dir.string());
    Fixture f{id, "", parse_map(read_file(map_path)), {}};
    auto exp_path = dir / (id + ".expected");
    if (std::filesystem::exists(exp_path)) f.expected = parse_expected(read_file(exp_path), &f.source);
    return f;
}

/// Computes the value of one expected key, as text comparable with the
/// .expected file.
inline std::string fixture_fact(const PlaneMap& m, const std::string& key) {
    auto b = [](bool x) { return std::string(x ? "true" : "false"); };
    if (key == "vertices") return std::to_string(m.vertex_count());
    if (key == "edges") return std::to_string(m.edge_count());
    if (key == "faces") return std::to_string(m.face_count());
    auto st = analyze(m);
    if (key == "two_connected") return b(st.two_connected);
    if (key == "bridgeless") return b(st.bridgeless);
    Graph g = simple_graph(m);
    if (key == "chi") return std::to_string(chromatic_number(g).k);
    if (key == "chi_f") return to_pq(fractional_chromatic(g).value);
    if (key == "alpha") return std::to_string(independence_number(g).weight);
    if (key == "edge_critical") return b(chromatic_number(g).k == 4 && criticality(g, CriticalMode::Edge).critical);
    if (key == "vertex_critical") return b(chromatic_number(g).k == 4 && criticality(g, CriticalMode::Vertex).critical);
    if (key == "facial_triangle") return b(has_facial_triangle(m));
    if (key == "cubic_premedial") {
        auto fc = face_two_coloring(m);
        for (int cls : {0, 1}) {
            auto pm = premedial(m, fc, cls).map;
            bool cubic = true;
            for (int v = 0; v < pm.vertex_count(); ++v) cubic = cubic && pm.degree(v) == 3;
            if (cubic) return "true";
        }
        return "false";
    }
    if (key == "tait_premedial") {
        try {
            tait_vertex_coloring(m);
            return "true";
        } catch (const Error&) {
            return "false";
        }
    }
    Arrangement a = as_arrangement(m);
    auto p = properties(a);
    if (key == "curves") return std::to_string(a.curve_count());
    if (key == "intersecting") return b(p.intersecting);
    if (key == "great") return b(p.great);
    if (key == "triangle_saturated") return b(p.triangle_saturated);
    if (key == "diamond_free") return b(p.diamond_free);
    if (key == "antipodal") {
        try {
            antipodal_involution(a);
            return "automorphism";
        } catch (const Error& e) {
            return std::string(errc_name(e.code()));
        }
    }
    if (key == "antipodal_three_coloring") return b(antipodal_three_coloring(a).has_value());
    throw Error(Errc::BadFormat, "unknown expected key '" + key + "'");
}

} // namespace pcarr
