// pcarr: command-line front end. Exit codes: 0 ok, 1 property failure,
// 2 input or usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pcarr/arrangement.hpp"
#include "pcarr/coloring.hpp"
#include "pcarr/constructions.hpp"
#include "pcarr/fixtures.hpp"
#include "pcarr/fractional.hpp"
#include "pcarr/render.hpp"
#include "pcarr/verify.hpp"

using namespace pcarr;

namespace {

PlaneMap load(const std::string& path) { return parse_map(read_file(path)); }

const char* tf(bool b) { return b ? "true" : "false"; }

void write_or_print(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::BadFormat, "cannot write " + path);
    out << text;
}

std::vector<int> ints(const std::string& csv) {
    std::vector<int> out;
    std::istringstream s(csv);
    for (std::string part; std::getline(s, part, ',');) {
        try {
            out.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw Error(Errc::BadFormat, "not an integer list: '" + csv + "'");
        }
    }
    return out;
}

int first_face(const PlaneMap& m, auto pred) {
    for (int f = 0; f < m.face_count(); ++f)
        if (pred(m.face_size(f))) return f;
    return -1;
}

int cmd_check(const std::string& file) {
    PlaneMap m = load(file);
    std::cout << analyze(m).to_text();
    bool four = true;
    for (int v = 0; v < m.vertex_count(); ++v) four = four && m.degree(v) == 4;
    std::cout << "degree_four: " << tf(four) << "\n";
    if (!four || !m.has_curves()) {
        std::cout << "arrangement: skipped\n";
        return 0;
    }
    try {
        Arrangement a = as_arrangement(m);
        std::cout << "arrangement: valid\n" << properties(a).to_text();
    } catch (const Error& e) {
        std::cout << "arrangement: invalid " << errc_name(e.code()) << "\n";
        return 1;
    }
    return 0;
}

int cmd_chromatic(const std::string& file) {
    auto c = chromatic_number(simple_graph(load(file)));
    std::cout << "chi: " << c.k << "\n" << c.to_text();
    return 0;
}

int cmd_fractional(const std::string& file, const std::string& cert_out, const std::string& cert_in) {
    Graph g = simple_graph(load(file));
    if (!cert_in.empty()) {
        auto chk = verify_certificate(g, parse_certificate(read_file(cert_in)));
        std::cout << "certificate: " << (chk.ok ? "valid" : "invalid") << "\n";
        if (!chk.ok) std::cout << "diagnostic: " << chk.diagnostic << "\n";
        return chk.ok ? 0 : 1;
    }
    auto c = fractional_chromatic(g);
    std::cout << "chi_f: " << to_pq(c.value) << "\npivots: " << c.pivots << "\npriced_columns: " << c.priced_columns << "\n";
    if (!cert_out.empty()) write_or_print(cert_out, c.to_text());
    return 0;
}

int cmd_alpha(const std::string& file) {
    auto r = independence_number(simple_graph(load(file)));
    std::cout << "alpha: " << r.weight << "\nset:";
    for (int v : r.set) std::cout << ' ' << v;
    std::cout << "\n";
    return 0;
}

int cmd_critical(const std::string& file, const std::string& mode) {
    Graph g = simple_graph(load(file));
    try {
        auto r = criticality(g, mode == "edge" ? CriticalMode::Edge : CriticalMode::Vertex);
        std::cout << "mode: " << mode << "\ncritical: " << tf(r.critical) << "\nwitnesses:";
        auto es = g.edges();
        for (int w : r.witnesses) {
            if (mode == "edge") std::cout << ' ' << es[w].first << '-' << es[w].second;
            else std::cout << ' ' << w;
        }
        std::cout << "\n";
        return 0;
    } catch (const Error& e) {
        std::cout << "critical: n/a " << e.what() << "\n";
        return 1;
    }
}

int cmd_antipodal(const std::string& file) {
    Arrangement a = as_arrangement(load(file));
    try {
        antipodal_involution(a);
        std::cout << "involution: automorphism\n";
    } catch (const Error& e) {
        std::cout << "involution: " << errc_name(e.code()) << "\n";
        return 1;
    }
    try {
        auto c = antipodal_three_coloring(a);
        std::cout << "antipodal_three_coloring: " << (c ? "exists" : "none") << "\n";
        if (c) std::cout << c->to_text();
    } catch (const Error& e) {
        std::cout << "antipodal_three_coloring: " << errc_name(e.code()) << "\n";
        return 1;
    }
    return 0;
}

int cmd_bounds(const std::string& file) {
    auto r = bound_suite(as_arrangement(load(file)));
    std::cout << r.to_text();
    return r.all_hold() ? 0 : 1;
}

int cmd_tait(const std::string& file) {
    PlaneMap m = load(file);
    try {
        auto c = tait_vertex_coloring(m);
        std::cout << "tait: proper\n" << c.to_text();
        return 0;
    } catch (const Error& e) {
        std::cout << "tait: " << errc_name(e.code()) << "\n";
        return 1;
    }
}

struct ConstructArgs {
    std::string op, file, out;
    int face = -1, curve = 0, vertex = 0, outer_face = -1;
    std::string sites, variants = "middle,right";
};

int cmd_construct(const ConstructArgs& c) {
    PlaneMap m = load(c.file);
    PlaneMap result = m;
    ConstructionReceipt receipt;
    if (c.op == "corona") {
        Arrangement a = as_arrangement(m);
        int f = c.face >= 0 ? c.face : first_face(m, [](int s) { return s == 5; });
        if (f < 0) throw Error(Errc::NotPentagon, "map has no pentagonal face");
        auto [out, r] = corona(a, f);
        result = out.map();
        receipt = r;
    } else if (c.op == "crown") {
        int f = c.face >= 0 ? c.face : first_face(m, [](int s) { return s % 2 == 1; });
        if (f < 0) throw Error(Errc::EvenFace, "map has no odd face");
        std::tie(result, receipt) = crown(m, f);
    } else if (c.op == "bundle") {
        Arrangement a = as_arrangement(m);
        auto b = add_parallel_triple(a, c.curve, c.outer_face);
        result = b.arrangement.map();
        receipt = b.receipt;
        if (!c.sites.empty()) {
            auto s = ints(c.sites);
            auto v = c.variants;
            auto variant = [](const std::string& x) {
                if (x == "middle") return Variant::Middle;
                if (x == "right") return Variant::Right;
                throw Error(Errc::BadFormat, "variant must be middle or right");
            };
            auto comma = v.find(',');
            if (s.size() != 2 || comma == std::string::npos) throw Error(Errc::BadFormat, "--sites and --variants take two values each");
            auto [out, r] = make_intersecting(b, {b.base, s[0]}, {b.base, s[1]}, variant(v.substr(0, comma)), variant(v.substr(comma + 1)));
            result = out.map();
            receipt = make_receipt("bundle+make_intersecting", m, result, {}, b.middle);
        }
    } else if (c.op == "expand") {
        result = expand_vertex(m, c.vertex);
        std::vector<Dart> dm(m.dart_count());
        for (Dart d = 0; d < m.dart_count(); ++d) dm[d] = d;
        receipt = make_receipt("expand_vertex", m, result, dm);
    } else {
        throw Error(Errc::BadFormat, "unknown construction '" + c.op + "'");
    }
    write_or_print(c.out, serialize_map(result));
    std::cout << receipt.to_text();
    return 0;
}

int cmd_render(const std::string& file, const std::string& out) {
    write_or_print(out, render_svg(load(file)));
    return 0;
}

int cmd_verify(const std::string& scope, const std::string& dir) {
    auto rep = verify_suite(scope, dir, [](const CheckResult& r) {
        std::cerr << r.id << ' ' << (r.pass ? "pass" : "fail") << ' ' << r.seconds << "s\n";
    });
    std::cout << rep.to_text();
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudocircle arrangements: plane maps, constructions and exact colouring"};
    app.require_subcommand(1);
    std::string file, out, mode = "vertex", cert_out, cert_in, scope = "fast", dir = PCARR_FIXTURE_DIR;
    ConstructArgs cons;

    auto* check = app.add_subcommand("check", "structure and arrangement report");
    check->add_option("file", file)->required();
    auto* chromatic = app.add_subcommand("chromatic", "chromatic number with a witness colouring");
    chromatic->add_option("file", file)->required();
    auto* fractional = app.add_subcommand("fractional", "exact fractional chromatic number");
    fractional->add_option("file", file)->required();
    fractional->add_option("--certificate", cert_out, "write the fraccert-v1 certificate here ('-' for stdout)");
    fractional->add_option("--verify", cert_in, "check an existing certificate instead of solving");
    auto* alpha = app.add_subcommand("alpha", "independence number");
    alpha->add_option("file", file)->required();
    auto* critical = app.add_subcommand("critical", "4-vertex- or 4-edge-criticality");
    critical->add_option("file", file)->required();
    critical->add_option("--mode", mode)->check(CLI::IsMember({"vertex", "edge"}));
    auto* antipodal = app.add_subcommand("antipodal", "antipodal involution and antipodal 3-colouring");
    antipodal->add_option("file", file)->required();
    auto* bounds = app.add_subcommand("bounds", "fractional bounds of an arrangement");
    bounds->add_option("file", file)->required();
    auto* tait = app.add_subcommand("tait", "3-colouring through a cubic premedial map");
    tait->add_option("file", file)->required();
    auto* construct = app.add_subcommand("construct", "corona | crown | bundle | expand");
    construct->add_option("op", cons.op)->required()->check(CLI::IsMember({"corona", "crown", "bundle", "expand"}));
    construct->add_option("file", cons.file)->required();
    construct->add_option("-o,--output", cons.out, "map output file (default stdout)");
    construct->add_option("--face", cons.face, "face for corona/crown");
    construct->add_option("--curve", cons.curve, "curve for bundle");
    construct->add_option("--outer-face", cons.outer_face, "outer face for bundle (default: face of dart 0)");
    construct->add_option("--sites", cons.sites, "bundle: two crossing indices i,j for grid replacement");
    construct->add_option("--variants", cons.variants, "bundle: two of middle|right");
    construct->add_option("--vertex", cons.vertex, "vertex for expand");
    auto* render = app.add_subcommand("render", "SVG drawing by Tutte embedding");
    render->add_option("file", file)->required();
    render->add_option("-o,--output", out)->required();
    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    verify->add_option("--suite", scope)->check(CLI::IsMember({"fast", "all"}));
    verify->add_option("--fixtures", dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*check) return cmd_check(file);
        if (*chromatic) return cmd_chromatic(file);
        if (*fractional) return cmd_fractional(file, cert_out, cert_in);
        if (*alpha) return cmd_alpha(file);
        if (*critical) return cmd_critical(file, mode);
        if (*antipodal) return cmd_antipodal(file);
        if (*bounds) return cmd_bounds(file);
        if (*tait) return cmd_tait(file);
        if (*construct) return cmd_construct(cons);
        if (*render) return cmd_render(file, out);
        if (*verify) return cmd_verify(scope, dir);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
