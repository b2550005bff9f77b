#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pcarr/arrangement.hpp"
#include "pcarr/coloring.hpp"
#include "pcarr/error.hpp"
#include "pcarr/plane_map.hpp"

namespace pcarr {

// ---------------------------------------------------------------- signed sequences

/// Arrangement as cyclic vertex sequences per curve plus, per vertex, the
/// two curves (c1 < c2) and an orientation: sign +1 means the
/// counterclockwise rotation is c1 forward, c2 forward, c1 back, c2 back.
/// Vertex ids are arbitrary nonnegative integers; to_map numbers map vertices
/// by increasing id.
struct SignedSequences {
    std::vector<std::vector<int>> seqs;
    std::map<int, std::pair<int, int>> curves_at;
    std::map<int, int> sign;

    /// Orientation of the ordered pair (x, y) at v.
    int orientation(int v, int x) const {
        int s = sign.at(v);
        return curves_at.at(v).first == x ? s : -s;
    }

    void set_vertex(int v, int x, int y, int o) {
        curves_at[v] = {std::min(x, y), std::max(x, y)};
        sign[v] = x < y ? o : -o;
    }

    static SignedSequences of(const Arrangement& a) {
        SignedSequences s;
        const PlaneMap& m = a.map();
        std::vector<std::vector<Dart>> fwd(m.vertex_count(), std::vector<Dart>(a.curve_count(), -1));
        for (int c = 0; c < a.curve_count(); ++c) {
            s.seqs.push_back(a.curve_vertices(c));
            for (Dart d : a.curve_darts(c)) fwd[m.vertex_of(d)][c] = d;
        }
        for (int v = 0; v < m.vertex_count(); ++v) {
            auto [c1, c2] = a.curves_at(v);
            s.curves_at[v] = {c1, c2};
            s.sign[v] = m.next(fwd[v][c1]) == fwd[v][c2] ? 1 : -1;
        }
        return s;
    }

    /// Dart 4i + slot at the i-th vertex: slot 0 c1 forward, 1 c2 forward,
    /// 2 c1 back, 3 c2 back.
    PlaneMap to_map() const {
        std::map<int, int> index;
        for (const auto& [v, cc] : curves_at) index.emplace(v, static_cast<int>(index.size()));
        const int n = 4 * static_cast<int>(index.size());
        std::vector<Dart> twin(n, -1), next(n, -1);
        std::vector<int> curve(n, -1);
        auto dart = [&](int v, int c, bool fwd) {
            const auto& cc = curves_at.at(v);
            return 4 * index.at(v) + (c == cc.first ? 0 : 1) + (fwd ? 0 : 2);
        };
        for (const auto& [v, cc] : curves_at) {
            int b = 4 * index.at(v);
            std::array<int, 4> order = sign.at(v) > 0 ? std::array<int, 4>{b, b + 1, b + 2, b + 3} : std::array<int, 4>{b, b + 3, b + 2, b + 1};
            for (int i = 0; i < 4; ++i) next[order[i]] = order[(i + 1) % 4];
        }
        for (int c = 0; c < static_cast<int>(seqs.size()); ++c) {
            const auto& s = seqs[c];
            for (std::size_t i = 0; i < s.size(); ++i) {
                Dart d = dart(s[i], c, true), e = dart(s[(i + 1) % s.size()], c, false);
                twin[d] = e;
                twin[e] = d;
                curve[d] = curve[e] = c;
            }
        }
        return PlaneMap(std::move(twin), std::move(next), std::move(curve));
    }
};

// ---------------------------------------------------------------- corona

/// The ten edges leaving the pentagon's corners in the order the new curve
/// meets them.
inline std::vector<Dart> corona_crossings(const PlaneMap& m, int pentagon) {
    if (pentagon < 0 || pentagon >= m.face_count()) throw Error(Errc::BadIndex, "no face " + std::to_string(pentagon));
    const auto& ds = m.face_darts(pentagon);
    if (ds.size() != 5) throw Error(Errc::NotPentagon, "face " + std::to_string(pentagon) + " has " + std::to_string(ds.size()) + " sides");
    for (Dart d : ds) {
        int f = m.face_of(m.twin(d));
        if (m.face_size(f) != 3) throw Error(Errc::NeighborNotTriangle, "face across edge " + std::to_string(m.edge_of(d)) + " is not a triangle");
    }
    std::vector<Dart> out;
    std::set<int> edges;
    for (int j = 0; j < 5; ++j) {
        Dart o1 = m.next(ds[(j + 1) % 5]);
        Dart o2 = m.next(o1);
        for (Dart d : {o2, o1}) {
            if (!edges.insert(m.edge_of(d)).second) throw Error(Errc::SharedOutwardEdge, "outward edge " + std::to_string(m.edge_of(d)) + " repeats");
            out.push_back(d);
        }
    }
    return out;
}

inline std::pair<Arrangement, ConstructionReceipt> corona(const Arrangement& a, int pentagon) {
    auto crossings = corona_crossings(a.map(), pentagon);
    auto [m, receipt] = insert_curve(a.map(), crossings);
    receipt.operation = "corona";
    return {Arrangement(std::move(m)), std::move(receipt)};
}

// ---------------------------------------------------------------- crowning

/// Replaces an odd face u_0..u_{k-1} by a crown of 3k new vertices: a ring
/// b_j, g_j around the face (u_j joined to both), an inner k-cycle a_j, and
/// a_j joined to g_j and b_{j+1}. The old face edges are cut open: the dart
/// u_j -> u_{j+1} now ends at g_j and its twin at b_{j+1}.
inline std::pair<PlaneMap, ConstructionReceipt> crown(const PlaneMap& m, int face) {
    require_four_regular(m);
    if (face < 0 || face >= m.face_count()) throw Error(Errc::BadIndex, "no face " + std::to_string(face));
    const auto& ds = m.face_darts(face);
    const int k = static_cast<int>(ds.size());
    if (k % 2 == 0 || k < 3) throw Error(Errc::EvenFace, "face " + std::to_string(face) + " has " + std::to_string(k) + " sides");
    std::set<int> us;
    for (Dart d : ds) us.insert(m.vertex_of(d));
    if (static_cast<int>(us.size()) != k) throw Error(Errc::BadFormat, "face boundary repeats a vertex");

    const int n = m.dart_count();
    // new vertex ids: beta_j = j, gamma_j = k + j, a_j = 2k + j; u_j = 3k + j
    auto beta = [&](int j) { return ((j % k) + k) % k; };
    auto gamma = [&](int j) { return k + ((j % k) + k) % k; };
    auto inner = [&](int j) { return 2 * k + ((j % k) + k) % k; };
    auto u = [&](int j) { return 3 * k + ((j % k) + k) % k; };
    std::vector<std::array<double, 2>> pos(4 * k);
    const double pi = std::numbers::pi;
    const double eps = pi / (3.0 * k);
    for (int j = 0; j < k; ++j) {
        double t = -2.0 * pi * j / k;
        pos[u(j)] = {std::cos(t), std::sin(t)};
        pos[beta(j)] = {0.7 * std::cos(t + eps), 0.7 * std::sin(t + eps)};
        pos[gamma(j)] = {0.7 * std::cos(t - eps), 0.7 * std::sin(t - eps)};
        pos[inner(j)] = {0.4 * std::cos(t - pi / k), 0.4 * std::sin(t - pi / k)};
    }
    std::vector<std::pair<int, int>> edges; // new-vertex edges, both ends new or u-to-new
    for (int j = 0; j < k; ++j) {
        edges.emplace_back(u(j), beta(j));
        edges.emplace_back(u(j), gamma(j));
        edges.emplace_back(beta(j), gamma(j));
        edges.emplace_back(gamma(j), beta(j + 1));
        edges.emplace_back(inner(j), gamma(j));
        edges.emplace_back(inner(j), beta(j + 1));
        edges.emplace_back(inner(j), inner(j + 1));
    }

    std::vector<Dart> twin(m.twins()), next(m.nexts());
    std::map<std::pair<int, int>, Dart> dart; // (from, to) among crown-local ids
    for (int j = 0; j < k; ++j) {
        dart[{u(j), beta(j)}] = m.twin(ds[(j + k - 1) % k]);
        dart[{u(j), gamma(j)}] = ds[j];
    }
    int fresh = n;
    for (auto [x, y] : edges) {
        for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}})
            if (!dart.count({p, q})) dart[{p, q}] = fresh++;
    }
    twin.resize(fresh);
    next.resize(fresh);
    for (auto [x, y] : edges) {
        Dart d = dart[{x, y}], e = dart[{y, x}];
        twin[d] = e;
        twin[e] = d;
    }
    std::vector<std::vector<int>> nb(3 * k);
    for (auto [x, y] : edges) {
        if (x < 3 * k) nb[x].push_back(y);
        if (y < 3 * k) nb[y].push_back(x);
    }
    for (int v = 0; v < 3 * k; ++v) {
        auto& ns = nb[v];
        std::sort(ns.begin(), ns.end(), [&](int p, int q) {
            return std::atan2(pos[p][1] - pos[v][1], pos[p][0] - pos[v][0]) < std::atan2(pos[q][1] - pos[v][1], pos[q][0] - pos[v][0]);
        });
        for (std::size_t i = 0; i < ns.size(); ++i) next[dart[{v, ns[i]}]] = dart[{v, ns[(i + 1) % ns.size()]}];
    }
    PlaneMap out(std::move(twin), std::move(next));
    std::vector<Dart> dart_map(n);
    for (Dart d = 0; d < n; ++d) dart_map[d] = d;
    auto receipt = make_receipt("crown", m, out, std::move(dart_map));
    return {std::move(out), std::move(receipt)};
}

inline bool has_facial_triangle(const PlaneMap& m) {
    for (int f = 0; f < m.face_count(); ++f)
        if (m.face_size(f) == 3) return true;
    return false;
}

// ---------------------------------------------------------------- parallel triples

/// Output of add_parallel_triple. Old vertices keep their ids; crossing j
/// of the base curve is tracks[j] = (v, v', v'') from inside out.
struct BundleResult {
    Arrangement arrangement;
    ConstructionReceipt receipt;
    int base = 0, middle = 0, outer = 0; // curve ids C, C', C''
    std::vector<std::array<int, 3>> tracks;
    std::vector<int> partner;      // curve crossing the bundle at track j
    std::vector<int> orientation;  // orientation of (C, partner) at track j
    bool inner_left = true;        // interior lies left of C's direction
    std::vector<int> inside, outside; // input vertices by side of C
    SignedSequences before;        // input with the new vertices added, no sites yet
    std::vector<std::vector<int>> base_seqs;
};

inline BundleResult add_parallel_triple(const Arrangement& a, int c, int outer_face = -1) {
    const PlaneMap& m = a.map();
    if (c < 0 || c >= a.curve_count()) throw Error(Errc::BadIndex, "no curve " + std::to_string(c));
    if (a.curve_darts(c).empty()) throw Error(Errc::IsolatedCurve, "curve " + std::to_string(c) + " has no crossings");
    if (outer_face < 0) outer_face = m.face_of(0);
    auto sp = split_by_curve(a, c, outer_face);
    // sides of C: the face right of C's first dart is outside iff it shares
    // the outer face's component
    std::vector<char> outside_face(m.face_count(), 0);
    {
        std::vector<int> stack{outer_face};
        outside_face[outer_face] = 1;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (Dart d : m.face_darts(f)) {
                if (m.curve_of(d) == c) continue;
                int g = m.face_of(m.twin(d));
                if (!outside_face[g]) {
                    outside_face[g] = 1;
                    stack.push_back(g);
                }
            }
        }
    }
    const auto& cd = a.curve_darts(c);
    bool outer_right = outside_face[m.face_of(cd[0])];

    BundleResult r{a, {}, c, a.curve_count(), a.curve_count() + 1, {}, {}, {}, outer_right, sp.inside, sp.outside, {}, {}};
    SignedSequences s = SignedSequences::of(a);
    const int V = m.vertex_count();
    const int k = static_cast<int>(cd.size());
    std::vector<int> mid_seq, out_seq;
    for (int j = 0; j < k; ++j) {
        Dart x = cd[j];
        int v = m.vertex_of(x);
        int vp = V + j, vpp = V + k + j;
        Dart across = m.next(x);
        int d = m.curve_of(across);
        int o = s.orientation(v, c);
        Dart outward = outer_right ? m.prev(x) : m.next(x);
        // D's sequence: v, v', v'' from inside out
        auto& dseq = s.seqs[d];
        auto it = std::find(dseq.begin(), dseq.end(), v);
        bool d_forward_outward = std::find(a.curve_darts(d).begin(), a.curve_darts(d).end(), outward) != a.curve_darts(d).end();
        if (d_forward_outward) dseq.insert(it + 1, {vp, vpp});
        else dseq.insert(it, {vpp, vp});
        s.set_vertex(vp, r.middle, d, o);
        s.set_vertex(vpp, r.outer, d, o);
        mid_seq.push_back(vp);
        out_seq.push_back(vpp);
        r.tracks.push_back({v, vp, vpp});
        r.partner.push_back(d);
        r.orientation.push_back(o);
    }
    s.seqs.push_back(mid_seq);
    s.seqs.push_back(out_seq);
    r.before = s;
    r.base_seqs = s.seqs;
    PlaneMap out = s.to_map();
    r.arrangement = Arrangement(out);
    r.receipt = make_receipt("add_parallel_triple", m, out, {}, r.middle);
    return r;
}

/// phi' on the bundle output: v, v', v'' get phi(v), phi(v)+1, phi(v)+2;
/// inside vertices keep their colour, outside ones shift by 2 (mod 3).
inline VertexColoring lift_coloring(const Arrangement& a, const VertexColoring& phi, const BundleResult& b) {
    Graph g = simple_graph(a.map());
    if (static_cast<int>(phi.color.size()) != g.size()) throw Error(Errc::NotProper, "colouring has wrong length");
    for (int c : phi.color)
        if (c < 0 || c > 2) throw Error(Errc::NotThreeColors, "colour " + std::to_string(c) + " outside 0..2");
    if (!is_proper(g, phi.color)) throw Error(Errc::NotProper, "input colouring is not proper");
    VertexColoring out{3, std::vector<int>(b.arrangement.vertex_count(), -1)};
    for (int v : b.inside) out.color[v] = phi.color[v];
    for (int v : b.outside) out.color[v] = (phi.color[v] + 2) % 3;
    for (const auto& t : b.tracks)
        for (int i = 0; i < 3; ++i) out.color[t[i]] = (phi.color[t[0]] + i) % 3;
    return out;
}

// ---------------------------------------------------------------- grid replacement

/// Edge of the base curve between tracks index and index+1 of a bundle.
struct GridSite {
    int curve = 0;
    int index = 0;
};

/// Order of the three crossings among the bundle's tracks at a site.
enum class Variant { Middle, Right };

/// At each site the three parallel curves cross pairwise once, so that
/// after two sites each pair of them crosses twice. Middle swaps tracks
/// (0,1), (1,2), (0,1); Right swaps (1,2), (0,1), (1,2).
inline std::pair<Arrangement, ConstructionReceipt> make_intersecting(const BundleResult& b, GridSite s1, GridSite s2, Variant v1, Variant v2) {
    const int k = static_cast<int>(b.tracks.size());
    for (const auto& s : {s1, s2})
        if (s.curve != b.base || s.index < 0 || s.index >= k)
            throw Error(Errc::SiteNotOnBundle, "site (" + std::to_string(s.curve) + "," + std::to_string(s.index) + ") is not on the bundle");
    if (s1.index == s2.index) throw Error(Errc::SameSite, "both sites are edge " + std::to_string(s1.index));
    if (s1.index > s2.index) {
        std::swap(s1, s2);
        std::swap(v1, v2);
    }
    SignedSequences s = b.before;
    const int curves[3] = {b.base, b.middle, b.outer};
    int next_id = 0;
    for (const auto& [v, cc] : s.curves_at) next_id = std::max(next_id, v + 1);
    std::array<std::vector<int>, 3> seq;
    std::array<int, 3> at_track = {0, 1, 2}; // at_track[p] = which of C,C',C'' runs on track p
    const int cross_o = b.inner_left ? 1 : -1;
    auto swap_tracks = [&](int p) {
        int x = at_track[p], y = at_track[p + 1];
        int v = next_id++;
        seq[x].push_back(v);
        seq[y].push_back(v);
        s.set_vertex(v, curves[x], curves[y], cross_o);
        std::swap(at_track[p], at_track[p + 1]);
    };
    auto site = [&](Variant var) {
        const std::array<int, 3> mid{0, 1, 0}, right{1, 0, 1};
        for (int p : var == Variant::Middle ? mid : right) swap_tracks(p);
    };
    for (int j = 0; j < k; ++j) {
        for (int p = 0; p < 3; ++p) {
            int v = b.tracks[j][p];
            int x = at_track[p];
            seq[x].push_back(v);
            s.set_vertex(v, curves[x], b.partner[j], b.orientation[j]);
        }
        if (j == s1.index) site(v1);
        if (j == s2.index) site(v2);
    }
    for (int i = 0; i < 3; ++i) s.seqs[curves[i]] = seq[i];
    PlaneMap out = s.to_map();
    auto receipt = make_receipt("make_intersecting", b.arrangement.map(), out, {});
    return {Arrangement(std::move(out)), std::move(receipt)};
}

/// Fills the vertices coloured -1 by exhaustive search over k colours.
inline std::optional<VertexColoring> extend_coloring(const Graph& g, VertexColoring partial, int k = 3) {
    std::vector<int> open;
    for (int v = 0; v < g.size(); ++v)
        if (partial.color[v] < 0) open.push_back(v);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == open.size()) return true;
        int v = open[i];
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int w : g.neighbors(v)) ok = ok && partial.color[w] != c;
            if (!ok) continue;
            partial.color[v] = c;
            if (rec(i + 1)) return true;
            partial.color[v] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    partial.k = k;
    return partial;
}

// ---------------------------------------------------------------- cubic graphs

inline PlaneMap k4_map() { return from_rotations({{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}}); }

/// Replaces v by a triangle; corner i keeps the i-th edge of v.
inline PlaneMap expand_vertex(const PlaneMap& h, int v) {
    for (int x = 0; x < h.vertex_count(); ++x)
        if (h.degree(x) != 3) throw Error(Errc::NotCubic, "vertex " + std::to_string(x) + " has degree " + std::to_string(h.degree(x)));
    if (v < 0 || v >= h.vertex_count()) throw Error(Errc::BadIndex, "no vertex " + std::to_string(v));
    const int n = h.dart_count();
    std::vector<Dart> twin(h.twins()), next(h.nexts());
    twin.resize(n + 6);
    next.resize(n + 6);
    const auto& xs = h.vertex_darts(v);
    // corner i: a_i = n+2i towards corner i+1, b_i = n+2i+1 towards corner i-1
    for (int i = 0; i < 3; ++i) {
        Dart a = n + 2 * i, b = a + 1;
        next[xs[i]] = a;
        next[a] = b;
        next[b] = xs[i];
        Dart bn = n + 2 * ((i + 1) % 3) + 1;
        twin[a] = bn;
        twin[bn] = a;
    }
    return PlaneMap(std::move(twin), std::move(next));
}

inline PlaneMap gen_unique3ec(const std::vector<int>& choices) {
    PlaneMap h = k4_map();
    for (int v : choices) {
        if (v < 0 || v >= h.vertex_count()) throw Error(Errc::BadIndex, "no vertex " + std::to_string(v) + " at this step");
        h = expand_vertex(h, v);
    }
    return h;
}

} // namespace pcarr
