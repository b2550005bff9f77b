#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pcarr/error.hpp"
#include "pcarr/graph.hpp"
#include "pcarr/plane_map.hpp"
#include "pcarr/rational.hpp"

namespace pcarr {

/// A 4-regular curve-labelled plane map read as a simple arrangement of
/// pseudocircles. Curve c is walked straight ahead starting from its smallest
/// dart; curve_darts(c)[i] leaves the i-th crossing on c in walk direction.
class Arrangement {
public:
    explicit Arrangement(PlaneMap m) : map_(std::move(m)) { validate(); }

    const PlaneMap& map() const { return map_; }
    int curve_count() const { return n_; }
    int vertex_count() const { return map_.vertex_count(); }

    const std::vector<Dart>& curve_darts(int c) const { return darts_[c]; }

    std::vector<int> curve_vertices(int c) const {
        std::vector<int> out;
        for (Dart d : darts_[c]) out.push_back(map_.vertex_of(d));
        return out;
    }

    /// Cyclic sequence of the curves met along c.
    std::vector<int> partner_sequence(int c) const {
        std::vector<int> out;
        for (Dart d : darts_[c]) out.push_back(map_.curve_of(map_.next(d)));
        return out;
    }

    /// The two curves through v, smaller id first.
    std::pair<int, int> curves_at(int v) const { return at_[v]; }

    int crossing_count(int a, int b) const { return static_cast<int>(shared(a, b).size()); }

    const std::vector<int>& shared(int a, int b) const {
        static const std::vector<int> none;
        auto it = shared_.find({std::min(a, b), std::max(a, b)});
        return it == shared_.end() ? none : it->second;
    }

    /// Opposite dart at the same vertex (same curve, other direction).
    Dart opposite(Dart d) const { return map_.next(map_.next(d)); }

    bool is_intersecting() const {
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (crossing_count(a, b) != 2) return false;
        return true;
    }

private:
    void validate() {
        const PlaneMap& m = map_;
        if (!m.has_curves()) throw Error(Errc::MissingCurves, "map has no curve line");
        for (int v = 0; v < m.vertex_count(); ++v)
            if (m.degree(v) != 4)
                throw Error(Errc::NotDegreeFour, "vertex " + std::to_string(v) + " has degree " + std::to_string(m.degree(v)));
        n_ = m.curve_count();
        std::vector<int> used(n_, 0);
        for (Dart d = 0; d < m.dart_count(); ++d) used[m.curve_of(d)] = 1;
        for (int c = 0; c < n_; ++c)
            if (!used[c]) throw Error(Errc::BadFormat, "curve ids must be contiguous; id " + std::to_string(c) + " unused");

        at_.resize(m.vertex_count());
        for (int v = 0; v < m.vertex_count(); ++v) {
            const auto& ds = m.vertex_darts(v);
            int c0 = m.curve_of(ds[0]), c1 = m.curve_of(ds[1]);
            if (c0 == c1 || m.curve_of(ds[2]) != c0 || m.curve_of(ds[3]) != c1)
                throw Error(Errc::NonTransversalVertex, "rotation at vertex " + std::to_string(v) + " does not alternate two curves");
            at_[v] = {std::min(c0, c1), std::max(c0, c1)};
        }

        std::vector<int> edges_on(n_, 0);
        for (int e = 0; e < m.edge_count(); ++e) ++edges_on[m.curve_of(m.edge_dart(e))];
        darts_.assign(n_, {});
        for (Dart s = 0; s < m.dart_count(); ++s) {
            int c = m.curve_of(s);
            if (!darts_[c].empty()) continue;
            Dart d = s;
            do {
                darts_[c].push_back(d);
                d = opposite(m.twin(d));
            } while (d != s && static_cast<int>(darts_[c].size()) <= m.dart_count());
            if (static_cast<int>(darts_[c].size()) != edges_on[c])
                throw Error(Errc::CurveNotClosed, "curve " + std::to_string(c) + " is not a single closed curve");
        }

        for (int v = 0; v < m.vertex_count(); ++v) shared_[at_[v]].push_back(v);
        for (const auto& [pair, vs] : shared_)
            if (vs.size() != 2)
                throw Error(Errc::TangentOrTriplePoint, "curves " + std::to_string(pair.first) + " and " + std::to_string(pair.second) +
                                                            " meet " + std::to_string(vs.size()) + " times");
    }

    PlaneMap map_;
    int n_ = 0;
    std::vector<std::pair<int, int>> at_;
    std::vector<std::vector<Dart>> darts_;
    std::map<std::pair<int, int>, std::vector<int>> shared_;
};

inline Arrangement as_arrangement(const PlaneMap& m) { return Arrangement(m); }

/// Arrangement formed by a subset of the curves, relabelled 0..k-1 in the
/// order given. Throws Disconnected if the chosen curves do not form a
/// connected map.
inline Arrangement subarrangement(const Arrangement& a, const std::vector<int>& curves) {
    const PlaneMap& m = a.map();
    std::vector<int> relabel(a.curve_count(), -1);
    for (int i = 0; i < static_cast<int>(curves.size()); ++i) relabel[curves[i]] = i;
    auto kept_vertex = [&](int v) {
        auto [c1, c2] = a.curves_at(v);
        return relabel[c1] >= 0 && relabel[c2] >= 0;
    };
    std::vector<int> id(m.dart_count(), -1);
    int k = 0;
    for (Dart d = 0; d < m.dart_count(); ++d)
        if (kept_vertex(m.vertex_of(d))) id[d] = k++;
    if (k == 0) throw Error(Errc::Disconnected, "chosen curves have no crossings");
    std::vector<Dart> twin(k), next(k);
    std::vector<int> curve(k);
    for (Dart d = 0; d < m.dart_count(); ++d)
        if (id[d] >= 0) {
            next[id[d]] = id[m.next(d)];
            curve[id[d]] = relabel[m.curve_of(d)];
        }
    for (int c : curves) {
        std::vector<Dart> kept;
        for (Dart d : a.curve_darts(c))
            if (kept_vertex(m.vertex_of(d))) kept.push_back(d);
        for (std::size_t i = 0; i < kept.size(); ++i) {
            Dart fwd = id[kept[i]];
            Dart back = id[a.opposite(kept[(i + 1) % kept.size()])];
            twin[fwd] = back;
            twin[back] = fwd;
        }
    }
    return Arrangement(PlaneMap(std::move(twin), std::move(next), std::move(curve)));
}

// ---------------------------------------------------------------- predicates

inline bool is_great_by_periodicity(const Arrangement& a) {
    if (!a.is_intersecting()) return false;
    const int n = a.curve_count();
    for (int c = 0; c < n; ++c) {
        auto ps = a.partner_sequence(c);
        for (int i = 0; i < n - 1; ++i)
            if (ps[i] != ps[i + n - 1]) return false;
    }
    return true;
}

/// Every three curves span a subarrangement with triangular faces only.
inline bool is_great_by_triples(const Arrangement& a) {
    if (!a.is_intersecting()) return false;
    const int n = a.curve_count();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                auto sub = subarrangement(a, {x, y, z});
                for (int f = 0; f < sub.map().face_count(); ++f)
                    if (sub.map().face_size(f) != 3) return false;
            }
    return true;
}

/// Per edge: number of triangular faces it borders (0, 1 or 2).
inline std::vector<int> triangles_per_edge(const PlaneMap& m) {
    std::vector<int> cnt(m.edge_count(), 0);
    for (int f = 0; f < m.face_count(); ++f)
        if (m.face_size(f) == 3)
            for (Dart d : m.face_darts(f)) ++cnt[m.edge_of(d)];
    return cnt;
}

/// Class-based test: the face class holding a triangle consists of
/// triangles only. Both classes all-triangles counts as saturated.
inline bool is_triangle_saturated(const PlaneMap& m) {
    auto fc = face_two_coloring(m);
    for (int cls : {0, 1}) {
        bool any = false, all = true;
        for (int f : fc.faces_of(cls)) {
            if (m.face_size(f) == 3) any = true;
            else all = false;
        }
        if (any && all) return true;
    }
    return false;
}

inline bool every_edge_on_one_triangle(const PlaneMap& m) {
    for (int c : triangles_per_edge(m))
        if (c != 1) return false;
    return true;
}

inline bool is_diamond_free(const PlaneMap& m) {
    for (int c : triangles_per_edge(m))
        if (c > 1) return false;
    return true;
}

struct ArrangementReport {
    int n = 0, V = 0, E = 0, F = 0;
    bool intersecting = false;
    bool great = false;
    bool great_by_triples = false;
    bool triangle_saturated = false;
    bool edge_on_one_triangle = false;
    bool diamond_free = false;
    std::map<int, int> face_sizes;
    std::vector<std::vector<int>> sequences;

    std::string to_text() const {
        auto b = [](bool x) { return x ? "true" : "false"; };
        std::ostringstream out;
        out << "curves: " << n << "\nV: " << V << "\nE: " << E << "\nF: " << F << "\nintersecting: " << b(intersecting)
            << "\ngreat: " << b(great) << "\ngreat_by_triples: " << b(great_by_triples)
            << "\ntriangle_saturated: " << b(triangle_saturated) << "\nedge_on_one_triangle: " << b(edge_on_one_triangle)
            << "\ndiamond_free: " << b(diamond_free) << "\nface_sizes:";
        for (auto [s, c] : face_sizes) out << ' ' << s << 'x' << c;
        out << "\n";
        for (std::size_t c = 0; c < sequences.size(); ++c) {
            out << "sequence " << c << ":";
            for (int p : sequences[c]) out << ' ' << p;
            out << "\n";
        }
        return out.str();
    }
};

inline ArrangementReport properties(const Arrangement& a) {
    const PlaneMap& m = a.map();
    ArrangementReport r;
    r.n = a.curve_count();
    r.V = m.vertex_count();
    r.E = m.edge_count();
    r.F = m.face_count();
    r.intersecting = a.is_intersecting();
    r.great = is_great_by_periodicity(a);
    r.great_by_triples = is_great_by_triples(a);
    r.triangle_saturated = is_triangle_saturated(m);
    r.edge_on_one_triangle = every_edge_on_one_triangle(m);
    r.diamond_free = is_diamond_free(m);
    for (int f = 0; f < m.face_count(); ++f) ++r.face_sizes[m.face_size(f)];
    for (int c = 0; c < r.n; ++c) r.sequences.push_back(a.partner_sequence(c));
    return r;
}

// ---------------------------------------------------------------- intersection graph

struct IntersectionGraph {
    Graph graph;
    int min_degree = 0;
    Rational density; // min_degree / n
};

inline IntersectionGraph intersection_graph(const Arrangement& a) {
    const int n = a.curve_count();
    IntersectionGraph h{Graph(n), 0, Rational(0)};
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (a.crossing_count(x, y) > 0) h.graph.add_edge(x, y);
    h.min_degree = n;
    for (int c = 0; c < n; ++c) h.min_degree = std::min(h.min_degree, h.graph.degree(c));
    h.density = Rational(h.min_degree, n);
    return h;
}

// ---------------------------------------------------------------- antipodes

/// pair[v] is the other crossing of the two curves through v.
inline std::vector<int> antipodal_involution(const Arrangement& a) {
    if (!a.is_intersecting()) throw Error(Errc::NotIntersecting, "some pair of curves does not cross");
    std::vector<int> pair(a.vertex_count());
    for (int v = 0; v < a.vertex_count(); ++v) {
        auto [c1, c2] = a.curves_at(v);
        const auto& s = a.shared(c1, c2);
        pair[v] = s[0] == v ? s[1] : s[0];
    }
    Graph g = simple_graph(a.map());
    for (auto [u, v] : g.edges())
        if (!g.adjacent(pair[u], pair[v]))
            throw Error(Errc::NotAutomorphism, "edge " + std::to_string(u) + "-" + std::to_string(v) + " maps to a non-edge");
    return pair;
}

} // namespace pcarr
