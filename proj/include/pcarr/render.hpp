#pragma once

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pcarr/plane_map.hpp"
#include "pcarr/rational.hpp"

namespace pcarr {

struct Layout {
    std::vector<std::pair<Rational, Rational>> pos;
    int outer_face = 0;
    bool degenerate = false; // two vertices share a point
};

/// Tutte barycentric embedding. The largest face (lowest id on ties) is
/// pinned to a regular polygon with rational corner coordinates; the
/// interior system is solved exactly by Gaussian elimination.
inline Layout tutte_layout(const PlaneMap& m) {
    Layout out;
    const int V = m.vertex_count();
    for (int f = 1; f < m.face_count(); ++f)
        if (m.face_size(f) > m.face_size(out.outer_face)) out.outer_face = f;
    std::vector<int> ring;
    std::vector<int> where(V, -1);
    for (Dart d : m.face_darts(out.outer_face)) {
        int v = m.vertex_of(d);
        if (where[v] < 0) {
            where[v] = static_cast<int>(ring.size());
            ring.push_back(v);
        }
    }
    out.pos.assign(V, {Rational(0), Rational(0)});
    // corners on the circle via the rational parametrisation t -> ((1-t^2)/(1+t^2), 2t/(1+t^2))
    const int k = static_cast<int>(ring.size());
    for (int i = 0; i < k; ++i) {
        double a = 3.141592653589793 * (2.0 * i / k - 1.0) / 2.0; // half-angle in (-pi/2, pi/2)
        double tan_half = std::tan(a);
        Rational t(static_cast<long long>(std::llround(tan_half * 1000)), 1000);
        Rational den = 1 + t * t;
        out.pos[ring[i]] = {(1 - t * t) / den, 2 * t / den};
    }
    std::vector<int> idx(V, -1);
    std::vector<int> free;
    for (int v = 0; v < V; ++v)
        if (where[v] < 0) {
            idx[v] = static_cast<int>(free.size());
            free.push_back(v);
        }
    const int n = static_cast<int>(free.size());
    for (int axis = 0; axis < 2; ++axis) {
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1, 0));
        for (int i = 0; i < n; ++i) {
            int v = free[i];
            for (Dart d : m.vertex_darts(v)) {
                int w = m.head(d);
                if (w == v) continue;
                a[i][i] += 1;
                if (idx[w] >= 0) a[i][idx[w]] -= 1;
                else a[i][n] += axis == 0 ? out.pos[w].first : out.pos[w].second;
            }
        }
        for (int c = 0; c < n; ++c) {
            int p = c;
            while (p < n && a[p][c] == 0) ++p;
            if (p == n) continue;
            std::swap(a[p], a[c]);
            for (int r = 0; r < n; ++r) {
                if (r == c || a[r][c] == 0) continue;
                Rational f = a[r][c] / a[c][c];
                for (int j = c; j <= n; ++j)
                    if (a[c][j] != 0) a[r][j] -= f * a[c][j];
            }
        }
        for (int i = 0; i < n; ++i) {
            Rational x = a[i][i] == 0 ? Rational(0) : a[i][n] / a[i][i];
            (axis == 0 ? out.pos[free[i]].first : out.pos[free[i]].second) = x;
        }
    }
    std::set<std::pair<Rational, Rational>> seen;
    for (const auto& p : out.pos) out.degenerate = out.degenerate || !seen.insert(p).second;
    return out;
}

inline std::string render_svg(const PlaneMap& m) {
    Layout l = tutte_layout(m);
    auto px = [](const Rational& x) { return 500.0 + 460.0 * x.convert_to<double>(); };
    std::ostringstream out;
    char buf[160];
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
    if (l.degenerate) out << "<!-- warning: degenerate layout, some vertices coincide -->\n";
    for (int e = 0; e < m.edge_count(); ++e) {
        Dart d = m.edge_dart(e);
        const auto& p = l.pos[m.vertex_of(d)];
        const auto& q = l.pos[m.head(d)];
        std::snprintf(buf, sizeof buf, "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"black\"/>\n", px(p.first),
                      1000.0 - px(p.second), px(q.first), 1000.0 - px(q.second));
        out << buf;
    }
    for (int v = 0; v < m.vertex_count(); ++v) {
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"5\" fill=\"red\"/>\n", px(l.pos[v].first),
                      1000.0 - px(l.pos[v].second));
        out << buf;
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace pcarr
