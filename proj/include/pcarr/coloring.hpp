#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "pcarr/arrangement.hpp"
#include "pcarr/error.hpp"
#include "pcarr/graph.hpp"
#include "pcarr/mwis.hpp"
#include "pcarr/plane_map.hpp"
#include "pcarr/rational.hpp"

namespace pcarr {

// ---------------------------------------------------------------- exact k-colouring

namespace detail {

/// DSATUR backtracking: most saturated vertex first, then highest degree,
/// then lowest id; colours tried in increasing order up to one above the
/// largest colour in use.
class KColorSearch {
public:
    KColorSearch(const Graph& g, int k) : g_(g), k_(k), color_(g.size(), -1), cnt_(g.size() * std::max(k, 1), 0), sat_(g.size(), 0) {}

    std::optional<std::vector<int>> solve() {
        if (g_.size() == 0) return std::vector<int>{};
        if (k_ <= 0) return std::nullopt;
        if (rec(0, -1)) return color_;
        return std::nullopt;
    }

    /// Number of proper colourings with colours 0..k-1 (no symmetry breaking).
    long long count() {
        counting_ = true;
        total_ = 0;
        rec(0, k_ - 2);
        return total_;
    }

private:
    int pick() const {
        int best = -1, bs = -1, bd = -1;
        for (int v = 0; v < g_.size(); ++v) {
            if (color_[v] >= 0) continue;
            int d = g_.degree(v);
            if (sat_[v] > bs || (sat_[v] == bs && d > bd)) {
                best = v;
                bs = sat_[v];
                bd = d;
            }
        }
        return best;
    }

    bool assign(int v, int c) {
        color_[v] = c;
        bool ok = true;
        for (int w : g_.neighbors(v)) {
            if (color_[w] >= 0) continue;
            if (cnt_[w * k_ + c]++ == 0 && ++sat_[w] == k_) ok = false;
        }
        return ok;
    }

    void unassign(int v, int c) {
        for (int w : g_.neighbors(v)) {
            if (color_[w] >= 0) continue;
            if (--cnt_[w * k_ + c] == 0) --sat_[w];
        }
        color_[v] = -1;
    }

    bool rec(int colored, int maxused) {
        if (colored == g_.size()) {
            if (counting_) {
                ++total_;
                return false;
            }
            return true;
        }
        int v = pick();
        int limit = std::min(k_ - 1, maxused + 1);
        for (int c = 0; c <= limit; ++c) {
            if (cnt_[v * k_ + c] > 0) continue;
            bool ok = assign(v, c);
            if (ok && rec(colored + 1, std::max(maxused, c))) return true;
            unassign(v, c);
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<int> color_;
    std::vector<int> cnt_;
    std::vector<int> sat_;
    bool counting_ = false;
    long long total_ = 0;
};

} // namespace detail

inline std::optional<std::vector<int>> k_coloring(const Graph& g, int k) { return detail::KColorSearch(g, k).solve(); }

inline long long count_colorings(const Graph& g, int k) { return detail::KColorSearch(g, k).count(); }

inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
    std::vector<int> color(g.size(), -1);
    for (int s = 0; s < g.size(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (int w : g.neighbors(queue[i])) {
                if (color[w] < 0) {
                    color[w] = 1 - color[queue[i]];
                    queue.push_back(w);
                } else if (color[w] == color[queue[i]]) {
                    return std::nullopt;
                }
            }
    }
    return color;
}

struct VertexColoring {
    int k = 0;
    std::vector<int> color;

    std::string to_text() const {
        std::ostringstream out;
        out << "coloring-v1 " << k << "\n";
        for (std::size_t v = 0; v < color.size(); ++v) out << v << ' ' << color[v] << "\n";
        return out.str();
    }
};

/// Exact chromatic number. The witness uses exactly chi colours and chi-1
/// colours were shown infeasible by exhaustion.
inline VertexColoring chromatic_number(const Graph& g) {
    if (g.size() == 0) return {0, {}};
    if (g.edge_count() == 0) return {1, std::vector<int>(g.size(), 0)};
    if (auto c = two_coloring(g)) return {2, *c};
    for (int k = 3;; ++k)
        if (auto c = k_coloring(g, k)) return {k, *c};
}

inline bool is_k_colorable(const Graph& g, int k) { return k_coloring(g, k).has_value(); }

// ---------------------------------------------------------------- edge colourings

/// Edge list of a multigraph; loops allowed.
struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    static Multigraph of(const PlaneMap& m) {
        Multigraph h{m.vertex_count(), {}};
        for (int e = 0; e < m.edge_count(); ++e) h.edges.emplace_back(m.vertex_of(m.edge_dart(e)), m.head(m.edge_dart(e)));
        return h;
    }

    static Multigraph of(const Graph& g) { return {g.size(), g.edges()}; }

    std::vector<int> degrees() const {
        std::vector<int> deg(n, 0);
        for (auto [u, v] : edges) {
            ++deg[u];
            ++deg[v];
        }
        return deg;
    }

    /// Edges e, f adjacent iff they share an endpoint.
    Graph line_graph() const {
        Graph l(static_cast<int>(edges.size()));
        std::vector<std::vector<int>> at(n);
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            at[edges[e].first].push_back(e);
            if (edges[e].second != edges[e].first) at[edges[e].second].push_back(e);
        }
        for (const auto& es : at)
            for (std::size_t i = 0; i < es.size(); ++i)
                for (std::size_t j = i + 1; j < es.size(); ++j) l.add_edge(es[i], es[j]);
        return l;
    }

    /// Bridges by DFS low points; parallel edges never count.
    std::vector<int> bridges() const {
        std::vector<std::vector<std::pair<int, int>>> adj(n);
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            auto [u, v] = edges[e];
            if (u == v) continue;
            adj[u].emplace_back(v, e);
            adj[v].emplace_back(u, e);
        }
        std::vector<int> disc(n, -1), low(n, 0), out;
        int timer = 0;
        for (int s = 0; s < n; ++s) {
            if (disc[s] >= 0) continue;
            std::vector<std::tuple<int, int, std::size_t>> stack{{s, -1, 0}};
            disc[s] = low[s] = timer++;
            while (!stack.empty()) {
                auto& [v, pe, i] = stack.back();
                if (i < adj[v].size()) {
                    auto [w, e] = adj[v][i++];
                    if (e == pe) continue;
                    if (disc[w] < 0) {
                        disc[w] = low[w] = timer++;
                        stack.emplace_back(w, e, 0);
                    } else {
                        low[v] = std::min(low[v], disc[w]);
                    }
                } else {
                    int child = v, edge = pe;
                    stack.pop_back();
                    if (stack.empty()) break;
                    int par = std::get<0>(stack.back());
                    low[par] = std::min(low[par], low[child]);
                    if (low[child] > disc[par]) out.push_back(edge);
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

inline void require_cubic(const Multigraph& h) {
    auto deg = h.degrees();
    for (int v = 0; v < h.n; ++v)
        if (deg[v] != 3) throw Error(Errc::NotCubic, "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]));
}

/// color[e] in {0,1,2} for each edge of h.
inline std::vector<int> edge_three_coloring(const Multigraph& h) {
    require_cubic(h);
    auto br = h.bridges();
    if (!br.empty()) {
        auto [u, v] = h.edges[br[0]];
        throw Error(Errc::Bridged, "bridge " + std::to_string(u) + "-" + std::to_string(v));
    }
    for (auto [u, v] : h.edges)
        if (u == v) throw Error(Errc::NoColoring, "loop at vertex " + std::to_string(u));
    auto c = k_coloring(h.line_graph(), 3);
    if (!c) throw Error(Errc::NoColoring, "no proper 3-edge-colouring exists");
    return *c;
}

inline long long count_edge_three_colorings(const Multigraph& h) {
    for (auto [u, v] : h.edges)
        if (u == v) return 0;
    return count_colorings(h.line_graph(), 3);
}

inline bool is_proper_edge_coloring(const Multigraph& h, const std::vector<int>& ec) {
    if (ec.size() != h.edges.size()) return false;
    std::vector<std::set<int>> seen(h.n);
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        auto [u, v] = h.edges[e];
        if (ec[e] < 0 || ec[e] > 2 || u == v) return false;
        if (!seen[u].insert(ec[e]).second || !seen[v].insert(ec[e]).second) return false;
    }
    return true;
}

/// Each union of two colour classes is a single spanning cycle.
inline bool trihamiltonian(const Multigraph& h, const std::vector<int>& ec) {
    if (!is_proper_edge_coloring(h, ec)) throw Error(Errc::NotProper, "edge colouring is not proper");
    for (int skip = 0; skip < 3; ++skip) {
        std::vector<std::vector<int>> adj(h.n);
        for (std::size_t e = 0; e < h.edges.size(); ++e)
            if (ec[e] != skip) {
                adj[h.edges[e].first].push_back(h.edges[e].second);
                adj[h.edges[e].second].push_back(h.edges[e].first);
            }
        std::vector<char> seen(h.n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != h.n) return false;
        for (int v = 0; v < h.n; ++v)
            if (adj[v].size() != 2) return false;
    }
    return true;
}

// ---------------------------------------------------------------- Tait transfer

/// A 3-colouring of a 4-regular map from a 3-edge-colouring of a cubic
/// premedial map: each vertex of g is an edge of the premedial.
inline VertexColoring tait_vertex_coloring(const PlaneMap& g) {
    require_four_regular(g);
    auto fc = face_two_coloring(g);
    for (int cls : {0, 1}) {
        auto pm = premedial(g, fc, cls);
        bool cubic = true;
        for (int v = 0; v < pm.map.vertex_count(); ++v) cubic = cubic && pm.map.degree(v) == 3;
        if (!cubic) continue;
        auto h = Multigraph::of(pm.map);
        if (!h.bridges().empty()) throw Error(Errc::BridgedPremedial, "cubic premedial map has a bridge");
        auto ec = edge_three_coloring(h);
        VertexColoring out{3, std::vector<int>(g.vertex_count(), -1)};
        for (int e = 0; e < pm.map.edge_count(); ++e) out.color[pm.g_vertex_of_edge[e]] = ec[e];
        if (!is_proper(simple_graph(g), out.color)) throw Error(Errc::NotProper, "transferred colouring is not proper");
        return out;
    }
    throw Error(Errc::NoCubicPremedial, "neither face class gives a cubic premedial map");
}

// ---------------------------------------------------------------- criticality

struct Criticality {
    bool critical = false;
    /// Vertices or edges whose removal leaves the graph 4-chromatic.
    std::vector<int> witnesses;
};

namespace detail {

template <class F>
std::vector<char> parallel_flags(int count, F&& f) {
    std::vector<char> out(count, 0);
    std::atomic<int> next{0};
    unsigned hw = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < hw; ++t)
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) out[i] = f(i) ? 1 : 0;
        });
    for (auto& t : pool) t.join();
    return out;
}

} // namespace detail

enum class CriticalMode { Vertex, Edge };

/// Requires chi(g) = 4. Edge witnesses index g.edges().
inline Criticality criticality(const Graph& g, CriticalMode mode) {
    if (chromatic_number(g).k != 4) throw Error(Errc::NotFourChromatic, "graph is not 4-chromatic");
    Criticality r;
    if (mode == CriticalMode::Vertex) {
        auto ok = detail::parallel_flags(g.size(), [&](int v) { return is_k_colorable(g.without_vertex(v), 3); });
        for (int v = 0; v < g.size(); ++v)
            if (!ok[v]) r.witnesses.push_back(v);
    } else {
        auto es = g.edges();
        auto ok = detail::parallel_flags(static_cast<int>(es.size()),
                                         [&](int i) { return is_k_colorable(g.without_edge(es[i].first, es[i].second), 3); });
        for (int i = 0; i < static_cast<int>(es.size()); ++i)
            if (!ok[i]) r.witnesses.push_back(i);
    }
    r.critical = r.witnesses.empty();
    return r;
}

// ---------------------------------------------------------------- antipodal colourings

/// Proper 3-colouring constant on antipodal pairs, or nullopt if none.
inline std::optional<VertexColoring> antipodal_three_coloring(const Arrangement& a) {
    std::vector<int> pair;
    try {
        pair = antipodal_involution(a);
    } catch (const Error& e) {
        throw Error(Errc::NoInvolution, e.what());
    }
    Graph g = simple_graph(a.map());
    for (int v = 0; v < g.size(); ++v)
        if (g.adjacent(v, pair[v])) throw Error(Errc::AdjacentAntipodes, "vertex " + std::to_string(v) + " is adjacent to its antipode");
    std::vector<int> cls(g.size(), -1), rep;
    for (int v = 0; v < g.size(); ++v)
        if (cls[v] < 0) {
            cls[v] = cls[pair[v]] = static_cast<int>(rep.size());
            rep.push_back(v);
        }
    Graph q(static_cast<int>(rep.size()));
    for (auto [u, v] : g.edges()) q.add_edge(cls[u], cls[v]);
    auto c = k_coloring(q, 3);
    if (!c) return std::nullopt;
    VertexColoring out{3, std::vector<int>(g.size())};
    for (int v = 0; v < g.size(); ++v) out.color[v] = (*c)[cls[v]];
    return out;
}

// ---------------------------------------------------------------- b-fold colourings

/// sets[v] holds b colours from 1..m.
struct BFoldColoring {
    int b = 0;
    int m = 0;
    std::vector<std::vector<int>> sets;

    std::string to_text() const {
        std::ostringstream out;
        out << "bfold-v1 " << b << ' ' << m << "\n";
        for (std::size_t v = 0; v < sets.size(); ++v) {
            out << v << ' ';
            for (std::size_t i = 0; i < sets[v].size(); ++i) out << (i ? "," : "") << sets[v][i];
            out << "\n";
        }
        return out.str();
    }
};

inline bool is_valid_bfold(const Graph& g, const BFoldColoring& bf) {
    if (static_cast<int>(bf.sets.size()) != g.size()) return false;
    for (const auto& s : bf.sets) {
        if (static_cast<int>(s.size()) != bf.b) return false;
        if (std::set<int>(s.begin(), s.end()).size() != s.size()) return false;
        for (int c : s)
            if (c < 1 || c > bf.m) return false;
    }
    for (auto [u, v] : g.edges())
        for (int c : bf.sets[u])
            if (std::find(bf.sets[v].begin(), bf.sets[v].end(), c) != bf.sets[v].end()) return false;
    return true;
}

/// (v-1)-fold colouring with 3v colours from the 3-colourings of all
/// single-vertex deletions. Colour 3x + c + 1 is colour c of the colouring
/// of g - x.
inline BFoldColoring bfold_from_critical(const Graph& g) {
    const int n = g.size();
    if (chromatic_number(g).k != 4) throw Error(Errc::NotVertexCritical, "graph is not 4-chromatic");
    std::vector<std::vector<int>> per(n);
    std::vector<int> bad;
    for (int x = 0; x < n; ++x) {
        auto c = k_coloring(g.without_vertex(x), 3);
        if (!c) bad.push_back(x);
        else per[x] = *c;
    }
    if (!bad.empty()) {
        std::string list;
        for (int x : bad) list += (list.empty() ? "" : ",") + std::to_string(x);
        throw Error(Errc::NotVertexCritical, "deleting vertex " + list + " leaves a 4-chromatic graph");
    }
    BFoldColoring bf{n - 1, 3 * n, std::vector<std::vector<int>>(n)};
    for (int w = 0; w < n; ++w)
        for (int x = 0; x < n; ++x)
            if (x != w) bf.sets[w].push_back(3 * x + per[x][w - (w > x)] + 1);
    return bf;
}

// ---------------------------------------------------------------- sides of a curve

/// Partition of the vertices by a curve C: on C, inside, outside. Inside is
/// the side not containing the outer face.
struct InteriorExteriorSplit {
    int curve = 0;
    std::vector<int> on_curve, inside, outside;
    std::vector<int> disjoint_curves_vertices; // D_C
};

inline InteriorExteriorSplit split_by_curve(const Arrangement& a, int c, int outer_face) {
    const PlaneMap& m = a.map();
    std::vector<int> comp(m.face_count(), -1);
    int ncomp = 0;
    for (int s = 0; s < m.face_count(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (Dart d : m.face_darts(f)) {
                if (m.curve_of(d) == c) continue;
                int g = m.face_of(m.twin(d));
                if (comp[g] < 0) {
                    comp[g] = ncomp;
                    stack.push_back(g);
                }
            }
        }
        ++ncomp;
    }
    InteriorExteriorSplit s;
    s.curve = c;
    int outer = comp[outer_face];
    for (int v = 0; v < m.vertex_count(); ++v) {
        auto [c1, c2] = a.curves_at(v);
        if (c1 == c || c2 == c) {
            s.on_curve.push_back(v);
            continue;
        }
        if (comp[m.face_of(m.vertex_darts(v)[0])] == outer) s.outside.push_back(v);
        else s.inside.push_back(v);
        if (a.crossing_count(c, c1) == 0 || a.crossing_count(c, c2) == 0) s.disjoint_curves_vertices.push_back(v);
    }
    return s;
}

// ---------------------------------------------------------------- independent sets from a curve split

struct Claim3Result {
    std::vector<int> set;
    Rational weight;
    Rational bound;        // (1/3 - 2/(9n)) w(V)
    bool min_weight_curve = false;
    int sets_examined = 0;
};

/// Best of the 18 sets I_i + J_j + X^k built from exact 3-colourings of the
/// inside and outside of C and the bipartition of G[V_C].
inline Claim3Result claim3_independent_set(const Arrangement& a, int c, const std::vector<Rational>& w, int outer_face = -1) {
    if (!a.is_intersecting()) throw Error(Errc::NotIntersecting, "arrangement is not intersecting");
    const PlaneMap& m = a.map();
    if (outer_face < 0) outer_face = m.face_of(0);
    Graph g = simple_graph(m);
    auto sp = split_by_curve(a, c, outer_face);

    auto classes = [&](const std::vector<int>& vs) {
        std::vector<std::vector<int>> out(3);
        if (vs.empty()) return out;
        auto col = k_coloring(g.induced(vs), 3);
        if (!col) throw Error(Errc::InteriorNotThreeColorable, "a side of curve " + std::to_string(c) + " is not 3-colourable");
        for (std::size_t i = 0; i < vs.size(); ++i) out[(*col)[i]].push_back(vs[i]);
        return out;
    };
    auto in = classes(sp.inside);
    auto out = classes(sp.outside);
    auto bip = two_coloring(g.induced(sp.on_curve));
    if (!bip) throw Error(Errc::NotProper, "circle subgraph of curve " + std::to_string(c) + " is not bipartite");

    Claim3Result r;
    Rational total = 0;
    for (const auto& x : w) total += x;
    const int n = a.curve_count();
    r.bound = (Rational(1, 3) - Rational(2, 9 * n)) * total;
    r.weight = -1;
    std::vector<Rational> curve_weight(n, 0);
    for (int v = 0; v < m.vertex_count(); ++v) {
        auto [c1, c2] = a.curves_at(v);
        curve_weight[c1] += w[v];
        curve_weight[c2] += w[v];
    }
    r.min_weight_curve = curve_weight[c] == *std::min_element(curve_weight.begin(), curve_weight.end());

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::vector<int> base = in[i];
            base.insert(base.end(), out[j].begin(), out[j].end());
            std::vector<char> blocked(g.size(), 0);
            for (int u : base)
                for (int x : g.neighbors(u)) blocked[x] = 1;
            for (int k = 0; k < 2; ++k) {
                std::vector<int> set = base;
                for (std::size_t t = 0; t < sp.on_curve.size(); ++t)
                    if (!blocked[sp.on_curve[t]] && (*bip)[t] == k) set.push_back(sp.on_curve[t]);
                Rational sw = 0;
                for (int v : set) sw += w[v];
                ++r.sets_examined;
                if (sw > r.weight) {
                    r.weight = sw;
                    std::sort(set.begin(), set.end());
                    r.set = set;
                }
            }
        }
    return r;
}

// ---------------------------------------------------------------- degeneracy

/// Vertices left after repeatedly deleting vertices of degree at most 2.
inline std::vector<int> two_core(const Graph& g, const std::vector<char>& removed, std::vector<int>* peel_order = nullptr) {
    std::vector<int> deg(g.size(), 0);
    std::vector<char> gone(removed);
    for (int v = 0; v < g.size(); ++v)
        if (!gone[v])
            for (int w : g.neighbors(v)) deg[v] += !gone[w];
    std::vector<int> queue;
    for (int v = 0; v < g.size(); ++v)
        if (!gone[v] && deg[v] <= 2) {
            queue.push_back(v);
            gone[v] = 2;
        }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        if (peel_order) peel_order->push_back(v);
        for (int w : g.neighbors(v))
            if (!gone[w] && --deg[w] <= 2) {
                gone[w] = 2;
                queue.push_back(w);
            }
    }
    std::vector<int> core;
    for (int v = 0; v < g.size(); ++v)
        if (!gone[v]) core.push_back(v);
    return core;
}

/// Greedy 3-colouring of g - removal along the reversed peeling order.
/// Removed vertices get colour -1.
inline VertexColoring degeneracy_three_coloring(const Graph& g, const std::vector<int>& removal) {
    std::vector<char> removed(g.size(), 0);
    for (int v : removal) removed[v] = 1;
    std::vector<int> order;
    auto core = two_core(g, removed, &order);
    if (!core.empty())
        throw Error(Errc::NotTwoDegenerate, std::to_string(core.size()) + " vertices remain after peeling");
    VertexColoring out{3, std::vector<int>(g.size(), -1)};
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        bool used[3] = {false, false, false};
        for (int w : g.neighbors(v))
            if (out.color[w] >= 0) used[out.color[w]] = true;
        int c = 0;
        while (used[c]) ++c;
        out.color[v] = c;
    }
    return out;
}

/// Searches a set with one vertex per curve whose removal leaves a
/// 2-degenerate graph: per curve, try its core vertices by decreasing core
/// degree, backtracking within a retry budget.
inline std::optional<std::vector<int>> find_degeneracy_removal(const Arrangement& a, int budget = 20000) {
    Graph g = simple_graph(a.map());
    const int n = a.curve_count();
    std::vector<char> removed(g.size(), 0);
    std::vector<int> chosen;
    int calls = 0;
    std::function<bool(int)> rec = [&](int c) -> bool {
        if (++calls > budget) return false;
        auto core = two_core(g, removed);
        if (core.empty()) return true;
        if (c == n) return false;
        std::vector<char> in_core(g.size(), 0);
        for (int v : core) in_core[v] = 1;
        std::vector<std::pair<int, int>> cand;
        for (int v : a.curve_vertices(c)) {
            if (!in_core[v]) continue;
            int d = 0;
            for (int w : g.neighbors(v)) d += in_core[w];
            cand.emplace_back(-d, v);
        }
        std::sort(cand.begin(), cand.end());
        if (cand.empty()) return rec(c + 1);
        for (auto [negd, v] : cand) {
            removed[v] = 1;
            chosen.push_back(v);
            if (rec(c + 1)) return true;
            chosen.pop_back();
            removed[v] = 0;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

} // namespace pcarr
