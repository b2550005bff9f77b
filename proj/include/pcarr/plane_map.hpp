#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pcarr/error.hpp"
#include "pcarr/graph.hpp"

namespace pcarr {

using Dart = int;

namespace detail {

inline std::vector<std::vector<int>> orbits(const std::vector<int>& perm, std::vector<int>& label) {
    std::vector<std::vector<int>> out;
    label.assign(perm.size(), -1);
    for (int s = 0; s < static_cast<int>(perm.size()); ++s) {
        if (label[s] >= 0) continue;
        std::vector<int> orb;
        for (int d = s; label[d] < 0; d = perm[d]) {
            label[d] = static_cast<int>(out.size());
            orb.push_back(d);
        }
        out.push_back(std::move(orb));
    }
    return out;
}

} // namespace detail

/// Connected plane map given as a rotation system. next(d) is the
/// counterclockwise successor of d around its origin; the face orbit of d is
/// d, next(twin(d)), ... and lies to the right of d.
///
/// Vertices, edges and faces are numbered in order of their smallest dart.
/// The optional curve labels are carried along but not interpreted here.
class PlaneMap {
public:
    PlaneMap() = default;

    PlaneMap(std::vector<Dart> twin, std::vector<Dart> next, std::vector<int> curve = {})
        : twin_(std::move(twin)), next_(std::move(next)), curve_(std::move(curve)) {
        validate();
    }

    int dart_count() const { return static_cast<int>(twin_.size()); }
    int vertex_count() const { return static_cast<int>(vorb_.size()); }
    int edge_count() const { return dart_count() / 2; }
    int face_count() const { return static_cast<int>(forb_.size()); }

    Dart twin(Dart d) const { return twin_[d]; }
    Dart next(Dart d) const { return next_[d]; }
    Dart prev(Dart d) const { return prev_[d]; }
    Dart phi(Dart d) const { return next_[twin_[d]]; }
    Dart phi_inv(Dart d) const { return twin_[prev_[d]]; }

    int vertex_of(Dart d) const { return vertex_[d]; }
    int head(Dart d) const { return vertex_[twin_[d]]; }
    int face_of(Dart d) const { return face_[d]; }
    int edge_of(Dart d) const { return edge_[d]; }
    Dart edge_dart(int e) const { return edge_darts_[e]; }

    /// Darts leaving v in counterclockwise order, starting from the smallest.
    const std::vector<Dart>& vertex_darts(int v) const { return vorb_[v]; }
    /// Darts of face f in face-walk order, starting from the smallest.
    const std::vector<Dart>& face_darts(int f) const { return forb_[f]; }
    int degree(int v) const { return static_cast<int>(vorb_[v].size()); }
    int face_size(int f) const { return static_cast<int>(forb_[f].size()); }

    const std::vector<Dart>& twins() const { return twin_; }
    const std::vector<Dart>& nexts() const { return next_; }

    bool has_curves() const { return !curve_.empty(); }
    int curve_of(Dart d) const { return curve_[d]; }
    const std::vector<int>& curves() const { return curve_; }
    int curve_count() const {
        return curve_.empty() ? 0 : *std::max_element(curve_.begin(), curve_.end()) + 1;
    }

    PlaneMap with_curves(std::vector<int> curve) const { return PlaneMap(twin_, next_, std::move(curve)); }
    PlaneMap without_curves() const { return PlaneMap(twin_, next_); }
    /// Same map seen in a mirror: rotations reversed.
    PlaneMap mirrored() const { return PlaneMap(twin_, prev_, curve_); }

    bool operator==(const PlaneMap& o) const {
        return twin_ == o.twin_ && next_ == o.next_ && curve_ == o.curve_;
    }

private:
    void validate() {
        const int n = dart_count();
        if (n < 2 || n % 2 != 0)
            throw Error(Errc::BadFormat, "dart count must be even and at least 2, got " + std::to_string(n));
        if (static_cast<int>(next_.size()) != n)
            throw Error(Errc::BadFormat, "next has " + std::to_string(next_.size()) + " entries, expected " + std::to_string(n));
        if (!curve_.empty() && static_cast<int>(curve_.size()) != n)
            throw Error(Errc::BadFormat, "curve has " + std::to_string(curve_.size()) + " entries, expected " + std::to_string(n));
        for (int d = 0; d < n; ++d) {
            int t = twin_[d];
            if (t < 0 || t >= n || t == d || twin_[t] != d)
                throw Error(Errc::NotInvolution, "twin is not a fixed-point-free involution at dart " + std::to_string(d));
        }
        prev_.assign(n, -1);
        for (int d = 0; d < n; ++d) {
            int e = next_[d];
            if (e < 0 || e >= n || prev_[e] >= 0)
                throw Error(Errc::NotPermutation, "next is not a permutation (dart " + std::to_string(d) + ")");
            prev_[e] = d;
        }
        for (int d = 0; d < n; ++d) {
            if (!curve_.empty() && (curve_[d] < 0 || curve_[d] != curve_[twin_[d]]))
                throw Error(Errc::BadFormat, "curve labels must be nonnegative and equal on twins (dart " + std::to_string(d) + ")");
        }

        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int d = stack.back();
            stack.pop_back();
            for (int e : {twin_[d], next_[d], prev_[d]})
                if (!seen[e]) {
                    seen[e] = 1;
                    ++reached;
                    stack.push_back(e);
                }
        }
        if (reached != n) throw Error(Errc::Disconnected, std::to_string(n - reached) + " darts unreachable from dart 0");

        vorb_ = detail::orbits(next_, vertex_);
        std::vector<int> phi(n);
        for (int d = 0; d < n; ++d) phi[d] = next_[twin_[d]];
        forb_ = detail::orbits(phi, face_);
        edge_.assign(n, -1);
        for (int d = 0; d < n; ++d)
            if (edge_[d] < 0) {
                edge_[d] = edge_[twin_[d]] = static_cast<int>(edge_darts_.size());
                edge_darts_.push_back(d);
            }
        int chi = vertex_count() - edge_count() + face_count();
        if (chi != 2)
            throw Error(Errc::EulerViolation, "V-E+F = " + std::to_string(chi) + " (V=" + std::to_string(vertex_count()) +
                                                  " E=" + std::to_string(edge_count()) + " F=" + std::to_string(face_count()) + ")");
    }

    std::vector<Dart> twin_, next_, prev_;
    std::vector<int> curve_;
    std::vector<int> vertex_, face_, edge_;
    std::vector<Dart> edge_darts_;
    std::vector<std::vector<Dart>> vorb_, forb_;
};

// ---------------------------------------------------------------- text format

inline PlaneMap parse_map(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_line = [&](bool required) -> std::optional<std::string> {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.find_first_not_of(" \t") != std::string::npos) return line;
        }
        if (required) throw Error(Errc::BadFormat, "unexpected end of input");
        return std::nullopt;
    };

    std::istringstream header(*next_line(true));
    std::string magic;
    long long n = -1;
    if (!(header >> magic >> n) || magic != "planemap-v1" || n < 0)
        throw Error(Errc::BadFormat, "expected header 'planemap-v1 <dart_count>'");

    auto read_row = [&](const std::string& l, const std::string& key) {
        std::istringstream row(l);
        std::string tag;
        row >> tag;
        if (tag != key + ":") throw Error(Errc::BadFormat, "expected '" + key + ":' line, got '" + tag + "'");
        std::vector<int> xs;
        std::string tok;
        while (row >> tok) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw Error(Errc::BadFormat, "bad integer '" + tok + "' in " + key + " line");
            if (v < -1 || v > 1'000'000'000) throw Error(Errc::BadFormat, "value out of range in " + key + " line");
            xs.push_back(static_cast<int>(v));
        }
        if (static_cast<long long>(xs.size()) != n)
            throw Error(Errc::BadFormat, key + " line has " + std::to_string(xs.size()) + " entries, expected " + std::to_string(n));
        return xs;
    };

    auto twin = read_row(*next_line(true), "twin");
    auto next = read_row(*next_line(true), "next");
    std::vector<int> curve;
    if (auto l = next_line(false)) curve = read_row(*l, "curve");
    if (next_line(false)) throw Error(Errc::BadFormat, "trailing content after map");
    return PlaneMap(std::move(twin), std::move(next), std::move(curve));
}

inline std::string serialize_map(const PlaneMap& m) {
    std::ostringstream out;
    out << "planemap-v1 " << m.dart_count() << "\n";
    auto row = [&](const char* key, const std::vector<int>& xs) {
        out << key << ":";
        for (int x : xs) out << ' ' << x;
        out << "\n";
    };
    row("twin", m.twins());
    row("next", m.nexts());
    if (m.has_curves()) row("curve", m.curves());
    return out.str();
}

/// Map of a simple plane graph from counterclockwise neighbour lists.
/// Dart ids follow the order of the lists.
inline PlaneMap from_rotations(const std::vector<std::vector<int>>& rot) {
    std::map<std::pair<int, int>, int> dart;
    int n = 0;
    for (int v = 0; v < static_cast<int>(rot.size()); ++v)
        for (int w : rot[v]) dart[{v, w}] = n++;
    std::vector<int> twin(n), next(n);
    for (int v = 0; v < static_cast<int>(rot.size()); ++v) {
        const auto& nb = rot[v];
        for (std::size_t i = 0; i < nb.size(); ++i) {
            int d = dart.at({v, nb[i]});
            auto it = dart.find({nb[i], v});
            if (it == dart.end()) throw Error(Errc::BadFormat, "rotation lists are not symmetric");
            twin[d] = it->second;
            next[d] = dart.at({v, nb[(i + 1) % nb.size()]});
        }
    }
    return PlaneMap(std::move(twin), std::move(next));
}

// ---------------------------------------------------------------- structure

/// Underlying simple graph: loops dropped, parallel edges merged.
inline Graph simple_graph(const PlaneMap& m) {
    Graph g(m.vertex_count());
    for (int e = 0; e < m.edge_count(); ++e) {
        Dart d = m.edge_dart(e);
        g.add_edge(m.vertex_of(d), m.head(d));
    }
    return g;
}

struct StructureReport {
    int V = 0, E = 0, F = 0;
    std::map<int, int> degree_histogram;
    bool connected = true;
    bool two_connected = false;
    bool bridgeless = false;
    std::vector<int> cut_vertices;
    std::vector<int> bridges; // edge ids

    std::string to_text() const {
        std::ostringstream out;
        out << "V: " << V << "\nE: " << E << "\nF: " << F << "\ndegrees:";
        for (auto [d, c] : degree_histogram) out << ' ' << d << 'x' << c;
        out << "\nconnected: " << (connected ? "true" : "false")
            << "\ntwo_connected: " << (two_connected ? "true" : "false")
            << "\nbridgeless: " << (bridgeless ? "true" : "false") << "\n";
        return out.str();
    }
};

/// Cut vertices and bridges of the multigraph by DFS low points. Parallel
/// edges are never bridges; loops are ignored.
inline StructureReport analyze(const PlaneMap& m) {
    StructureReport r;
    r.V = m.vertex_count();
    r.E = m.edge_count();
    r.F = m.face_count();
    for (int v = 0; v < r.V; ++v) ++r.degree_histogram[m.degree(v)];

    std::vector<int> disc(r.V, -1), low(r.V, 0), parent_edge(r.V, -1), child_count(r.V, 0);
    std::vector<char> is_cut(r.V, 0);
    // iterative DFS; frame = (vertex, index into its dart list)
    std::vector<std::pair<int, int>> stack;
    int timer = 0;
    disc[0] = low[0] = timer++;
    stack.emplace_back(0, 0);
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        const auto& ds = m.vertex_darts(v);
        if (i < static_cast<int>(ds.size())) {
            Dart d = ds[i++];
            int w = m.head(d);
            int e = m.edge_of(d);
            if (w == v || e == parent_edge[v]) continue;
            if (disc[w] < 0) {
                disc[w] = low[w] = timer++;
                parent_edge[w] = e;
                ++child_count[v];
                stack.emplace_back(w, 0);
            } else {
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            int child = v;
            stack.pop_back();
            if (stack.empty()) break;
            int par = stack.back().first;
            low[par] = std::min(low[par], low[child]);
            if (low[child] > disc[par]) r.bridges.push_back(parent_edge[child]);
            if (par != 0 && low[child] >= disc[par]) is_cut[par] = 1;
        }
    }
    if (child_count[0] > 1) is_cut[0] = 1;
    for (int v = 0; v < r.V; ++v)
        if (is_cut[v]) r.cut_vertices.push_back(v);
    std::sort(r.bridges.begin(), r.bridges.end());
    r.bridgeless = r.bridges.empty();
    r.two_connected = r.V >= 2 && r.cut_vertices.empty() && (r.V > 2 || r.bridgeless);
    return r;
}

// ---------------------------------------------------------------- face 2-colouring

/// color[f] is 0 (black) or 1 (white); the face of dart 0 is black.
struct FaceTwoColoring {
    std::vector<int> color;

    std::vector<int> faces_of(int c) const {
        std::vector<int> out;
        for (int f = 0; f < static_cast<int>(color.size()); ++f)
            if (color[f] == c) out.push_back(f);
        return out;
    }
};

inline FaceTwoColoring face_two_coloring(const PlaneMap& m) {
    for (int v = 0; v < m.vertex_count(); ++v)
        if (m.degree(v) % 2 != 0)
            throw Error(Errc::OddVertex, "vertex " + std::to_string(v) + " has degree " + std::to_string(m.degree(v)));
    FaceTwoColoring fc;
    fc.color.assign(m.face_count(), -1);
    int start = m.face_of(0);
    fc.color[start] = 0;
    std::vector<int> queue{start};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int f = queue[qi];
        for (Dart d : m.face_darts(f)) {
            int g = m.face_of(m.twin(d));
            if (fc.color[g] < 0) {
                fc.color[g] = 1 - fc.color[f];
                queue.push_back(g);
            } else if (fc.color[g] == fc.color[f]) {
                throw Error(Errc::OddVertex, "dual graph is not bipartite");
            }
        }
    }
    return fc;
}

// ---------------------------------------------------------------- receipts

struct ConstructionReceipt {
    std::string operation;
    std::optional<int> new_curve;
    int vertex_delta = 0;
    int edge_delta = 0;
    /// dart_map[d] is the dart of the output that continues old dart d.
    std::vector<Dart> dart_map;

    std::string to_text() const {
        std::ostringstream out;
        out << "operation: " << operation << "\n";
        out << "new_curve: " << (new_curve ? std::to_string(*new_curve) : std::string("none")) << "\n";
        out << "vertex_delta: " << vertex_delta << "\n";
        out << "edge_delta: " << edge_delta << "\n";
        return out.str();
    }
};

inline ConstructionReceipt make_receipt(std::string op, const PlaneMap& before, const PlaneMap& after,
                                        std::vector<Dart> dart_map, std::optional<int> new_curve = std::nullopt) {
    ConstructionReceipt r;
    r.operation = std::move(op);
    r.new_curve = new_curve;
    r.vertex_delta = after.vertex_count() - before.vertex_count();
    r.edge_delta = after.edge_count() - before.edge_count();
    r.dart_map = std::move(dart_map);
    return r;
}

// ---------------------------------------------------------------- medial / premedial

/// Darts of the medial split each corner of h: dart 2x and 2x+1 both come
/// from dart x. vertex_of_edge[e] is the medial vertex standing for edge e.
struct MedialResult {
    PlaneMap map;
    std::vector<int> vertex_of_edge;
};

/// Straight-ahead walks through a 4-regular map; label per dart.
inline std::vector<int> straight_ahead_curves(const std::vector<Dart>& twin, const std::vector<Dart>& next) {
    const int n = static_cast<int>(twin.size());
    std::vector<int> curve(n, -1);
    int id = 0;
    for (int s = 0; s < n; ++s) {
        if (curve[s] >= 0) continue;
        for (Dart d = s; curve[d] < 0;) {
            curve[d] = curve[twin[d]] = id;
            d = next[next[twin[d]]];
        }
        ++id;
    }
    return curve;
}

inline MedialResult medial(const PlaneMap& h) {
    const int n = h.dart_count();
    auto A = [](Dart x) { return 2 * x; };
    auto B = [](Dart x) { return 2 * x + 1; };
    std::vector<Dart> twin(2 * n), next(2 * n);
    for (Dart x = 0; x < n; ++x) {
        twin[A(x)] = B(h.phi(x));
        twin[B(h.phi(x))] = A(x);
    }
    for (Dart d = 0; d < n; ++d) {
        Dart t = h.twin(d);
        next[A(d)] = B(t);
        next[B(t)] = A(t);
        next[A(t)] = B(d);
        next[B(d)] = A(d);
    }
    auto curve = straight_ahead_curves(twin, next);
    MedialResult r{PlaneMap(std::move(twin), std::move(next), std::move(curve)), {}};
    r.vertex_of_edge.resize(h.edge_count());
    for (int e = 0; e < h.edge_count(); ++e) r.vertex_of_edge[e] = r.map.vertex_of(A(h.edge_dart(e)));
    return r;
}

inline void require_four_regular(const PlaneMap& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 4)
            throw Error(Errc::NotFourRegular, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
}

/// Premedial map built on one face class of a 4-regular map: a vertex per face
/// of the class, an edge per vertex of g.
struct PremedialResult {
    PlaneMap map;
    std::vector<int> face_of_vertex;  // result vertex -> face of g
    std::vector<int> g_vertex_of_edge; // result edge -> vertex of g
};

inline PremedialResult premedial(const PlaneMap& g, const FaceTwoColoring& fc, int cls) {
    require_four_regular(g);
    const int n = g.dart_count();
    std::vector<int> hd(n, -1);
    int k = 0;
    for (Dart d = 0; d < n; ++d)
        if (fc.color[g.face_of(d)] == cls) hd[d] = k++;
    std::vector<Dart> twin(k), next(k), origin(k);
    for (Dart d = 0; d < n; ++d) {
        if (hd[d] < 0) continue;
        twin[hd[d]] = hd[g.next(g.next(d))];
        next[hd[d]] = hd[g.phi_inv(d)];
        origin[hd[d]] = d;
    }
    PremedialResult r{PlaneMap(std::move(twin), std::move(next)), {}, {}};
    r.face_of_vertex.resize(r.map.vertex_count());
    for (int v = 0; v < r.map.vertex_count(); ++v) r.face_of_vertex[v] = g.face_of(origin[r.map.vertex_darts(v)[0]]);
    r.g_vertex_of_edge.resize(r.map.edge_count());
    for (int e = 0; e < r.map.edge_count(); ++e) r.g_vertex_of_edge[e] = g.vertex_of(g.prev(origin[r.map.edge_dart(e)]));
    return r;
}

/// The two premedial maps of a 4-regular map: first from the black faces
/// (the class of the face of dart 0), second from the white faces.
inline std::pair<PlaneMap, PlaneMap> premedial_pair(const PlaneMap& g) {
    require_four_regular(g);
    auto fc = face_two_coloring(g);
    return {premedial(g, fc, 0).map, premedial(g, fc, 1).map};
}

// ---------------------------------------------------------------- curve insertion

/// Adds a closed curve crossing the listed edges in order. Old darts keep
/// their ids; crossing i adds darts N+4i .. N+4i+3.
inline std::pair<PlaneMap, ConstructionReceipt> insert_curve(const PlaneMap& m, const std::vector<Dart>& crossings) {
    const int n = m.dart_count();
    const int k = static_cast<int>(crossings.size());
    if (k == 0) throw Error(Errc::NotCocycle, "empty crossing list");
    std::set<int> edges;
    for (Dart d : crossings) {
        if (d < 0 || d >= n) throw Error(Errc::BadIndex, "dart " + std::to_string(d) + " out of range");
        if (!edges.insert(m.edge_of(d)).second)
            throw Error(Errc::DuplicateEdge, "edge " + std::to_string(m.edge_of(d)) + " listed twice");
    }

    // side[i] = the dart whose face the curve enters after crossing i
    auto propagate = [&](Dart first) -> std::optional<std::vector<Dart>> {
        std::vector<Dart> side(k);
        side[0] = first;
        for (int i = 1; i <= k; ++i) {
            Dart d = crossings[i % k];
            Dart t = m.twin(d);
            int f = m.face_of(side[i - 1]);
            Dart exit;
            if (m.face_of(d) == f) exit = t;
            else if (m.face_of(t) == f) exit = d;
            else return std::nullopt;
            if (i == k) {
                if (exit != side[0]) return std::nullopt;
            } else {
                side[i] = exit;
            }
        }
        return side;
    };
    auto side = propagate(crossings[0]);
    if (!side) side = propagate(m.twin(crossings[0]));
    if (!side) throw Error(Errc::NotCocycle, "consecutive crossed edges do not share a face");

    std::vector<Dart> twin(m.twins()), next(m.nexts());
    twin.resize(n + 4 * k);
    next.resize(n + 4 * k);
    std::vector<int> curve;
    std::optional<int> new_curve;
    if (m.has_curves()) {
        curve = m.curves();
        curve.resize(n + 4 * k);
        new_curve = m.curve_count();
    }
    for (int i = 0; i < k; ++i) {
        Dart d = crossings[i], t = m.twin(d);
        Dart a = n + 4 * i, b = a + 1, L = a + 2, R = a + 3;
        twin[d] = a;
        twin[a] = d;
        twin[t] = b;
        twin[b] = t;
        next[b] = L;
        next[L] = a;
        next[a] = R;
        next[R] = b;
        if (new_curve) {
            curve[a] = curve[d];
            curve[b] = curve[t];
            curve[L] = curve[R] = *new_curve;
        }
    }
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        Dart out = n + 4 * i + ((*side)[i] == crossings[i] ? 3 : 2);
        // entry side at crossing j is the face of side[i]
        Dart in = n + 4 * j + ((*side)[j] == crossings[j] ? 2 : 3);
        twin[out] = in;
        twin[in] = out;
    }
    PlaneMap out;
    try {
        out = PlaneMap(std::move(twin), std::move(next), std::move(curve));
    } catch (const Error& e) {
        if (e.code() == Errc::EulerViolation) throw Error(Errc::NotCocycle, "curve segments would cross inside a face");
        throw;
    }
    std::vector<Dart> dart_map(n);
    for (Dart d = 0; d < n; ++d) dart_map[d] = d;
    auto receipt = make_receipt("insert_curve", m, out, std::move(dart_map), new_curve);
    return {std::move(out), std::move(receipt)};
}

// ---------------------------------------------------------------- isomorphism

/// Lexicographically least BFS code over all start darts (and, if allowed,
/// over the mirror image). Two maps are isomorphic iff their codes agree.
/// Curve labels are ignored.
inline std::vector<int> canonical_code(const PlaneMap& m, bool allow_mirror = true) {
    const int n = m.dart_count();
    std::vector<int> best;
    std::vector<int> label(n), order(n), code;
    auto run = [&](const std::vector<Dart>& twin, const std::vector<Dart>& next) {
        for (Dart s = 0; s < n; ++s) {
            std::fill(label.begin(), label.end(), -1);
            code.clear();
            int len = 0;
            label[s] = 0;
            order[len++] = s;
            bool worse = false, better = best.empty();
            for (int i = 0; i < len && !worse; ++i) {
                for (Dart e : {twin[order[i]], next[order[i]]}) {
                    if (label[e] < 0) {
                        label[e] = len;
                        order[len++] = e;
                    }
                    int c = label[e];
                    if (!better) {
                        int b = best[code.size()];
                        if (c > b) {
                            worse = true;
                            break;
                        }
                        if (c < b) better = true;
                    }
                    code.push_back(c);
                }
            }
            if (!worse && better) best = code;
        }
    };
    run(m.twins(), m.nexts());
    if (allow_mirror) {
        std::vector<Dart> inv(n);
        for (Dart d = 0; d < n; ++d) inv[m.next(d)] = d;
        run(m.twins(), inv);
    }
    best.insert(best.begin(), n);
    return best;
}

inline bool isomorphic(const PlaneMap& a, const PlaneMap& b, bool allow_mirror = true) {
    return a.dart_count() == b.dart_count() && a.vertex_count() == b.vertex_count() &&
           a.face_count() == b.face_count() && canonical_code(a, allow_mirror) == canonical_code(b, allow_mirror);
}

} // namespace pcarr
