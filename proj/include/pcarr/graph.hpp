#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace pcarr {

/// Simple undirected graph on vertices 0..n-1. Loops and repeated edges are
/// dropped by add_edge. Adjacency lists stay sorted.
class Graph {
public:
    explicit Graph(int n = 0) : n_(n), adj_(n), rows_(n, std::vector<std::uint64_t>(words(n), 0)) {}

    int size() const { return n_; }
    int edge_count() const { return m_; }

    bool add_edge(int u, int v) {
        if (u == v || adjacent(u, v)) return false;
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
        rows_[u][v >> 6] |= std::uint64_t{1} << (v & 63);
        rows_[v][u >> 6] |= std::uint64_t{1} << (u & 63);
        ++m_;
        return true;
    }

    bool adjacent(int u, int v) const { return (rows_[u][v >> 6] >> (v & 63)) & 1u; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    /// Bitset row of v, 64 vertices per word.
    const std::vector<std::uint64_t>& row(int v) const { return rows_[v]; }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    // Vertices above v shift down by one.
    Graph without_vertex(int v) const {
        Graph g(n_ - 1);
        for (auto [a, b] : edges()) {
            if (a == v || b == v) continue;
            g.add_edge(a - (a > v), b - (b > v));
        }
        return g;
    }

    Graph without_edge(int u, int v) const {
        Graph g(n_);
        for (auto [a, b] : edges())
            if (!((a == u && b == v) || (a == v && b == u))) g.add_edge(a, b);
        return g;
    }

    /// Induced subgraph; vertex i of the result is vs[i].
    Graph induced(const std::vector<int>& vs) const {
        std::vector<int> pos(n_, -1);
        for (int i = 0; i < static_cast<int>(vs.size()); ++i) pos[vs[i]] = i;
        Graph g(static_cast<int>(vs.size()));
        for (int i = 0; i < static_cast<int>(vs.size()); ++i)
            for (int w : adj_[vs[i]])
                if (pos[w] > i) g.add_edge(i, pos[w]);
        return g;
    }

    bool has_triangle() const {
        for (auto [u, v] : edges())
            for (std::size_t k = 0; k < rows_[u].size(); ++k)
                if (rows_[u][k] & rows_[v][k]) return true;
        return false;
    }

    static int words(int n) { return (n + 63) / 64; }

private:
    static void insert_sorted(std::vector<int>& xs, int v) { xs.insert(std::lower_bound(xs.begin(), xs.end(), v), v); }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

inline bool is_proper(const Graph& g, const std::vector<int>& color) {
    if (static_cast<int>(color.size()) != g.size()) return false;
    for (auto [u, v] : g.edges())
        if (color[u] == color[v]) return false;
    return true;
}

inline bool is_independent(const Graph& g, const std::vector<int>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (set[i] == set[j] || g.adjacent(set[i], set[j])) return false;
    return true;
}

inline Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

} // namespace pcarr
