#pragma once

#include <cstdint>
#include <vector>

#include "pcarr/error.hpp"
#include "pcarr/graph.hpp"
#include "pcarr/rational.hpp"

namespace pcarr::oracle {

/// All maximal independent sets as bitmasks (graphs up to 30 vertices).
inline std::vector<std::uint32_t> maximal_independent_sets(const Graph& g) {
    const int n = g.size();
    if (n > 30) throw Error(Errc::BadFormat, "oracle limited to 30 vertices");
    std::vector<std::uint32_t> non(n, 0); // non-neighbours, excluding self
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (u != v && !g.adjacent(u, v)) non[v] |= 1u << u;
    std::vector<std::uint32_t> out;
    auto rec = [&](auto&& self, std::uint32_t r, std::uint32_t p, std::uint32_t x) -> void {
        if (!p && !x) {
            out.push_back(r);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (!(p >> v & 1)) continue;
            self(self, r | 1u << v, p & non[v], x & non[v]);
            p &= ~(1u << v);
            x |= 1u << v;
        }
    };
    rec(rec, 0, n == 32 ? ~0u : (1u << n) - 1, 0);
    return out;
}

/// max sum w_v subject to w(I) <= 1 for every maximal independent set I,
/// w >= 0, by a dense tableau with Bland's rule. The origin is feasible, so
/// no first phase is needed. Its value is the fractional chromatic number.
inline Rational fractional_chromatic_dense(const Graph& g) {
    const int n = g.size();
    if (n == 0) return 0;
    auto sets = maximal_independent_sets(g);
    const int m = static_cast<int>(sets.size());
    const int cols = n + m;
    std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(cols + 1, 0));
    std::vector<int> basis(m);
    for (int r = 0; r < m; ++r) {
        for (int v = 0; v < n; ++v)
            if (sets[r] >> v & 1) t[r][v] = 1;
        t[r][n + r] = 1;
        t[r][cols] = 1;
        basis[r] = n + r;
    }
    for (int v = 0; v < n; ++v) t[m][v] = -1; // objective row holds -c
    for (;;) {
        int enter = -1;
        for (int j = 0; j < cols && enter < 0; ++j)
            if (t[m][j] < 0) enter = j;
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int r = 0; r < m; ++r) {
            if (t[r][enter] <= 0) continue;
            Rational q = t[r][cols] / t[r][enter];
            if (leave < 0 || q < best || (q == best && basis[r] < basis[leave])) {
                leave = r;
                best = q;
            }
        }
        if (leave < 0) throw Error(Errc::BadFormat, "oracle LP unbounded");
        Rational p = t[leave][enter];
        for (auto& x : t[leave]) x /= p;
        for (int r = 0; r <= m; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            Rational f = t[r][enter];
            for (int j = 0; j <= cols; ++j)
                if (t[leave][j] != 0) t[r][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    return t[m][cols];
}

} // namespace pcarr::oracle
