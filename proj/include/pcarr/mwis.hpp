#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "pcarr/error.hpp"
#include "pcarr/graph.hpp"
#include "pcarr/rational.hpp"

namespace pcarr {

template <class W>
struct WeightedSet {
    std::vector<int> set; // sorted
    W weight{};
};

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline bool test(const Bits& b, int v) { return (b[v >> 6] >> (v & 63)) & 1u; }
inline void reset(Bits& b, int v) { b[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
inline void set(Bits& b, int v) { b[v >> 6] |= std::uint64_t{1} << (v & 63); }
inline bool empty(const Bits& b) {
    for (auto x : b)
        if (x) return false;
    return true;
}

/// Branch and bound over candidate bitsets. The bound is a greedy weighted
/// clique cover: each clique contributes its heaviest member.
template <class W>
class MwisSearch {
public:
    MwisSearch(const Graph& g, const std::vector<W>& w) : g_(g), w_(w) {
        order_.resize(g.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return w_[a] > w_[b]; });
    }

    WeightedSet<W> run() {
        Bits p(Graph::words(g_.size()), 0);
        for (int v = 0; v < g_.size(); ++v)
            if (w_[v] > 0) set(p, v);
        best_.weight = W(0);
        std::vector<int> chosen;
        search(std::move(p), W(0), chosen);
        std::sort(best_.set.begin(), best_.set.end());
        return best_;
    }

private:
    W bound(const Bits& p) {
        cliques_.clear();
        W total(0);
        for (int v : order_) {
            if (!test(p, v)) continue;
            bool placed = false;
            for (auto& c : cliques_) {
                bool all = true;
                for (std::size_t k = 0; k < c.size() && all; ++k)
                    if ((c[k] & g_.row(v)[k]) != c[k]) all = false;
                if (all) {
                    set(c, v);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                cliques_.emplace_back(p.size(), 0);
                set(cliques_.back(), v);
                total += w_[v];
            }
        }
        return total;
    }

    void search(Bits p, W cur, std::vector<int>& chosen) {
        std::size_t mark = chosen.size();
        // take vertices that outweigh their remaining neighbourhood
        for (bool changed = true; changed;) {
            changed = false;
            for (int v = 0; v < g_.size(); ++v) {
                if (!test(p, v)) continue;
                W nb(0);
                for (int u : g_.neighbors(v))
                    if (test(p, u)) nb += w_[u];
                if (w_[v] >= nb) {
                    chosen.push_back(v);
                    cur += w_[v];
                    reset(p, v);
                    for (int u : g_.neighbors(v)) reset(p, u);
                    changed = true;
                }
            }
        }
        if (empty(p)) {
            if (cur > best_.weight) {
                best_.weight = cur;
                best_.set = chosen;
            }
        } else if (cur + bound(p) > best_.weight) {
            int pick = -1, pick_deg = -1;
            for (int v = 0; v < g_.size(); ++v) {
                if (!test(p, v)) continue;
                int deg = 0;
                for (int u : g_.neighbors(v)) deg += test(p, u);
                if (deg > pick_deg) {
                    pick = v;
                    pick_deg = deg;
                }
            }
            Bits with = p;
            reset(with, pick);
            for (int u : g_.neighbors(pick)) reset(with, u);
            chosen.push_back(pick);
            search(std::move(with), cur + w_[pick], chosen);
            chosen.pop_back();
            reset(p, pick);
            search(std::move(p), cur, chosen);
        }
        chosen.resize(mark);
    }

    const Graph& g_;
    const std::vector<W>& w_;
    std::vector<int> order_;
    std::vector<Bits> cliques_;
    WeightedSet<W> best_;
};

} // namespace detail

/// Exact maximum-weight independent set for integer-like weights.
template <class W>
WeightedSet<W> mwis_exact(const Graph& g, const std::vector<W>& w) {
    for (const auto& x : w)
        if (x < 0) throw Error(Errc::NegativeWeight, "negative vertex weight");
    return detail::MwisSearch<W>(g, w).run();
}

/// Rational weights are scaled by the lcm of the denominators; machine
/// integers are used when the total fits.
inline WeightedSet<Rational> mwis(const Graph& g, const std::vector<Rational>& w) {
    if (static_cast<int>(w.size()) != g.size()) throw Error(Errc::BadFormat, "weight vector size differs from vertex count");
    BigInt l = 1;
    for (const auto& x : w) {
        if (x < 0) throw Error(Errc::NegativeWeight, "negative vertex weight");
        l = boost::multiprecision::lcm(l, denominator(x));
    }
    std::vector<BigInt> scaled;
    BigInt total = 0;
    for (const auto& x : w) {
        scaled.push_back(numerator(x) * (l / denominator(x)));
        total += scaled.back();
    }
    WeightedSet<Rational> out;
    if (total < BigInt(std::numeric_limits<std::int64_t>::max() / 2)) {
        std::vector<std::int64_t> small;
        for (const auto& s : scaled) small.push_back(s.convert_to<std::int64_t>());
        auto r = mwis_exact(g, small);
        out.set = std::move(r.set);
    } else {
        auto r = mwis_exact(g, scaled);
        out.set = std::move(r.set);
    }
    out.weight = 0;
    for (int v : out.set) out.weight += w[v];
    return out;
}

inline WeightedSet<int> independence_number(const Graph& g) {
    auto r = mwis_exact(g, std::vector<std::int64_t>(g.size(), 1));
    return {r.set, static_cast<int>(r.weight)};
}

} // namespace pcarr
