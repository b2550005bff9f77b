#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pcarr/arrangement.hpp"
#include "pcarr/coloring.hpp"
#include "pcarr/error.hpp"
#include "pcarr/graph.hpp"
#include "pcarr/mwis.hpp"
#include "pcarr/rational.hpp"

namespace pcarr {

/// Primal: weights on independent sets covering every vertex at least once.
/// Dual: vertex weights with every independent set of weight at most 1.
struct FractionalCertificate {
    Rational value;
    std::vector<std::pair<std::vector<int>, Rational>> primal;
    std::vector<Rational> dual;
    int pivots = 0;
    int priced_columns = 0;

    std::string to_text() const {
        std::ostringstream out;
        out << "fraccert-v1 " << to_pq(value) << "\n";
        for (const auto& [set, x] : primal) {
            out << "set: ";
            for (std::size_t i = 0; i < set.size(); ++i) out << (i ? "," : "") << set[i];
            out << " weight: " << to_pq(x) << "\n";
        }
        out << "dual:\n";
        for (std::size_t v = 0; v < dual.size(); ++v) out << v << ' ' << to_pq(dual[v]) << "\n";
        return out.str();
    }
};

inline FractionalCertificate parse_certificate(const std::string& text) {
    std::istringstream in(text);
    std::string line, tok;
    FractionalCertificate c;
    if (!std::getline(in, line)) throw Error(Errc::BadFormat, "empty certificate");
    {
        std::istringstream h(line);
        if (!(h >> tok) || tok != "fraccert-v1" || !(h >> tok)) throw Error(Errc::BadFormat, "expected 'fraccert-v1 p/q'");
        c.value = parse_pq(tok);
    }
    bool in_dual = false;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream l(line);
        l >> tok;
        if (tok == "dual:") {
            in_dual = true;
            continue;
        }
        if (!in_dual) {
            std::string sets, key, weight;
            if (tok != "set:" || !(l >> sets >> key >> weight) || key != "weight:")
                throw Error(Errc::BadFormat, "bad set line '" + line + "'");
            std::vector<int> set;
            std::istringstream s(sets);
            for (std::string part; std::getline(s, part, ',');) set.push_back(std::stoi(part));
            c.primal.emplace_back(std::move(set), parse_pq(weight));
        } else {
            std::string w;
            if (!(l >> w)) throw Error(Errc::BadFormat, "bad dual line '" + line + "'");
            if (std::stoi(tok) != static_cast<int>(c.dual.size())) throw Error(Errc::BadFormat, "dual lines out of order");
            c.dual.push_back(parse_pq(w));
        }
    }
    return c;
}

struct CertificateCheck {
    bool ok = true;
    std::string diagnostic;
};

/// Checks both certificates exactly; the dual side is checked with an exact
/// maximum-weight independent set.
inline CertificateCheck verify_certificate(const Graph& g, const FractionalCertificate& c) {
    auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
    const int n = g.size();
    std::vector<Rational> cover(n, 0);
    Rational sum = 0;
    for (const auto& [set, x] : c.primal) {
        if (x < 0) return fail("negative primal weight");
        for (int v : set)
            if (v < 0 || v >= n) return fail("primal set mentions vertex " + std::to_string(v));
        if (!is_independent(g, set)) return fail("primal set is not independent");
        for (int v : set) cover[v] += x;
        sum += x;
    }
    for (int v = 0; v < n; ++v)
        if (cover[v] < 1) return fail("vertex " + std::to_string(v) + " covered only " + to_pq(cover[v]));
    if (sum != c.value) return fail("primal objective " + to_pq(sum) + " differs from value " + to_pq(c.value));
    if (static_cast<int>(c.dual.size()) != n) return fail("dual has wrong length");
    Rational dsum = 0;
    for (int v = 0; v < n; ++v) {
        if (c.dual[v] < 0) return fail("negative dual weight at vertex " + std::to_string(v));
        dsum += c.dual[v];
    }
    if (dsum != c.value) return fail("dual objective " + to_pq(dsum) + " differs from value " + to_pq(c.value));
    auto best = mwis(g, c.dual);
    if (best.weight > 1) return fail("an independent set has dual weight " + to_pq(best.weight));
    return {};
}

namespace detail {

/// Revised simplex on  min sum x_I  s.t.  sum_I x_I [v in I] - s_v = 1,
/// with an explicit exact inverse of the basis. Columns 0..n-1 are the
/// surplus variables, set columns follow in pool order. Entering and leaving
/// variables by Bland's rule; columns priced out by an exact MWIS.
class ColumnGeneration {
public:
    explicit ColumnGeneration(const Graph& g) : g_(g), n_(g.size()) {}

    FractionalCertificate run() {
        seed_pool();
        std::vector<std::vector<Rational>> binv(n_, std::vector<Rational>(n_, 0));
        std::vector<Rational> xb(n_, 1);
        std::vector<int> basis(n_);
        for (int r = 0; r < n_; ++r) {
            binv[r][r] = 1;
            basis[r] = n_ + r; // singleton {r}
        }
        FractionalCertificate cert;
        std::vector<Rational> y(n_);
        std::vector<Rational> d(n_);
        for (;;) {
            for (int i = 0; i < n_; ++i) {
                y[i] = 0;
                for (int r = 0; r < n_; ++r)
                    if (basis[r] >= n_ && binv[r][i] != 0) y[i] += binv[r][i];
            }
            int enter = -1;
            for (int j = 0; j < n_ + static_cast<int>(sets_.size()) && enter < 0; ++j)
                if (reduced_cost(j, y) < 0) enter = j;
            if (enter < 0) {
                auto best = mwis(g_, y);
                if (best.weight <= 1) break;
                if (!seen_.insert(best.set).second) throw Error(Errc::BadFormat, "pricing returned a pool column");
                sets_.push_back(best.set);
                enter = n_ + static_cast<int>(sets_.size()) - 1;
                ++cert.priced_columns;
            }
            // d = B^-1 a_enter
            for (int r = 0; r < n_; ++r) {
                d[r] = 0;
                if (enter < n_) d[r] = -binv[r][enter];
                else
                    for (int v : sets_[enter - n_]) d[r] += binv[r][v];
            }
            int leave = -1;
            Rational best_ratio;
            for (int r = 0; r < n_; ++r) {
                if (d[r] <= 0) continue;
                Rational ratio = xb[r] / d[r];
                if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) throw Error(Errc::BadFormat, "covering LP reported unbounded");
            Rational piv = d[leave];
            for (int i = 0; i < n_; ++i) binv[leave][i] /= piv;
            xb[leave] /= piv;
            for (int r = 0; r < n_; ++r) {
                if (r == leave || d[r] == 0) continue;
                Rational f = d[r];
                for (int i = 0; i < n_; ++i)
                    if (binv[leave][i] != 0) binv[r][i] -= f * binv[leave][i];
                xb[r] -= f * xb[leave];
            }
            basis[leave] = enter;
            ++cert.pivots;
        }
        cert.value = 0;
        std::map<std::vector<int>, Rational> merged;
        for (int r = 0; r < n_; ++r)
            if (basis[r] >= n_ && xb[r] > 0) {
                merged[sets_[basis[r] - n_]] += xb[r];
                cert.value += xb[r];
            }
        for (auto& [s, x] : merged) cert.primal.emplace_back(s, x);
        cert.dual = y;
        return cert;
    }

private:
    Rational reduced_cost(int j, const std::vector<Rational>& y) const {
        if (j < n_) return y[j];
        Rational s = 1;
        for (int v : sets_[j - n_]) s -= y[v];
        return s;
    }

    void add(std::vector<int> s) {
        std::sort(s.begin(), s.end());
        if (seen_.insert(s).second) sets_.push_back(std::move(s));
    }

    void seed_pool() {
        for (int v = 0; v < n_; ++v) add({v});
        auto chi = chromatic_number(g_);
        std::vector<std::vector<int>> classes(chi.k);
        for (int v = 0; v < n_; ++v) classes[chi.color[v]].push_back(v);
        for (auto& c : classes) add(c);
        for (int v = 0; v < n_; ++v) {
            std::vector<int> s{v};
            for (int u = 0; u < n_; ++u) {
                if (u == v) continue;
                bool ok = true;
                for (int x : s) ok = ok && !g_.adjacent(u, x);
                if (ok) s.push_back(u);
            }
            add(s);
        }
    }

    const Graph& g_;
    int n_;
    std::vector<std::vector<int>> sets_;
    std::set<std::vector<int>> seen_;
};

} // namespace detail

/// Exact fractional chromatic number with both certificates, verified
/// before returning.
inline FractionalCertificate fractional_chromatic(const Graph& g) {
    if (g.size() == 0) return {};
    auto cert = detail::ColumnGeneration(g).run();
    auto check = verify_certificate(g, cert);
    if (!check.ok) throw Error(Errc::BadFormat, "certificate failed verification: " + check.diagnostic);
    return cert;
}

// ---------------------------------------------------------------- bound suite

struct BoundLine {
    std::string name;
    bool applicable = false;
    Rational lhs, rhs;
    bool holds = true;
};

struct BoundReport {
    Rational chi_f;
    int chi = 0;
    int alpha = 0;
    int vertices = 0;
    int min_intersection_degree = 0;
    std::vector<BoundLine> bounds;

    bool all_hold() const {
        for (const auto& b : bounds)
            if (b.applicable && !b.holds) return false;
        return true;
    }

    std::string to_text() const {
        std::ostringstream out;
        out << "vertices: " << vertices << "\nchi: " << chi << "\nchi_f: " << to_pq(chi_f) << "\nalpha: " << alpha
            << "\nmin_intersection_degree: " << min_intersection_degree << "\n";
        for (const auto& b : bounds) {
            out << "bound " << b.name << ": ";
            if (!b.applicable) out << "n/a\n";
            else out << to_pq(b.lhs) << " <= " << to_pq(b.rhs) << ' ' << (b.holds ? "pass" : "fail") << "\n";
        }
        return out.str();
    }
};

/// Computes chi_f, chi and alpha and checks every upper and lower bound whose
/// hypothesis holds for the arrangement.
inline BoundReport bound_suite(const Arrangement& a) {
    Graph g = simple_graph(a.map());
    BoundReport r;
    r.vertices = g.size();
    r.chi_f = fractional_chromatic(g).value;
    r.chi = chromatic_number(g).k;
    r.alpha = independence_number(g).weight;
    auto h = intersection_graph(a);
    r.min_intersection_degree = h.min_degree;
    const int n = a.curve_count();
    const int v = g.size();

    auto line = [&](std::string name, bool app, Rational lhs, Rational rhs) {
        r.bounds.push_back({std::move(name), app, lhs, rhs, !app || lhs <= rhs});
    };
    line("ratio_below_chi_f", true, Rational(v, r.alpha), r.chi_f);
    line("chi_f_below_chi", true, r.chi_f, Rational(r.chi));
    line("triangle_forces_three", g.has_triangle(), Rational(3), r.chi_f);
    bool intersecting = a.is_intersecting();
    line("intersecting_n", intersecting, r.chi_f, intersecting ? Rational(3) + Rational(6, 3 * n - 2) : Rational(0));
    Rational d = h.density;
    bool dense = d > Rational(1, 2);
    line("dense_intersection", dense, r.chi_f, dense ? Rational(3) / (2 * d - 1) : Rational(0));
    bool vcrit = false;
    if (r.chi == 4) vcrit = criticality(g, CriticalMode::Vertex).critical;
    line("vertex_critical", vcrit, r.chi_f, Rational(3) + Rational(3, v - 1));
    int k = h.min_degree;
    line("independence_ratio", k >= 2, Rational(v, r.alpha), k >= 2 ? Rational(3) + Rational(3, k - 1) : Rational(0));
    return r;
}

} // namespace pcarr
