#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "sepgraph/errors.hpp"
#include "sepgraph/graph.hpp"
#include "sepgraph/profile.hpp"

namespace sepgraph {

// Axis-aligned grid graph [0,s)^d, vertices numbered with axis 0 fastest.
inline Graph make_grid(int d, int s) {
    if (d < 1 || s < 1) throw PreconditionError("grid: need positive dimension and side");
    long long n = 1;
    for (int i = 0; i < d; ++i) {
        n *= s;
        if (n > 1'000'000) throw PreconditionError("grid: too many vertices");
    }
    int nn = static_cast<int>(n);
    std::vector<std::pair<int, int>> es;
    long long stride = 1;
    for (int axis = 0; axis < d; ++axis) {
        for (int v = 0; v < nn; ++v) {
            int coord = static_cast<int>((v / stride) % s);
            if (coord + 1 < s) es.emplace_back(v, v + static_cast<int>(stride));
        }
        stride *= s;
    }
    return make_graph(nn, std::move(es));
}

// Cover of a graph by classes of pieces. Within one class the pieces must be
// pairwise far apart; every vertex lies in exactly one piece overall.
struct Cover {
    int r = 1;  // separation scale: same-class pieces sit at distance > r
    long long diameter_bound = 0;
    std::vector<std::vector<std::vector<int>>> classes;  // class -> piece -> vertices

    int m() const { return static_cast<int>(classes.size()); }
};

// 2^d classes of r-sized boxes with period 2r per axis: along each axis the
// intervals [2rk, 2rk+r) form class bit 0 and [2rk+r, 2rk+2r) class bit 1.
// Boxes of one class are r+1 apart in graph distance, diameters at most dr.
inline Cover grid_cover(int d, int s, int r) {
    if (r < 1) throw PreconditionError("cover: r must be positive");
    if (d < 1 || s < 1) throw PreconditionError("cover: need positive dimension and side");
    long long total = 1;
    for (int i = 0; i < d; ++i) {
        total *= s;
        if (total > 1'000'000) throw PreconditionError("cover: too many vertices");
    }
    auto intervals_for = [&](int bit) {
        std::vector<std::pair<int, int>> iv;  // [start, end)
        for (int start = bit * r; start < s; start += 2 * r)
            iv.emplace_back(start, std::min(start + r, s));
        return iv;
    };
    Cover cover;
    cover.r = r;
    cover.diameter_bound = static_cast<long long>(d) * r;
    for (int choice = 0; choice < (1 << d); ++choice) {
        std::vector<std::vector<std::pair<int, int>>> axis_iv;
        for (int axis = 0; axis < d; ++axis) axis_iv.push_back(intervals_for((choice >> axis) & 1));
        std::vector<std::vector<int>> pieces;
        std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
        bool any_empty = false;
        for (int axis = 0; axis < d; ++axis)
            if (axis_iv[axis].empty()) any_empty = true;
        while (!any_empty) {
            // Materialize the box for the current interval choice per axis.
            std::vector<int> box{0};
            long long stride = 1;
            for (int axis = 0; axis < d; ++axis) {
                auto [lo, hi] = axis_iv[axis][idx[static_cast<std::size_t>(axis)]];
                std::vector<int> next;
                for (int base : box)
                    for (int c = lo; c < hi; ++c)
                        next.push_back(base + static_cast<int>(stride) * c);
                box = std::move(next);
                stride *= s;
            }
            std::sort(box.begin(), box.end());
            pieces.push_back(std::move(box));
            // Lex increment with the last axis fastest.
            int axis = d - 1;
            while (axis >= 0) {
                if (++idx[static_cast<std::size_t>(axis)] <
                    axis_iv[static_cast<std::size_t>(axis)].size())
                    break;
                idx[static_cast<std::size_t>(axis)] = 0;
                --axis;
            }
            if (axis < 0) break;
        }
        cover.classes.push_back(std::move(pieces));
    }
    return cover;
}

// Default separation scale for an n-vertex d-grid under m classes.
inline int auto_grid_r(int d, int s, int m) {
    long long n = 1;
    for (int i = 0; i < d; ++i) n *= s;
    double target = static_cast<double>(n) / (4.0 * m);
    int r = static_cast<int>(std::max(1.0, std::floor(std::pow(target, 1.0 / d))));
    return r;
}

// Full audit of the cover contract against a host graph; throws on breach.
inline void validate_cover(const Graph& host, const Cover& cover) {
    std::vector<int> owner(host.n, -1);
    for (const auto& cls : cover.classes)
        for (const auto& piece : cls)
            for (int v : piece) {
                if (v < 0 || v >= host.n) throw PreconditionError("cover: vertex out of range");
                if (owner[v] != -1) throw PreconditionError("cover: vertex covered twice");
                owner[v] = 1;
            }
    for (int v = 0; v < host.n; ++v)
        if (owner[v] == -1) throw PreconditionError("cover: vertex not covered");
    for (const auto& cls : cover.classes) {
        // Same-class pieces must not come within distance r of each other.
        for (std::size_t i = 0; i < cls.size(); ++i) {
            if (cls[i].empty()) throw PreconditionError("cover: empty piece");
            BfsResult b = bfs_distances(host, cls[i]);
            for (std::size_t j = 0; j < cls.size(); ++j) {
                if (i == j) continue;
                for (int v : cls[j])
                    if (b.reached[v] && b.dist[v] <= cover.r)
                        throw PreconditionError("cover: same-class pieces too close");
            }
        }
        for (const auto& piece : cls) {
            BfsResult b = bfs_distances(host, {piece[0]});
            for (int v : piece) {
                if (!b.reached[v]) throw PreconditionError("cover: piece split across components");
                if (b.dist[v] > cover.diameter_bound)
                    throw PreconditionError("cover: piece exceeds diameter bound");
            }
        }
    }
}

// ---- growth models ----

// gamma bounds the ball volume of the geometry at a given radius; h converts
// the cut-construction scale k to the radius it needs. Both exact integers.
struct GrowthModel {
    std::string label;
    std::function<long long(long long)> gamma;
    std::function<long long(long long)> h;
};

namespace detail {

inline long long sat_mul(long long a, long long b) {
    constexpr long long cap = std::numeric_limits<long long>::max() / 4;
    if (a == 0 || b == 0) return 0;
    if (a > cap / b) return cap;
    return a * b;
}

inline long long sat_add(long long a, long long b) {
    constexpr long long cap = std::numeric_limits<long long>::max() / 4;
    return (a > cap - b) ? cap : a + b;
}

}  // namespace detail

// Exact closed ball volume in the d-dimensional integer lattice:
// sum over i of 2^i * C(d,i) * C(k,i), saturated well below overflow.
inline long long lattice_ball_volume(int d, long long k) {
    if (k < 0) return 0;
    long long total = 0;
    long long choose_d = 1;  // C(d, i)
    for (int i = 0; i <= d; ++i) {
        long long term = choose_d;
        for (int j = 0; j < i; ++j) term = detail::sat_mul(term, 2);
        // C(k, i), exact: i is tiny so intermediate products stay divisible.
        long long ck = 1;
        for (int j = 0; j < i; ++j) ck = detail::sat_mul(ck, k - j) / (j + 1);
        term = detail::sat_mul(term, ck);
        total = detail::sat_add(total, term);
        choose_d = choose_d * (d - i) / (i + 1);
    }
    return total;
}

inline GrowthModel growth_model_grid(int d, int c_scale = -1) {
    if (d < 1) throw PreconditionError("growth model: dimension must be positive");
    if (c_scale < 0) c_scale = d;
    if (c_scale < 1) throw PreconditionError("growth model: scale must be positive");
    GrowthModel m;
    m.label = "grid-d" + std::to_string(d) + "-c" + std::to_string(c_scale);
    m.gamma = [d](long long k) { return lattice_ball_volume(d, k); };
    m.h = [c_scale](long long k) { return detail::sat_mul(c_scale, k); };
    return m;
}

inline GrowthModel growth_model_exponential() {
    GrowthModel m;
    m.label = "exponential";
    m.gamma = [](long long k) {
        long long v = 1;
        for (long long i = 0; i < k; ++i) v = detail::sat_mul(v, 2);
        return v;
    };
    m.h = [](long long k) { return k; };
    return m;
}

// Model measured off an actual graph: gamma is its worst-case ball volume.
inline GrowthModel growth_model_empirical(const Graph& g, int c_scale) {
    if (g.n < 1) throw PreconditionError("growth model: empty graph");
    if (c_scale < 1) throw PreconditionError("growth model: scale must be positive");
    std::vector<long long> vols;
    for (int k = 0;; ++k) {
        vols.push_back(growth_function(g, k));
        if (vols.back() >= g.n) break;
        // Balls grow strictly until they swallow the component; a stall below
        // n means the graph is disconnected and would loop forever.
        if (k > 0 && vols.back() == vols[vols.size() - 2])
            throw PreconditionError("growth model: graph not connected");
    }
    if (vols.size() < 2) throw PreconditionError("growth model: graph does not grow");
    GrowthModel m;
    m.label = "empirical-c" + std::to_string(c_scale);
    m.gamma = [vols](long long k) {
        if (k < 0) return 0LL;
        std::size_t i = static_cast<std::size_t>(std::min<long long>(
            k, static_cast<long long>(vols.size()) - 1));
        return vols[i];
    };
    m.h = [c_scale](long long k) { return detail::sat_mul(c_scale, k); };
    return m;
}

// Largest k whose required ball gamma(h(k)) still fits inside n; 0 when even
// k = 1 does not fit, which makes the asymptotic bounds vacuous.
inline long long growth_scale_limit(const GrowthModel& model, long long n) {
    if (n < 1) throw PreconditionError("growth: n must be positive");
    long long k = 0;
    while (k < 2'000'000) {
        if (model.gamma(model.h(k + 1)) > n) return k;
        ++k;
    }
    throw PreconditionError("growth model does not grow");
}

// ---- exact k(m): iterations needed to halve under (1 - 1/4m) shrink ----

namespace detail {

// Unsigned bignum, little-endian base 2^32; just enough for exact powers.
struct BigNat {
    std::vector<std::uint32_t> limb{1};

    void mul_small(std::uint64_t f) {
        std::uint64_t carry = 0;
        for (auto& d : limb) {
            std::uint64_t x = static_cast<std::uint64_t>(d) * f + carry;
            d = static_cast<std::uint32_t>(x);
            carry = x >> 32;
        }
        while (carry) {
            limb.push_back(static_cast<std::uint32_t>(carry));
            carry >>= 32;
        }
    }
};

inline bool big_leq(const BigNat& a, const BigNat& b) {
    std::size_t na = a.limb.size(), nb = b.limb.size();
    while (na > 1 && a.limb[na - 1] == 0) --na;
    while (nb > 1 && b.limb[nb - 1] == 0) --nb;
    if (na != nb) return na < nb;
    for (std::size_t i = na; i-- > 0;)
        if (a.limb[i] != b.limb[i]) return a.limb[i] < b.limb[i];
    return true;
}

}  // namespace detail

// Least k with (1 - 1/4m)^k <= 1/2, decided by exact integer comparison
// 2 (4m-1)^k <= (4m)^k.
inline int iterations_to_halve(int m) {
    if (m < 1) throw PreconditionError("k(m): m must be positive");
    detail::BigNat lhs, rhs;  // (4m-1)^k and (4m)^k
    std::uint64_t a = 4ULL * static_cast<std::uint64_t>(m) - 1;
    std::uint64_t b = 4ULL * static_cast<std::uint64_t>(m);
    for (int k = 1; k <= 100'000'000; ++k) {
        lhs.mul_small(a);
        rhs.mul_small(b);
        detail::BigNat doubled = lhs;
        doubled.mul_small(2);
        if (detail::big_leq(doubled, rhs)) return k;
    }
    throw PreconditionError("k(m): unreachable");
}

// ---- cover-driven balancing cut ----

struct AsdimCutIteration {
    int chosen_class = 0;
    std::vector<int> u;      // launch set: one medium piece or accumulated small ones
    int l = 0;               // chosen shell distance in [1, r]
    std::vector<int> shell;  // removed vertices
    int working_before = 0;  // |W| entering the iteration
    int working_after = 0;   // largest surviving component
};

struct AsdimCutTrace {
    std::vector<AsdimCutIteration> iterations;
    std::vector<int> total_cut;
    int k_of_m = 0;  // proved iteration bound for this m
};

namespace detail {

inline std::vector<int> largest_component_within(const Graph& host, const std::vector<char>& in) {
    std::vector<char> seen(host.n, 0);
    std::vector<int> best, cur, stack;
    for (int s = 0; s < host.n; ++s) {
        if (!in[s] || seen[s]) continue;
        cur.clear();
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            cur.push_back(v);
            for (int w : host.adj[v])
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        if (cur.size() > best.size()) best = cur;  // first-found wins ties: least seed
    }
    std::sort(best.begin(), best.end());
    return best;
}

}  // namespace detail

// Iteratively carve the host down to balance using only cover structure:
// pick the class holding most of the working component W, launch from pieces
// totalling between n_cur/4m and n_cur/2m, and remove the thinnest of the
// first r BFS shells around the launch set. Separation of same-class pieces
// keeps at least n_cur/2m vertices beyond the shells, so W shrinks by the
// factor (1 - 1/4m) every round and at most k(m) rounds run. Pieces too big
// for the launch window mean the cover is too coarse for this graph: refuse.
inline AsdimCutTrace asdim_cut(const Graph& host, const Cover& cover) {
    if (host.n < 1) throw PreconditionError("asdim cut: empty graph");
    int m = cover.m();
    if (m < 1) throw PreconditionError("asdim cut: cover has no classes");
    AsdimCutTrace trace;
    trace.k_of_m = iterations_to_halve(m);
    std::vector<char> in(host.n, 1);
    std::vector<int> w = detail::largest_component_within(host, in);
    std::vector<char> in_w(host.n, 0);
    while (2 * static_cast<int>(w.size()) > host.n) {
        int n_cur = static_cast<int>(w.size());
        std::fill(in_w.begin(), in_w.end(), 0);
        for (int v : w) in_w[v] = 1;
        // Class masses and per-piece intersections with W.
        std::vector<std::vector<std::vector<int>>> live(static_cast<std::size_t>(m));
        std::vector<long long> mass(static_cast<std::size_t>(m), 0);
        for (int ci = 0; ci < m; ++ci)
            for (const auto& piece : cover.classes[static_cast<std::size_t>(ci)]) {
                std::vector<int> pw;
                for (int v : piece)
                    if (in_w[v]) pw.push_back(v);
                if (pw.empty()) continue;
                if (2LL * m * static_cast<long long>(pw.size()) > n_cur)
                    throw DegenerateError("asdim cut: a piece holds more than n/2m of the "
                                          "working component, cover too coarse");
                mass[static_cast<std::size_t>(ci)] += static_cast<long long>(pw.size());
                live[static_cast<std::size_t>(ci)].push_back(std::move(pw));
            }
        int best_class = 0;
        for (int ci = 1; ci < m; ++ci)
            if (mass[static_cast<std::size_t>(ci)] > mass[static_cast<std::size_t>(best_class)])
                best_class = ci;
        // Launch set U: one piece with 4m|p| >= n_cur if available, else
        // accumulate small pieces until 4m * total >= n_cur.
        std::vector<int> u;
        for (const auto& pw : live[static_cast<std::size_t>(best_class)])
            if (4LL * m * static_cast<long long>(pw.size()) >= n_cur) {
                u = pw;
                break;
            }
        if (u.empty()) {
            for (const auto& pw : live[static_cast<std::size_t>(best_class)]) {
                u.insert(u.end(), pw.begin(), pw.end());
                if (4LL * m * static_cast<long long>(u.size()) >= n_cur) break;
            }
        }
        if (u.empty() || 4LL * m * static_cast<long long>(u.size()) < n_cur)
            throw DegenerateError("asdim cut: chosen class cannot fill the launch window");
        std::sort(u.begin(), u.end());
        // Shells measured in the host metric.
        BfsResult b = bfs_distances(host, u);
        std::vector<int> shell_size(static_cast<std::size_t>(cover.r) + 1, 0);
        for (int v : w)
            if (b.reached[v] && b.dist[v] >= 1 && b.dist[v] <= cover.r)
                ++shell_size[static_cast<std::size_t>(b.dist[v])];
        int best_l = 1;
        for (int l = 2; l <= cover.r; ++l)
            if (shell_size[static_cast<std::size_t>(l)] <
                shell_size[static_cast<std::size_t>(best_l)])
                best_l = l;
        AsdimCutIteration it;
        it.chosen_class = best_class;
        it.u = u;
        it.l = best_l;
        it.working_before = n_cur;
        for (int v : w)
            if (b.reached[v] && b.dist[v] == best_l) it.shell.push_back(v);
        if (it.shell.empty())
            throw DegenerateError("asdim cut: empty shell, working component not connected "
                                  "across the separation scale");
        for (int v : it.shell) {
            in_w[v] = 0;
            trace.total_cut.push_back(v);
        }
        w = detail::largest_component_within(host, in_w);
        it.working_after = static_cast<int>(w.size());
        trace.iterations.push_back(std::move(it));
        if (static_cast<int>(trace.iterations.size()) > trace.k_of_m)
            throw DegenerateError("asdim cut: exceeded the proved iteration bound");
    }
    std::sort(trace.total_cut.begin(), trace.total_cut.end());
    return trace;
}

// Formula-side separation upper bound: at scale n a cover-based cut removes
// at most k(m) shells of size n/r each, with r driven by the growth model
// through the budget n/2m per piece.
struct AsdimSepBound {
    long long value = 0;
    int k_of_m = 0;
    long long scale_limit = 0;  // the f value the model affords
};

inline AsdimSepBound sep_upper_from_growth(const GrowthModel& model, int m, long long n) {
    if (m < 1 || n < 1) throw PreconditionError("sep upper: need positive m and n");
    AsdimSepBound out;
    out.k_of_m = iterations_to_halve(m);
    long long budget = n / (2LL * m);
    if (budget < 1) throw DegenerateError("sep upper: n below the piece budget floor");
    out.scale_limit = growth_scale_limit(model, budget);
    if (out.scale_limit < 1)
        throw DegenerateError("sep upper: growth model admits no usable scale");
    out.value = ceil_div(detail::sat_mul(out.k_of_m, n), out.scale_limit);
    return out;
}

}  // namespace sepgraph
