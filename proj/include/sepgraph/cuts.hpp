#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sepgraph/bits.hpp"
#include "sepgraph/errors.hpp"
#include "sepgraph/graph.hpp"
#include "sepgraph/rational.hpp"
#include "sepgraph/rng.hpp"

namespace sepgraph {

// Slack added to the computed second eigenvalue before forming the spectral
// bound, so floating error can only weaken the claimed lower bound.
inline constexpr double kEigenvalueSlack = 1e-8;

inline std::vector<int> vertex_boundary(const Graph& g, const std::vector<int>& inside) {
    std::vector<char> in(g.n, 0), out(g.n, 0);
    for (int v : inside) {
        if (v < 0 || v >= g.n) throw PreconditionError("boundary: vertex out of range");
        in[v] = 1;
    }
    std::vector<int> res;
    for (int v : inside)
        for (int w : g.adj[v])
            if (!in[w] && !out[w]) {
                out[w] = 1;
                res.push_back(w);
            }
    std::sort(res.begin(), res.end());
    return res;
}

inline int largest_component_size(const Graph& g) {
    int best = 0;
    for (const auto& c : connected_components(g))
        best = std::max(best, static_cast<int>(c.size()));
    return best;
}

// A graph is balanced when every component holds at most half the vertices
// (exactly half allowed). Unbalanced graphs have a unique overweight
// component, and cut size is about restoring balance by vertex removal.
inline bool is_balanced(const Graph& g) { return 2 * largest_component_size(g) <= g.n; }

struct CheegerResult {
    Rational value;
    std::vector<int> witness;  // empty for bounds that certify no set
    std::string method;        // "exhaustive" | "spectral-lower-bound"
};

struct CutResult {
    int value = 0;
    std::vector<int> witness;
    int largest_component_size = 0;
    std::string method;
};

// h(G) = min |boundary(A)| / |A| over nonempty A with 2|A| <= n. Witness is
// the first minimizer in ascending subset-mask order.
inline CheegerResult cheeger_exact(const Graph& g) {
    if (g.n < 2) throw PreconditionError("cheeger: need at least 2 vertices");
    if (g.n > 20) throw PreconditionError("cheeger exhaustive limited to 20 vertices");
    MaskGraph m = make_mask_graph(g);
    Rational best(g.n);  // every ratio is at most n-1, so this is above all
    std::uint64_t best_mask = 0;
    std::uint64_t full = m.full();
    for (std::uint64_t a = 1; a <= full && a != 0; ++a) {
        int sz = std::popcount(a);
        if (2 * sz > g.n) continue;
        int bnd = std::popcount(boundary_mask(m, a));
        Rational r(bnd, sz);
        if (r < best) {
            best = r;
            best_mask = a;
        }
    }
    return CheegerResult{best, mask_to_vertices(best_mask), "exhaustive"};
}

// For connected d-regular graphs, h >= (d - lambda2) / (2d) where lambda2 is
// the second largest adjacency eigenvalue. lambda2 is inflated by a fixed
// slack and the quotient rounded down to a rational, so the returned value is
// a true lower bound despite floating arithmetic.
inline CheegerResult cheeger_spectral_lower(const Graph& g) {
    if (g.n < 2) throw PreconditionError("spectral bound: need at least 2 vertices");
    if (g.n > 512) throw PreconditionError("spectral bound limited to 512 vertices");
    int d = g.degree(0);
    for (int v = 1; v < g.n; ++v)
        if (g.degree(v) != d) throw PreconditionError("spectral bound: graph is not regular");
    if (d == 0) throw PreconditionError("spectral bound: degree zero");
    if (!is_connected(g)) throw PreconditionError("spectral bound: graph is not connected");
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n, g.n);
    for (auto [u, v] : g.edges) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    double lambda2 = es.eigenvalues()(g.n - 2) + kEigenvalueSlack;
    double bound = (d - lambda2) / (2.0 * d);
    return CheegerResult{rational_floor_from_double(bound), {}, "spectral-lower-bound"};
}

// cut(G) = least number of vertices whose removal leaves every component with
// at most half of G's original vertices. Exhaustive over subset sizes in
// increasing order; `budget` caps the number of candidate sets examined.
inline CutResult cut_exact(const Graph& g, long long budget = 1'000'000'000LL) {
    if (g.n < 1) throw PreconditionError("cut: empty graph");
    if (g.n > 64) throw PreconditionError("cut exhaustive limited to 64 vertices");
    MaskGraph m = make_mask_graph(g);
    std::uint64_t full = m.full();
    if (2 * mask_largest_component_size(m, full) <= g.n)
        return CutResult{0, {}, largest_component_size(g), "exhaustive"};
    long long examined = 0;
    int kmax = (g.n + 1) / 2;  // removing any ceil(n/2) vertices balances
    for (int k = 1; k <= kmax; ++k) {
        std::uint64_t c = first_combination(k);
        do {
            if (++examined > budget)
                throw BudgetError("cut: budget of " + std::to_string(budget) +
                                  " candidate sets exhausted at size " + std::to_string(k));
            int largest = mask_largest_component_size(m, full & ~c);
            if (2 * largest <= g.n)
                return CutResult{k, mask_to_vertices(c), largest, "exhaustive"};
        } while (next_combination(c, g.n));
    }
    throw PreconditionError("cut: unreachable, ceil(n/2) removal always balances");
}

// ---- bounds for graphs beyond exhaustive reach ----

struct CutBoundsResult {
    int lower = 0;
    std::string lower_method;
    int upper = 0;
    std::vector<int> upper_witness;
    bool upper_exact = false;
    std::string upper_method;
};

struct CutBoundsOptions {
    int restarts = 32;          // random multi-source sweep restarts
    std::uint64_t seed = 1;
    int full_sweep_limit = 4096;  // run a sweep from every vertex up to this n
};

namespace detail {

// Largest surviving component when `removed` vertices are deleted.
inline int largest_component_excluding(const Graph& g, const std::vector<char>& removed) {
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack;
    int best = 0;
    for (int s = 0; s < g.n; ++s) {
        if (removed[s] || seen[s]) continue;
        int size = 0;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++size;
            for (int w : g.adj[v])
                if (!removed[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        best = std::max(best, size);
    }
    return best;
}

inline bool valid_cut_set(const Graph& g, const std::vector<int>& cut) {
    std::vector<char> removed(g.n, 0);
    for (int v : cut) removed[v] = 1;
    return 2 * largest_component_excluding(g, removed) <= g.n;
}

// Distance shells from `sources`: removing the shell at distance d+1 leaves
// no edge between {dist <= d} and the rest, so both sides bound every
// component. Returns the smallest valid shell, if any.
inline std::optional<std::vector<int>> best_shell_cut(const Graph& g,
                                                      const std::vector<int>& sources) {
    BfsResult r = bfs_distances(g, sources);
    int maxd = 0;
    for (int v = 0; v < g.n; ++v)
        if (r.reached[v]) maxd = std::max(maxd, r.dist[v]);
    std::vector<int> shell_count(maxd + 1, 0);
    for (int v = 0; v < g.n; ++v)
        if (r.reached[v]) ++shell_count[r.dist[v]];
    std::optional<int> best_d;
    int best_size = g.n + 1;
    int inside = 0;
    for (int d = 0; d + 1 <= maxd; ++d) {
        inside += shell_count[d];
        int shell = shell_count[d + 1];
        int outside = g.n - inside - shell;
        if (2 * inside <= g.n && 2 * outside <= g.n && shell < best_size) {
            best_size = shell;
            best_d = d + 1;
        }
    }
    if (!best_d) return std::nullopt;
    std::vector<int> cut;
    for (int v = 0; v < g.n; ++v)
        if (r.reached[v] && r.dist[v] == *best_d) cut.push_back(v);
    return cut;
}

// Drop witness vertices in ascending id order whenever the set stays valid.
inline void greedy_trim(const Graph& g, std::vector<int>& cut) {
    std::vector<char> removed(g.n, 0);
    for (int v : cut) removed[v] = 1;
    for (std::size_t i = 0; i < cut.size();) {
        removed[cut[i]] = 0;
        if (2 * largest_component_excluding(g, removed) <= g.n) {
            cut.erase(cut.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            removed[cut[i]] = 1;
            ++i;
        }
    }
}

// Centroid of the tree component containing `root`: the vertex all of whose
// branches carry at most half of the component.
inline int tree_centroid(const Graph& g, int root) {
    std::vector<int> order, parent(g.n, -1), size(g.n, 0);
    order.push_back(root);
    parent[root] = root;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int w : g.adj[v])
            if (parent[w] == -1) {
                parent[w] = v;
                order.push_back(w);
            }
    }
    int comp = static_cast<int>(order.size());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        size[*it] += 1;
        if (*it != root) size[parent[*it]] += size[*it];
    }
    int best = -1, best_heavy = comp + 1;
    for (int v : order) {
        int heavy = comp - size[v];  // the branch through the parent
        for (int w : g.adj[v])
            if (parent[w] == v) heavy = std::max(heavy, size[w]);
        if (heavy < best_heavy || (heavy == best_heavy && v < best)) {
            best_heavy = heavy;
            best = v;
        }
    }
    return best;
}

}  // namespace detail

inline bool is_forest(const Graph& g) {
    return g.edge_count() == g.n - static_cast<int>(connected_components(g).size());
}

// Certified lower and heuristic upper bounds on cut size, for graphs too
// large to enumerate. Lower bound: ceil(h*n/4) with h exhaustive when small,
// spectral when regular; upper bound: best BFS distance-shell sweep, trimmed.
inline CutBoundsResult cut_bounds(const Graph& g, const CutBoundsOptions& opts = {}) {
    if (g.n < 1) throw PreconditionError("cut bounds: empty graph");
    CutBoundsResult res;
    if (is_balanced(g)) {
        res.lower = 0;
        res.upper = 0;
        res.lower_method = "formula";
        res.upper_method = "formula";
        res.upper_exact = true;
        return res;
    }
    // Lower bound.
    res.lower = 1;
    res.lower_method = "formula";
    if (g.n >= 2 && g.n <= 20) {
        CheegerResult h = cheeger_exact(g);
        res.lower = std::max(1, static_cast<int>(rational_ceil(h.value * g.n / 4)));
        res.lower_method = "exhaustive";
    } else {
        bool regular = g.n >= 2;
        for (int v = 1; v < g.n && regular; ++v)
            if (g.degree(v) != g.degree(0)) regular = false;
        if (regular && g.degree(0) >= 1 && g.n <= 512 && is_connected(g)) {
            CheegerResult h = cheeger_spectral_lower(g);
            res.lower = std::max(1, static_cast<int>(rational_ceil(h.value * g.n / 4)));
            res.lower_method = "spectral";
        }
    }
    // Upper bound: a forest always splits at a centroid.
    if (is_forest(g)) {
        for (const auto& comp : connected_components(g))
            if (2 * static_cast<int>(comp.size()) > g.n) {
                res.upper = 1;
                res.upper_witness = {detail::tree_centroid(g, comp[0])};
                res.upper_exact = true;  // unbalanced, so cut >= 1
                res.upper_method = "formula";
                return res;
            }
    }
    std::vector<int> best;
    auto consider = [&](const std::optional<std::vector<int>>& cand) {
        if (cand && (best.empty() || cand->size() < best.size())) best = *cand;
    };
    if (g.n <= opts.full_sweep_limit) {
        for (int s = 0; s < g.n; ++s) consider(detail::best_shell_cut(g, {s}));
    } else {
        Rng rng(opts.seed);
        for (int i = 0; i < opts.full_sweep_limit; ++i)
            consider(detail::best_shell_cut(g, {rng.range(0, g.n - 1)}));
    }
    Rng rng(opts.seed + 0x9e3779b97f4a7c15ULL);
    for (int i = 0; i < opts.restarts; ++i) {
        int k = rng.range(1, 3);
        std::vector<int> sources;
        for (int j = 0; j < k; ++j) sources.push_back(rng.range(0, g.n - 1));
        consider(detail::best_shell_cut(g, sources));
    }
    if (best.empty() || !detail::valid_cut_set(g, best)) {
        best.clear();
        for (int v = 0; v < (g.n + 1) / 2; ++v) best.push_back(v);
    }
    detail::greedy_trim(g, best);
    res.upper = static_cast<int>(best.size());
    res.upper_witness = std::move(best);
    res.upper_method = "heuristic";
    return res;
}

// ---- efficient cut chains ----

struct EfficientCutStep {
    std::vector<int> removed;  // host vertex ids
    SubgraphRef successor;     // largest surviving component
    int size_drop = 0;
};

struct EfficientCutSequence {
    SubgraphRef origin;
    Rational efficiency_k;  // fixed from the origin: 3n / (2 cut)
    Rational c_gamma;       // n / cut
    int origin_cut = 0;
    std::vector<EfficientCutStep> steps;
    SubgraphRef terminal;
};

struct ExpanderCertificate {
    SubgraphRef subgraph;
    Rational epsilon;  // certified Cheeger lower bound for the subgraph
    int max_degree = 0;
    std::string method;
};

namespace detail {

// Smallest C (ties: first in ascending mask order) whose removal drops the
// graph by strictly more than k|C| vertices, measured to the largest
// surviving component. Sizes s with k*s >= n-1 cannot work: the drop never
// exceeds n-1 while something survives.
inline std::optional<std::tuple<std::vector<int>, std::vector<int>, int>> find_efficient_cut(
    const Graph& g, const Rational& k, long long& budget) {
    if (g.n > 64) throw PreconditionError("efficient cut limited to 64 vertices");
    MaskGraph m = make_mask_graph(g);
    std::uint64_t full = m.full();
    for (int s = 1; s < g.n; ++s) {
        if (!(Rational(g.n - 1) > k * s)) break;
        std::uint64_t c = first_combination(s);
        do {
            if (--budget < 0) throw BudgetError("efficient cut: candidate budget exhausted");
            auto comps = mask_components(m, full & ~c);
            int largest = 0;
            for (std::uint64_t cm : comps) largest = std::max(largest, std::popcount(cm));
            int drop = g.n - largest;
            if (Rational(drop) > k * s) {
                for (std::uint64_t cm : comps)
                    if (std::popcount(cm) == largest)
                        return std::make_tuple(mask_to_vertices(c), mask_to_vertices(cm), drop);
            }
        } while (next_combination(c, g.n));
    }
    return std::nullopt;
}

}  // namespace detail

// Repeatedly apply cuts of efficiency k = 3n/(2 cut(G)), both fixed from the
// input graph, each time continuing in the largest surviving component. The
// chain always terminates with more than half the vertices intact, and the
// terminal piece has no efficient cut left, which forces h >= cut/(2n) on it.
inline EfficientCutSequence efficient_cut_sequence(const Graph& g,
                                                   long long budget = 50'000'000LL) {
    if (g.n < 1) throw PreconditionError("efficient cuts: empty graph");
    if (!is_connected(g)) throw PreconditionError("efficient cuts: graph is not connected");
    CutResult cut = cut_exact(g, budget);
    EfficientCutSequence seq;
    auto host = std::make_shared<const Graph>(g);
    std::vector<int> all(g.n);
    for (int v = 0; v < g.n; ++v) all[v] = v;
    seq.origin = SubgraphRef{host, all};
    seq.origin_cut = cut.value;
    seq.c_gamma = Rational(g.n, cut.value);
    seq.efficiency_k = Rational(3LL * g.n, 2LL * cut.value);
    std::vector<int> current = all;
    for (;;) {
        Graph local = induced_graph(*host, current);
        auto step = detail::find_efficient_cut(local, seq.efficiency_k, budget);
        if (!step) break;
        auto& [c_local, succ_local, drop] = *step;
        EfficientCutStep rec;
        for (int v : c_local) rec.removed.push_back(current[v]);
        std::vector<int> succ;
        for (int v : succ_local) succ.push_back(current[v]);
        rec.successor = SubgraphRef{host, succ};
        rec.size_drop = drop;
        seq.steps.push_back(rec);
        current = std::move(succ);
    }
    seq.terminal = SubgraphRef{host, current};
    return seq;
}

// Terminal of the efficient cut chain, certified as an expander: its Cheeger
// constant is at least cut/(2n). Graphs with cut <= 1 carry no such content.
inline ExpanderCertificate extract_expander(const Graph& g, long long budget = 50'000'000LL) {
    EfficientCutSequence seq = efficient_cut_sequence(g, budget);
    if (seq.origin_cut <= 1)
        throw DegenerateError("extract expander: cut <= 1, bound is vacuous");
    ExpanderCertificate cert;
    cert.subgraph = seq.terminal;
    cert.epsilon = Rational(seq.origin_cut, 2LL * g.n);
    Graph t = induced_graph(seq.terminal);
    cert.max_degree = t.max_degree();
    cert.method = "formula";
    return cert;
}

}  // namespace sepgraph
