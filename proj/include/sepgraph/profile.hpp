#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sepgraph/cuts.hpp"
#include "sepgraph/errors.hpp"
#include "sepgraph/graph.hpp"
#include "sepgraph/rational.hpp"
#include "sepgraph/rng.hpp"

namespace sepgraph {

// One sample of a separation profile: the largest cut any subgraph on at
// most n vertices forces. kind records on which side of the truth the value
// can err; witness (for lower/exact) is a subgraph achieving it.
struct ProfilePoint {
    long long value = 0;
    std::string kind;  // "lower" | "exact" | "upper"
    std::vector<int> witness;
};

struct SeparationProfile {
    std::map<int, ProfilePoint> points;  // keyed by n
    std::string source;                  // "exhaustive" | "heuristic" | "formula"
    std::uint64_t seed = 0;
};

// sep(n) = max cut over induced subgraphs on at most n vertices. Induced
// suffices: deleting edges only fragments components further and never
// increases cut. Exhaustive over all vertex subsets; host capped at 16.
inline SeparationProfile sep_profile_exact(const Graph& host, int n_max,
                                           long long budget = 1'000'000'000LL) {
    if (host.n < 1) throw PreconditionError("sep: empty graph");
    if (host.n > 16) throw PreconditionError("sep exhaustive limited to 16 vertices");
    if (n_max < 1) throw PreconditionError("sep: n must be positive");
    n_max = std::min(n_max, host.n);
    std::vector<long long> best(n_max + 1, -1);
    std::vector<std::uint64_t> best_mask(n_max + 1, 0);
    long long examined = 0;
    std::uint64_t full = host.n == 64 ? ~0ULL : (1ULL << host.n) - 1;
    for (std::uint64_t s = 1; s <= full && s != 0; ++s) {
        int sz = std::popcount(s);
        if (sz > n_max) continue;
        if (++examined > budget) throw BudgetError("sep: subset budget exhausted");
        Graph sub = induced_graph(host, mask_to_vertices(s));
        CutResult c = cut_exact(sub);
        if (c.value > best[sz]) {
            best[sz] = c.value;
            best_mask[sz] = s;
        }
    }
    SeparationProfile prof;
    prof.source = "exhaustive";
    long long run = 0;
    std::uint64_t run_mask = 0;
    for (int n = 1; n <= n_max; ++n) {
        if (best[n] > run) {
            run = best[n];
            run_mask = best_mask[n];
        }
        prof.points[n] = ProfilePoint{run, "exact", mask_to_vertices(run_mask)};
    }
    return prof;
}

inline long long sep_exact_small(const Graph& host, int n, long long budget = 1'000'000'000LL) {
    SeparationProfile p = sep_profile_exact(host, n, budget);
    return p.points.at(std::min(n, host.n)).value;
}

struct SepLowerOptions {
    int samples = 32;  // ball centers and random growths per requested n
    std::uint64_t seed = 1;
};

// Heuristic lower bounds for hosts beyond exhaustive reach. Candidates are
// whole components, BFS balls, and random connected growths, all small enough
// for cut_exact, so every reported value is a genuinely achieved cut.
inline SeparationProfile sep_lower_estimate(const Graph& host, const std::vector<int>& ns,
                                            const SepLowerOptions& opts = {}) {
    if (host.n < 1) throw PreconditionError("sep: empty graph");
    SeparationProfile prof;
    prof.source = "heuristic";
    prof.seed = opts.seed;
    Rng rng(opts.seed);
    auto comps = connected_components(host);
    for (int n : ns) {
        if (n < 1) throw PreconditionError("sep: n must be positive");
        int cap = std::min(n, std::min(host.n, 64));
        long long best = 0;
        std::vector<int> best_witness;
        auto consider = [&](const std::vector<int>& cand) {
            if (cand.empty() || static_cast<int>(cand.size()) > cap) return;
            CutResult c = cut_exact(induced_graph(host, cand));
            if (c.value > best) {
                best = c.value;
                best_witness = cand;
            }
        };
        for (const auto& comp : comps)
            if (static_cast<int>(comp.size()) <= cap) consider(comp);
        for (int i = 0; i < opts.samples; ++i) {
            int center = rng.range(0, host.n - 1);
            BfsResult r = bfs_distances(host, {center});
            // Largest ball around the center that still fits the cap.
            int maxd = 0;
            for (int v = 0; v < host.n; ++v)
                if (r.reached[v]) maxd = std::max(maxd, r.dist[v]);
            std::vector<int> count(maxd + 1, 0);
            for (int v = 0; v < host.n; ++v)
                if (r.reached[v]) ++count[r.dist[v]];
            int rad = -1, seen = 0;
            while (rad + 1 <= maxd && seen + count[rad + 1] <= cap) seen += count[++rad];
            std::vector<int> ball;
            for (int v = 0; v < host.n; ++v)
                if (r.reached[v] && r.dist[v] <= rad) ball.push_back(v);
            consider(ball);
        }
        for (int i = 0; i < opts.samples; ++i) {
            // Random connected growth from a random start.
            int start = rng.range(0, host.n - 1);
            std::vector<int> grown{start};
            std::vector<char> in(host.n, 0);
            in[start] = 1;
            std::vector<int> frontier;
            for (int w : host.adj[start]) frontier.push_back(w);
            while (static_cast<int>(grown.size()) < cap && !frontier.empty()) {
                std::size_t j = static_cast<std::size_t>(rng.below(frontier.size()));
                int v = frontier[j];
                frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(j));
                if (in[v]) continue;
                in[v] = 1;
                grown.push_back(v);
                for (int w : host.adj[v])
                    if (!in[w]) frontier.push_back(w);
            }
            std::sort(grown.begin(), grown.end());
            consider(grown);
        }
        prof.points[n] = ProfilePoint{best, "lower", best_witness};
    }
    return prof;
}

// Case-analysis upper bound for a disjoint-union family, one point at n.
// Per member: subgraphs on at most n vertices shorter than the girth are
// forests (cut <= 1), otherwise cut <= min(2 |member|, ceil(n/2)); family
// value is the member maximum, which is exact for disjoint unions since a
// single component carries all the imbalance of any subgraph.
inline ProfilePoint sep_upper_family_coarse(const std::vector<Graph>& members, int n) {
    if (members.empty()) throw PreconditionError("family: no members");
    if (n < 1) throw PreconditionError("sep: n must be positive");
    long long best = 0;
    for (const auto& mem : members) {
        if (mem.n < 1) continue;
        auto gir = girth(mem);
        long long v = (!gir || *gir > n)
                          ? 1
                          : std::min<long long>(2LL * mem.n, (static_cast<long long>(n) + 1) / 2);
        best = std::max(best, v);
    }
    return ProfilePoint{best, "upper", {}};
}

// Refinement: members small enough are searched exhaustively, members whose
// girth exceeds k contribute their exact forest value 1. When every member
// is resolved exactly the family point is exact.
inline ProfilePoint sep_upper_family_refined(const std::vector<Graph>& members, int n,
                                             long long budget = 1'000'000'000LL) {
    if (members.empty()) throw PreconditionError("family: no members");
    if (n < 1) throw PreconditionError("sep: n must be positive");
    long long best = 0;
    bool all_exact = true;
    for (const auto& mem : members) {
        if (mem.n < 1) continue;
        int k = std::min(n, mem.n);
        long long v;
        if (mem.n <= 16) {
            v = sep_exact_small(mem, k, budget);
        } else {
            auto gir = girth(mem);
            if (!gir || *gir > k) {
                v = 1;  // exact: any subgraph is a forest, and cut(K1) = 1
            } else {
                v = (k + 1) / 2;
                all_exact = false;
            }
        }
        best = std::max(best, v);
    }
    return ProfilePoint{best, all_exact ? "exact" : "upper", {}};
}

// ---- profile comparison ----

struct ComparisonEvidence {
    int n = 0;
    long long f_value = 0;
    long long g_value = 0;
    long long required_c = 0;
};

struct ProfileComparison {
    std::string relation;  // "dominated" | "not-dominated-on-range" | "incomparable-on-range"
    std::optional<long long> constant;
    std::vector<ComparisonEvidence> evidence;
};

// Pointwise domination f(n) <= C (g(n) + 1) over the common sample points.
// Only sound pairings count: f must not be an overestimate (lower/exact) and
// g must not be an underestimate (upper/exact). C is the max of the per-point
// requirements; an optional cap turns an oversized C into non-domination.
inline ProfileComparison compare_profiles(const SeparationProfile& f, const SeparationProfile& g,
                                          std::optional<long long> max_constant = std::nullopt) {
    bool any_common = false;
    ProfileComparison out;
    long long worst = 0;
    for (const auto& [n, fp] : f.points) {
        auto it = g.points.find(n);
        if (it == g.points.end()) continue;
        any_common = true;
        const ProfilePoint& gp = it->second;
        bool f_sound = fp.kind == "lower" || fp.kind == "exact";
        bool g_sound = gp.kind == "upper" || gp.kind == "exact";
        if (!f_sound || !g_sound) continue;
        long long req = ceil_div(fp.value, gp.value + 1);
        worst = std::max(worst, req);
        out.evidence.push_back(ComparisonEvidence{n, fp.value, gp.value, req});
    }
    if (!any_common) throw PreconditionError("compare: profiles share no sample points");
    if (out.evidence.empty()) {
        out.relation = "incomparable-on-range";
        return out;
    }
    worst = std::max(worst, 1LL);
    if (max_constant && worst > *max_constant) {
        out.relation = "not-dominated-on-range";
        return out;
    }
    out.relation = "dominated";
    out.constant = worst;
    return out;
}

// ---- regular maps ----

struct RegularMapCertificate {
    int lipschitz = 0;     // max stretch of an edge
    int multiplicity = 0;  // max fiber size
    bool valid = false;
};

// Checks a vertex map x -> y as a candidate regular map: every edge image
// stays within distance L and no target vertex is hit more than m times.
// Images of adjacent vertices in different components of y invalidate it.
inline RegularMapCertificate verify_regular_map(const Graph& x, const Graph& y,
                                                const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != x.n)
        throw PreconditionError("regular map: image list must cover every vertex");
    for (int v : map)
        if (v < 0 || v >= y.n) throw PreconditionError("regular map: image out of range");
    RegularMapCertificate cert;
    std::map<int, BfsResult> from;  // BFS cache keyed by source image
    int lip = 0;
    for (auto [u, v] : x.edges) {
        int a = map[u], b = map[v];
        if (a == b) continue;
        auto it = from.find(a);
        if (it == from.end()) it = from.emplace(a, bfs_distances(y, {a})).first;
        if (!it->second.reached[b]) return cert;  // infinite stretch, invalid
        lip = std::max(lip, it->second.dist[b]);
    }
    std::vector<int> fiber(y.n, 0);
    int mult = 0;
    for (int v : map) mult = std::max(mult, ++fiber[v]);
    cert.lipschitz = lip;
    cert.multiplicity = mult;
    cert.valid = true;
    return cert;
}

// The separation lemma bound: a subgraph on s vertices inside a host with
// sep(s) small cannot expand better than 4 sep(s) / s.
inline Rational subgraph_cheeger_bound(long long sep_value, int subgraph_size) {
    if (subgraph_size < 1) throw PreconditionError("bound: subgraph must be nonempty");
    return Rational(4 * sep_value, subgraph_size);
}

inline std::string profile_to_csv(const SeparationProfile& prof) {
    std::ostringstream out;
    out << "n,value,kind,witness_size\n";
    for (const auto& [n, p] : prof.points)
        out << n << "," << p.value << "," << p.kind << "," << p.witness.size() << "\n";
    return out.str();
}

}  // namespace sepgraph
