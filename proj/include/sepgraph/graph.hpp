#pragma once

#include <algorithm>
#include <deque>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sepgraph/errors.hpp"

namespace sepgraph {

// Finite simple undirected graph over vertex ids 0..n-1. Canonical form:
// edges stored as (u < v) pairs sorted lexicographically, adjacency lists
// sorted ascending. Immutable by convention once built.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
        return d;
    }
    bool has_edge(int u, int v) const {
        const auto& a = adj[u];
        return std::binary_search(a.begin(), a.end(), v);
    }
};

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edge_list) {
    if (n < 0) throw ParseError("vertex count must be nonnegative");
    Graph g;
    g.n = n;
    for (auto& [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge endpoint out of range: " + std::to_string(u) + " " +
                             std::to_string(v));
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    auto dup = std::adjacent_find(edge_list.begin(), edge_list.end());
    if (dup != edge_list.end())
        throw ParseError("duplicate edge " + std::to_string(dup->first) + " " +
                         std::to_string(dup->second));
    g.edges = std::move(edge_list);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

// Edge-list document: '#' starts a comment, first payload line is "n m",
// then m lines "u v". Errors carry 1-based line numbers.
inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edge_list;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m)) {
                std::string tok;
                std::istringstream probe(line);
                if (probe >> tok)
                    throw ParseError("line " + std::to_string(lineno) +
                                     ": expected header \"n m\"");
                n = -1;
                continue;
            }
            std::string extra;
            if (ls >> extra)
                throw ParseError("line " + std::to_string(lineno) + ": trailing tokens in header");
            if (n < 0 || m < 0)
                throw ParseError("line " + std::to_string(lineno) + ": negative header values");
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) {
            std::string tok;
            std::istringstream probe(line);
            if (probe >> tok)
                throw ParseError("line " + std::to_string(lineno) + ": expected edge \"u v\"");
            continue;
        }
        std::string extra;
        if (ls >> extra)
            throw ParseError("line " + std::to_string(lineno) + ": trailing tokens in edge line");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("line " + std::to_string(lineno) + ": edge endpoint out of range");
        if (u == v) throw ParseError("line " + std::to_string(lineno) + ": self-loop");
        edge_list.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("missing header line \"n m\"");
    if (static_cast<long long>(edge_list.size()) != m)
        throw ParseError("header promises " + std::to_string(m) + " edges, found " +
                         std::to_string(edge_list.size()));
    try {
        return make_graph(static_cast<int>(n), std::move(edge_list));
    } catch (const ParseError& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

// Components as sorted vertex lists, ordered by least contained vertex.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            comp.push_back(v);
            for (int w : g.adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    return connected_components(g).size() == 1;
}

// Multi-source BFS. dist[v] is meaningful only where reached[v]; unreachable
// vertices are reported by the flag, not by a sentinel distance.
struct BfsResult {
    std::vector<int> dist;
    std::vector<char> reached;
};

inline BfsResult bfs_distances(const Graph& g, const std::vector<int>& sources) {
    if (sources.empty()) throw PreconditionError("bfs: source set is empty");
    BfsResult r;
    r.dist.assign(g.n, 0);
    r.reached.assign(g.n, 0);
    std::deque<int> q;
    for (int s : sources) {
        if (s < 0 || s >= g.n) throw PreconditionError("bfs: source out of range");
        if (!r.reached[s]) {
            r.reached[s] = 1;
            q.push_back(s);
        }
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.adj[v])
            if (!r.reached[w]) {
                r.reached[w] = 1;
                r.dist[w] = r.dist[v] + 1;
                q.push_back(w);
            }
    }
    return r;
}

// Shortest cycle length; nullopt on forests (girth infinity is a
// distinguished value, never a sentinel integer). Per-edge BFS: delete the
// edge, the shortest surviving u-v path closes the shortest cycle through it.
inline std::optional<int> girth(const Graph& g) {
    std::optional<int> best;
    std::vector<int> dist(g.n);
    std::vector<char> seen(g.n);
    for (auto [eu, ev] : g.edges) {
        std::fill(seen.begin(), seen.end(), 0);
        dist[eu] = 0;
        seen[eu] = 1;
        std::deque<int> q{eu};
        int cap = best ? *best - 2 : g.n;  // paths longer than cap cannot improve
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            if (v == ev) break;
            if (dist[v] >= cap) continue;
            for (int w : g.adj[v]) {
                if (v == eu && w == ev) continue;
                if (!seen[w]) {
                    seen[w] = 1;
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
            }
        }
        if (seen[ev]) {
            int c = dist[ev] + 1;
            if (!best || c < *best) best = c;
        }
    }
    return best;
}

// gamma(k): maximal closed-ball cardinality at radius k over all centers.
inline long long growth_function(const Graph& g, int k) {
    if (g.n == 0) throw PreconditionError("growth: empty graph");
    if (k < 0) throw PreconditionError("growth: negative radius");
    long long best = 0;
    for (int v = 0; v < g.n; ++v) {
        auto r = bfs_distances(g, {v});
        long long c = 0;
        for (int w = 0; w < g.n; ++w)
            if (r.reached[w] && r.dist[w] <= k) ++c;
        best = std::max(best, c);
    }
    return best;
}

// View of an induced subgraph: host + vertex subset; edges derived on demand.
struct SubgraphRef {
    std::shared_ptr<const Graph> host;
    std::vector<int> vertices;  // sorted ascending

    int size() const { return static_cast<int>(vertices.size()); }
};

inline SubgraphRef make_subgraph_ref(std::shared_ptr<const Graph> host,
                                     std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (int v : vertices)
        if (v < 0 || v >= host->n) throw PreconditionError("subgraph: vertex out of range");
    return SubgraphRef{std::move(host), std::move(vertices)};
}

// Induced graph with vertices relabeled 0..k-1 in host-id order.
inline Graph induced_graph(const SubgraphRef& ref) {
    std::vector<int> local(ref.host->n, -1);
    for (int i = 0; i < ref.size(); ++i) local[ref.vertices[i]] = i;
    std::vector<std::pair<int, int>> es;
    for (int v : ref.vertices)
        for (int w : ref.host->adj[v])
            if (v < w && local[w] >= 0) es.emplace_back(local[v], local[w]);
    return make_graph(ref.size(), std::move(es));
}

inline Graph induced_graph(const Graph& host, const std::vector<int>& vertices) {
    return induced_graph(make_subgraph_ref(std::make_shared<const Graph>(host), vertices));
}

inline Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    std::vector<std::pair<int, int>> es;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges) es.emplace_back(u + n, v + n);
        n += p.n;
    }
    return make_graph(n, std::move(es));
}

}  // namespace sepgraph
