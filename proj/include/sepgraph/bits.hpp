#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "sepgraph/errors.hpp"
#include "sepgraph/graph.hpp"

namespace sepgraph {

// Adjacency rows packed into uint64 masks; the workhorse for exhaustive
// subset enumeration on graphs with n <= 64.
struct MaskGraph {
    int n = 0;
    std::vector<std::uint64_t> row;

    std::uint64_t full() const {
        return n == 64 ? ~0ULL : ((1ULL << n) - 1);
    }
};

inline MaskGraph make_mask_graph(const Graph& g) {
    if (g.n > 64) throw PreconditionError("mask graph limited to 64 vertices");
    MaskGraph m;
    m.n = g.n;
    m.row.assign(g.n, 0);
    for (auto [u, v] : g.edges) {
        m.row[u] |= 1ULL << v;
        m.row[v] |= 1ULL << u;
    }
    return m;
}

// Vertices outside `inside` adjacent to some vertex of `inside`.
inline std::uint64_t boundary_mask(const MaskGraph& g, std::uint64_t inside) {
    std::uint64_t nb = 0;
    for (std::uint64_t s = inside; s;) {
        int v = std::countr_zero(s);
        s &= s - 1;
        nb |= g.row[v];
    }
    return nb & ~inside;
}

// Connected component of `seed` within the spanning set `within`.
inline std::uint64_t component_mask(const MaskGraph& g, std::uint64_t within, int seed) {
    std::uint64_t comp = 1ULL << seed;
    std::uint64_t frontier = comp;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t s = frontier; s;) {
            int v = std::countr_zero(s);
            s &= s - 1;
            next |= g.row[v];
        }
        next &= within & ~comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

inline bool mask_connected(const MaskGraph& g, std::uint64_t within) {
    if (!within) return true;
    int seed = std::countr_zero(within);
    return component_mask(g, within, seed) == within;
}

// Components of `within`, ordered by least contained vertex.
inline std::vector<std::uint64_t> mask_components(const MaskGraph& g, std::uint64_t within) {
    std::vector<std::uint64_t> comps;
    while (within) {
        int seed = std::countr_zero(within);
        std::uint64_t c = component_mask(g, within, seed);
        comps.push_back(c);
        within &= ~c;
    }
    return comps;
}

inline int mask_largest_component_size(const MaskGraph& g, std::uint64_t within) {
    int best = 0;
    for (std::uint64_t c : mask_components(g, within))
        best = std::max(best, std::popcount(c));
    return best;
}

inline std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// First k-combination of {0..n-1} in lexicographic mask order; advance with
// next_combination. Enumerating masks this way makes the least witness
// deterministic without tie-break code at the call sites.
inline std::uint64_t first_combination(int k) {
    return k == 64 ? ~0ULL : ((1ULL << k) - 1);
}

inline bool next_combination(std::uint64_t& mask, int n) {
    if (mask == 0) return false;  // the empty set has no successor
    // Gosper's hack: next mask with the same popcount.
    std::uint64_t c = mask & (~mask + 1);
    std::uint64_t r = mask + c;
    if (r == 0) return false;
    mask = (((r ^ mask) >> 2) / c) | r;
    return n == 64 ? true : mask < (1ULL << n);
}

}  // namespace sepgraph
