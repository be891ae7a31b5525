#pragma once

// Reference implementations used only by the tests. None of them share code with the
// library beyond the Graph container.

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "decycle/graph.hpp"

namespace brute {

using decycle::Graph;
using decycle::Vertex;
using Mask = std::uint64_t;

inline bool in(Mask m, int v) { return (m >> v) & 1U; }

/// Does the subgraph induced by the vertices in `keep` contain a simple cycle? Enumerates
/// simple paths from every start vertex and looks for a return edge to the start.
inline bool has_cycle_by_paths(const Graph& g, Mask keep) {
    const int n = g.size();
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::function<bool(int, int, int)> walk = [&](int start, int v, int len) {
        for (Vertex w : g.neighbours(v)) {
            if (!in(keep, w) || w < start)
                continue;
            if (w == start && len >= 3)
                return true;
            if (on_path[static_cast<std::size_t>(w)])
                continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            bool found = walk(start, w, len + 1);
            on_path[static_cast<std::size_t>(w)] = 0;
            if (found)
                return true;
        }
        return false;
    };
    for (int s = 0; s < n; ++s) {
        if (!in(keep, s))
            continue;
        on_path[static_cast<std::size_t>(s)] = 1;
        bool found = walk(s, s, 1);
        on_path[static_cast<std::size_t>(s)] = 0;
        if (found)
            return true;
    }
    return false;
}

/// Union-find forest test on the subgraph induced by `keep`.
inline bool is_forest_union_find(const Graph& g, Mask keep) {
    std::vector<int> parent(static_cast<std::size_t>(g.size()));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (auto [u, v] : g.edges()) {
        if (!in(keep, u) || !in(keep, v))
            continue;
        int a = find(u), b = find(v);
        if (a == b)
            return false;
        parent[static_cast<std::size_t>(a)] = b;
    }
    return true;
}

inline Mask full(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Smallest decycling set by enumerating all subsets in order of increasing size.
inline int min_fvs_by_subsets(const Graph& g) {
    const int n = g.size();
    for (int k = 0; k <= n; ++k) {
        // Gosper's hack over all k-subsets.
        if (k == 0) {
            if (is_forest_union_find(g, full(n)))
                return 0;
            continue;
        }
        Mask s = (Mask{1} << k) - 1;
        while (s <= full(n)) {
            if (is_forest_union_find(g, full(n) & ~s))
                return k;
            Mask c = s & (~s + 1);
            Mask r = s + c;
            if (r == 0 || r > full(n))
                break;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return n;
}

/// Cycle power by all-pairs shortest paths (Floyd-Warshall on the cycle).
inline std::vector<std::vector<bool>> cycle_power_matrix(int n, int m) {
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
    for (int i = 0; i < n; ++i) {
        d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
        d[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + 1) % n)] = 1;
        d[static_cast<std::size_t>((i + 1) % n)][static_cast<std::size_t>(i)] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto& dij = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                dij = std::min(dij, d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                                        d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
            }
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int dij = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = dij >= 1 && dij <= m;
        }
    return adj;
}

}  // namespace brute
