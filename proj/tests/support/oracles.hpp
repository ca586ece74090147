#pragma once

// Brute-force reference implementations used only by tests. None of these
// call into the library beyond reading a Graph's edges.

#include "outerturan/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle_ref {

using outerturan::Edge;
using outerturan::Graph;

inline std::vector<std::vector<int>> adjacency(const Graph &g)
{
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (auto e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

/// Drawn on a circle in order `pos` (pos[v] = slot), do two chords cross?
inline bool crosses(int a, int b, int c, int d)
{
    if (a > b)
        std::swap(a, b);
    if (c > d)
        std::swap(c, d);
    if (a == c || a == d || b == c || b == d)
        return false;
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

/// Outerplanar iff some circular arrangement has no crossing pair. Tries all
/// (n-1)! arrangements; keep n <= 9.
inline bool is_outerplanar_bruteforce(const Graph &g)
{
    const int n = g.vertex_count();
    if (n <= 3)
        return true;
    if (g.edge_count() > 2 * n - 3)
        return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const auto edges = g.edges();
    std::vector<int> pos(n);
    do {
        for (int i = 0; i < n; ++i)
            pos[perm[i]] = i;
        bool ok = true;
        for (std::size_t i = 0; ok && i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j)
                if (crosses(pos[edges[i].u], pos[edges[i].v], pos[edges[j].u], pos[edges[j].v])) {
                    ok = false;
                    break;
                }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return false;
}

/// All cycle lengths, by bitmask DP over paths from each minimum vertex. n <= 20.
inline std::set<int> cycle_lengths_bruteforce(const Graph &g)
{
    const int n = g.vertex_count();
    std::set<int> out;
    std::vector<std::uint32_t> nb(n, 0);
    for (auto e : g.edges()) {
        nb[e.u] |= 1U << e.v;
        nb[e.v] |= 1U << e.u;
    }
    for (int s = 0; s < n; ++s) {
        // reach[mask] = set of endpoints v of a path s..v using exactly mask, all ids >= s
        const int free_bits = n - s;
        std::vector<std::uint32_t> reach(std::size_t{1} << free_bits, 0);
        reach[1] = 1U; // relative ids: bit i = vertex s + i
        for (std::uint32_t mask = 1; mask < reach.size(); ++mask) {
            if (!(mask & 1U) || !reach[mask])
                continue;
            const int len = std::popcount(mask);
            for (int v = 0; v < free_bits; ++v) {
                if (!((reach[mask] >> v) & 1U))
                    continue;
                const std::uint32_t nv = nb[s + v] >> s;
                if (len >= 3 && (nv & 1U))
                    out.insert(len);
                std::uint32_t ext = nv & ~mask;
                while (ext) {
                    int w = std::countr_zero(ext);
                    ext &= ext - 1;
                    reach[mask | (1U << w)] |= 1U << w;
                }
            }
        }
    }
    return out;
}

/// Edge counts of all simple u-v paths (by exhaustive DFS).
inline std::set<int> path_lengths_bruteforce(const Graph &g, int u, int v)
{
    auto adj = adjacency(g);
    std::set<int> out;
    std::vector<char> used(g.vertex_count(), 0);
    auto dfs = [&](auto &self, int x, int len) -> void {
        if (x == v) {
            out.insert(len);
            return;
        }
        for (int y : adj[x])
            if (!used[y]) {
                used[y] = 1;
                self(self, y, len + 1);
                used[y] = 0;
            }
    };
    used[u] = 1;
    dfs(dfs, u, 0);
    return out;
}

/// ex_OP(n, C_k) by scanning every edge subset of K_n. n <= 6.
inline int ex_bruteforce(int n, int k)
{
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            all.emplace_back(a, b);
    int best = 0;
    const std::uint32_t total = 1U << all.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        const int e = std::popcount(mask);
        if (e <= best || e > 2 * n - 3)
            continue;
        std::vector<std::pair<int, int>> list;
        for (std::size_t i = 0; i < all.size(); ++i)
            if ((mask >> i) & 1U)
                list.push_back(all[i]);
        Graph g = outerturan::make_graph(n, list);
        if (cycle_lengths_bruteforce(g).count(k))
            continue;
        if (!is_outerplanar_bruteforce(g))
            continue;
        best = e;
    }
    return best;
}

/// Edge classes under "lie on a common 3-cycle"; edges on no triangle are singletons.
inline std::vector<std::vector<Edge>> triangle_classes(const Graph &g)
{
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < m; ++i)
        for (int w = 0; w < g.vertex_count(); ++w) {
            int a = g.edge_index(edges[i].u, w), b = g.edge_index(edges[i].v, w);
            if (a >= 0 && b >= 0) {
                parent[find(a)] = find(i);
                parent[find(b)] = find(i);
            }
        }
    std::vector<std::vector<Edge>> groups(m);
    for (int i = 0; i < m; ++i)
        groups[find(i)].push_back(edges[i]);
    std::vector<std::vector<Edge>> out;
    for (auto &grp : groups)
        if (!grp.empty()) {
            std::sort(grp.begin(), grp.end());
            out.push_back(grp);
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Uniform-ish random polygon triangulation on 0..n-1 (random ear splits).
inline Graph random_triangulation(int n, std::mt19937 &rng)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    if (n >= 3)
        edges.emplace_back(0, n - 1);
    std::vector<std::pair<int, int>> stack{{0, n - 1}};
    while (!stack.empty()) {
        auto [i, j] = stack.back();
        stack.pop_back();
        if (j - i < 2)
            continue;
        int m = std::uniform_int_distribution<int>(i + 1, j - 1)(rng);
        if (m - i >= 2)
            edges.emplace_back(i, m);
        if (j - m >= 2)
            edges.emplace_back(m, j);
        stack.emplace_back(i, m);
        stack.emplace_back(m, j);
    }
    return outerturan::make_graph(n, edges);
}

/// Relabels vertices by a random permutation, so tests do not lean on the
/// polygon numbering.
inline Graph shuffled(const Graph &g, std::mt19937 &rng)
{
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> list;
    for (auto e : g.edges())
        list.emplace_back(perm[e.u], perm[e.v]);
    return outerturan::make_graph(g.vertex_count(), list);
}

/// Drops each edge independently with probability `drop`.
inline Graph random_subgraph(const Graph &g, double drop, std::mt19937 &rng)
{
    std::bernoulli_distribution coin(drop);
    std::vector<bool> keep(g.edge_count());
    for (std::size_t i = 0; i < keep.size(); ++i)
        keep[i] = !coin(rng);
    return g.edge_subgraph(keep);
}

} // namespace oracle_ref
