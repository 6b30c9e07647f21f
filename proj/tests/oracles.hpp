// Definition-literal reference implementations, independent of the library's
// computation paths. Deliberately naive: Floyd-Warshall distances, triple and
// quadruple loops straight from the definitions, full permutation scans.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "periscope/graph.hpp"
#include "periscope/rng.hpp"

namespace oracle {

constexpr int kInf = 1 << 20;

inline std::vector<std::vector<int>> floyd_warshall(const periscope::Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    g.for_each_edge([&](int u, int v) { d[u][v] = d[v][u] = 1; });
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

// n_G(u,v) by the definition: vertices x with d(x,u) < d(x,v).
inline std::vector<std::vector<std::int64_t>> closer_counts(const periscope::Graph& g) {
    const auto d = floyd_warshall(g);
    const int n = g.vertex_count();
    std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            for (int x = 0; x < n; ++x)
                if (d[x][u] < d[x][v]) ++c[u][v];
        }
    return c;
}

inline std::int64_t peri(const periscope::Graph& g) {
    const auto c = closer_counts(g);
    const int n = g.vertex_count();
    std::int64_t total = 0;
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (u != v && c[u][v] > c[v][u]) ++total;
    return total;
}

inline std::int64_t eperi(const periscope::Graph& g) {
    const auto c = closer_counts(g);
    std::int64_t total = 0;
    g.for_each_edge([&](int u, int v) {
        for (int x = 0; x < g.vertex_count(); ++x)
            if (c[x][u] > c[u][x] && c[x][v] > c[v][x]) ++total;
    });
    return total;
}

inline std::int64_t espr(const periscope::Graph& g) {
    const auto c = closer_counts(g);
    std::int64_t total = 0;
    g.for_each_edge([&](int u, int v) {
        for (int x = 0; x < g.vertex_count(); ++x)
            if (x != u && x != v) total += c[x][u] + c[x][v];
    });
    return total;
}

inline std::int64_t mostar(const periscope::Graph& g) {
    const auto c = closer_counts(g);
    std::int64_t total = 0;
    g.for_each_edge([&](int u, int v) { total += std::abs(c[u][v] - c[v][u]); });
    return total;
}

inline std::int64_t total_mostar(const periscope::Graph& g) {
    const auto c = closer_counts(g);
    std::int64_t total = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) total += std::abs(c[u][v] - c[v][u]);
    return total;
}

inline std::int64_t nt(const periscope::Graph& g) {
    const auto c = closer_counts(g);
    std::int64_t total = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            total += (c[u][v] - c[v][u]) * (c[u][v] - c[v][u]);
    return total;
}

inline std::int64_t irr(const periscope::Graph& g) {
    std::int64_t total = 0;
    g.for_each_edge([&](int u, int v) { total += std::abs(g.degree(u) - g.degree(v)); });
    return total;
}

// n_a(u,v) straight from the definition.
inline std::int64_t shifted_count(const periscope::Graph& g, int a, int u, int v) {
    const auto d = floyd_warshall(g);
    std::int64_t c = 0;
    for (int x = 0; x < g.vertex_count(); ++x)
        if (d[x][u] < a + d[x][v]) ++c;
    return c;
}

inline bool is_automorphism(const periscope::Graph& g, const std::vector<int>& p) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v) != g.has_edge(p[u], p[v])) return false;
    return true;
}

inline bool has_nontrivial_automorphism(const periscope::Graph& g) {
    std::vector<int> p(g.vertex_count());
    std::iota(p.begin(), p.end(), 0);
    while (std::next_permutation(p.begin(), p.end()))
        if (is_automorphism(g, p)) return true;
    return false;
}

inline std::int64_t automorphism_count(const periscope::Graph& g) {
    std::vector<int> p(g.vertex_count());
    std::iota(p.begin(), p.end(), 0);
    std::int64_t c = 0;
    do {
        if (is_automorphism(g, p)) ++c;
    } while (std::next_permutation(p.begin(), p.end()));
    return c;
}

inline bool isomorphic(const periscope::Graph& g, const periscope::Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> p(g.vertex_count());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < g.vertex_count() && ok; ++u)
            for (int v = u + 1; v < g.vertex_count() && ok; ++v)
                ok = g.has_edge(u, v) == h.has_edge(p[u], p[v]);
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Independent graph6 encoder: materializes the whole bit vector first, then
// packs (the library streams 6-bit groups directly).
inline std::string graph6_encode(const periscope::Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    out.push_back(static_cast<char>(n + 63));  // n <= 62 is enough for tests
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
    while (bits.size() % 6 != 0) bits.push_back(0);
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int val = 0;
        for (int b = 0; b < 6; ++b) val = val * 2 + bits[k + b];
        out.push_back(static_cast<char>(val + 63));
    }
    return out;
}

inline periscope::Graph random_graph(int n, double p, std::uint64_t seed) {
    periscope::SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < p) es.emplace_back(u, v);
    return periscope::Graph::from_edge_list(n, es);
}

inline bool connected_mask(int n, std::uint64_t mask) {
    // mask bit order: pair (i,j), i<j, column-major as in graph6.
    std::vector<std::uint64_t> adj(n, 0);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1) {
                adj[i] |= std::uint64_t{1} << j;
                adj[j] |= std::uint64_t{1} << i;
            }
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (std::uint64_t{1} << n) - 1;
}

inline std::int64_t count_labeled_connected(int n) {
    const int pairs = n * (n - 1) / 2;
    std::int64_t c = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
        if (connected_mask(n, mask)) ++c;
    return c;
}

}  // namespace oracle
