#include "periscope/constructions.hpp"

#include <array>
#include <cmath>
#include <numeric>

namespace periscope {

namespace {

// Guarded floor: values like s*alpha^i that are analytically integral must
// not land one below due to rounding.
long guarded_floor(double x) { return static_cast<long>(std::floor(x + 1e-9)); }

}  // namespace

Graph path_graph(int n) {
    if (n < 1) throw GraphError("path_graph: n must be >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle_graph: n must be >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, es);
}

Graph complete_graph(int n) {
    if (n < 1) throw GraphError("complete_graph: n must be >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edge_list(n, es);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw GraphError("complete_bipartite: sides must be >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return Graph::from_edge_list(a + b, es);
}

Graph complete_tripartite(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw GraphError("complete_tripartite: parts must be >= 1");
    const int n = a + b + c;
    auto part = [a, b](int v) { return v < a ? 0 : (v < a + b ? 1 : 2); };
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part(u) != part(v)) es.emplace_back(u, v);
    return Graph::from_edge_list(n, es);
}

Graph star_graph(int k) { return balanced_spider(k, 1); }

Graph spider(std::span<const int> legs) {
    if (legs.empty()) throw GraphError("spider: at least one leg required");
    int n = 1;
    for (int l : legs) {
        if (l < 1) throw GraphError("spider: leg lengths must be >= 1");
        n += l;
    }
    std::vector<std::pair<int, int>> es;
    int next = 1;
    for (int l : legs) {
        es.emplace_back(0, next);
        for (int j = 1; j < l; ++j) es.emplace_back(next + j - 1, next + j);
        next += l;
    }
    return Graph::from_edge_list(n, es);
}

Graph spider(std::initializer_list<int> legs) {
    return spider(std::span<const int>(legs.begin(), legs.size()));
}

Graph balanced_spider(int a, int b) {
    if (a < 1 || b < 1) throw GraphError("balanced_spider: a and b must be >= 1");
    std::vector<int> legs(a, b);
    return spider(legs);
}

double eperi_extremal_alpha() { return (std::sqrt(3.0) - 1.0) / 2.0; }

Graph eperi_extremal(int s) {
    if (s < 8) throw GraphError("eperi_extremal: s must be >= 8");
    const double alpha = eperi_extremal_alpha();

    // Clique sizes, indexed -1, 0, ..., i_max.
    std::vector<long> sizes;
    sizes.push_back(guarded_floor(s / (1.0 - alpha)));
    double t = s;
    while (guarded_floor(t) >= 1) {
        sizes.push_back(guarded_floor(t));
        t *= alpha;
    }
    const int i_max = static_cast<int>(sizes.size()) - 2;

    auto chain_len = [i_max](int i) { return 2 * i_max + 1 - 2 * i; };  // i = -1..i_max

    long n = 1;  // central vertex
    for (std::size_t k = 0; k < sizes.size(); ++k) n += sizes[k] + chain_len(static_cast<int>(k) - 1);

    // The arm holding the biggest clique must stay under half the vertices.
    if (2 * (sizes[0] + chain_len(-1)) >= n)
        throw GraphError("eperi_extremal: largest arm holds at least half the vertices");

    std::vector<std::pair<int, int>> es;
    std::vector<long> clique_start(sizes.size());
    long next = 1;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        clique_start[k] = next;
        for (long i = 0; i < sizes[k]; ++i)
            for (long j = i + 1; j < sizes[k]; ++j)
                es.emplace_back(static_cast<int>(next + i), static_cast<int>(next + j));
        next += sizes[k];
    }
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        const int len = chain_len(static_cast<int>(k) - 1);
        const long b0 = next;
        for (int j = 0; j + 1 < len; ++j)
            es.emplace_back(static_cast<int>(b0 + j), static_cast<int>(b0 + j + 1));
        es.emplace_back(static_cast<int>(clique_start[k]), static_cast<int>(b0));
        es.emplace_back(static_cast<int>(b0 + len - 1), 0);
        next += len;
    }
    return Graph::from_edge_list(static_cast<int>(n), es);
}

Graph espr_extremal(int s) {
    if (s < 1) throw GraphError("espr_extremal: s must be >= 1");
    const int n = 4 * s + 1;
    auto a = [](int i) { return i; };
    auto b = [s](int i) { return s + i; };
    auto c = [s](int i) { return 2 * s + i; };
    auto d = [s](int i) { return 3 * s + i; };
    const int v = 4 * s;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            es.emplace_back(a(i), a(j));
            es.emplace_back(b(i), b(j));
            es.emplace_back(c(i), c(j));
            es.emplace_back(d(i), d(j));
        }
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            es.emplace_back(a(i), b(j));
            es.emplace_back(c(i), d(j));
        }
    for (int i = 0; i < s; ++i) {
        es.emplace_back(v, b(i));
        es.emplace_back(v, c(i));
    }
    return Graph::from_edge_list(n, es);
}

Graph pendant_clique(int n) {
    if (n < 2) throw GraphError("pendant_clique: n must be >= 2");
    const int k = (n + 1) / 2;
    const int p = n / 2;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) es.emplace_back(i, j);
    for (int i = 0; i < p; ++i) es.emplace_back(i, k + i);
    return Graph::from_edge_list(n, es);
}

Graph rhombic_dodecahedron() {
    // Cube vertices 0..7 (3-bit coordinates), face centers 8..13 where face
    // (axis, value) has index 8 + 2*axis + value.
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < 8; ++v)
        for (int axis = 0; axis < 3; ++axis) es.emplace_back(v, 8 + 2 * axis + ((v >> axis) & 1));
    return Graph::from_edge_list(14, es);
}

Graph rhombic_triacontahedron() {
    // Icosahedron: apexes 0 and 11, rings a = 1..5 and b = 6..10, with b_i
    // adjacent to a_i and a_{i+1}. Its 20 faces become vertices 0..19 of the
    // output, its 12 vertices become vertices 20..31; edges are incidences.
    std::vector<std::array<int, 3>> faces;
    auto A = [](int i) { return 1 + (i % 5); };
    auto B = [](int i) { return 6 + (i % 5); };
    for (int i = 0; i < 5; ++i) faces.push_back({0, A(i), A(i + 1)});
    for (int i = 0; i < 5; ++i) faces.push_back({A(i), A(i + 1), B(i)});
    for (int i = 0; i < 5; ++i) faces.push_back({B(i), B(i + 1), A(i + 1)});
    for (int i = 0; i < 5; ++i) faces.push_back({11, B(i), B(i + 1)});

    std::vector<std::pair<int, int>> es;
    for (int f = 0; f < 20; ++f)
        for (int v : faces[f]) es.emplace_back(f, 20 + v);
    return Graph::from_edge_list(32, es);
}

Graph table1_witness(int n, GraphClass cls) {
    if (n < 3 || n > 8) throw GraphError("table1_witness: n must be in 3..8");
    if (cls == GraphClass::trees) {
        switch (n) {
            case 3: return path_graph(3);
            case 4: return path_graph(4);
            case 5: return spider({1, 1, 2});
            case 6: return spider({1, 2, 2});
            case 7: return spider({1, 2, 3});
            default: return spider({1, 1, 2, 3});
        }
    }
    switch (n) {
        case 3: return path_graph(3);
        case 4: return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
        case 5: return spider({1, 1, 2});
        case 6:
            return Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 4}});
        case 7: return spider({1, 2, 3});
        default:
            return Graph::from_edge_list(
                8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 5}});
    }
}

int table1_value(int n, GraphClass cls) {
    if (n < 1 || n > 8) throw GraphError("table1_value: n must be in 1..8");
    static constexpr int trees[9] = {0, 0, 0, 2, 4, 9, 13, 21, 27};
    static constexpr int graphs[9] = {0, 0, 0, 2, 5, 9, 15, 21, 28};
    return cls == GraphClass::trees ? trees[n] : graphs[n];
}

}  // namespace periscope
