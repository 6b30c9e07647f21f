#include "periscope/enumerate.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "periscope/canonical.hpp"
#include "periscope/distance.hpp"

namespace periscope {

namespace {

// Extend g by one vertex adjacent to the (nonempty) subset encoded in mask.
// Every connected (k+1)-vertex graph arises this way from some connected
// k-vertex graph, because removing a non-cut vertex keeps it connected.
Graph extend(const Graph& g, unsigned mask) {
    const int k = g.vertex_count();
    std::vector<std::pair<int, int>> es = g.edges();
    for (int v = 0; v < k; ++v)
        if ((mask >> v) & 1) es.emplace_back(v, k);
    return Graph::from_edge_list(k + 1, es);
}

// Rebuild the canonical graph a key encodes: n in the top byte, then the
// upper-triangle bits in column-major pair order.
Graph key_to_graph(std::uint64_t key) {
    const int n = static_cast<int>(key >> 56);
    std::vector<std::pair<int, int>> es;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((key >> bit) & 1) es.emplace_back(i, j);
    return Graph::from_edge_list(n, es);
}

}  // namespace

std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 1 || n > 9)
        throw GraphError("enumerate_connected_graphs: n must be in 1..9 (larger n rejected)");

    std::vector<Graph> level = {Graph::from_edge_list(1, {})};
    for (int k = 1; k < n; ++k) {
        const unsigned nmasks = (1u << k) - 1;  // nonempty subsets
        std::vector<std::uint64_t> keys(level.size() * nmasks);
        const std::int64_t total = static_cast<std::int64_t>(level.size()) * nmasks;
#pragma omp parallel for schedule(dynamic, 64)
        for (std::int64_t t = 0; t < total; ++t) {
            std::size_t i = static_cast<std::size_t>(t) / nmasks;
            unsigned m = static_cast<unsigned>(t % nmasks) + 1;
            keys[t] = canonical_key(extend(level[i], m));
        }
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        level.clear();
        level.reserve(keys.size());
        for (std::uint64_t key : keys) level.push_back(key_to_graph(key));
    }
    return level;
}

void enumerate_connected_graphs(int n, const std::function<void(const Graph&)>& cb) {
    for (const Graph& g : enumerate_connected_graphs(n)) cb(g);
}

namespace {

// AHU subtree code: children codes sorted and concatenated inside parens.
std::string ahu(const Graph& g, int v, int parent) {
    std::vector<std::string> kids;
    g.neighbors(v).for_each([&](int u) {
        if (u != parent) kids.push_back(ahu(g, u, v));
    });
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    out += ")";
    return out;
}

// Centers of a tree by iterative leaf stripping (1 or 2 of them).
std::vector<int> tree_centers(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 1) return {0};
    std::vector<int> deg(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    std::vector<std::uint8_t> removed(n, 0);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
            g.neighbors(v).for_each([&](int u) {
                if (!removed[u] && --deg[u] == 1) next.push_back(u);
            });
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) centers.push_back(v);
    return centers;
}

}  // namespace

std::string tree_canonical_code(const Graph& g) {
    if (g.edge_count() != g.vertex_count() - 1 || !is_connected(g))
        throw GraphError("tree_canonical_code: input is not a tree");
    std::vector<int> centers = tree_centers(g);
    if (centers.size() == 1) return ahu(g, centers[0], -1);
    std::string a = ahu(g, centers[0], centers[1]);
    std::string b = ahu(g, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return "(" + a + b + ")";
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > 12) throw GraphError("enumerate_trees: n must be in 1..12");
    std::vector<Graph> level = {Graph::from_edge_list(1, {})};
    for (int k = 1; k < n; ++k) {
        std::unordered_map<std::string, Graph> seen;
        for (const Graph& t : level)
            for (int v = 0; v < k; ++v) {
                std::vector<std::pair<int, int>> es = t.edges();
                es.emplace_back(v, k);
                Graph h = Graph::from_edge_list(k + 1, es);
                seen.try_emplace(tree_canonical_code(h), std::move(h));
            }
        std::vector<std::pair<std::string, Graph>> sorted(seen.begin(), seen.end());
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        for (auto& [_, g] : sorted) level.push_back(std::move(g));
    }
    return level;
}

void enumerate_trees(int n, const std::function<void(const Graph&)>& cb) {
    for (const Graph& g : enumerate_trees(n)) cb(g);
}

}  // namespace periscope
