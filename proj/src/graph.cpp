#include "periscope/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "json.hpp"

namespace periscope {

int VertexSet::count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
}

Graph make_graph_unchecked(int n, std::vector<VertexSet> adj) {
    Graph g;
    g.n_ = n;
    g.adj_ = std::move(adj);
    g.deg_.resize(n);
    long total = 0;
    for (int u = 0; u < n; ++u) {
        g.deg_[u] = g.adj_[u].count();
        total += g.deg_[u];
    }
    g.m_ = static_cast<int>(total / 2);
    return g;
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) throw GraphError("vertex count must be nonnegative");
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," +
                             std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        adj[u].set(v);
        adj[v].set(u);
    }
    return make_graph_unchecked(n, std::move(adj));
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d = deg_;
    std::sort(d.begin(), d.end());
    return d;
}

bool Graph::is_regular() const {
    for (int u = 1; u < n_; ++u)
        if (deg_[u] != deg_[0]) return false;
    return true;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for_each_edge([&](int u, int v) { out.emplace_back(u, v); });
    return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    const int n = ng * nh;
    std::vector<VertexSet> adj(n, VertexSet(n));
    auto id = [nh](int i, int j) { return i * nh + j; };
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < nh; ++j) {
            h.neighbors(j).for_each([&](int j2) { adj[id(i, j)].set(id(i, j2)); });
            g.neighbors(i).for_each([&](int i2) { adj[id(i, j)].set(id(i2, j)); });
        }
    return make_graph_unchecked(n, std::move(adj));
}

std::optional<Bipartition> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            bool odd = false;
            g.neighbors(u).for_each([&](int v) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    odd = true;
                }
            });
            if (odd) return std::nullopt;
        }
    }
    Bipartition b{VertexSet(n), VertexSet(n)};
    for (int u = 0; u < n; ++u)
        (color[u] == 0 ? b.side_a : b.side_b).set(u);
    return b;
}

}  // namespace periscope
