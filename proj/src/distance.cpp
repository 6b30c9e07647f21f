#include "periscope/distance.hpp"

#include <algorithm>
#include <vector>

namespace periscope {

namespace {

// BFS from src into row (length n, preset to kUnreachable).
void bfs_row(const Graph& g, int src, std::uint16_t* row, std::vector<int>& queue) {
    queue.clear();
    queue.push_back(src);
    row[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        std::uint16_t du = row[u];
        g.neighbors(u).for_each([&](int v) {
            if (row[v] == DistanceMatrix::kUnreachable) {
                row[v] = static_cast<std::uint16_t>(du + 1);
                queue.push_back(v);
            }
        });
    }
}

DistanceMatrix distance_matrix_impl(const Graph& g, bool parallel) {
    const int n = g.vertex_count();
    std::vector<std::uint16_t> d(static_cast<std::size_t>(n) * n, DistanceMatrix::kUnreachable);
#pragma omp parallel if (parallel && n > 64)
    {
        std::vector<int> queue;
        queue.reserve(n);
#pragma omp for schedule(dynamic, 16)
        for (int u = 0; u < n; ++u) bfs_row(g, u, d.data() + static_cast<std::size_t>(u) * n, queue);
    }
    return DistanceMatrix(n, std::move(d));
}

}  // namespace

bool DistanceMatrix::all_finite() const {
    for (std::uint16_t x : d_)
        if (x == kUnreachable) return false;
    return true;
}

int DistanceMatrix::max_finite() const {
    int m = 0;
    for (std::uint16_t x : d_)
        if (x != kUnreachable) m = std::max(m, static_cast<int>(x));
    return m;
}

DistanceMatrix distance_matrix(const Graph& g) { return distance_matrix_impl(g, true); }

DistanceMatrix distance_matrix_serial(const Graph& g) { return distance_matrix_impl(g, false); }

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<std::uint16_t> row(n, DistanceMatrix::kUnreachable);
    std::vector<int> queue;
    queue.reserve(n);
    bfs_row(g, 0, row.data(), queue);
    return static_cast<int>(queue.size()) == n;
}

int diameter(const Graph& g) {
    if (g.vertex_count() == 0) throw DisconnectedError("diameter: empty graph");
    DistanceMatrix d = distance_matrix(g);
    if (!d.all_finite()) throw DisconnectedError("diameter: graph is disconnected");
    return d.max_finite();
}

}  // namespace periscope
