#pragma once

#include <cstdint>
#include <vector>

#include "periscope/graph.hpp"

namespace periscope {

/// All-pairs BFS hop distances. Unreachable pairs carry a sentinel that is
/// strictly greater than any finite distance.
class DistanceMatrix {
public:
    static constexpr std::uint16_t kUnreachable = 0xffff;

    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<std::uint16_t> d) : n_(n), d_(std::move(d)) {}

    int vertex_count() const { return n_; }
    std::uint16_t operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }

    const std::uint16_t* row(int u) const { return d_.data() + static_cast<std::size_t>(u) * n_; }

    bool all_finite() const;
    /// Largest finite entry.
    int max_finite() const;

private:
    int n_ = 0;
    std::vector<std::uint16_t> d_;
};

/// OpenMP-parallel over BFS sources.
DistanceMatrix distance_matrix(const Graph& g);
/// Single-threaded reference; must produce identical output.
DistanceMatrix distance_matrix_serial(const Graph& g);

bool is_connected(const Graph& g);

/// Max finite distance. Throws DisconnectedError on disconnected input.
int diameter(const Graph& g);

}  // namespace periscope
