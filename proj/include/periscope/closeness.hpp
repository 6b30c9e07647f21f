#pragma once

#include <cstdint>
#include <vector>

#include "periscope/distance.hpp"
#include "periscope/graph.hpp"

namespace periscope {

/// The full ordered closeness-count matrix: counts(u,v) is the number of
/// vertices x with d(x,u) < d(x,v). Optionally stores, for each unordered
/// pair {u,v} with u < v, the histogram of D(x) = d(x,u) - d(x,v) over all x,
/// which makes shifted counts and the ultra-balance check O(diam) per pair.
class ClosenessCounts {
public:
    ClosenessCounts() = default;

    int vertex_count() const { return n_; }
    int diameter() const { return diam_; }
    bool has_histograms() const { return !hist_.empty(); }

    std::int32_t count(int u, int v) const {
        return counts_[static_cast<std::size_t>(u) * n_ + v];
    }

    /// n_a(u,v): number of vertices x with d(x,u) < a + d(x,v).
    /// Requires histograms and u != v.
    std::int64_t shifted_count(int a, int u, int v) const;

    /// True iff the distance-difference histogram of {u,v} is symmetric
    /// about 0, i.e. N_a(u,v) = 0 for every integer shift a.
    bool pair_histogram_symmetric(int u, int v) const;

    /// Histogram entry for D(x) = d(x,u) - d(x,v) at value k (pairs are
    /// stored oriented with u < v; callers pass any orientation).
    std::int32_t histogram(int u, int v, int k) const;

private:
    friend ClosenessCounts closeness_counts(const Graph&, bool);
    friend ClosenessCounts closeness_counts_serial(const Graph&, bool);
    friend ClosenessCounts closeness_counts_impl(const Graph&, bool, bool);

    std::size_t pair_index(int u, int v) const {
        // u < v
        return static_cast<std::size_t>(u) * n_ - static_cast<std::size_t>(u) * (u + 1) / 2 +
               (v - u - 1);
    }

    int n_ = 0;
    int diam_ = 0;
    int stride_ = 0;  // 2*diam_+1 when histograms are stored
    std::vector<std::int32_t> counts_;
    std::vector<std::int32_t> hist_;  // C(n,2) blocks of stride_, offset diam_
};

/// Computes the closeness-count matrix (OpenMP-parallel over vertices).
/// Throws DisconnectedError: the indices are defined on connected graphs only.
ClosenessCounts closeness_counts(const Graph& g, bool with_histograms = true);

/// Single-threaded reference; identical output by construction.
ClosenessCounts closeness_counts_serial(const Graph& g, bool with_histograms = true);

}  // namespace periscope
