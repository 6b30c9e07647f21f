#include "periscope/closeness.hpp"

#include <stdexcept>

namespace periscope {

ClosenessCounts closeness_counts_impl(const Graph& g, bool with_histograms, bool parallel) {
    const int n = g.vertex_count();
    if (n == 0) throw DisconnectedError("closeness_counts: empty graph");
    const DistanceMatrix d = parallel ? distance_matrix(g) : distance_matrix_serial(g);
    if (!d.all_finite())
        throw DisconnectedError("closeness_counts: indices are defined on connected graphs only");

    ClosenessCounts cc;
    cc.n_ = n;
    cc.diam_ = d.max_finite();
    cc.counts_.assign(static_cast<std::size_t>(n) * n, 0);
    if (with_histograms) {
        cc.stride_ = 2 * cc.diam_ + 1;
        cc.hist_.assign(static_cast<std::size_t>(n) * (n - 1) / 2 * cc.stride_, 0);
    }

#pragma omp parallel for schedule(dynamic, 4) if (parallel && n > 64)
    for (int u = 0; u < n; ++u) {
        const std::uint16_t* du = d.row(u);
        for (int v = u + 1; v < n; ++v) {
            const std::uint16_t* dv = d.row(v);
            std::int32_t closer_u = 0, closer_v = 0;
            if (with_histograms) {
                std::int32_t* h = cc.hist_.data() + cc.pair_index(u, v) * cc.stride_ + cc.diam_;
                for (int x = 0; x < n; ++x) {
                    int diff = static_cast<int>(du[x]) - static_cast<int>(dv[x]);
                    ++h[diff];
                    closer_u += diff < 0;
                    closer_v += diff > 0;
                }
            } else {
                for (int x = 0; x < n; ++x) {
                    int diff = static_cast<int>(du[x]) - static_cast<int>(dv[x]);
                    closer_u += diff < 0;
                    closer_v += diff > 0;
                }
            }
            cc.counts_[static_cast<std::size_t>(u) * n + v] = closer_u;
            cc.counts_[static_cast<std::size_t>(v) * n + u] = closer_v;
        }
    }
    return cc;
}

ClosenessCounts closeness_counts(const Graph& g, bool with_histograms) {
    return closeness_counts_impl(g, with_histograms, true);
}

ClosenessCounts closeness_counts_serial(const Graph& g, bool with_histograms) {
    return closeness_counts_impl(g, with_histograms, false);
}

std::int32_t ClosenessCounts::histogram(int u, int v, int k) const {
    if (hist_.empty()) throw std::logic_error("ClosenessCounts built without histograms");
    if (u > v) {
        std::swap(u, v);
        k = -k;
    }
    if (k < -diam_ || k > diam_) return 0;
    return hist_[pair_index(u, v) * stride_ + diam_ + k];
}

std::int64_t ClosenessCounts::shifted_count(int a, int u, int v) const {
    if (u == v) throw std::invalid_argument("shifted_count: u == v");
    if (hist_.empty()) throw std::logic_error("ClosenessCounts built without histograms");
    // n_a(u,v) = #{x : d(x,u) - d(x,v) < a}.
    std::int64_t total = 0;
    for (int k = -diam_; k <= diam_ && k < a; ++k) total += histogram(u, v, k);
    return total;
}

bool ClosenessCounts::pair_histogram_symmetric(int u, int v) const {
    for (int k = 1; k <= diam_; ++k)
        if (histogram(u, v, k) != histogram(u, v, -k)) return false;
    return true;
}

}  // namespace periscope
