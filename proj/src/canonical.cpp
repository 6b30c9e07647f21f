#include "periscope/canonical.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "periscope/distance.hpp"

namespace periscope {

namespace {

// Iterated color refinement seeded with (degree, sorted distance row).
// Color ids are assigned by sorting signatures, so they are
// isomorphism-invariant.
std::vector<int> refined_colors(const Graph& g) {
    const int n = g.vertex_count();
    const DistanceMatrix dm = distance_matrix_serial(g);

    std::vector<int> color(n);
    {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].assign(dm.row(v), dm.row(v) + n);
            std::sort(sig[v].begin(), sig[v].end());
        }
        std::map<std::vector<int>, int> ids;
        for (const auto& s : sig) ids[s] = 0;
        int next = 0;
        for (auto& [_, id] : ids) id = next++;
        for (int v = 0; v < n; ++v) color[v] = ids[sig[v]];
    }

    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            g.neighbors(v).for_each([&](int u) { nb.push_back(color[u]); });
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
        }
        std::map<std::pair<int, std::vector<int>>, int> ids;
        for (const auto& s : sig) ids[s] = 0;
        int next = 0;
        for (auto& [_, id] : ids) id = next++;
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            int c = ids[sig[v]];
            changed |= c != color[v];
            color[v] = c;
        }
        if (!changed) break;
    }
    return color;
}

struct CanonSearch {
    const Graph* g = nullptr;
    int n = 0;
    std::vector<int> color;
    std::vector<int> twin_rep;  // rep r: transposition (v, r) is an automorphism
    std::vector<int> perm;      // position -> vertex
    std::vector<std::uint8_t> placed;
    std::vector<std::uint8_t> cur;
    std::vector<std::uint8_t> best;
    std::vector<int> best_perm;
    bool have_best = false;

    void compute_twins() {
        twin_rep.resize(n);
        for (int v = 0; v < n; ++v) {
            twin_rep[v] = v;
            for (int u = 0; u < v; ++u) {
                if (twin_rep[u] != u || color[u] != color[v]) continue;
                std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
                if ((g->row_bits(u) & mask) == (g->row_bits(v) & mask)) {
                    twin_rep[v] = u;
                    break;
                }
            }
        }
    }

    // cur (some prefix length) vs the same-length prefix of best.
    int compare_prefix() const {
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] != best[i]) return cur[i] < best[i] ? -1 : 1;
        }
        return 0;
    }

    void dfs(int pos) {
        if (pos == n) {
            if (!have_best || compare_prefix() < 0) {
                best = cur;
                best_perm = perm;
                have_best = true;
            }
            return;
        }
        int want = -1;
        for (int v = 0; v < n; ++v)
            if (!placed[v] && (want == -1 || color[v] < want)) want = color[v];

        std::uint64_t tried = 0;
        for (int v = 0; v < n; ++v) {
            if (placed[v] || color[v] != want) continue;
            // Unplaced twins are interchangeable by an automorphism fixing
            // everything else, so one per class is enough.
            if (tried & (std::uint64_t{1} << twin_rep[v])) continue;
            tried |= std::uint64_t{1} << twin_rep[v];

            const std::size_t base = cur.size();
            for (int q = 0; q < pos; ++q) cur.push_back(g->has_edge(perm[q], v) ? 1 : 0);
            if (!have_best || compare_prefix() <= 0) {
                perm[pos] = v;
                placed[v] = 1;
                dfs(pos + 1);
                placed[v] = 0;
            }
            cur.resize(base);
        }
    }
};

std::pair<std::vector<std::uint8_t>, std::vector<int>> canonical_bits_and_perm(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 11) throw GraphError("canonical labeling supports n <= 11 only");
    CanonSearch s;
    s.g = &g;
    s.n = n;
    s.color = refined_colors(g);
    s.compute_twins();
    s.perm.assign(n, -1);
    s.placed.assign(n, 0);
    s.cur.reserve(n * (n - 1) / 2);
    s.dfs(0);
    return {std::move(s.best), std::move(s.best_perm)};
}

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
    auto [bits, perm] = canonical_bits_and_perm(g);
    std::uint64_t key = static_cast<std::uint64_t>(g.vertex_count()) << 56;
    for (std::size_t i = 0; i < bits.size(); ++i) key |= static_cast<std::uint64_t>(bits[i]) << i;
    return key;
}

Graph canonical_graph(const Graph& g) {
    auto [bits, perm] = canonical_bits_and_perm(g);
    const int n = g.vertex_count();
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p) pos[perm[p]] = p;
    std::vector<std::pair<int, int>> es;
    g.for_each_edge([&](int u, int v) { es.emplace_back(pos[u], pos[v]); });
    return Graph::from_edge_list(n, es);
}

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_graph(g)); }

}  // namespace periscope
