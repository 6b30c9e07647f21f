#include <algorithm>
#include <map>
#include <vector>

#include "periscope/distance.hpp"
#include "periscope/graph.hpp"

namespace periscope {

namespace {

// Ordered-degree + distance-multiset vertex classes; automorphisms map
// within classes only.
std::vector<int> invariant_classes(const Graph& g) {
    const int n = g.vertex_count();
    const DistanceMatrix dm = distance_matrix_serial(g);
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
        sig[v].assign(dm.row(v), dm.row(v) + n);
        std::sort(sig[v].begin(), sig[v].end());
        sig[v].push_back(g.degree(v));
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& s : sig) ids.emplace(s, static_cast<int>(ids.size()));
    std::vector<int> cls(n);
    for (int v = 0; v < n; ++v) cls[v] = ids[sig[v]];
    return cls;
}

struct AutoSearch {
    const Graph* g;
    int n;
    std::vector<int> cls;
    std::vector<int> image;
    std::vector<std::uint8_t> used;

    // Searches for any non-identity adjacency-preserving permutation.
    bool dfs(int v, bool identity_so_far) {
        if (v == n) return !identity_so_far;
        for (int w = 0; w < n; ++w) {
            if (used[w] || cls[w] != cls[v]) continue;
            // Last chance to deviate: pure identity extension can't succeed.
            if (identity_so_far && w == v) {
                bool can_deviate = false;
                for (int x = v; x < n && !can_deviate; ++x)
                    for (int y = x + 1; y < n; ++y)
                        if (cls[x] == cls[y]) {
                            can_deviate = true;
                            break;
                        }
                if (!can_deviate) return false;
            }
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = g->has_edge(u, v) == g->has_edge(image[u], w);
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            if (dfs(v + 1, identity_so_far && w == v)) return true;
            used[w] = 0;
        }
        return false;
    }
};

}  // namespace

bool has_nontrivial_automorphism(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) return false;
    AutoSearch s;
    s.g = &g;
    s.n = n;
    s.cls = invariant_classes(g);
    // Every class a singleton forces the identity.
    {
        std::vector<int> count(n, 0);
        bool any = false;
        for (int v = 0; v < n; ++v)
            if (++count[s.cls[v]] > 1) any = true;
        if (!any) return false;
    }
    s.image.assign(n, -1);
    s.used.assign(n, 0);
    return s.dfs(0, true);
}

}  // namespace periscope
