#include "periscope/indices.hpp"

#include <cmath>
#include <cstdlib>

#include "json.hpp"

namespace periscope {

namespace {

void require_edge(const Graph& g, int u, int v, const char* op) {
    if (!g.has_edge(u, v))
        throw GraphError(std::string(op) + ": {" + std::to_string(u) + "," + std::to_string(v) +
                         "} is not an edge");
}

// NT accumulates up to ~C(n,2)(n-2)^2 < n^4/2; keep well inside int64.
void check_nt_range(int n) {
    if (n > 50000) throw GraphError("nt_graph: n too large for 64-bit accumulation");
}

}  // namespace

std::int64_t peri_vertex(const ClosenessCounts& cc, int v) {
    std::int64_t p = 0;
    for (int u = 0; u < cc.vertex_count(); ++u)
        if (u != v && cc.count(u, v) > cc.count(v, u)) ++p;
    return p;
}

std::int64_t peri_graph(const ClosenessCounts& cc) {
    const int n = cc.vertex_count();
    std::int64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static) if (n > 128)
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (cc.count(u, v) != cc.count(v, u)) ++total;
    return total;
}

bool is_dominant(const ClosenessCounts& cc, int u, int v, int x) {
    return cc.count(x, u) > cc.count(u, x) && cc.count(x, v) > cc.count(v, x);
}

std::int64_t eperi_edge(const Graph& g, const ClosenessCounts& cc, int u, int v) {
    require_edge(g, u, v, "eperi_edge");
    std::int64_t c = 0;
    for (int x = 0; x < cc.vertex_count(); ++x)
        if (is_dominant(cc, u, v, x)) ++c;
    return c;
}

std::int64_t eperi_graph(const Graph& g, const ClosenessCounts& cc) {
    const auto es = g.edges();
    std::int64_t total = 0;
    const int n = cc.vertex_count();
#pragma omp parallel for reduction(+ : total) schedule(static) if (n > 128)
    for (std::size_t e = 0; e < es.size(); ++e) {
        auto [u, v] = es[e];
        for (int x = 0; x < n; ++x)
            if (is_dominant(cc, u, v, x)) ++total;
    }
    return total;
}

std::int64_t espr_edge(const Graph& g, const ClosenessCounts& cc, int u, int v) {
    require_edge(g, u, v, "espr_edge");
    std::int64_t s = 0;
    for (int x = 0; x < cc.vertex_count(); ++x)
        if (x != u && x != v) s += cc.count(x, u) + cc.count(x, v);
    return s;
}

std::int64_t espr_graph(const Graph& g, const ClosenessCounts& cc) {
    const auto es = g.edges();
    std::int64_t total = 0;
    const int n = cc.vertex_count();
#pragma omp parallel for reduction(+ : total) schedule(static) if (n > 128)
    for (std::size_t e = 0; e < es.size(); ++e) {
        auto [u, v] = es[e];
        for (int x = 0; x < n; ++x)
            if (x != u && x != v) total += cc.count(x, u) + cc.count(x, v);
    }
    return total;
}

std::int64_t espr_degree_proxy(const Graph& g, const ClosenessCounts& cc) {
    const int n = cc.vertex_count();
    std::int64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static) if (n > 128)
    for (int u = 0; u < n; ++u) {
        std::int64_t col = 0;
        for (int x = 0; x < n; ++x) col += cc.count(x, u);
        total += static_cast<std::int64_t>(g.degree(u)) * col;
    }
    return total;
}

std::int64_t mostar_pair(const ClosenessCounts& cc, int u, int v) {
    return std::abs(static_cast<std::int64_t>(cc.count(u, v)) - cc.count(v, u));
}

std::int64_t mostar_graph(const Graph& g, const ClosenessCounts& cc) {
    std::int64_t total = 0;
    g.for_each_edge([&](int u, int v) { total += mostar_pair(cc, u, v); });
    return total;
}

std::int64_t total_mostar(const ClosenessCounts& cc) {
    const int n = cc.vertex_count();
    std::int64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static) if (n > 128)
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) total += mostar_pair(cc, u, v);
    return total;
}

std::int64_t nt_pair(const ClosenessCounts& cc, int u, int v) {
    std::int64_t d = static_cast<std::int64_t>(cc.count(u, v)) - cc.count(v, u);
    return d * d;
}

std::int64_t nt_graph(const ClosenessCounts& cc) {
    const int n = cc.vertex_count();
    check_nt_range(n);
    std::int64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static) if (n > 128)
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) total += nt_pair(cc, u, v);
    return total;
}

std::int64_t irr_edge(const Graph& g, int u, int v) {
    require_edge(g, u, v, "irr_edge");
    return std::abs(g.degree(u) - g.degree(v));
}

std::int64_t irr_graph(const Graph& g) {
    std::int64_t total = 0;
    g.for_each_edge([&](int u, int v) { total += std::abs(g.degree(u) - g.degree(v)); });
    return total;
}

bool is_nt_balanced(const ClosenessCounts& cc) {
    const int n = cc.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (cc.count(u, v) != cc.count(v, u)) return false;
    return true;
}

bool is_ultra_nt_balanced(const ClosenessCounts& cc) {
    const int n = cc.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!cc.pair_histogram_symmetric(u, v)) return false;
    return true;
}

IndexReport compute_indices(const Graph& g) {
    ClosenessCounts cc = closeness_counts(g, /*with_histograms=*/false);
    IndexReport r;
    r.n = g.vertex_count();
    r.peri = peri_graph(cc);
    r.eperi = eperi_graph(g, cc);
    r.espr = espr_graph(g, cc);
    r.mo = mostar_graph(g, cc);
    r.mo_star = total_mostar(cc);
    r.nt = nt_graph(cc);
    r.irr = irr_graph(g);
    return r;
}

std::string to_json(const IndexReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["peri"] = r.peri;
    j["eperi"] = r.eperi;
    j["espr"] = r.espr;
    j["mo"] = r.mo;
    j["mo_star"] = r.mo_star;
    j["nt"] = r.nt;
    j["irr"] = r.irr;
    return j.dump();
}

}  // namespace periscope
