#pragma once

#include <cstdint>
#include <string>

#include "periscope/closeness.hpp"
#include "periscope/graph.hpp"

namespace periscope {

// Vertex peripherality: peri(v) counts vertices u with n(u,v) > n(v,u).
std::int64_t peri_vertex(const ClosenessCounts& cc, int v);
std::int64_t peri_graph(const ClosenessCounts& cc);

/// Dominant pair: edge {u,v} and vertex x with n(x,u) > n(u,x) and
/// n(x,v) > n(v,x).
bool is_dominant(const ClosenessCounts& cc, int u, int v, int x);
std::int64_t eperi_edge(const Graph& g, const ClosenessCounts& cc, int u, int v);
std::int64_t eperi_graph(const Graph& g, const ClosenessCounts& cc);

std::int64_t espr_edge(const Graph& g, const ClosenessCounts& cc, int u, int v);
std::int64_t espr_graph(const Graph& g, const ClosenessCounts& cc);

/// sum_u deg(u) * sum_x n(x,u). Satisfies the exact identity
/// proxy = espr_graph + sum_{{u,v} in E} (n(u,v) + n(v,u)).
std::int64_t espr_degree_proxy(const Graph& g, const ClosenessCounts& cc);

std::int64_t mostar_pair(const ClosenessCounts& cc, int u, int v);
std::int64_t mostar_graph(const Graph& g, const ClosenessCounts& cc);
/// Total Mostar index Mo*: sums |n(u,v)-n(v,u)| over all vertex pairs.
std::int64_t total_mostar(const ClosenessCounts& cc);

std::int64_t nt_pair(const ClosenessCounts& cc, int u, int v);
/// Trinajstic index: sum over all vertex pairs of (n(u,v)-n(v,u))^2.
std::int64_t nt_graph(const ClosenessCounts& cc);

std::int64_t irr_edge(const Graph& g, int u, int v);
/// Degree-based, so defined for disconnected graphs as well.
std::int64_t irr_graph(const Graph& g);

bool is_nt_balanced(const ClosenessCounts& cc);
/// Requires histograms in cc.
bool is_ultra_nt_balanced(const ClosenessCounts& cc);

struct IndexReport {
    int n = 0;
    std::int64_t peri = 0;
    std::int64_t eperi = 0;
    std::int64_t espr = 0;
    std::int64_t mo = 0;
    std::int64_t mo_star = 0;
    std::int64_t nt = 0;
    std::int64_t irr = 0;
};

IndexReport compute_indices(const Graph& g);

/// JSON with stable field names {"n","peri","eperi","espr","mo","mo_star","nt","irr"}.
std::string to_json(const IndexReport& r);

}  // namespace periscope
