#pragma once

#include <span>

#include "periscope/graph.hpp"

namespace periscope {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph complete_tripartite(int a, int b, int c);
/// Star with k leaves (center = vertex 0).
Graph star_graph(int k);

/// Spider: center vertex 0, legs laid out consecutively. All legs >= 1.
Graph spider(std::span<const int> legs);
Graph spider(std::initializer_list<int> legs);
/// S_{a,b}: a legs of length b, ab+1 vertices, center 0.
Graph balanced_spider(int a, int b);

/// alpha = (sqrt(3)-1)/2, the ratio of consecutive clique sizes in the
/// edge-peripherality extremal family.
double eperi_extremal_alpha();

/// Clique-chain family maximizing eperi asymptotically: cliques of sizes
/// floor(s/(1-alpha)) and floor(s*alpha^i), each joined to a central vertex
/// by a chain whose length shrinks with i. Labeling: center v = 0, then
/// cliques in order i = -1, 0, ..., i_max, then chains in the same order.
/// Requires s >= 8; the arm holding the biggest clique must stay under half
/// the vertices (validated), which fails for smaller s.
Graph eperi_extremal(int s);

/// n = 4s+1 family maximizing espr asymptotically: four s-cliques a,b,c,d
/// with joins a-b and c-d, plus a vertex v adjacent to every b_i and c_i.
/// Labeling: a_i = i-1, b_i = s+i-1, c_i = 2s+i-1, d_i = 3s+i-1, v = 4s.
Graph espr_extremal(int s);

/// Clique on ceil(n/2) vertices with floor(n/2) pendants, one per clique
/// vertex, lowest-index clique vertices first. Clique vertex i's pendant is
/// vertex ceil(n/2)+i.
Graph pendant_clique(int n);

/// 14 vertices: 8 cube vertices (0..7, degree 3) then 6 face centers
/// (8..13, degree 4); edges join each cube vertex to its incident faces.
Graph rhombic_dodecahedron();

/// 32 vertices: 20 degree-3 vertices (0..19) then 12 degree-5 vertices
/// (20..31); 60 edges. Built as the vertex-face incidence structure of the
/// icosahedron.
Graph rhombic_triacontahedron();

enum class GraphClass { trees, connected_graphs };

/// Explicit peri-maximizing witnesses for 3 <= n <= 8.
Graph table1_witness(int n, GraphClass cls);

/// Exact maximum peri value the witness achieves, same range.
int table1_value(int n, GraphClass cls);

}  // namespace periscope
