#pragma once

#include <cstdint>
#include <vector>

#include "periscope/graph.hpp"

namespace periscope {

/// Canonical labeling for small graphs (n <= 11): minimal upper-triangle
/// adjacency bitstring over permutations compatible with iterated
/// degree/neighborhood color refinement. Isomorphic graphs map to equal keys.
std::uint64_t canonical_key(const Graph& g);

/// The graph relabeled into its canonical ordering.
Graph canonical_graph(const Graph& g);

/// graph6 string of the canonical relabeling.
std::string canonical_graph6(const Graph& g);

}  // namespace periscope
