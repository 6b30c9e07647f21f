#pragma once

#include <functional>
#include <vector>

#include "periscope/graph.hpp"

namespace periscope {

/// One canonical representative per isomorphism class of connected graphs.
/// Supported for 1 <= n <= 9 (n = 9 is slow); larger n is rejected.
std::vector<Graph> enumerate_connected_graphs(int n);

/// One representative per isomorphism class of free trees, 1 <= n <= 12.
std::vector<Graph> enumerate_trees(int n);

void enumerate_connected_graphs(int n, const std::function<void(const Graph&)>& cb);
void enumerate_trees(int n, const std::function<void(const Graph&)>& cb);

/// AHU canonical encoding of a free tree (centroid-rooted); equal strings
/// iff isomorphic. Input must be a tree.
std::string tree_canonical_code(const Graph& g);

}  // namespace periscope
