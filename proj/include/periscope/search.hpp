#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "periscope/constructions.hpp"
#include "periscope/graph.hpp"

namespace periscope {

enum class IndexKind { peri, eperi, espr, mo, mo_star, nt, irr };

IndexKind index_kind_from_string(const std::string& s);
std::string to_string(IndexKind k);
std::string to_string(GraphClass c);

/// Single-graph evaluation of one index kind (serial; callers parallelize
/// across graphs).
std::int64_t evaluate_index(const Graph& g, IndexKind kind);

struct SearchResult {
    int n = 0;
    GraphClass cls = GraphClass::connected_graphs;
    IndexKind index = IndexKind::peri;
    std::int64_t max_value = 0;
    std::vector<std::string> witnesses;  // canonical graph6, sorted
    std::size_t enumerated_count = 0;
};

/// Exact maximum of an index over all isomorphism classes at fixed n, with
/// every maximizing witness. Index evaluation is parallel across graphs.
SearchResult maximize_index(int n, GraphClass cls, IndexKind index);

std::string to_json(const SearchResult& r);

/// All connected n-vertex graphs with NT(G) = 0, optionally filtered to
/// those that are NOT ultra NT-balanced (conjecturally none). n <= 9.
std::vector<Graph> find_nt_balanced(int n, bool require_not_ultra);

}  // namespace periscope
