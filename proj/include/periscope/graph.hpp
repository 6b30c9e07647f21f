#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace periscope {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : GraphError {
    using GraphError::GraphError;
};

struct DisconnectedError : GraphError {
    using GraphError::GraphError;
};

/// Fixed-capacity set of vertex indices backed by 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe_size() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const;

    /// Calls f(v) for every member, ascending.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t bits = w_[k];
            while (bits) {
                int b = __builtin_ctzll(bits);
                f(static_cast<int>(k * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> to_vector() const;

    bool operator==(const VertexSet&) const = default;

    std::span<const std::uint64_t> words() const { return w_; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Immutable simple undirected graph on vertices 0..n-1 with bitset adjacency.
class Graph {
public:
    Graph() = default;

    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(int u) const { return adj_[u]; }
    int degree(int u) const { return deg_[u]; }

    /// Degrees sorted ascending.
    std::vector<int> degree_sequence() const;
    bool is_regular() const;

    std::vector<std::pair<int, int>> edges() const;

    /// Calls f(u, v) once per edge with u < v.
    template <class F>
    void for_each_edge(F&& f) const {
        for (int u = 0; u < n_; ++u)
            adj_[u].for_each([&](int v) {
                if (v > u) f(u, v);
            });
    }

    /// Adjacency row as a bitmask; only valid for n <= 64.
    std::uint64_t row_bits(int u) const { return n_ == 0 ? 0 : adj_[u].words()[0]; }

    bool operator==(const Graph&) const = default;

private:
    friend Graph make_graph_unchecked(int n, std::vector<VertexSet> adj);

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<int> deg_;
};

/// Internal constructor for callers that already guarantee a symmetric,
/// loop-free adjacency structure.
Graph make_graph_unchecked(int n, std::vector<VertexSet> adj);

/// Product vertex (i,j) maps to index i*|V(H)|+j; distances add coordinatewise.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Brute-force with degree/distance-profile pruning; intended for n <= 10.
bool has_nontrivial_automorphism(const Graph& g);

struct Bipartition {
    VertexSet side_a;
    VertexSet side_b;
};

/// A valid 2-coloring if one exists (unique up to swap on connected graphs).
std::optional<Bipartition> bipartition(const Graph& g);

// graph6 interchange (de-facto standard 6-bit encoding, bias 63).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// JSON edge list {"n": int, "edges": [[u,v],...]}.
Graph parse_json_edge_list(std::string_view text);
std::string to_json_edge_list(const Graph& g);

}  // namespace periscope
