#include <string>
#include <vector>

#include "json.hpp"
#include "periscope/graph.hpp"

namespace periscope {

namespace {

// graph6 size header N(n): one char for n <= 62, '~' + 3 chars up to 258047.
int parse_g6_size(std::string_view s, std::size_t& pos) {
    if (pos >= s.size()) throw ParseError("graph6: empty input");
    unsigned char c = s[pos];
    if (c == 126) {
        if (pos + 1 < s.size() && s[pos + 1] == 126)
            throw ParseError("graph6: >258047 vertices not supported");
        if (pos + 3 >= s.size()) throw ParseError("graph6: truncated size header");
        int n = 0;
        for (int k = 1; k <= 3; ++k) {
            unsigned char d = s[pos + k];
            if (d < 63 || d > 126) throw ParseError("graph6: invalid size byte");
            n = (n << 6) | (d - 63);
        }
        pos += 4;
        return n;
    }
    if (c < 63 || c > 126) throw ParseError("graph6: invalid size byte");
    ++pos;
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    // Tolerate the optional ">>graph6<<" prefix and trailing newline.
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    std::size_t pos = 0;
    const int n = parse_g6_size(text, pos);
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() - pos != nbytes)
        throw ParseError("graph6: expected " + std::to_string(nbytes) + " data bytes, got " +
                         std::to_string(text.size() - pos));

    std::vector<VertexSet> adj(n, VertexSet(n));
    std::size_t bit = 0;
    for (std::size_t k = 0; k < nbytes; ++k) {
        unsigned char c = text[pos + k];
        if (c < 63 || c > 126) throw ParseError("graph6: invalid data byte");
        int val = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            bool on = (val >> b) & 1;
            if (bit >= nbits) {
                if (on) throw ParseError("graph6: nonzero padding bits");
                continue;
            }
            if (on) {
                // Column-major upper triangle: bit index -> (i, j), i < j.
                std::size_t r = bit;
                int j = 1;
                while (r >= static_cast<std::size_t>(j)) r -= j, ++j;
                int i = static_cast<int>(r);
                adj[i].set(j);
                adj[j].set(i);
            }
        }
    }
    return make_graph_unchecked(n, std::move(adj));
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = nb = 0;
            }
        }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

Graph parse_json_edge_list(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("edge list JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("edge list JSON: expected {\"n\":..., \"edges\":[...]}");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge list JSON: bad edge entry");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edge_list(n, edges);
}

std::string to_json_edge_list(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto arr = nlohmann::json::array();
    g.for_each_edge([&](int u, int v) { arr.push_back({u, v}); });
    j["edges"] = std::move(arr);
    return j.dump();
}

}  // namespace periscope
