#include "periscope/search.hpp"

#include <algorithm>

#include "json.hpp"
#include "periscope/canonical.hpp"
#include "periscope/enumerate.hpp"
#include "periscope/indices.hpp"

namespace periscope {

IndexKind index_kind_from_string(const std::string& s) {
    if (s == "peri") return IndexKind::peri;
    if (s == "eperi") return IndexKind::eperi;
    if (s == "espr") return IndexKind::espr;
    if (s == "mo") return IndexKind::mo;
    if (s == "mo_star" || s == "mo*") return IndexKind::mo_star;
    if (s == "nt") return IndexKind::nt;
    if (s == "irr") return IndexKind::irr;
    throw GraphError("unknown index: " + s);
}

std::string to_string(IndexKind k) {
    switch (k) {
        case IndexKind::peri: return "peri";
        case IndexKind::eperi: return "eperi";
        case IndexKind::espr: return "espr";
        case IndexKind::mo: return "mo";
        case IndexKind::mo_star: return "mo_star";
        case IndexKind::nt: return "nt";
        case IndexKind::irr: return "irr";
    }
    return "?";
}

std::string to_string(GraphClass c) {
    return c == GraphClass::trees ? "trees" : "connected_graphs";
}

std::int64_t evaluate_index(const Graph& g, IndexKind kind) {
    if (kind == IndexKind::irr) return irr_graph(g);
    ClosenessCounts cc = closeness_counts_serial(g, /*with_histograms=*/false);
    switch (kind) {
        case IndexKind::peri: return peri_graph(cc);
        case IndexKind::eperi: return eperi_graph(g, cc);
        case IndexKind::espr: return espr_graph(g, cc);
        case IndexKind::mo: return mostar_graph(g, cc);
        case IndexKind::mo_star: return total_mostar(cc);
        case IndexKind::nt: return nt_graph(cc);
        default: return 0;
    }
}

SearchResult maximize_index(int n, GraphClass cls, IndexKind index) {
    std::vector<Graph> graphs =
        cls == GraphClass::trees ? enumerate_trees(n) : enumerate_connected_graphs(n);

    std::vector<std::int64_t> values(graphs.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t i = 0; i < graphs.size(); ++i) values[i] = evaluate_index(graphs[i], index);

    SearchResult r;
    r.n = n;
    r.cls = cls;
    r.index = index;
    r.enumerated_count = graphs.size();
    r.max_value = *std::max_element(values.begin(), values.end());
    for (std::size_t i = 0; i < graphs.size(); ++i)
        if (values[i] == r.max_value) r.witnesses.push_back(canonical_graph6(graphs[i]));
    std::sort(r.witnesses.begin(), r.witnesses.end());
    return r;
}

std::string to_json(const SearchResult& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["class"] = to_string(r.cls);
    j["index"] = to_string(r.index);
    j["max_value"] = r.max_value;
    j["witnesses"] = r.witnesses;
    j["enumerated_count"] = r.enumerated_count;
    return j.dump();
}

std::vector<Graph> find_nt_balanced(int n, bool require_not_ultra) {
    std::vector<Graph> graphs = enumerate_connected_graphs(n);
    std::vector<std::uint8_t> keep(graphs.size(), 0);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        ClosenessCounts cc = closeness_counts_serial(graphs[i], /*with_histograms=*/true);
        if (!is_nt_balanced(cc)) continue;
        keep[i] = !require_not_ultra || !is_ultra_nt_balanced(cc);
    }
    std::vector<Graph> out;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        if (keep[i]) out.push_back(graphs[i]);
    return out;
}

}  // namespace periscope
