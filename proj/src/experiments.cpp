#include "periscope/experiments.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "periscope/constructions.hpp"
#include "periscope/indices.hpp"
#include "periscope/rng.hpp"

namespace periscope {

SweepFamily sweep_family_from_string(const std::string& s) {
    if (s == "eperi-extremal" || s == "eperi_extremal") return SweepFamily::eperi_extremal;
    if (s == "espr-extremal" || s == "espr_extremal") return SweepFamily::espr_extremal;
    if (s == "nt-spider" || s == "nt_spider") return SweepFamily::nt_spider;
    if (s == "pendant-clique" || s == "pendant_clique") return SweepFamily::pendant_clique;
    if (s == "tripartite-espr" || s == "tripartite_espr") return SweepFamily::tripartite_espr;
    throw GraphError("unknown sweep family: " + s);
}

std::string to_string(SweepFamily f) {
    switch (f) {
        case SweepFamily::eperi_extremal: return "eperi_extremal";
        case SweepFamily::espr_extremal: return "espr_extremal";
        case SweepFamily::nt_spider: return "nt_spider";
        case SweepFamily::pendant_clique: return "pendant_clique";
        case SweepFamily::tripartite_espr: return "tripartite_espr";
    }
    return "?";
}

RatioSweepReport ratio_sweep(SweepFamily family, std::span<const int> params) {
    RatioSweepReport rep;
    rep.family = family;
    switch (family) {
        case SweepFamily::eperi_extremal:
            rep.exponent = 3;
            rep.target = std::sqrt(3.0) / 24.0;
            break;
        case SweepFamily::espr_extremal:
            rep.exponent = 4;
            rep.target = 5.0 / 32.0;
            break;
        case SweepFamily::nt_spider:
            rep.exponent = 4;
            rep.target = 0.5;
            break;
        case SweepFamily::pendant_clique:
            rep.exponent = 4;
            rep.target = 0.25;
            break;
        case SweepFamily::tripartite_espr:
            rep.exponent = 4;
            rep.target = 4.0 / 27.0;
            break;
    }
    for (int p : params) {
        Graph g;
        std::int64_t value = 0;
        switch (family) {
            case SweepFamily::eperi_extremal: g = eperi_extremal(p); break;
            case SweepFamily::espr_extremal: g = espr_extremal(p); break;
            case SweepFamily::nt_spider: g = balanced_spider(p, p); break;
            case SweepFamily::pendant_clique: g = pendant_clique(p); break;
            case SweepFamily::tripartite_espr: g = complete_tripartite(p, p, p); break;
        }
        ClosenessCounts cc = closeness_counts(g, /*with_histograms=*/false);
        switch (family) {
            case SweepFamily::eperi_extremal: value = eperi_graph(g, cc); break;
            case SweepFamily::espr_extremal:
            case SweepFamily::tripartite_espr: value = espr_graph(g, cc); break;
            case SweepFamily::nt_spider:
            case SweepFamily::pendant_clique: value = nt_graph(cc); break;
        }
        RatioSweepRow row;
        row.param = p;
        row.n = g.vertex_count();
        row.value = value;
        row.ratio = static_cast<double>(value) / std::pow(static_cast<double>(row.n), rep.exponent);
        rep.rows.push_back(row);
    }
    std::sort(rep.rows.begin(), rep.rows.end(),
              [](const RatioSweepRow& a, const RatioSweepRow& b) { return a.n < b.n; });
    return rep;
}

RatioSweepReport ratio_sweep(SweepFamily family, std::initializer_list<int> params) {
    return ratio_sweep(family, std::span<const int>(params.begin(), params.size()));
}

std::string to_csv(const RatioSweepReport& r) {
    std::ostringstream out;
    out << "family,param,n,value,ratio,target\n";
    out.precision(10);
    for (const auto& row : r.rows)
        out << to_string(r.family) << ',' << row.param << ',' << row.n << ',' << row.value << ','
            << row.ratio << ',' << r.target << '\n';
    return out.str();
}

UltraClosureReport verify_ultra_closure(std::span<const std::pair<Graph, Graph>> factor_pairs,
                                        std::span<const std::string> labels) {
    UltraClosureReport rep;
    rep.all_pass = true;
    for (std::size_t i = 0; i < factor_pairs.size(); ++i) {
        const auto& [g, h] = factor_pairs[i];
        if (!is_ultra_nt_balanced(closeness_counts(g)) ||
            !is_ultra_nt_balanced(closeness_counts(h)))
            throw GraphError("verify_ultra_closure: factor is not ultra NT-balanced");
        Graph prod = cartesian_product(g, h);
        ClosenessCounts cc = closeness_counts(prod);
        UltraClosureRow row;
        row.label = i < labels.size() ? labels[i] : ("pair" + std::to_string(i));
        row.n = prod.vertex_count();
        row.nt = nt_graph(cc);
        row.ultra = is_ultra_nt_balanced(cc);
        row.regular = prod.is_regular();
        rep.all_pass = rep.all_pass && row.ultra && row.nt == 0;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw GraphError("sample_gnp: n must be nonnegative");
    if (!(p > 0.0 && p < 1.0)) throw GraphError("sample_gnp: p must be in (0,1)");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < p) es.emplace_back(u, v);
    return Graph::from_edge_list(n, es);
}

double predicted_irr(int n, double p) {
    return p * std::sqrt(p * (1.0 - p) / M_PI) * std::pow(static_cast<double>(n), 2.5);
}

MonteCarloReport monte_carlo_irr(int n, double p, int trials, std::uint64_t seed) {
    if (trials < 1) throw GraphError("monte_carlo_irr: trials must be >= 1");
    if (!(p > 0.0 && p < 1.0)) throw GraphError("monte_carlo_irr: p must be in (0,1)");
    // Trials are independent substreams, so any parallel schedule gives the
    // same mean.
    std::int64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
    for (int t = 0; t < trials; ++t) total += irr_graph(sample_gnp(n, p, seed + t));

    MonteCarloReport r;
    r.n = n;
    r.p = p;
    r.trials = trials;
    r.seed = seed;
    r.sample_mean = static_cast<double>(total) / trials;
    r.predicted = predicted_irr(n, p);
    r.relative_error = std::abs(r.sample_mean - r.predicted) / r.predicted;
    return r;
}

std::string to_json(const MonteCarloReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["p"] = r.p;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["sample_mean"] = r.sample_mean;
    j["predicted"] = r.predicted;
    j["relative_error"] = r.relative_error;
    return j.dump();
}

}  // namespace periscope
