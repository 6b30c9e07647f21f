#include "periscope/verify.hpp"

#include <cmath>
#include <sstream>

#include "periscope/constructions.hpp"
#include "periscope/enumerate.hpp"
#include "periscope/experiments.hpp"
#include "periscope/indices.hpp"
#include "periscope/search.hpp"

namespace periscope {

namespace {

void add(VerifyReport& r, bool pass, const std::string& text) {
    r.lines.push_back({text, pass});
}

std::string fmt(double x) {
    std::ostringstream o;
    o.precision(6);
    o << x;
    return o.str();
}

}  // namespace

VerifyReport verify_table1() {
    VerifyReport r{"table1", {}};
    for (int n = 1; n <= 8; ++n)
        for (GraphClass cls : {GraphClass::trees, GraphClass::connected_graphs}) {
            SearchResult sr = maximize_index(n, cls, IndexKind::peri);
            int expect = table1_value(n, cls);
            add(r, sr.max_value == expect,
                "max peri over " + to_string(cls) + " n=" + std::to_string(n) + ": got " +
                    std::to_string(sr.max_value) + ", expected " + std::to_string(expect));
        }
    for (int n = 3; n <= 8; ++n)
        for (GraphClass cls : {GraphClass::trees, GraphClass::connected_graphs}) {
            Graph w = table1_witness(n, cls);
            std::int64_t got = peri_graph(closeness_counts(w, false));
            add(r, got == table1_value(n, cls),
                "witness " + to_string(cls) + " n=" + std::to_string(n) + " achieves peri=" +
                    std::to_string(got));
        }
    return r;
}

VerifyReport verify_bounds() {
    VerifyReport r{"bounds", {}};
    // Enumerated connected graphs up to n=7, plus representative constructed
    // graphs from the sweep families.
    std::vector<Graph> pool;
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) pool.push_back(g);
    for (int s : {8, 12, 16}) pool.push_back(eperi_extremal(s));
    for (int s : {2, 5, 10}) pool.push_back(espr_extremal(s));
    for (int a : {3, 5}) pool.push_back(balanced_spider(a, a));
    for (int n : {4, 10, 25}) pool.push_back(pendant_clique(n));
    pool.push_back(complete_tripartite(6, 6, 6));

    bool peri_ok = true, eperi_ok = true, espr_ok = true, nt_ok = true, proxy_ok = true,
         chain_ok = true;
    for (const Graph& g : pool) {
        const double n = g.vertex_count();
        ClosenessCounts cc = closeness_counts(g, false);
        std::int64_t peri = peri_graph(cc), eperi = eperi_graph(g, cc), espr = espr_graph(g, cc);
        std::int64_t mo = mostar_graph(g, cc), mos = total_mostar(cc), nt = nt_graph(cc);
        std::int64_t pairs = static_cast<std::int64_t>(n) * (g.vertex_count() - 1) / 2;
        peri_ok &= peri <= pairs;
        eperi_ok &= static_cast<double>(eperi) < n * n * n / 6.0;
        espr_ok &= static_cast<double>(espr) <= n * n * n * n / 4.0;
        nt_ok &= nt <= pairs * (g.vertex_count() - 2) * (g.vertex_count() - 2);
        std::int64_t cross = 0;
        g.for_each_edge([&](int u, int v) { cross += cc.count(u, v) + cc.count(v, u); });
        proxy_ok &= espr_degree_proxy(g, cc) == espr + cross;
        chain_ok &= nt >= mos && mos >= mo;
    }
    add(r, peri_ok, "peri <= C(n,2) on all " + std::to_string(pool.size()) + " graphs");
    add(r, eperi_ok, "eperi < n^3/6");
    add(r, espr_ok, "espr <= n^4/4");
    add(r, nt_ok, "NT <= C(n,2)(n-2)^2");
    add(r, proxy_ok, "proxy identity: espr_degree_proxy = espr + sum_edges(n(u,v)+n(v,u))");
    add(r, chain_ok, "NT >= Mo* >= Mo");
    return r;
}

VerifyReport verify_nt_counterexamples() {
    VerifyReport r{"nt-counterexamples", {}};
    std::int64_t nt_p4 = nt_graph(closeness_counts(path_graph(4), false));
    std::int64_t nt_pc4 = nt_graph(closeness_counts(pendant_clique(4), false));
    std::int64_t nt_s3 = nt_graph(closeness_counts(star_graph(3), false));
    add(r, nt_pc4 == 10 && nt_p4 == 10,
        "NT(pendant_clique(4)) = NT(P4) = " + std::to_string(nt_pc4));
    add(r, nt_s3 == 12, "NT(S3) = " + std::to_string(nt_s3));
    add(r, nt_s3 > nt_pc4, "NT(S3) > NT(pendant_clique(4))");
    return r;
}

VerifyReport verify_ultra_closure_suite() {
    VerifyReport r{"ultra-closure", {}};
    for (auto [g, name] : {std::pair{rhombic_dodecahedron(), "rhombic dodecahedron"},
                           std::pair{rhombic_triacontahedron(), "rhombic triacontahedron"}}) {
        ClosenessCounts cc = closeness_counts(g);
        add(r, is_ultra_nt_balanced(cc) && nt_graph(cc) == 0 && !g.is_regular(),
            std::string(name) + ": ultra NT-balanced, NT=0, not regular");
    }
    std::vector<std::pair<Graph, Graph>> pairs = {
        {rhombic_dodecahedron(), complete_graph(3)},
        {rhombic_dodecahedron(), cycle_graph(5)},
        {rhombic_dodecahedron(), complete_graph(5)},
    };
    std::vector<std::string> labels = {"RD x K3", "RD x C5", "RD x K5"};
    UltraClosureReport rep = verify_ultra_closure(pairs, labels);
    for (const auto& row : rep.rows)
        add(r, row.ultra && row.nt == 0,
            row.label + ": ultra=" + (row.ultra ? "yes" : "no") + " NT=" + std::to_string(row.nt));
    return r;
}

VerifyReport verify_bipartite_espr_formula() {
    VerifyReport r{"bipartite-espr-formula", {}};
    for (int n = 4; n <= 14; ++n) {
        Graph g = complete_bipartite(n / 2, (n + 1) / 2);
        std::int64_t got = espr_graph(g, closeness_counts(g, false));
        std::int64_t q = static_cast<std::int64_t>(n) * n / 4;
        std::int64_t expect = q * (2 * q - 2);
        add(r, got == expect,
            "espr(K_{" + std::to_string(n / 2) + "," + std::to_string((n + 1) / 2) +
                "}) = " + std::to_string(got) + ", closed form " + std::to_string(expect));
    }
    return r;
}

VerifyReport verify_irr_montecarlo() {
    VerifyReport r{"irr-montecarlo", {}};
    for (double p : {0.5, 0.3}) {
        MonteCarloReport m = monte_carlo_irr(200, p, 100, 20230618);
        add(r, m.relative_error < 0.05,
            "E[irr(G_{200," + fmt(p) + "})]: sample mean " + fmt(m.sample_mean) + " vs predicted " +
                fmt(m.predicted) + " (rel err " + fmt(m.relative_error) + ")");
    }
    return r;
}

std::vector<std::string> verify_suite_names() {
    return {"table1",        "bounds",
            "nt-counterexamples", "ultra-closure",
            "bipartite-espr-formula", "irr-montecarlo"};
}

VerifyReport run_verify_suite(const std::string& name) {
    if (name == "table1") return verify_table1();
    if (name == "bounds") return verify_bounds();
    if (name == "nt-counterexamples") return verify_nt_counterexamples();
    if (name == "ultra-closure") return verify_ultra_closure_suite();
    if (name == "bipartite-espr-formula") return verify_bipartite_espr_formula();
    if (name == "irr-montecarlo") return verify_irr_montecarlo();
    throw GraphError("unknown verify suite: " + name);
}

}  // namespace periscope
