#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "periscope/canonical.hpp"
#include "periscope/constructions.hpp"
#include "periscope/distance.hpp"
#include "periscope/experiments.hpp"
#include "periscope/indices.hpp"
#include "periscope/search.hpp"
#include "periscope/verify.hpp"

namespace {

using namespace periscope;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw GraphError("cannot read file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& g6, const std::string& input) {
    if (!g6.empty()) return parse_graph6(g6);
    std::string text = read_input(input);
    // Sniff: JSON edge lists start with '{'.
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{') return parse_json_edge_list(text);
    return parse_graph6(text);
}

void write_output(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out);
    if (!f) throw GraphError("cannot write file: " + out);
    f << text;
}

Graph build_family(const std::string& family, const std::vector<int>& p) {
    auto need = [&](std::size_t k) {
        if (p.size() != k)
            throw GraphError("family " + family + " needs " + std::to_string(k) + " parameter(s)");
    };
    if (family == "path") { need(1); return path_graph(p[0]); }
    if (family == "cycle") { need(1); return cycle_graph(p[0]); }
    if (family == "complete") { need(1); return complete_graph(p[0]); }
    if (family == "complete-bipartite") { need(2); return complete_bipartite(p[0], p[1]); }
    if (family == "complete-tripartite") { need(3); return complete_tripartite(p[0], p[1], p[2]); }
    if (family == "star") { need(1); return star_graph(p[0]); }
    if (family == "spider") {
        if (p.empty()) throw GraphError("spider needs leg lengths");
        return spider(std::span<const int>(p));
    }
    if (family == "balanced-spider") { need(2); return balanced_spider(p[0], p[1]); }
    if (family == "eperi-extremal") { need(1); return eperi_extremal(p[0]); }
    if (family == "espr-extremal") { need(1); return espr_extremal(p[0]); }
    if (family == "pendant-clique") { need(1); return pendant_clique(p[0]); }
    if (family == "rhombic-dodecahedron") { need(0); return rhombic_dodecahedron(); }
    if (family == "rhombic-triacontahedron") { need(0); return rhombic_triacontahedron(); }
    if (family == "table1-witness") {
        need(2);  // n, class (0 = trees, 1 = graphs)
        return table1_witness(p[0], p[1] == 0 ? GraphClass::trees : GraphClass::connected_graphs);
    }
    throw GraphError("unknown family: " + family);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"periscope: peripherality-family graph indices, extremal constructions, "
                 "exhaustive searches, and experiments"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads,
                   "worker threads (default: PERISCOPE_THREADS env var or hardware)");

    // compute
    auto* compute = app.add_subcommand("compute", "compute indices of one graph");
    std::string c_g6, c_input, c_indices = "all", c_format = "json", c_out;
    compute->add_option("--g6", c_g6, "inline graph6 string");
    compute->add_option("--input", c_input, "graph6 or JSON edge-list file ('-' for stdin)");
    compute->add_option("--indices", c_indices, "all or comma list: peri,eperi,espr,mo,mo_star,nt,irr");
    compute->add_option("--format", c_format, "json|table")->check(CLI::IsMember({"json", "table"}));
    compute->add_option("--out", c_out, "output path (default stdout)");

    // generate
    auto* generate = app.add_subcommand("generate", "emit a named construction");
    std::string g_family, g_format = "g6", g_out;
    std::vector<int> g_params;
    generate->add_option("--family", g_family, "construction family")->required();
    generate->add_option("--params", g_params, "integer parameters");
    generate->add_option("--format", g_format, "g6|json")->check(CLI::IsMember({"g6", "json"}));
    generate->add_option("--out", g_out, "output path (default stdout)");

    // search
    auto* search = app.add_subcommand("search", "maximize an index over a graph class");
    std::string s_class = "graphs", s_index = "peri", s_out;
    int s_n = 0;
    search->add_option("--class", s_class, "trees|graphs")->check(CLI::IsMember({"trees", "graphs"}));
    search->add_option("--n", s_n, "vertex count")->required();
    search->add_option("--index", s_index, "peri|eperi|espr|mo|mo_star|nt|irr");
    search->add_option("--out", s_out, "result JSON path (default stdout)");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "ratio sweeps and Monte-Carlo runs");
    std::string e_sweep, e_out;
    std::vector<int> e_params;
    bool e_mc = false;
    int e_n = 200, e_trials = 100;
    double e_p = 0.5;
    std::uint64_t e_seed = 20230618;
    experiment->add_option("--sweep", e_sweep,
                           "eperi-extremal|espr-extremal|nt-spider|pendant-clique|tripartite-espr");
    experiment->add_option("--params", e_params, "sweep parameters");
    experiment->add_flag("--monte-carlo", e_mc, "run the irr(G_{n,p}) Monte-Carlo study");
    experiment->add_option("--n", e_n, "Monte-Carlo graph size");
    experiment->add_option("--p", e_p, "edge probability");
    experiment->add_option("--trials", e_trials, "number of trials");
    experiment->add_option("--seed", e_seed, "base RNG seed");
    experiment->add_option("--out", e_out, "output path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string v_suite;
    bool v_all = false;
    verify->add_option("--suite", v_suite, "table1|bounds|nt-counterexamples|ultra-closure|"
                                           "bipartite-espr-formula|irr-montecarlo");
    verify->add_flag("--all", v_all, "run every suite");

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (threads == 0)
        if (const char* env = std::getenv("PERISCOPE_THREADS")) threads = std::atoi(env);
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (*compute) {
            if (c_g6.empty() == c_input.empty())
                throw GraphError("compute: exactly one of --g6 / --input required");
            Graph g = load_graph(c_g6, c_input);
            IndexReport r = compute_indices(g);
            nlohmann::ordered_json full = nlohmann::ordered_json::parse(to_json(r));
            nlohmann::ordered_json j;
            j["n"] = r.n;
            if (c_indices == "all") {
                j = full;
            } else {
                std::stringstream ss(c_indices);
                std::string name;
                while (std::getline(ss, name, ',')) {
                    if (!full.contains(name)) throw GraphError("unknown index: " + name);
                    j[name] = full[name];
                }
            }
            if (c_format == "json") {
                write_output(c_out, j.dump());
            } else {
                std::ostringstream t;
                for (auto& [k, v] : j.items()) t << k << '\t' << v << '\n';
                write_output(c_out, t.str());
            }
        } else if (*generate) {
            Graph g = build_family(g_family, g_params);
            write_output(g_out, g_format == "g6" ? to_graph6(g) : to_json_edge_list(g));
        } else if (*search) {
            GraphClass cls = s_class == "trees" ? GraphClass::trees : GraphClass::connected_graphs;
            SearchResult r = maximize_index(s_n, cls, index_kind_from_string(s_index));
            write_output(s_out, to_json(r));
        } else if (*experiment) {
            if (e_mc) {
                MonteCarloReport r = monte_carlo_irr(e_n, e_p, e_trials, e_seed);
                write_output(e_out, to_json(r));
            } else if (!e_sweep.empty()) {
                if (e_params.empty()) throw GraphError("experiment --sweep needs --params");
                RatioSweepReport r =
                    ratio_sweep(sweep_family_from_string(e_sweep), std::span<const int>(e_params));
                write_output(e_out, to_csv(r));
            } else {
                throw GraphError("experiment: pass --sweep or --monte-carlo");
            }
        } else if (*verify) {
            std::vector<std::string> suites =
                v_all ? verify_suite_names() : std::vector<std::string>{v_suite};
            if (!v_all && v_suite.empty()) throw GraphError("verify: pass --suite or --all");
            bool all_pass = true;
            for (const std::string& name : suites) {
                VerifyReport rep = run_verify_suite(name);
                for (const auto& line : rep.lines)
                    std::cout << (line.pass ? "PASS" : "FAIL") << "  [" << rep.suite << "] "
                              << line.text << '\n';
                all_pass = all_pass && rep.passed();
            }
            if (!all_pass) return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
