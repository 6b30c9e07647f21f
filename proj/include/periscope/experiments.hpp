#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "periscope/graph.hpp"

namespace periscope {

enum class SweepFamily {
    eperi_extremal,   // eperi / n^3 -> sqrt(3)/24, param = s
    espr_extremal,    // espr  / n^4 -> 5/32,       param = s
    nt_spider,        // NT(S_{a,a}) / n^4 -> 1/2,  param = a
    pendant_clique,   // NT / n^4 -> 1/4,           param = n
    tripartite_espr,  // espr(K_{m,m,m}) / n^4 -> 4/27, param = m
};

SweepFamily sweep_family_from_string(const std::string& s);
std::string to_string(SweepFamily f);

struct RatioSweepRow {
    int param = 0;
    int n = 0;
    std::int64_t value = 0;
    double ratio = 0.0;  // value / n^exponent
};

struct RatioSweepReport {
    SweepFamily family{};
    int exponent = 0;       // 3 for eperi, 4 otherwise
    double target = 0.0;    // asymptotic constant
    std::vector<RatioSweepRow> rows;  // sorted by n
};

RatioSweepReport ratio_sweep(SweepFamily family, std::span<const int> params);
RatioSweepReport ratio_sweep(SweepFamily family, std::initializer_list<int> params);

/// CSV with columns family,param,n,value,ratio,target.
std::string to_csv(const RatioSweepReport& r);

struct UltraClosureRow {
    std::string label;
    int n = 0;
    std::int64_t nt = 0;
    bool ultra = false;
    bool regular = false;
};

struct UltraClosureReport {
    std::vector<UltraClosureRow> rows;
    bool all_pass = false;  // every product ultra NT-balanced with NT = 0
};

/// For each factor pair, checks the preconditions (both factors ultra
/// NT-balanced, else GraphError) and recomputes the ultra check on the
/// Cartesian product from scratch.
UltraClosureReport verify_ultra_closure(
    std::span<const std::pair<Graph, Graph>> factor_pairs,
    std::span<const std::string> labels);

/// G(n,p): each of the C(n,2) edges present independently with probability
/// p, drawn from SplitMix64(seed). Connectivity is not required.
Graph sample_gnp(int n, double p, std::uint64_t seed);

struct MonteCarloReport {
    int n = 0;
    double p = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;
    double sample_mean = 0.0;
    double predicted = 0.0;
    double relative_error = 0.0;
};

/// p * sqrt(p(1-p)/pi) * n^{5/2}; equals n^{5/2}/(4 sqrt(pi)) at p = 1/2.
double predicted_irr(int n, double p);

/// Sample mean of irr over trials, each drawn from substream seed+trial.
MonteCarloReport monte_carlo_irr(int n, double p, int trials, std::uint64_t seed);

std::string to_json(const MonteCarloReport& r);

}  // namespace periscope
