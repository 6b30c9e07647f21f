// Benchmarks the OpenMP closeness/index kernels against the serial
// reference implementations and checks that both agree.
#include <chrono>
#include <cstdio>

#include "periscope/closeness.hpp"
#include "periscope/constructions.hpp"
#include "periscope/experiments.hpp"
#include "periscope/indices.hpp"

using namespace periscope;

namespace {

template <class F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench(const char* name, const Graph& g) {
    ClosenessCounts serial, parallel;
    double ts = time_ms([&] { serial = closeness_counts_serial(g, false); });
    double tp = time_ms([&] { parallel = closeness_counts(g, false); });
    bool same = true;
    for (int u = 0; u < g.vertex_count() && same; ++u)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (serial.count(u, v) != parallel.count(u, v)) {
                same = false;
                break;
            }
    std::printf("%-24s n=%5d  serial %8.1f ms  parallel %8.1f ms  speedup %5.2fx  %s\n", name,
                g.vertex_count(), ts, tp, ts / tp, same ? "match" : "MISMATCH");
}

}  // namespace

int main() {
    bench("eperi_extremal(200)", eperi_extremal(200));
    bench("espr_extremal(100)", espr_extremal(100));
    bench("balanced_spider(30,30)", balanced_spider(30, 30));
    bench("gnp(1200, 0.01)", sample_gnp(1200, 0.01, 1));
    bench("gnp(1200, 0.5)", sample_gnp(1200, 0.5, 2));
    return 0;
}
