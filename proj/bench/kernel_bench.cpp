// Compares the serial reference kernels against their OpenMP versions on
// growing random hypergraphs: co-degree table accumulation and the full
// degree profile. The serial path is the same one the tests pin down.

#include "pcd/constructions.hpp"
#include "pcd/hypergraph.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pcd;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& f, int reps) {
    double best = 1e18;
    for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        f();
        auto t1 = Clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

long long sink = 0;

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP off)\n");
#endif
    std::printf("co-degree count table (thread-local maps + merge)\n");
    std::printf("%8s %10s %12s %12s %8s\n", "n", "edges", "serial(ms)", "parallel(ms)", "speedup");
    for (int n : {60, 120, 240, 400, 600}) {
        auto h = sample_with_floor(3, n, 0, n <= 120 ? 0.3 : 0.08, 42);
        double serial = time_ms(
            [&] {
                auto counts = codegree_counts_serial(h);
                sink += static_cast<long long>(counts.size());
            },
            3);
        double parallel = time_ms(
            [&] {
                auto counts = codegree_counts_parallel(h);
                sink += static_cast<long long>(counts.size());
            },
            3);
        std::printf("%8d %10zu %12.2f %12.2f %7.2fx\n", n, h.edge_count(), serial, parallel,
                    serial / parallel);
    }

    std::printf("\ndegree profile (map reference vs dense-count kernel)\n");
    std::printf("%8s %10s %12s %12s %8s\n", "n", "edges", "serial(ms)", "parallel(ms)", "speedup");
    for (int n : {60, 120, 240, 400, 600}) {
        auto h = sample_with_floor(3, n, 0, n <= 120 ? 0.3 : 0.08, 42);
        double serial = time_ms([&] { sink += degree_profile_serial(h).delta_pos_codeg; }, 3);
        double parallel = time_ms([&] { sink += degree_profile(h).delta_pos_codeg; }, 3);
        std::printf("%8d %10zu %12.2f %12.2f %7.2fx\n", n, h.edge_count(), serial, parallel,
                    serial / parallel);

        auto ps = degree_profile_serial(h);
        auto pp = degree_profile(h);
        if (ps.delta_pos_codeg != pp.delta_pos_codeg || ps.delta1 != pp.delta1 ||
            ps.delta_codeg != pp.delta_codeg || ps.isolated != pp.isolated) {
            std::printf("MISMATCH between serial and parallel profiles!\n");
            return 1;
        }
    }
    return 0;
}
