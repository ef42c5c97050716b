// Benchmark of the parallel enumeration sweep against the serial reference:
// representatives and dimension classification per order, with an equality
// check between both paths.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "wdim/dimension.hpp"
#include "wdim/enumerate.hpp"
#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool same_representatives(const std::vector<wdim::Digraph>& a,
                          const std::vector<wdim::Digraph>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].arcs() != b[i].arcs()) return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const int max_n = argc > 1 ? std::atoi(argv[1]) : 5;
    if (max_n < 2 || max_n > wdim::kMaxExhaustiveOrder) {
        std::fprintf(stderr, "usage: %s [max_order in 2..%d]\n", argv[0],
                     wdim::kMaxExhaustiveOrder);
        return 2;
    }
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    for (int n = 2; n <= max_n; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        const auto serial = wdim::sc_representatives_serial(n);
        const double t_serial = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        const auto parallel = wdim::sc_representatives(n);
        const double t_parallel = seconds_since(t0);

        const bool match = same_representatives(serial, parallel);

        t0 = std::chrono::steady_clock::now();
        const auto by_dim = wdim::classify_by_dimension(n);
        const double t_classify = seconds_since(t0);
        size_t classified = 0;
        for (const auto& [dim, members] : by_dim) classified += members.size();

        std::printf(
            "order %d: classes=%zu  sweep serial %.3fs  parallel %.3fs (x%.2f)  %s  "
            "classify %.3fs (%zu classes)\n",
            n, serial.size(), t_serial, t_parallel,
            t_parallel > 0 ? t_serial / t_parallel : 0.0, match ? "match" : "MISMATCH",
            t_classify, classified);
        if (!match) return 1;
    }
    return 0;
}
