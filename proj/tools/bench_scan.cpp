// Benchmark of the exhaustive scan kernel: the serial reference
// implementation against the OpenMP one, with a bit-identity check on the
// resulting indexes. Usage: bench_scan [n] [repeats] (defaults 7 and 3).
#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dspectra/enumerate.hpp"

using namespace dspectra;

namespace {

double run_once(int n, Threading mode, ScanIndex& out) {
    const auto t0 = std::chrono::steady_clock::now();
    out = build_scan_index(n, mode);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 7;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    if (n < 2 || n > max_enumeration_order || repeats < 1) {
        std::fprintf(stderr, "usage: bench_scan [n (2..%d)] [repeats (>= 1)]\n",
                     max_enumeration_order);
        return 2;
    }
#ifdef _OPENMP
    std::printf("openmp enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("openmp disabled at build time; both columns run serial code\n");
#endif
    std::printf("scan of all labeled graphs on %d vertices, best of %d runs\n\n", n, repeats);
    std::printf("%10s %12s %12s %9s\n", "", "serial [s]", "openmp [s]", "speedup");

    ScanIndex serial_index, openmp_index;
    double best_serial = 1e300, best_openmp = 1e300;
    for (int r = 0; r < repeats; ++r) {
        best_serial = std::min(best_serial, run_once(n, Threading::serial, serial_index));
        best_openmp = std::min(best_openmp, run_once(n, Threading::openmp, openmp_index));
    }
    std::printf("%10s %12.3f %12.3f %8.2fx\n", "scan", best_serial, best_openmp,
                best_serial / best_openmp);

    if (!(serial_index == openmp_index)) {
        std::printf("\nFAIL: serial and openmp indexes differ\n");
        return 1;
    }
    std::printf("\nindexes bit-identical: %llu connected graphs of %llu masks\n",
                static_cast<unsigned long long>(serial_index.connected_count),
                static_cast<unsigned long long>(serial_index.total_masks));
    return 0;
}
