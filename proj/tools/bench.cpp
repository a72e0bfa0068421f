// Timing comparison of the serial reference kernels against their OpenMP
// counterparts. Also reports the agreement of the two paths, which must be
// exact.
//
// Usage: monotone-norm-bench [--quick]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "monorm/gallery.hpp"
#include "monorm/oracle.hpp"

using namespace monorm;

namespace {

template <typename F>
double time_ms(F&& f, int reps) {
    using clock = std::chrono::steady_clock;
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock::now();
        f();
        const auto t1 = clock::now();
        best = std::min(best,
                        std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms, bool exact_match) {
    std::printf("%-36s %10.2f ms %10.2f ms %8.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, exact_match ? "bit-exact" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    const int reps = quick ? 1 : 3;
    const std::size_t n_vertex = quick ? 800 : 3000;
    const std::size_t n_rows = quick ? 400 : 1500;
    const std::size_t n_pg = quick ? 60 : 150;

    std::printf("threads available: %d\n", effective_threads());
    std::printf("%-36s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        const GalleryEntry g = pi26_counterexample(n_vertex);
        OracleResult rs, rp;
        const double ts = time_ms(
            [&] { rs = vertex_simplex_norm(g.matrix, Exponent::one(), ExecMode::Serial); },
            reps);
        const double tp = time_ms(
            [&] { rp = vertex_simplex_norm(g.matrix, Exponent::one(), ExecMode::Parallel); },
            reps);
        report("vertex scan (p=1, banded matrix)", ts, tp,
               rs.value == rp.value && rs.argmax == rp.argmax);
    }
    {
        const GalleryEntry g = cesaro(n_vertex);
        OracleResult rs, rp;
        const double ts = time_ms(
            [&] { rs = vertex_step_norm(g.matrix, Exponent::finite(2), ExecMode::Serial); },
            reps);
        const double tp = time_ms(
            [&] {
                rp = vertex_step_norm(g.matrix, Exponent::finite(2), ExecMode::Parallel);
            },
            reps);
        report("vertex scan (p=inf, averaging)", ts, tp,
               rs.value == rp.value && rs.argmax == rp.argmax);
    }
    {
        const GalleryEntry g = harmonic_counterexample(n_rows);
        const Tolerance tol;
        ProjGradOptions ser, par;
        ser.exec = ExecMode::Serial;
        par.exec = ExecMode::Parallel;
        OracleResult rs, rp;
        const double ts = time_ms(
            [&] {
                rs = downward_norm(g.matrix, Exponent::finite(2), Exponent::infinity(), tol,
                                   ser);
            },
            reps);
        const double tp = time_ms(
            [&] {
                rp = downward_norm(g.matrix, Exponent::finite(2), Exponent::infinity(), tol,
                                   par);
            },
            reps);
        report("per-row majorant (q=inf)", ts, tp,
               rs.value == rp.value && rs.argmax == rp.argmax);
    }
    {
        const GalleryEntry g = cesaro(n_pg);
        ProjGradOptions ser, par;
        ser.exec = ExecMode::Serial;
        par.exec = ExecMode::Parallel;
        OracleResult rs, rp;
        const double ts = time_ms(
            [&] {
                rs = projgrad_downward(g.matrix, Exponent::finite(2.3),
                                       Exponent::finite(1.7), ser);
            },
            reps);
        const double tp = time_ms(
            [&] {
                rp = projgrad_downward(g.matrix, Exponent::finite(2.3),
                                       Exponent::finite(1.7), par);
            },
            reps);
        report("projected gradient restarts", ts, tp,
               rs.value == rp.value && rs.argmax == rp.argmax);
    }
    return 0;
}
