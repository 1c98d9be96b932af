// Timing comparison of the OpenMP kernels against their serial references.
// The parallel paths must produce bit-identical results; this binary checks
// that while it measures.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "openph/numcore/tridiag.hpp"
#include "openph/quantum/decay.hpp"
#include "openph/quantum/schrodinger.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool bench_eigensolver() {
    using namespace openph;
    const numcore::Grid1D grid(0.0, 1.0, 4001);
    const auto potential = quantum::sample_potential(quantum::Parabolic{50.0}, grid, 1.0);
    const auto h = quantum::build_hamiltonian(potential, grid, 1.0, 1.0);
    const int k = 24;

    auto t0 = std::chrono::steady_clock::now();
    const auto serial = numcore::eigs_tridiag_serial(h, k);
    const double t_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto parallel = numcore::eigs_tridiag(h, k);
    const double t_parallel = seconds_since(t0);

    bool identical = serial.size() == parallel.size();
    for (std::size_t i = 0; identical && i < serial.size(); ++i) {
        identical = serial[i].value == parallel[i].value &&
                    serial[i].vector == parallel[i].vector;
    }
    std::printf("eigs_tridiag  n=%zu k=%d   serial %8.3f ms   parallel %8.3f ms   speedup %.2fx   %s\n",
                h.size(), k, 1e3 * t_serial, 1e3 * t_parallel, t_serial / t_parallel,
                identical ? "bit-identical" : "MISMATCH");
    return identical;
}

bool bench_decay_ensemble() {
    using namespace openph;
    const auto model = quantum::DecayModel::from_half_life(10000, 1200.0, 10.0, 1200.0);
    const int seeds = 64;

    auto t0 = std::chrono::steady_clock::now();
    const auto serial = quantum::decay_ensemble_serial(model, 1, seeds);
    const double t_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto parallel = quantum::decay_ensemble(model, 1, seeds);
    const double t_parallel = seconds_since(t0);

    bool identical = serial.size() == parallel.size();
    for (std::size_t i = 0; identical && i < serial.size(); ++i) {
        identical = serial[i].rows() == parallel[i].rows();
        for (std::size_t r = 0; identical && r < serial[i].rows(); ++r)
            identical = serial[i].row(r) == parallel[i].row(r);
    }
    std::printf("decay_ensemble  seeds=%d   serial %8.3f ms   parallel %8.3f ms   speedup %.2fx   %s\n",
                seeds, 1e3 * t_serial, 1e3 * t_parallel, t_serial / t_parallel,
                identical ? "bit-identical" : "MISMATCH");
    return identical;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; comparing identical serial paths\n");
#endif
    const bool ok = bench_eigensolver() & bench_decay_ensemble();
    return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
