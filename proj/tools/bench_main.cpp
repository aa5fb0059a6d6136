// Benchmark comparing the serial and OpenMP execution of the hot kernels:
// shell sums of the complex multilinear series and tensor quadratures.
#include <chrono>
#include <cstdio>

#include "hermite2d/ks_series.hpp"
#include "hermite2d/quadrature.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using h2d::Complex;
using h2d::Exec;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

h2d::ks::ComplexSquareMatrix sample_matrix(int n) {
    h2d::SplitMix64 rng(42);
    h2d::ks::ComplexSquareMatrix h(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h.at(i, j) = (0.22 / n) * rng.unit_disk();
    return h;
}

void bench_shells(int n, int degree_lo, int degree_hi) {
    const h2d::ks::ComplexSquareMatrix h = sample_matrix(n);
    std::vector<Complex> w(static_cast<std::size_t>(n));
    h2d::SplitMix64 rng(7);
    for (Complex& wi : w) wi = 1.2 * rng.unit_disk();

    Complex serial_total{}, parallel_total{};
    const auto t0 = Clock::now();
    for (int d = degree_lo; d <= degree_hi; ++d)
        serial_total += h2d::ks::rhs_complex_shell(h, w, d, Exec::serial);
    const double t_serial = seconds_since(t0);

    const auto t1 = Clock::now();
    for (int d = degree_lo; d <= degree_hi; ++d)
        parallel_total += h2d::ks::rhs_complex_shell(h, w, d, Exec::parallel);
    const double t_parallel = seconds_since(t1);

    const auto t2 = Clock::now();
    Complex reference_total{};
    for (int d = degree_lo; d <= degree_hi; ++d)
        reference_total += h2d::ks::rhs_complex_shell_reference(h, w, d);
    const double t_reference = seconds_since(t2);

    const bool identical = serial_total == parallel_total;
    std::printf("shell sums N=%d degrees %d..%d\n", n, degree_lo, degree_hi);
    std::printf("  reference (straight loop): %8.3f s\n", t_reference);
    std::printf("  blocked serial:            %8.3f s\n", t_serial);
    std::printf("  blocked parallel:          %8.3f s   speedup %.2fx   bitwise %s\n", t_parallel,
                t_serial / t_parallel, identical ? "identical" : "DIFFERENT");
    std::printf("  |blocked - reference| = %.3e\n\n", std::abs(serial_total - reference_total));
}

void bench_quadrature(int points) {
    const h2d::quad::GaussHermite gh(points);
    auto integrand = [](const double* u) {
        return std::exp(Complex(0.0, 2.0 * (0.3 * u[0] + 0.7 * u[1] - 0.4 * u[2] + 0.2 * u[3])));
    };
    const auto t0 = Clock::now();
    const Complex serial = h2d::quad::integrate_gauss_hermite(gh, 4, integrand, Exec::serial);
    const double t_serial = seconds_since(t0);
    const auto t1 = Clock::now();
    const Complex parallel = h2d::quad::integrate_gauss_hermite(gh, 4, integrand, Exec::parallel);
    const double t_parallel = seconds_since(t1);
    std::printf("4-d tensor Gauss-Hermite, %d^4 nodes\n", points);
    std::printf("  serial:   %8.3f s\n", t_serial);
    std::printf("  parallel: %8.3f s   speedup %.2fx   bitwise %s\n\n", t_parallel,
                t_serial / t_parallel, serial == parallel ? "identical" : "DIFFERENT");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel path runs serially\n\n");
#endif
    bench_shells(3, 14, 18);
    bench_shells(2, 24, 30);
    bench_quadrature(40);
    return 0;
}
