// The blocked kernels must return bit-identical values under serial and
// OpenMP execution, and must agree with the straight-loop reference.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hermite2d/ks_series.hpp"
#include "hermite2d/quadrature.hpp"

using namespace h2d;

TEST_CASE("blocked_sum is execution-mode invariant") {
    auto term = [](std::size_t i) {
        const double x = 0.1 * static_cast<double>(i % 97) - 3.0;
        return Complex{std::sin(x) / (1.0 + x * x), std::cos(3.0 * x)};
    };
    for (std::size_t n : {std::size_t{1}, std::size_t{4095}, std::size_t{4096}, std::size_t{100000}}) {
        const Complex serial = blocked_sum(n, term, Exec::serial);
        const Complex parallel = blocked_sum(n, term, Exec::parallel);
        CHECK(serial.real() == parallel.real());
        CHECK(serial.imag() == parallel.imag());
    }
}

TEST_CASE("shell sums are bitwise identical across execution modes") {
    SplitMix64 rng(321);
    for (int n : {1, 2, 3}) {
        ks::ComplexSquareMatrix h(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) h.at(i, j) = (0.5 / n) * rng.unit_disk();
        std::vector<Complex> w(static_cast<std::size_t>(n));
        for (Complex& wi : w) wi = 1.3 * rng.unit_disk();
        for (int degree : {0, 3, 7, 11}) {
            const Complex serial = ks::rhs_complex_shell(h, w, degree, Exec::serial);
            const Complex parallel = ks::rhs_complex_shell(h, w, degree, Exec::parallel);
            CHECK(serial.real() == parallel.real());
            CHECK(serial.imag() == parallel.imag());
            const Complex reference = ks::rhs_complex_shell_reference(h, w, degree);
            CHECK(std::abs(serial - reference) <= 1e-13 * (1.0 + std::abs(reference)));
        }
    }
}

TEST_CASE("full series values are bitwise identical across execution modes") {
    SplitMix64 rng(654);
    ks::ComplexSquareMatrix h(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) h.at(i, j) = 0.22 * rng.unit_disk();
    std::vector<Complex> w = {1.1 * rng.unit_disk(), 1.1 * rng.unit_disk()};
    const ks::SeriesResult serial = ks::rhs_complex(h, w, {40, 1e-10, 3}, Exec::serial);
    const ks::SeriesResult parallel = ks::rhs_complex(h, w, {40, 1e-10, 3}, Exec::parallel);
    CHECK(serial.value.real() == parallel.value.real());
    CHECK(serial.value.imag() == parallel.value.imag());
    CHECK(serial.degree_reached == parallel.degree_reached);
    CHECK(serial.term_count == parallel.term_count);
}

TEST_CASE("tensor quadrature is bitwise identical across execution modes") {
    const quad::GaussHermite gh(24);
    auto f = [](const double* u) {
        return std::exp(Complex{0.0, 2.0 * (0.4 * u[0] - 0.3 * u[1] + 0.9 * u[2])});
    };
    const Complex serial = quad::integrate_gauss_hermite(gh, 3, f, Exec::serial);
    const Complex parallel = quad::integrate_gauss_hermite(gh, 3, f, Exec::parallel);
    CHECK(serial.real() == parallel.real());
    CHECK(serial.imag() == parallel.imag());

    auto g = [](double theta) { return std::polar(1.0, 3.0 * theta) * std::cos(theta); };
    const Complex ts = quad::trapezoid_2pi(977, g, Exec::serial);
    const Complex tp = quad::trapezoid_2pi(977, g, Exec::parallel);
    CHECK(ts.real() == tp.real());
    CHECK(ts.imag() == tp.imag());
}
