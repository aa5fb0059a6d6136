#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hermite2d/poly.hpp"

using namespace h2d;
using poly::PolyIndex;

namespace {

// independent route: explicit coefficient formula
// H_n(x) = n! sum_k (-1)^k (2x)^{n-2k} / (k! (n-2k)!)
Complex hermite_coefficient_oracle(int n, Complex x) {
    KahanComplex acc;
    for (int k = 0; 2 * k <= n; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        acc.add(sign / (factorial(k) * factorial(n - 2 * k)) * std::pow(2.0 * x, n - 2 * k));
    }
    return factorial(n) * acc.value();
}

// independent route: three-term recurrence in degree with general alpha,
// (n+1) L_{n+1} = (2n+1+alpha-x) L_n - (n+alpha) L_{n-1}
Complex laguerre_recurrence_oracle(int n, int alpha, Complex x) {
    Complex lm1{}, l{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
        const Complex lp1 =
            ((static_cast<double>(2 * k + 1 + alpha) - x) * l - static_cast<double>(k + alpha) * lm1) /
            static_cast<double>(k + 1);
        lm1 = l;
        l = lp1;
    }
    return l;
}

// 2F0(-n, -x; ; -1/a) as a terminating sum
double charlier_hypergeometric_oracle(int n, int x, double a) {
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= n; ++k) {
        term *= static_cast<double>(-(n - k + 1)) * static_cast<double>(-(x - k + 1)) *
                (-1.0 / a) / k;
        sum += term;
    }
    return sum;
}

}  // namespace

TEST_CASE("hermite recurrence matches the coefficient formula") {
    SplitMix64 rng(11);
    for (int n = 0; n <= 15; ++n) {
        const Complex x = 2.0 * rng.unit_disk();
        const Complex a = poly::hermite(n, x);
        const Complex b = hermite_coefficient_oracle(n, x);
        CHECK(std::abs(a - b) <= 1e-10 * (1.0 + std::abs(a)));
    }
}

TEST_CASE("hermite pinned values") {
    CHECK(poly::hermite(0, Complex{3.7, 0.0}) == Complex{1.0, 0.0});
    CHECK(poly::hermite(3, Complex{}) == Complex{});
    CHECK(poly::hermite(2, Complex{1.0, 0.0}).real() == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("hermite parity H_n(-x) = (-1)^n H_n(x)") {
    SplitMix64 rng(5);
    for (int n = 0; n <= 20; ++n) {
        const double x = rng.uniform(-3.0, 3.0);
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        CHECK(poly::hermite(n, -x) == doctest::Approx(sign * poly::hermite(n, x)).epsilon(1e-12));
    }
}

TEST_CASE("laguerre series matches the degree recurrence, both alpha signs") {
    SplitMix64 rng(23);
    for (int alpha = -3; alpha <= 3; ++alpha) {
        for (int n = 0; n <= 12; ++n) {
            const Complex x = 2.5 * rng.unit_disk();
            const Complex a = poly::laguerre(n, alpha, x);
            const Complex b = laguerre_recurrence_oracle(n, alpha, x);
            CHECK(std::abs(a - b) <= 1e-10 * (1.0 + std::abs(a)));
        }
    }
}

TEST_CASE("laguerre pinned values") {
    CHECK(poly::laguerre(0, 5, Complex{2.0, 1.0}) == Complex{1.0, 0.0});
    CHECK(poly::laguerre(1, 0, 2.0) == doctest::Approx(-1.0));
    CHECK(poly::laguerre(1, 2, 0.0) == doctest::Approx(3.0));
}

TEST_CASE("charlier via the laguerre connection") {
    CHECK(poly::charlier(0, 4, 1.7) == doctest::Approx(1.0));
    // C_1(3; 1) = 1 - x/a = -2, the value both routes give
    CHECK(poly::charlier(1, 3, 1.0) == doctest::Approx(-2.0));
    CHECK(poly::charlier(2, 0, 2.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(poly::charlier(1, 1, 0.0), ZeroParameter);
}

TEST_CASE("charlier agrees with the hypergeometric sum") {
    for (double a : {0.5, 1.0, 2.0}) {
        for (int n = 0; n <= 6; ++n) {
            for (int x = 0; x <= 6; ++x) {
                const double via_laguerre = poly::charlier(n, x, a);
                const double via_2f0 = charlier_hypergeometric_oracle(n, x, a);
                CHECK(std::abs(via_laguerre - via_2f0) <= 1e-10 * (1.0 + std::abs(via_2f0)));
            }
        }
    }
}

TEST_CASE("bessel_i0 series") {
    CHECK(poly::bessel_i0(0.0) == doctest::Approx(1.0));
    // 50-term oracle at x = 2: sum_k 1/(k!)^2
    KahanReal oracle;
    for (int k = 0; k < 50; ++k) oracle.add(1.0 / (factorial(k) * factorial(k)));
    CHECK(poly::bessel_i0(2.0) == doctest::Approx(oracle.value()).epsilon(1e-14));
    CHECK(poly::bessel_i0(-1.3) == doctest::Approx(poly::bessel_i0(1.3)));
    // imaginary argument: I_0(iy) = J_0(y) stays real through the squared form
    CHECK(poly::bessel_i0_from_square(-1.0) < 1.0);
}

TEST_CASE("h2d_direct pinned forms") {
    SplitMix64 rng(3);
    const Complex z1 = 1.5 * rng.unit_disk(), z2 = 1.5 * rng.unit_disk();
    CHECK(std::abs(poly::h2d_direct({1, 1}, z1, z2) - (z1 * z2 - 1.0)) < 1e-14);
    CHECK(std::abs(poly::h2d_direct({2, 0}, z1, z2) - z1 * z1) < 1e-14);
    for (int m = 0; m <= 8; ++m) {
        for (int n = 0; n <= 8; ++n) {
            const Complex at_origin = poly::h2d_direct({m, n}, Complex{}, Complex{});
            const double expected = (m == n) ? ((n % 2 == 0) ? 1.0 : -1.0) * factorial(n) : 0.0;
            CHECK(std::abs(at_origin - expected) < 1e-12 * (1.0 + std::abs(expected)));
        }
    }
}

TEST_CASE("h2d_direct index symmetry") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = static_cast<int>(rng.uniform(0, 9));
        const int n = static_cast<int>(rng.uniform(0, 9));
        const Complex z1 = 2.0 * rng.unit_disk(), z2 = 2.0 * rng.unit_disk();
        const Complex a = poly::h2d_direct({m, n}, z1, z2);
        const Complex b = poly::h2d_direct({n, m}, z2, z1);
        CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)));
    }
}

TEST_CASE("h2d two routes agree to 1e-9 relative") {
    SplitMix64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const Complex z1 = 2.0 * rng.unit_disk(), z2 = 2.0 * rng.unit_disk();
        for (int m = 0; m <= 12; ++m) {
            for (int n = 0; n <= 12; ++n) {
                const Complex a = poly::h2d_direct({m, n}, z1, z2);
                const Complex b = poly::h2d_laguerre({m, n}, z1, z2);
                CHECK(std::abs(a - b) <= 1e-9 * (1.0 + std::abs(a)));
            }
        }
    }
}

TEST_CASE("h2d_laguerre branches coincide on the diagonal") {
    SplitMix64 rng(31);
    for (int n = 0; n <= 8; ++n) {
        const Complex w1 = 1.5 * rng.unit_disk(), w2 = 1.5 * rng.unit_disk();
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        const Complex expected = sign * factorial(n) * poly::laguerre(n, 0, w1 * w2);
        CHECK(std::abs(poly::h2d_laguerre({n, n}, w1, w2) - expected) <
              1e-12 * (1.0 + std::abs(expected)));
    }
}

TEST_CASE("h2d_laguerre pinned value") {
    // (-1) 1! 2^2 L_1^{(2)}(1) = -8
    CHECK(poly::h2d_laguerre({3, 1}, Complex{2.0, 0.0}, Complex{0.5, 0.0}).real() ==
          doctest::Approx(-8.0));
}

TEST_CASE("factorial-bound for conjugate arguments") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const Complex z = 2.0 * rng.unit_disk();
        for (int m = 0; m <= 10; ++m)
            for (int n = 0; n <= 10; ++n)
                CHECK(std::abs(poly::h2d_direct({m, n}, std::conj(z), z)) <=
                      std::exp(std::norm(z)) * std::sqrt(factorial(m) * factorial(n)) + 1e-9);
    }
}

TEST_CASE("generating function partial sums") {
    SplitMix64 rng(53);
    CHECK(poly::gf_h2d_partial({0.7, 0.1}, {-0.4, 0.3}, {}, {}, 12) == Complex{1.0, 0.0});
    CHECK(std::abs(poly::gf_h2d_partial({1, 0}, {1, 0}, {0.1, 0}, {0.1, 0}, 30) -
                   std::exp(Complex{0.19, 0.0})) < 1e-12);
    const Complex u = 0.4 * rng.unit_disk(), v = 0.4 * rng.unit_disk();
    CHECK(std::abs(poly::gf_h2d_partial({}, {}, u, v, 30) - std::exp(-u * v)) < 1e-13);
}

TEST_CASE("generating function error decreases monotonically past the crossover") {
    SplitMix64 rng(59);
    for (int trial = 0; trial < 5; ++trial) {
        const Complex z1 = rng.unit_disk(), z2 = rng.unit_disk();
        const Complex u = 0.5 * rng.unit_disk(), v = 0.5 * rng.unit_disk();
        const Complex target = std::exp(u * z1 + v * z2 - u * v);
        std::vector<double> err;
        for (int cap = 0; cap <= 24; ++cap)
            err.push_back(std::abs(poly::gf_h2d_partial(z1, z2, u, v, cap) - target));
        // locate the crossover, then demand monotone decay down to roundoff
        std::size_t crossover = 0;
        for (std::size_t d = 1; d < err.size(); ++d)
            if (err[d] > err[d - 1]) crossover = d;
        crossover = std::min<std::size_t>(crossover, 8);
        for (std::size_t d = crossover + 1; d < err.size(); ++d)
            CHECK((err[d] <= err[d - 1] * (1.0 + 1e-12) || err[d] < 1e-13));
    }
}
