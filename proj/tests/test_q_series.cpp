#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hermite2d/q_series.hpp"
#include "hermite2d/quadrature.hpp"

using namespace h2d;
using qs::QParameter;

namespace {
const QParameter q03{0.3, 1e-18};
const QParameter q05{0.5, 1e-18};
const QParameter q08{0.8, 1e-18};
}  // namespace

TEST_CASE("q-shifted factorial basics") {
    CHECK(qs::qpoch(Complex{0.7, 0.2}, q05, 0) == Complex{1.0, 0.0});
    CHECK(qs::qpoch(0.5, q05, 1) == doctest::Approx(0.5));
    // 200-factor oracle for (0.5; 0.5)_inf
    double oracle = 1.0, p = 0.5;
    for (int k = 0; k < 200; ++k) {
        oracle *= (1.0 - p);
        p *= 0.5;
    }
    CHECK(qs::qpoch_inf(0.5, q05) == doctest::Approx(oracle).epsilon(1e-14));
    CHECK(qs::qpoch_inf(0.5, q05) == doctest::Approx(0.2887880951).epsilon(1e-9));
    CHECK_THROWS_AS(qs::qpoch_inf(0.5, QParameter{1.2, 1e-18}), DivergentProduct);
}

TEST_CASE("finite times shifted-infinite equals infinite") {
    SplitMix64 rng(2);
    for (const QParameter& q : {q03, q05, q08}) {
        for (int n = 0; n <= 10; ++n) {
            const Complex a = 0.9 * rng.unit_disk();
            double qn = 1.0;
            for (int k = 0; k < n; ++k) qn *= q.q;
            const Complex whole = qs::qpoch_inf(a, q);
            const Complex split = qs::qpoch(a, q, n) * qs::qpoch_inf(a * qn, q);
            CHECK(std::abs(whole - split) <= 1e-12 * (1.0 + std::abs(whole)));
        }
    }
}

TEST_CASE("2D q-Hermite low orders") {
    SplitMix64 rng(8);
    const Complex z1 = rng.unit_disk(), z2 = rng.unit_disk();
    CHECK(qs::h2d_q(0, 0, z1, z2, q05) == Complex{1.0, 0.0});
    // the k = 1 term carries -(q;q)_1^2/(q;q)_1 = -(1-q): H_{1,1} = z1 z2 - (1-q),
    // the sign the generating function forces
    const Complex h11 = qs::h2d_q(1, 1, z1, z2, q05);
    CHECK(std::abs(h11 - (z1 * z2 - 0.5)) < 1e-14);
}

TEST_CASE("q-Hermite weight matches the complex-product route") {
    for (double theta : {0.4, 1.1, 2.0, 2.9}) {
        const Complex direct = qs::qpoch_inf(std::polar(1.0, 2.0 * theta), q05) *
                               qs::qpoch_inf(std::polar(1.0, -2.0 * theta), q05);
        CHECK(qs::qhermite_weight(theta, q05) == doctest::Approx(direct.real()).epsilon(1e-12));
        CHECK(std::abs(direct.imag()) < 1e-12);
    }
    CHECK(qs::qhermite_weight(0.0, q05) == 0.0);  // 4 sin^2(theta) factor
}

TEST_CASE("symmetric pair product matches the two-factor route") {
    SplitMix64 rng(10);
    for (int trial = 0; trial < 8; ++trial) {
        const Complex t = 0.8 * rng.unit_disk();
        const double theta = rng.uniform(0.1, 3.0);
        const Complex direct = qs::qpoch_inf(t * std::polar(1.0, theta), q05) *
                               qs::qpoch_inf(t * std::polar(1.0, -theta), q05);
        const Complex pair = qs::qpoch_symmetric_pair(t, theta, q05);
        CHECK(std::abs(direct - pair) <= 1e-12 * (1.0 + std::abs(direct)));
    }
}

TEST_CASE("q generating function") {
    const qs::GfCheck trivial = qs::gf_h2d_q_check({0.3, 0.1}, {0.2, -0.4}, {}, {}, q05, 10);
    CHECK(std::abs(trivial.lhs - 1.0) < 1e-15);
    CHECK(trivial.abs_err < 1e-15);

    // z = 0 collapses the sum to the diagonal k-terms of (uv;q)_inf
    const qs::GfCheck diag = qs::gf_h2d_q_check({}, {}, {0.4, 0.1}, {0.3, -0.2}, q05, 40);
    CHECK(diag.abs_err <= 1e-12);

    const qs::GfCheck pinned =
        qs::gf_h2d_q_check({0.3, 0}, {0.4, 0}, {0.2, 0}, {0.1, 0}, q05, 40);
    CHECK(pinned.abs_err <= 1e-10);

    CHECK_THROWS_AS(qs::gf_h2d_q_check({2.0, 0}, {0.4, 0}, {0.6, 0}, {0.1, 0}, q05, 10),
                    DomainViolation);
}

TEST_CASE("q generating function error decreases monotonically in the cap") {
    double prev = 1e300;
    for (int cap = 4; cap <= 28; cap += 4) {
        const qs::GfCheck r = qs::gf_h2d_q_check({0.5, 0.2}, {-0.3, 0.4}, {0.35, -0.1},
                                                 {0.25, 0.15}, q05, cap);
        CHECK((r.abs_err <= prev * (1.0 + 1e-12) || r.abs_err < 1e-14));
        prev = r.abs_err;
    }
}

TEST_CASE("Askey-Wilson integral") {
    const double two_pi = 2.0 * std::acos(-1.0);
    const qs::QuadratureVsClosed zero =
        qs::askey_wilson_integral({Complex{}, Complex{}, Complex{}, Complex{}}, q05, 512);
    CHECK(std::abs(zero.closed_form - two_pi / qs::qpoch_inf(0.5, q05)) < 1e-12);
    CHECK(zero.abs_err <= 1e-10);

    const qs::QuadratureVsClosed single =
        qs::askey_wilson_integral({Complex{0.5, 0}, Complex{}, Complex{}, Complex{}}, q05, 512);
    CHECK(single.abs_err <= 1e-9);

    const qs::QuadratureVsClosed four = qs::askey_wilson_integral(
        {Complex{0.3, 0}, Complex{0.2, 0}, Complex{0.1, 0}, Complex{0.4, 0}},
        QParameter{0.4, 1e-18}, 512);
    CHECK(four.abs_err <= 1e-8);

    CHECK_THROWS_AS(
        qs::askey_wilson_integral({Complex{1.1, 0}, Complex{}, Complex{}, Complex{}}, q05, 64),
        DomainViolation);
}

TEST_CASE("q-weight moments: resolved normalization and decay") {
    // j = 0 pins the normalization against the Askey-Wilson value
    const qs::QuadratureVsClosed j0 = qs::q_weight_moment(0, q05, 512);
    CHECK(std::abs(j0.closed_form - 2.0 / qs::qpoch_inf(0.5, q05)) < 1e-12);
    CHECK(j0.abs_err <= 1e-12);
    // the halved convention would be off by |closed|/2, far outside tolerance
    CHECK(std::abs(j0.quadrature - 0.5 * j0.closed_form) > 1.0);

    const qs::QuadratureVsClosed j1 = qs::q_weight_moment(1, q05, 512);
    const double expected1 = -(1.0 + 0.5) / qs::qpoch_inf(0.5, q05);
    CHECK(j1.closed_form.real() == doctest::Approx(expected1).epsilon(1e-13));
    CHECK(j1.abs_err <= 1e-12);

    const qs::QuadratureVsClosed j8 = qs::q_weight_moment(8, q05, 512);
    const double rate = (std::pow(0.5, 28) + std::pow(0.5, 36)) / qs::qpoch_inf(0.5, q05);
    CHECK(std::abs(j8.quadrature) == doctest::Approx(rate).epsilon(1e-10));
    CHECK(j8.abs_err <= 1e-10);

    // negative index is the mirror moment
    const qs::QuadratureVsClosed jm3 = qs::q_weight_moment(-3, q05, 512);
    const qs::QuadratureVsClosed jp3 = qs::q_weight_moment(3, q05, 512);
    CHECK(std::abs(jm3.closed_form - jp3.closed_form) < 1e-15);
    CHECK(jm3.abs_err <= 1e-12);
}

TEST_CASE("bilinear q identity: closed form, series, and quadrature agree") {
    const qs::MultilinearCheck r =
        qs::q_bilinear_generating_check({0.3, 0}, {0.2, 0}, 0.25, 0.25, q05, 24, 512);
    CHECK(r.closed_vs_quadrature <= 1e-10);
    CHECK(r.series_vs_quadrature <= 1e-6 * (1.0 + std::abs(r.quadrature)));

    // r = 0: only the all-zero tuple survives and carries weight q^0 + q^0
    const qs::MultilinearCheck at_zero =
        qs::q_bilinear_generating_check({0.3, 0}, {0.2, 0}, 0.0, 0.4, q05, 8, 256);
    CHECK(std::abs(at_zero.series - 2.0) < 1e-13);
    CHECK(std::abs(at_zero.closed_form - 2.0) < 1e-13);
    CHECK(std::abs(at_zero.quadrature - 2.0) < 1e-10);

    CHECK_THROWS_AS(qs::q_bilinear_generating_check({2.5, 0}, {0.2, 0}, 0.5, 0.5, q05, 8, 64),
                    DomainViolation);
}

TEST_CASE("bilinear summand is invariant under factor relabeling") {
    // exact check on enumerated tuples: with the factors grouped per index
    // pair, swapping (m1,n1) <-> (m2,n2) reproduces the same product
    const Complex z1{0.3, 0.1}, z2{-0.2, 0.25};
    const double r = 0.2, s = 0.3;
    const int cap = 6;
    const std::vector<double> qq = qs::qpoch_q_table(q05, cap);
    auto summand = [&](int m1, int n1, int m2, int n2) {
        const int j = (m1 + n2 - n1 - m2) / 2;
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        const double weight =
            sign * (std::pow(0.5, j * (j - 1) / 2) + std::pow(0.5, j * (j + 1) / 2));
        const Complex a = qs::h2d_q(m1, n1, z1, z2, q05) / (qq[m1] * qq[n1]);
        const Complex b = qs::h2d_q(m2, n2, z1, z2, q05) / (qq[m2] * qq[n2]);
        return (a * b) * (std::pow(r, m1 + m2) * std::pow(s, n1 + n2) * weight);
    };
    for (int m1 = 0; m1 <= cap; ++m1)
        for (int n1 = 0; m1 + n1 <= cap; ++n1)
            for (int m2 = 0; m1 + n1 + m2 <= cap; ++m2)
                for (int n2 = 0; m1 + n1 + m2 + n2 <= cap; ++n2) {
                    if ((m1 + m2 - n1 - n2) % 2 != 0) continue;
                    CHECK(summand(m1, n1, m2, n2) == summand(m2, n2, m1, n1));
                }
}

TEST_CASE("multilinear q identity") {
    // all parameters zero: both sides reduce to the j = 0 moment weight
    const qs::MultilinearCheck at_zero = qs::q_multilinear_generating_check(
        {Complex{0.3, 0}, Complex{0.2, 0}, Complex{0.1, 0}, Complex{0.1, 0}}, 0.0, 0.0, 0.0, 0.0,
        q05, 6, 256);
    CHECK(std::abs(at_zero.series - 2.0) < 1e-13);
    CHECK(std::abs(at_zero.closed_form - 2.0) < 1e-13);

    // degenerate second pair reduces to the bilinear identity
    const qs::MultilinearCheck degenerate = qs::q_multilinear_generating_check(
        {Complex{0.3, 0}, Complex{0.2, 0}, Complex{0.1, 0}, Complex{0.1, 0}}, 0.25, 0.25, 0.0, 0.0,
        q05, 16, 512);
    const qs::MultilinearCheck bilinear =
        qs::q_bilinear_generating_check({0.3, 0}, {0.2, 0}, 0.25, 0.25, q05, 16, 512);
    CHECK(std::abs(degenerate.closed_form - bilinear.closed_form) < 1e-12);
    CHECK(std::abs(degenerate.series - bilinear.series) < 1e-12);

    const qs::MultilinearCheck small = qs::q_multilinear_generating_check(
        {Complex{0.15, 0}, Complex{0.1, 0}, Complex{0.12, 0}, Complex{0.08, 0}}, 0.15, 0.15, 0.15,
        0.15, q05, 16, 512);
    CHECK(small.closed_vs_quadrature <= 1e-10);
    CHECK(small.series_vs_quadrature <= 1e-5 * (1.0 + std::abs(small.quadrature)));
}
