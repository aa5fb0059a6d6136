#include "hermite2d/q_series.hpp"

#include <cmath>

#include "hermite2d/quadrature.hpp"

namespace h2d::qs {

namespace {

void validate_q(const QParameter& q, bool need_infinite) {
    if (need_infinite && !(q.q > 0.0 && q.q < 1.0))
        throw DivergentProduct("q must lie in (0,1) for infinite products");
    if (!(q.product_tol > 0.0) || q.product_tol >= 1.0)
        throw std::invalid_argument("QParameter: product_tol must be in (0,1)");
}

int product_cutoff(double abs_a, const QParameter& q) {
    // smallest K with |a| q^K < product_tol
    if (abs_a == 0.0) return 0;
    int k = 0;
    double scale = abs_a;
    while (scale >= q.product_tol && k < 100000) {
        scale *= q.q;
        ++k;
    }
    return k;
}

// q^{C(j,2)} with C(j,2) = j(j-1)/2, nonnegative for every integer j
double q_binom2_power(double q, int j) {
    const long long e = static_cast<long long>(j) * (j - 1) / 2;
    return std::pow(q, static_cast<double>(e));
}

}  // namespace

Complex qpoch(Complex a, const QParameter& q, int n) {
    if (n < 0) throw std::invalid_argument("qpoch: negative length");
    Complex prod{1.0, 0.0};
    double qk = 1.0;
    for (int k = 0; k < n; ++k) {
        prod *= (1.0 - a * qk);
        qk *= q.q;
    }
    return prod;
}

double qpoch(double a, const QParameter& q, int n) {
    return qpoch(Complex(a, 0.0), q, n).real();
}

Complex qpoch_inf(Complex a, const QParameter& q) {
    validate_q(q, true);
    const int cutoff = product_cutoff(std::abs(a), q);
    return qpoch(a, q, cutoff);
}

double qpoch_inf(double a, const QParameter& q) {
    return qpoch_inf(Complex(a, 0.0), q).real();
}

std::vector<double> qpoch_q_table(const QParameter& q, int nmax) {
    std::vector<double> table(static_cast<std::size_t>(nmax) + 1);
    table[0] = 1.0;
    double qk = q.q;
    for (int k = 1; k <= nmax; ++k) {
        table[k] = table[k - 1] * (1.0 - qk);
        qk *= q.q;
    }
    return table;
}

Complex h2d_q(int m, int n, Complex z1, Complex z2, const QParameter& q) {
    if (m < 0 || n < 0) throw std::invalid_argument("h2d_q: negative index");
    if (!(q.q > 0.0 && q.q < 1.0)) throw std::invalid_argument("h2d_q: q must be in (0,1)");
    const int top = std::max(m, n);
    const std::vector<double> qq = qpoch_q_table(q, top);
    std::vector<Complex> z1pow(static_cast<std::size_t>(m) + 1), z2pow(static_cast<std::size_t>(n) + 1);
    z1pow[0] = 1.0;
    for (int k = 1; k <= m; ++k) z1pow[k] = z1pow[k - 1] * z1;
    z2pow[0] = 1.0;
    for (int k = 1; k <= n; ++k) z2pow[k] = z2pow[k - 1] * z2;
    // the k-sum carries (-1)^k q^{C(k,2)}, the q-analogue of (-1)^k k!;
    // this is what makes the generating function close to
    // (uv;q)_inf / ((u z1; q)_inf (v z2; q)_inf)
    KahanComplex acc;
    double qfac = 1.0;  // (-1)^k q^{k(k-1)/2}
    double qk = 1.0;    // q^k
    for (int k = 0; k <= std::min(m, n); ++k) {
        acc.add(qfac * z1pow[m - k] * z2pow[n - k] / (qq[m - k] * qq[n - k] * qq[k]));
        qfac *= -qk;
        qk *= q.q;
    }
    return qq[m] * qq[n] * acc.value();
}

double qhermite_weight(double theta, const QParameter& q) {
    const double c = std::cos(2.0 * theta);
    const int cutoff = product_cutoff(1.0, q);
    double prod = 1.0;
    double qk = 1.0;
    for (int k = 0; k < cutoff; ++k) {
        prod *= (1.0 - 2.0 * qk * c + qk * qk);
        qk *= q.q;
    }
    return prod;
}

Complex qpoch_symmetric_pair(Complex t, double theta, const QParameter& q) {
    const double c = std::cos(theta);
    const int cutoff = product_cutoff(std::abs(t), q);
    Complex prod{1.0, 0.0};
    double qk = 1.0;
    for (int k = 0; k < cutoff; ++k) {
        const Complex tq = t * qk;
        prod *= (1.0 - 2.0 * tq * c + tq * tq);
        qk *= q.q;
    }
    return prod;
}

GfCheck gf_h2d_q_check(Complex z1, Complex z2, Complex u, Complex v, const QParameter& q,
                       int degree_cap) {
    validate_q(q, true);
    if (std::abs(u * z1) >= 1.0 || std::abs(v * z2) >= 1.0)
        throw DomainViolation("gf_h2d_q_check: need |u z1| < 1 and |v z2| < 1");
    GfCheck out;
    out.lhs = qpoch_inf(u * v, q) / (qpoch_inf(u * z1, q) * qpoch_inf(v * z2, q));

    const std::vector<double> qq = qpoch_q_table(q, degree_cap);
    std::vector<Complex> upow(static_cast<std::size_t>(degree_cap) + 1),
        vpow(static_cast<std::size_t>(degree_cap) + 1);
    upow[0] = 1.0;
    vpow[0] = 1.0;
    for (int k = 1; k <= degree_cap; ++k) {
        upow[k] = upow[k - 1] * u;
        vpow[k] = vpow[k - 1] * v;
    }
    KahanComplex acc;
    for (int m = 0; m <= degree_cap; ++m)
        for (int n = 0; n + m <= degree_cap; ++n)
            acc.add(h2d_q(m, n, z1, z2, q) * upow[m] * vpow[n] / (qq[m] * qq[n]));
    out.rhs = acc.value();
    out.abs_err = std::abs(out.lhs - out.rhs);
    return out;
}

namespace {

constexpr double kRefineTol = 1e-11;

template <typename Eval>
std::pair<Complex, int> refined(Eval&& eval, int points) {
    const Complex coarse = eval(points);
    const Complex fine = eval(2 * points);
    if (std::abs(coarse - fine) > kRefineTol * (1.0 + std::abs(fine)))
        throw QuadratureUnderResolved("q-series quadrature not self-consistent");
    return {fine, 2 * points};
}

}  // namespace

QuadratureVsClosed askey_wilson_integral(const std::array<Complex, 4>& t, const QParameter& q,
                                         int points, Exec exec) {
    validate_q(q, true);
    for (const Complex& tj : t)
        if (std::abs(tj) >= 1.0) throw DomainViolation("askey_wilson_integral: need max |t_j| < 1");

    QuadratureVsClosed out;
    Complex pair_products{1.0, 0.0};
    for (int j = 0; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k) pair_products *= qpoch_inf(t[j] * t[k], q);
    const double two_pi = 2.0 * std::acos(-1.0);
    out.closed_form = two_pi * qpoch_inf(t[0] * t[1] * t[2] * t[3], q) /
                      (qpoch_inf(Complex(q.q, 0.0), q) * pair_products);

    auto eval = [&](int pts) {
        return quad::trapezoid_0pi(
            pts,
            [&](double theta) {
                Complex denom{1.0, 0.0};
                for (const Complex& tj : t) denom *= qpoch_symmetric_pair(tj, theta, q);
                return qhermite_weight(theta, q) / denom;
            },
            exec);
    };
    const auto [value, used] = refined(eval, points);
    out.quadrature = value;
    out.points_used = used;
    out.abs_err = std::abs(out.quadrature - out.closed_form);
    return out;
}

QuadratureVsClosed q_weight_moment(int j, const QParameter& q, int points, Exec exec) {
    validate_q(q, true);
    QuadratureVsClosed out;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    out.closed_form = sign * (q_binom2_power(q.q, j) + q_binom2_power(q.q, -j)) /
                      qpoch_inf(Complex(q.q, 0.0), q);
    auto eval = [&](int pts) {
        const Complex raw = quad::trapezoid_0pi(
            pts,
            [&](double theta) {
                return std::polar(1.0, 2.0 * j * theta) * qhermite_weight(theta, q);
            },
            exec);
        return raw / std::acos(-1.0);
    };
    const auto [value, used] = refined(eval, points);
    out.quadrature = value;
    out.points_used = used;
    out.abs_err = std::abs(out.quadrature - out.closed_form);
    return out;
}

MultilinearCheck q_bilinear_generating_check(Complex z1, Complex z2, double r, double s,
                                             const QParameter& q, int degree_cap, int points,
                                             Exec exec) {
    validate_q(q, true);
    if (std::abs(r * z1) >= 1.0 || std::abs(s * z2) >= 1.0)
        throw DomainViolation("q_bilinear_generating_check: need |r z1| < 1, |s z2| < 1");

    MultilinearCheck out;
    const Complex rs_inf = qpoch_inf(Complex(r * s, 0.0), q);
    const Complex qq_inf = qpoch_inf(Complex(q.q, 0.0), q);
    out.closed_form = 2.0 * rs_inf * rs_inf / qpoch_inf(z1 * z2 * r * s, q);

    // quadrature of the weighted product of the two generating functions,
    // full-period average evaluated on [0, pi]
    auto eval = [&](int pts) {
        const Complex raw = quad::trapezoid_0pi(
            pts,
            [&](double theta) {
                const Complex d1 = qpoch_symmetric_pair(r * z1, theta, q);
                const Complex d2 = qpoch_symmetric_pair(s * z2, theta, q);
                return qhermite_weight(theta, q) * rs_inf * rs_inf / (d1 * d2) * qq_inf;
            },
            exec);
        return raw / std::acos(-1.0);
    };
    const auto [value, used] = refined(eval, points);
    out.quadrature = value;
    out.points_used = used;

    // parity-constrained four-fold series
    const std::vector<double> qq = qpoch_q_table(q, degree_cap);
    const std::size_t stride = static_cast<std::size_t>(degree_cap) + 1;
    std::vector<Complex> hq(stride * stride);
    for (int m = 0; m <= degree_cap; ++m)
        for (int n = 0; n + m <= degree_cap; ++n)
            hq[static_cast<std::size_t>(m) * stride + n] = h2d_q(m, n, z1, z2, q);
    std::vector<double> rpow(stride), spow(stride);
    rpow[0] = spow[0] = 1.0;
    for (int k = 1; k <= degree_cap; ++k) {
        rpow[k] = rpow[k - 1] * r;
        spow[k] = spow[k - 1] * s;
    }

    std::vector<std::array<std::uint8_t, 4>> tuples;
    for (int m1 = 0; m1 <= degree_cap; ++m1)
        for (int n1 = 0; n1 + m1 <= degree_cap; ++n1)
            for (int m2 = 0; m1 + n1 + m2 <= degree_cap; ++m2)
                for (int n2 = 0; m1 + n1 + m2 + n2 <= degree_cap; ++n2) {
                    if ((m1 + m2 - n1 - n2) % 2 != 0) continue;
                    tuples.push_back({static_cast<std::uint8_t>(m1), static_cast<std::uint8_t>(n1),
                                      static_cast<std::uint8_t>(m2), static_cast<std::uint8_t>(n2)});
                }
    out.term_count = tuples.size();
    out.series = blocked_sum(
        tuples.size(),
        [&](std::size_t i) {
            const auto [m1, n1, m2, n2] = tuples[i];
            const int jj = (m1 + n2 - n1 - m2) / 2;
            const double sign = (jj % 2 == 0) ? 1.0 : -1.0;
            const double weight = sign * (q_binom2_power(q.q, jj) + q_binom2_power(q.q, -jj));
            return hq[static_cast<std::size_t>(m1) * stride + n1] *
                   hq[static_cast<std::size_t>(m2) * stride + n2] * rpow[m1 + m2] * spow[n1 + n2] *
                   weight / (qq[m1] * qq[n1] * qq[m2] * qq[n2]);
        },
        exec);

    out.series_vs_quadrature = std::abs(out.series - out.quadrature);
    out.closed_vs_quadrature = std::abs(out.closed_form - out.quadrature);
    return out;
}

MultilinearCheck q_multilinear_generating_check(const std::array<Complex, 4>& z, double r1,
                                                double s1, double r2, double s2,
                                                const QParameter& q, int degree_cap, int points,
                                                Exec exec) {
    validate_q(q, true);
    const std::array<Complex, 4> t = {r1 * z[0], s1 * z[1], r2 * z[2], s2 * z[3]};
    for (const Complex& tj : t)
        if (std::abs(tj) >= 1.0)
            throw DomainViolation("q_multilinear_generating_check: generating parameters too large");

    MultilinearCheck out;
    const Complex qq_inf = qpoch_inf(Complex(q.q, 0.0), q);
    const Complex r1s1_inf = qpoch_inf(Complex(r1 * s1, 0.0), q);
    const Complex r2s2_inf = qpoch_inf(Complex(r2 * s2, 0.0), q);
    Complex pair_products{1.0, 0.0};
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) pair_products *= qpoch_inf(t[a] * t[b], q);
    out.closed_form = 2.0 * r1s1_inf * r1s1_inf * r2s2_inf * r2s2_inf *
                      qpoch_inf(t[0] * t[1] * t[2] * t[3], q) / pair_products;

    auto eval = [&](int pts) {
        const Complex raw = quad::trapezoid_0pi(
            pts,
            [&](double theta) {
                Complex denom{1.0, 0.0};
                for (const Complex& tj : t) denom *= qpoch_symmetric_pair(tj, theta, q);
                return qhermite_weight(theta, q) * r1s1_inf * r1s1_inf * r2s2_inf * r2s2_inf /
                       denom * qq_inf;
            },
            exec);
        return raw / std::acos(-1.0);
    };
    const auto [value, used] = refined(eval, points);
    out.quadrature = value;
    out.points_used = used;

    const std::vector<double> qq = qpoch_q_table(q, degree_cap);
    const std::size_t stride = static_cast<std::size_t>(degree_cap) + 1;
    std::vector<Complex> hq12(stride * stride), hq34(stride * stride);
    for (int m = 0; m <= degree_cap; ++m) {
        for (int n = 0; n + m <= degree_cap; ++n) {
            hq12[static_cast<std::size_t>(m) * stride + n] = h2d_q(m, n, z[0], z[1], q);
            hq34[static_cast<std::size_t>(m) * stride + n] = h2d_q(m, n, z[2], z[3], q);
        }
    }
    std::vector<double> r1p(stride), s1p(stride), r2p(stride), s2p(stride);
    r1p[0] = s1p[0] = r2p[0] = s2p[0] = 1.0;
    for (int k = 1; k <= degree_cap; ++k) {
        r1p[k] = r1p[k - 1] * r1;
        s1p[k] = s1p[k - 1] * s1;
        r2p[k] = r2p[k - 1] * r2;
        s2p[k] = s2p[k - 1] * s2;
    }

    std::vector<std::array<std::uint8_t, 8>> tuples;
    for (int m1 = 0; m1 <= degree_cap; ++m1)
        for (int n1 = 0; n1 + m1 <= degree_cap; ++n1)
            for (int m2 = 0; m1 + n1 + m2 <= degree_cap; ++m2)
                for (int n2 = 0; m1 + n1 + m2 + n2 <= degree_cap; ++n2)
                    for (int m3 = 0; m1 + n1 + m2 + n2 + m3 <= degree_cap; ++m3)
                        for (int n3 = 0; m1 + n1 + m2 + n2 + m3 + n3 <= degree_cap; ++n3)
                            for (int m4 = 0; m1 + n1 + m2 + n2 + m3 + n3 + m4 <= degree_cap; ++m4)
                                for (int n4 = 0;
                                     m1 + n1 + m2 + n2 + m3 + n3 + m4 + n4 <= degree_cap; ++n4) {
                                    if ((m1 + n2 + m3 + n4 - n1 - m2 - n3 - m4) % 2 != 0) continue;
                                    tuples.push_back({static_cast<std::uint8_t>(m1),
                                                      static_cast<std::uint8_t>(n1),
                                                      static_cast<std::uint8_t>(m2),
                                                      static_cast<std::uint8_t>(n2),
                                                      static_cast<std::uint8_t>(m3),
                                                      static_cast<std::uint8_t>(n3),
                                                      static_cast<std::uint8_t>(m4),
                                                      static_cast<std::uint8_t>(n4)});
                                }
    out.term_count = tuples.size();
    out.series = blocked_sum(
        tuples.size(),
        [&](std::size_t i) {
            const auto& tp = tuples[i];
            const int m1 = tp[0], n1 = tp[1], m2 = tp[2], n2 = tp[3], m3 = tp[4], n3 = tp[5],
                      m4 = tp[6], n4 = tp[7];
            const int big_m = (m1 + n2 + m3 + n4 - n1 - m2 - n3 - m4) / 2;
            const double sign = (big_m % 2 == 0) ? 1.0 : -1.0;
            const double weight = sign * (q_binom2_power(q.q, big_m) + q_binom2_power(q.q, -big_m));
            return hq12[static_cast<std::size_t>(m1) * stride + n1] *
                   hq12[static_cast<std::size_t>(m2) * stride + n2] *
                   hq34[static_cast<std::size_t>(m3) * stride + n3] *
                   hq34[static_cast<std::size_t>(m4) * stride + n4] * r1p[m1 + m2] * s1p[n1 + n2] *
                   r2p[m3 + m4] * s2p[n3 + n4] * weight /
                   (qq[m1] * qq[n1] * qq[m2] * qq[n2] * qq[m3] * qq[n3] * qq[m4] * qq[n4]);
        },
        exec);

    out.series_vs_quadrature = std::abs(out.series - out.quadrature);
    out.closed_vs_quadrature = std::abs(out.closed_form - out.quadrature);
    return out;
}

}  // namespace h2d::qs
