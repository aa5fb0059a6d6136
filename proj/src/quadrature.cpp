#include "hermite2d/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace h2d::quad {

GaussHermite::GaussHermite(int points) {
    if (points < 2) throw std::invalid_argument("GaussHermite: need at least 2 points");
    const int n = points;
    nodes_.assign(static_cast<std::size_t>(n), 0.0);
    weights_.assign(static_cast<std::size_t>(n), 0.0);

    const double pi_quarter = std::pow(std::acos(-1.0), -0.25);
    const int m = (n + 1) / 2;
    double z = 0.0, pp = 0.0;
    for (int i = 0; i < m; ++i) {
        // standard initial guesses, refined by Newton on the orthonormal
        // recurrence
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow(n, 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * nodes_[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * nodes_[1];
        } else {
            z = 2.0 * z - nodes_[static_cast<std::size_t>(i) - 2];
        }
        for (int iter = 0; iter < 200; ++iter) {
            double p1 = pi_quarter;
            double p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        nodes_[static_cast<std::size_t>(i)] = z;
        nodes_[static_cast<std::size_t>(n - 1 - i)] = -z;
        weights_[static_cast<std::size_t>(i)] = 2.0 / (pp * pp);
        weights_[static_cast<std::size_t>(n - 1 - i)] = weights_[static_cast<std::size_t>(i)];
    }
    // ascending node order
    std::reverse(nodes_.begin(), nodes_.end());
    std::reverse(weights_.begin(), weights_.end());
}

Complex i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

Complex dawson(Complex z) {
    // F(z) = z * sum_t (-2 z^2)^t / (2t+1)!!
    const Complex z2 = -2.0 * z * z;
    KahanComplex acc;
    Complex term{1.0, 0.0};
    acc.add(term);
    for (int t = 1; t <= 300; ++t) {
        term *= z2 / static_cast<double>(2 * t + 1);
        acc.add(term);
        if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(acc.value()))) break;
    }
    return z * acc.value();
}

Complex half_line_gauss_moment(int k, Complex c) {
    if (k < 0) throw std::invalid_argument("half_line_gauss_moment: negative order");
    const double sqrt_pi = std::sqrt(std::acos(-1.0));
    const Complex half_ic = Complex(0.0, 0.5) * c;
    Complex g_prev = 0.5 * sqrt_pi * std::exp(-0.25 * c * c) + Complex(0.0, 1.0) * dawson(0.5 * c);
    if (k == 0) return g_prev;
    Complex g = 0.5 + half_ic * g_prev;
    for (int j = 2; j <= k; ++j) {
        const Complex g_next = 0.5 * static_cast<double>(j - 1) * g_prev + half_ic * g;
        g_prev = g;
        g = g_next;
    }
    return g;
}

Complex half_line_gauss_moment_series(int k, Complex c) {
    // G_k(c) = (1/2) sum_j (ic)^j Gamma((k+j+1)/2) / j!
    const Complex ic = Complex(0.0, 1.0) * c;
    KahanComplex acc;
    Complex power{1.0, 0.0};
    for (int j = 0; j <= 400; ++j) {
        const Complex term = power * std::tgamma(0.5 * (k + j + 1));
        acc.add(term);
        if (j > 8 && std::abs(term) < 1e-18 * std::max(1.0, std::abs(acc.value())) &&
            std::abs(power) < 1.0)
            break;
        power *= ic / static_cast<double>(j + 1);
    }
    return 0.5 * acc.value();
}

}  // namespace h2d::quad
