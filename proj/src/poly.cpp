#include "hermite2d/poly.hpp"

#include <cmath>

namespace h2d::poly {

namespace {

template <typename Scalar>
Scalar hermite_impl(int n, Scalar x) {
    if (n < 0) throw std::invalid_argument("hermite: negative degree");
    Scalar p0 = Scalar(1);
    if (n == 0) return p0;
    Scalar p1 = Scalar(2) * x;
    for (int k = 1; k < n; ++k) {
        const Scalar p2 = Scalar(2) * x * p1 - Scalar(2 * k) * p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

template <typename Scalar>
std::vector<Scalar> hermite_table_impl(int nmax, Scalar x) {
    std::vector<Scalar> h(static_cast<std::size_t>(nmax) + 1);
    h[0] = Scalar(1);
    if (nmax >= 1) h[1] = Scalar(2) * x;
    for (int k = 1; k < nmax; ++k)
        h[static_cast<std::size_t>(k) + 1] = Scalar(2) * x * h[k] - Scalar(2 * k) * h[k - 1];
    return h;
}

template <typename Scalar>
Scalar laguerre_impl(int n, int alpha, Scalar x) {
    if (n < 0) throw std::invalid_argument("laguerre: negative degree");
    // sum_{k=0}^{n} (-1)^k C(n+alpha, n-k) x^k / k!
    KahanAccumulator<Scalar> acc;
    Scalar xpow = Scalar(1);
    double sign = 1.0;
    double kfact = 1.0;
    for (int k = 0; k <= n; ++k) {
        const double coeff = binomial_product(static_cast<double>(n + alpha), n - k);
        acc.add(Scalar(sign * coeff / kfact) * xpow);
        xpow *= x;
        sign = -sign;
        kfact *= static_cast<double>(k + 1);
    }
    return acc.value();
}

}  // namespace

Complex hermite(int n, Complex x) { return hermite_impl<Complex>(n, x); }
double hermite(int n, double x) { return hermite_impl<double>(n, x); }

std::vector<Complex> hermite_table(int nmax, Complex x) { return hermite_table_impl<Complex>(nmax, x); }
std::vector<double> hermite_table(int nmax, double x) { return hermite_table_impl<double>(nmax, x); }

Complex laguerre(int n, int alpha, Complex x) { return laguerre_impl<Complex>(n, alpha, x); }
double laguerre(int n, int alpha, double x) { return laguerre_impl<double>(n, alpha, x); }

double charlier(int n, int x, double a) {
    if (a == 0.0) throw ZeroParameter("charlier: a = 0");
    if (n < 0 || x < 0) throw std::invalid_argument("charlier: negative index");
    const double lag = laguerre(n, x - n, a);
    double scale = 1.0;  // n! (-a)^{-n}
    for (int k = 1; k <= n; ++k) scale *= static_cast<double>(k) / (-a);
    return scale * lag;
}

double bessel_i0(double x) { return bessel_i0_from_square(x * x); }

double bessel_i0_from_square(double z_squared) {
    // sum_k (z^2/4)^k / (k!)^2, stopped once a term falls below tol * partial
    const double quarter = 0.25 * z_squared;
    KahanReal acc;
    double term = 1.0;
    acc.add(term);
    for (int k = 1; k <= 400; ++k) {
        term *= quarter / (static_cast<double>(k) * static_cast<double>(k));
        acc.add(term);
        if (std::abs(term) < 1e-18 * std::abs(acc.value())) break;
    }
    return acc.value();
}

Complex h2d_direct(PolyIndex idx, Complex z1, Complex z2) {
    const int m = idx.m, n = idx.n;
    if (m < 0 || n < 0) throw std::invalid_argument("h2d_direct: negative index");
    const int kmax = std::min(m, n);

    std::vector<Complex> z1pow(static_cast<std::size_t>(m) + 1), z2pow(static_cast<std::size_t>(n) + 1);
    z1pow[0] = 1.0;
    for (int k = 1; k <= m; ++k) z1pow[k] = z1pow[k - 1] * z1;
    z2pow[0] = 1.0;
    for (int k = 1; k <= n; ++k) z2pow[k] = z2pow[k - 1] * z2;

    // coefficient (-1)^k k! C(m,k) C(n,k), updated by ratio; the sum
    // alternates, so compensate.
    KahanComplex acc;
    double coeff = 1.0;
    for (int k = 0; k <= kmax; ++k) {
        acc.add(coeff * z1pow[m - k] * z2pow[n - k]);
        coeff *= -static_cast<double>((m - k) * (n - k)) / static_cast<double>(k + 1);
    }
    return acc.value();
}

Complex h2d_laguerre(PolyIndex idx, Complex w1, Complex w2) {
    const int m = idx.m, n = idx.n;
    if (m < 0 || n < 0) throw std::invalid_argument("h2d_laguerre: negative index");
    const Complex prod = w1 * w2;
    if (m >= n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        return sign * factorial(n) * std::pow(w1, m - n) * laguerre(n, m - n, prod);
    }
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return sign * factorial(m) * std::pow(w2, n - m) * laguerre(m, n - m, prod);
}

std::vector<Complex> h2d_table(int nmax, Complex z1, Complex z2) {
    const std::size_t stride = static_cast<std::size_t>(nmax) + 1;
    std::vector<Complex> table(stride * stride);
    for (int r = 0; r <= nmax; ++r)
        for (int c = 0; c <= nmax; ++c)
            table[static_cast<std::size_t>(r) * stride + c] = h2d_direct({r, c}, z1, z2);
    return table;
}

Complex gf_h2d_partial(Complex z1, Complex z2, Complex u, Complex v, int degree_cap) {
    if (degree_cap < 0) throw std::invalid_argument("gf_h2d_partial: negative cap");
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
            acc.add(h2d_direct({m, n}, z1, z2) * upow[m] * vpow[n] / (factorial(m) * factorial(n)));
    return acc.value();
}

}  // namespace h2d::poly
